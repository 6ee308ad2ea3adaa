#include "lrc/construct_mr.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "lrc/error.hpp"

namespace lrc {
namespace {

LinearCode finish(const Mat& H, const LocalStructure& ls, int r, const char* role) {
    LinearCode c = code_from_parity(H);
    c.structure = ls;
    c.params.r = r;
    c.params.t = 1;
    c.params.role = role;
    return c;
}

// [I_m | blockdiag(rows of x) ; 0 | lower], with x split into m blocks of length r.
Mat canonical_parity(const FieldSpec& F, int m, int r, const std::vector<Fe>& x, const Mat& lower) {
    const int k0 = m * r;
    Mat H(F, m + lower.rows, m + k0);
    for (int i = 0; i < m; ++i) {
        H.at(i, i) = 1;
        for (int j = 0; j < r; ++j) H.at(i, m + i * r + j) = x[i * r + j];
    }
    for (int i = 0; i < lower.rows; ++i)
        for (int j = 0; j < k0; ++j) H.at(m + i, m + j) = lower.at(i, j);
    return H;
}

bool columns_mds(const Mat& G, const std::vector<int>& cols, int size) {
    return for_each_subset(static_cast<int>(cols.size()), size, [&](const std::vector<int>& s) {
        std::vector<int> pick;
        for (int i : s) pick.push_back(cols[i]);
        return rank_of_columns(G, pick) == size;
    });
}

}  // namespace

LocalStructure identity_block_groups(int m, int r) {
    LocalStructure ls;
    for (int i = 0; i < m; ++i) {
        std::vector<int> g{i};
        for (int j = 0; j < r; ++j) g.push_back(m + i * r + j);
        ls.groups.push_back(g);
    }
    return ls;
}

LinearCode pmr_parity_split(int m, int r, int Delta, const FieldSpec& F) {
    if (m < 1 || r < 1 || Delta < 0 || Delta > r - 1) throw Error("InvalidArgument", "need 0 <= Delta <= r-1");
    const int k0 = m * r;
    if (F.q() - 1 < static_cast<std::uint32_t>(k0)) throw Error("FieldTooSmall", "need q-1 >= mr nonzero points");
    std::vector<Fe> pts;
    for (int i = 0; i < k0; ++i) pts.push_back(F.exp(i));
    const Mat Hg = vandermonde(F, pts, Delta + 1);
    std::vector<Fe> last;
    for (int j = 0; j < k0; ++j) last.push_back(Hg.at(Delta, j));
    std::vector<int> top(Delta);
    std::iota(top.begin(), top.end(), 0);
    LinearCode c = finish(canonical_parity(F, m, r, last, Hg.rows_subset(top)), identity_block_groups(m, r), r, "PMR");
    c.params.d_min = Delta + 2;
    return c;
}

LinearCode mr_r12(int m, int r) {
    if (m < 1 || r < 1) throw Error("InvalidArgument", "need m, r >= 1");
    const int k = m * r - 2;
    if (k < 1) throw Error("InvalidArgument", "need mr >= 3");
    int l = 1;
    while ((1 << l) - 1 < r + 1) ++l;
    const long long sub = (1LL << l) - 1;
    int rho = 1;
    // 2^{l rho} > sub (k+2) / r + 1, in integers.
    while (static_cast<long long>(r) * ((1LL << (l * rho)) - 1) <= sub * (k + 2)) ++rho;
    if (l * rho > 20) throw Error("InvalidArgument", "field GF(2^" + std::to_string(l * rho) + ") too large");
    const FieldSpec F = field_make(2, l * rho);
    const Fe beta = F.exp((F.q() - 1) / sub);
    std::vector<Fe> theta;
    for (int i = 0; i < m; ++i)
        for (int j = 1; j <= r; ++j) theta.push_back(F.mul(F.exp(i), F.pow(beta, j)));
    std::vector<Fe> sq;
    for (Fe t : theta) sq.push_back(F.mul(t, t));
    Mat low(F, 2, m * r);
    for (int j = 0; j < m * r; ++j) {
        low.at(0, j) = 1;
        low.at(1, j) = theta[j];
    }
    LinearCode c = finish(canonical_parity(F, m, r, sq, low), identity_block_groups(m, r), r, "MR");
    c.params.d_min = -1;
    return c;
}

LinearCode mr_rdelta2(int m, int r, int delta, int psi) {
    if (m < 1 || r < 1 || delta < 1) throw Error("InvalidArgument", "need m, r, delta >= 1");
    if (psi < r + delta) throw Error("InvalidArgument", "need psi >= r + delta");
    if (m * r - 2 < 1) throw Error("InvalidArgument", "need mr >= 3");
    std::uint32_t q = 0;
    for (std::uint64_t cand = static_cast<std::uint64_t>(psi) * m + 1; cand <= (1u << 20); cand += psi)
        if (prime_power(cand)) {
            q = static_cast<std::uint32_t>(cand);
            break;
        }
    if (!q) throw Error("NoSuitableField", "no prime power q <= 2^20 with psi | q-1 and q-1 >= psi*m");
    const FieldSpec F = field_of_order(q);
    const Fe beta = F.exp((q - 1) / psi);
    const int w = r + delta;  // r' + 1
    Mat H(F, m * delta + 2, m * w);
    LocalStructure ls;
    for (int blk = 0; blk < m; ++blk) {
        std::vector<int> g;
        for (int b = 0; b < w; ++b) {
            const int col = blk * w + b;
            g.push_back(col);
            for (int a = 0; a < delta; ++a) H.at(blk * delta + a, col) = F.pow(beta, a * b);
            H.at(m * delta, col) = F.pow(beta, static_cast<std::int64_t>(b) * delta);
            H.at(m * delta + 1, col) = F.mul(F.exp(blk), F.pow(beta, -b));
        }
        ls.groups.push_back(g);
    }
    ls.delta = delta;
    LinearCode c = finish(H, ls, r, "MR");
    return c;
}

PmrA1Result pmr_general_a1(int m, int r, int Delta, std::uint32_t baseQ, HChoice hc, std::uint64_t seed) {
    if (m < 2 || r < 1 || Delta < 1 || Delta > 2 * r - 1) throw Error("InvalidArgument", "need 1 <= Delta <= 2r-1");
    const auto pp = prime_power(baseQ);
    if (!pp) throw Error("InvalidArgument", "base field order must be a prime power");
    const std::uint64_t big = static_cast<std::uint64_t>(baseQ) * baseQ * baseQ;
    if (big > (1u << 20)) throw Error("InvalidArgument", "GF(Q^3) too large");
    const FieldSpec F = field_make(pp->first, pp->second * 3);
    const std::uint32_t Q1 = baseQ - 1;
    const Fe alpha = F.exp((F.q() - 1) / Q1);  // generates GF(Q)^*
    const Fe xi = F.primitive();
    const int k0 = m * r;
    if (m * (r + 1) - k0 + Delta > m * (r + 1)) throw Error("InvalidArgument", "dimension would be negative");
    std::mt19937_64 rng(seed);
    std::vector<Fe> h;
    if (hc == HChoice::RootsOfUnity) {
        std::uint32_t o = r + 1;
        while (Q1 % o) ++o;
        if (o > Q1 || static_cast<std::uint32_t>(m) > Q1 / o)
            throw Error("InvalidArgument", "GF(Q) lacks enough root-of-unity cosets");
        const Fe root = F.pow(alpha, Q1 / o);
        for (int i = 0; i < m; ++i) {
            std::vector<std::uint32_t> idx(o);
            std::iota(idx.begin(), idx.end(), 0u);
            std::shuffle(idx.begin(), idx.end(), rng);
            for (int j = 0; j < r; ++j) h.push_back(F.mul(F.pow(alpha, i), F.pow(root, idx[j])));
        }
    } else {
        if (static_cast<std::uint32_t>(k0) > baseQ) throw Error("InvalidArgument", "need mr <= Q distinct shifts");
        std::vector<Fe> sub{0};
        for (std::uint32_t e = 0; e < Q1; ++e) sub.push_back(F.pow(alpha, e));
        std::shuffle(sub.begin(), sub.end(), rng);
        h.assign(sub.begin(), sub.begin() + k0);
    }
    std::vector<Fe> theta;
    for (Fe x : h) theta.push_back(F.add(xi, x));
    const Mat low = vandermonde(F, theta, Delta);
    // Below r the local rows carry the split row theta^Delta, as in parity splitting.
    std::vector<Fe> local;
    for (Fe t : theta) local.push_back(Delta < r ? F.pow(t, Delta) : t);
    PmrA1Result out;
    out.code = finish(canonical_parity(F, m, r, local, low), identity_block_groups(m, r), r, "PMR");
    out.verdict = pmr_check(out.code, *out.code.structure);
    out.h = nlohmann::json::array();
    for (Fe x : h) out.h.push_back(x ? nlohmann::json(F.log(x)) : nlohmann::json(nullptr));
    return out;
}

LinearCode mr_r2_coset_search(int N, int D, const FieldSpec& F) {
    const std::uint32_t q1 = F.q() - 1;
    const int k = 2 * D + 1;
    if (N < 3 || N % 3 || D < 0 || 3 * (k - 1) >= 2 * N)
        throw Error("InvalidArgument", "need 3 | N and 2D/N < 2/3");
    if (q1 % 3 || static_cast<std::uint32_t>(N) > q1) throw Error("InvalidArgument", "need 3 | q-1 and N <= q-1");
    std::vector<int> degrees;
    for (int j = 0; j < D; ++j)
        for (int i = 0; i < 2; ++i) degrees.push_back(3 * j + i);
    degrees.push_back(3 * D);
    const Fe w = F.exp(q1 / 3);
    const int total = static_cast<int>(q1 / 3);
    Mat Gall(F, k, static_cast<int>(q1));
    for (int c = 0; c < total; ++c)
        for (int e = 0; e < 3; ++e) {
            const Fe x = F.mul(F.exp(c), F.pow(w, e));
            for (int row = 0; row < k; ++row) Gall.at(row, 3 * c + e) = F.pow(x, degrees[row]);
        }
    // Every one-per-coset puncturing of the chosen cosets must be MDS.
    auto admissible_mds = [&](const std::vector<int>& cosets) {
        const int l = static_cast<int>(cosets.size());
        const int size = std::min(k, 2 * l);
        std::vector<int> drop(l, 0);
        while (true) {
            std::vector<int> cols;
            for (int i = 0; i < l; ++i)
                for (int e = 0; e < 3; ++e)
                    if (e != drop[i]) cols.push_back(3 * cosets[i] + e);
            if (!columns_mds(Gall, cols, size)) return false;
            int i = 0;
            while (i < l && ++drop[i] == 3) drop[i++] = 0;
            if (i == l) return true;
        }
    };
    std::vector<int> chosen{0};
    for (int c = 1; c < total && static_cast<int>(chosen.size()) < N / 3; ++c) {
        chosen.push_back(c);
        if (!admissible_mds(chosen)) chosen.pop_back();
    }
    if (static_cast<int>(chosen.size()) < N / 3 || !admissible_mds(chosen))
        throw Error("SearchExhausted", "only " + std::to_string(chosen.size()) + " of " + std::to_string(N / 3) +
                                           " cosets found over GF(" + std::to_string(F.q()) + "); try a larger field");
    std::vector<int> cols;
    LocalStructure ls;
    for (int i = 0; i < static_cast<int>(chosen.size()); ++i) {
        ls.groups.push_back({3 * i, 3 * i + 1, 3 * i + 2});
        for (int e = 0; e < 3; ++e) cols.push_back(3 * chosen[i] + e);
    }
    LinearCode c = code_from_generator(Gall.cols_subset(cols));
    if (c.k != k) throw Error("SearchExhausted", "restricted evaluation code lost dimension");
    c.structure = ls;
    c.params.r = 2;
    c.params.t = 1;
    c.params.role = "MR";
    return c;
}

}  // namespace lrc
