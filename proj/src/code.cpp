#include "lrc/code.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

namespace lrc {

namespace {

void check_indices(int n, const std::vector<int>& S) {
    for (int i : S)
        if (i < 0 || i >= n) throw Error("IndexOutOfRange", "coordinate " + std::to_string(i));
}

std::vector<int> complement(int n, const std::vector<int>& S) {
    std::vector<char> in(n, 0);
    for (int i : S) in[i] = 1;
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
        if (!in[i]) keep.push_back(i);
    return keep;
}

std::uint64_t ipow_capped(std::uint64_t b, int e, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > cap / b) return cap + 1;
        r *= b;
    }
    return r;
}

int popcount_words(const std::vector<std::uint64_t>& w) {
    int s = 0;
    for (auto x : w) s += std::popcount(x);
    return s;
}

}  // namespace

std::uint64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > ~std::uint64_t(0)) return ~std::uint64_t(0);
    }
    return static_cast<std::uint64_t>(r);
}

Mat LinearCode::generator() const {
    if (G) return *G;
    return mat_nullspace(H);
}

Mat LinearCode::full_rank_parity() const { return row_basis(H); }

LinearCode code_from_parity(const Mat& H) {
    LinearCode c;
    c.F = H.F;
    c.H = H;
    c.n = H.cols;
    c.k = H.cols - mat_rank(H);
    c.params.n = c.n;
    c.params.k = c.k;
    c.params.q = H.F.q();
    return c;
}

LinearCode code_from_generator(const Mat& G) {
    LinearCode c;
    c.F = G.F;
    c.G = row_basis(G);
    c.H = mat_nullspace(G);
    c.n = G.cols;
    c.k = c.G->rows;
    c.params.n = c.n;
    c.params.k = c.k;
    c.params.q = G.F.q();
    return c;
}

LinearCode dual(const LinearCode& c) {
    LinearCode d;
    d.F = c.F;
    d.H = c.generator();
    d.G = row_basis(c.H);
    d.n = c.n;
    d.k = d.G->rows;
    d.params.n = d.n;
    d.params.k = d.k;
    d.params.q = c.F.q();
    return d;
}

LinearCode puncture(const LinearCode& c, const std::vector<int>& S) {
    check_indices(c.n, S);
    return code_from_generator(c.generator().cols_subset(complement(c.n, S)));
}

LinearCode shorten(const LinearCode& c, const std::vector<int>& S) {
    check_indices(c.n, S);
    return code_from_parity(c.H.cols_subset(complement(c.n, S)));
}

int min_distance_enumerate(const LinearCode& c) {
    const Mat G = row_basis(c.generator());
    const int k = G.rows, n = G.cols;
    if (k == 0) throw Error("InvalidArgument", "zero code has no minimum distance");
    const FieldSpec& F = c.F;
    if (ipow_capped(F.q(), k, budget::kEnumerationWords) > budget::kEnumerationWords)
        throw Error("BudgetExceeded", "q^k exceeds codeword enumeration budget");

    int best = n;
    if (F.q() == 2) {
        const int words = (n + 63) / 64;
        std::vector<std::vector<std::uint64_t>> rows(k, std::vector<std::uint64_t>(words, 0));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j)
                if (G.at(i, j)) rows[i][j >> 6] |= std::uint64_t(1) << (j & 63);
        std::vector<std::uint64_t> cw(words, 0);
        const std::uint64_t total = std::uint64_t(1) << k;
        for (std::uint64_t g = 1; g < total; ++g) {
            const int flip = std::countr_zero(g);
            for (int w = 0; w < words; ++w) cw[w] ^= rows[flip][w];
            best = std::min(best, popcount_words(cw));
        }
        return best;
    }

    // One representative per projective point: leading message symbol equal to 1.
    const std::uint32_t q = F.q();
    for (int lead = 0; lead < k; ++lead) {
        std::vector<Fe> cw = G.row(lead);
        std::vector<Fe> digits(k, 0);
        auto weight = [&] {
            int w = 0;
            for (Fe x : cw) w += x != 0;
            return w;
        };
        best = std::min(best, weight());
        while (true) {
            int j = k - 1;
            while (j > lead && digits[j] == q - 1) {
                // digit wraps q-1 -> 0: subtract (q-1)*row
                for (int t = 0; t < n; ++t) cw[t] = F.sub(cw[t], F.mul(q - 1, G.at(j, t)));
                digits[j] = 0;
                --j;
            }
            if (j == lead) break;
            const Fe old = digits[j], nw = old + 1;
            const Fe delta = F.sub(nw, old);
            for (int t = 0; t < n; ++t)
                if (G.at(j, t)) cw[t] = F.add(cw[t], F.mul(delta, G.at(j, t)));
            digits[j] = nw;
            best = std::min(best, weight());
        }
    }
    return best;
}

int min_distance_columns(const LinearCode& c) {
    const Mat H = c.full_rank_parity();
    const int n = c.n, r = H.rows;
    if (c.k == 0) throw Error("InvalidArgument", "zero code has no minimum distance");
    std::uint64_t spent = 0;
    for (int w = 1; w <= r + 1; ++w) {
        if (w == r + 1) return w;  // any r+1 columns are dependent
        spent += binom(n, w);
        if (spent > budget::kColumnSubsets) throw Error("BudgetExceeded", "column subset budget exceeded");
        bool found = false;
        for_each_subset(n, w, [&](const std::vector<int>& S) {
            if (rank_of_columns(H, S) < w) {
                found = true;
                return false;
            }
            return true;
        });
        if (found) return w;
    }
    return r + 1;
}

int min_distance(const LinearCode& c) {
    const int k = c.k;
    if (ipow_capped(c.F.q(), k, budget::kEnumerationWords) <= budget::kEnumerationWords)
        return min_distance_enumerate(c);
    return min_distance_columns(c);
}

namespace {

// Enumerates i-dimensional subspaces of F^k as RREF coefficient matrices.
template <class Fn>
void for_each_rref(const FieldSpec& F, int k, int i, Fn&& f) {
    for_each_subset(k, i, [&](const std::vector<int>& piv) {
        std::vector<std::pair<int, int>> freepos;
        for (int a = 0; a < i; ++a)
            for (int j = piv[a] + 1; j < k; ++j)
                if (std::find(piv.begin(), piv.end(), j) == piv.end()) freepos.emplace_back(a, j);
        std::vector<Fe> vals(freepos.size(), 0);
        std::vector<std::vector<Fe>> M(i, std::vector<Fe>(k, 0));
        for (int a = 0; a < i; ++a) M[a][piv[a]] = 1;
        while (true) {
            for (std::size_t t = 0; t < freepos.size(); ++t) M[freepos[t].first][freepos[t].second] = vals[t];
            f(M);
            std::size_t t = 0;
            while (t < vals.size() && vals[t] == F.q() - 1) vals[t++] = 0;
            if (t == vals.size()) break;
            ++vals[t];
        }
        return true;
    });
}

}  // namespace

int support_weight(const LinearCode& c, int i) {
    const Mat G = row_basis(c.generator());
    const int k = G.rows, n = G.cols;
    if (i < 1 || i > k) throw Error("InvalidArgument", "subcode dimension out of range");
    // Gaussian binomial (k choose i)_q
    long double gb = 1;
    for (int j = 0; j < i; ++j)
        gb *= (std::pow((long double)c.F.q(), k - j) - 1) / (std::pow((long double)c.F.q(), j + 1) - 1);
    if (gb > budget::kSubspaces) throw Error("BudgetExceeded", "Gaussian binomial exceeds subspace budget");

    const FieldSpec& F = c.F;
    int best = n;
    std::vector<char> supp(n);
    for_each_rref(F, k, i, [&](const std::vector<std::vector<Fe>>& M) {
        std::fill(supp.begin(), supp.end(), 0);
        for (int a = 0; a < i; ++a)
            for (int t = 0; t < n; ++t) {
                if (supp[t]) continue;
                Fe v = 0;
                for (int b = 0; b < k; ++b)
                    if (M[a][b] && G.at(b, t)) v = F.add(v, F.mul(M[a][b], G.at(b, t)));
                if (v) supp[t] = 1;
            }
        best = std::min(best, static_cast<int>(std::count(supp.begin(), supp.end(), 1)));
    });
    return best;
}

bool is_mds(const LinearCode& c) {
    const Mat G = row_basis(c.generator());
    const int k = G.rows, n = G.cols;
    if (k == 0 || k == n) return true;
    if (binom(n, k) > budget::kMdsSubsets) throw Error("BudgetExceeded", "C(n,k) exceeds MDS check budget");
    return for_each_subset(n, k, [&](const std::vector<int>& S) { return rank_of_columns(G, S) == k; });
}

std::vector<std::vector<Fe>> all_codewords(const LinearCode& c) {
    const Mat G = row_basis(c.generator());
    const int k = G.rows, n = G.cols;
    const std::uint32_t q = c.F.q();
    if (ipow_capped(q, k, 1u << 20) > (1u << 20)) throw Error("BudgetExceeded", "too many codewords to list");
    std::vector<std::vector<Fe>> out;
    std::vector<Fe> msg(k, 0);
    while (true) {
        std::vector<Fe> cw(n, 0);
        for (int a = 0; a < k; ++a)
            if (msg[a])
                for (int t = 0; t < n; ++t) cw[t] = c.F.add(cw[t], c.F.mul(msg[a], G.at(a, t)));
        out.push_back(cw);
        int a = 0;
        while (a < k && msg[a] == q - 1) msg[a++] = 0;
        if (a == k) break;
        ++msg[a];
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace lrc
