#include "lrc/construct_lr.hpp"

#include <algorithm>

#include "lrc/error.hpp"
#include "lrc/graph.hpp"

namespace lrc {
namespace {

const FieldSpec& gf2() {
    static const FieldSpec F = field_make(2, 1);
    return F;
}

LinearCode with_params(LinearCode c, int r, int t, const char* role) {
    c.params.r = r;
    c.params.t = t;
    c.params.role = role;
    return c;
}

}  // namespace

EvalPoints subgroup_cosets(const FieldSpec& F, int n, int r) {
    const std::uint32_t q1 = F.q() - 1;
    if (r < 1 || n <= 0 || n % (r + 1) != 0 || q1 % static_cast<std::uint32_t>(n) != 0)
        throw Error("SubgroupUnavailable", "need (r+1) | n | (q-1)");
    const Fe w = F.exp(q1 / n);        // generates the order-n subgroup
    const Fe h = F.exp(q1 / (r + 1));  // generates the order-(r+1) subgroup
    EvalPoints E;
    E.F = F;
    E.good_degree = r + 1;
    for (int i = 0; i < n / (r + 1); ++i) {
        std::vector<Fe> coset;
        Fe x = F.pow(w, i);
        for (int j = 0; j <= r; ++j, x = F.mul(x, h)) coset.push_back(x);
        E.cosets.push_back(coset);
    }
    return E;
}

LinearCode pyramid_code(int n, int k, int r, const FieldSpec& F) {
    if (k < 1 || r < 1 || r > k) throw Error("InvalidArgument", "need 1 <= r <= k");
    const int groups = (k + r - 1) / r;
    const int n1 = n - groups + 1;
    if (n1 < k + 1) throw Error("InvalidArgument", "n too small for the local parities");
    if (F.q() < static_cast<std::uint32_t>(n1)) throw Error("FieldTooSmall", "need q >= n - ceil(k/r) + 1");

    std::vector<Fe> points;
    for (int i = 0; i < n1; ++i) points.push_back(i == 0 ? 0 : F.exp(i - 1));
    const Mat sys = mat_rref(vandermonde(F, points, k)).R;  // [I_k | P | Q]

    Mat G(F, k, n);
    LocalStructure ls;
    int col = 0;
    for (int g = 0; g < groups; ++g) {
        const int lo = g * r, hi = std::min(k, lo + r);
        std::vector<int> members;
        for (int i = lo; i < hi; ++i, ++col) {
            G.at(i, col) = 1;
            members.push_back(col);
        }
        for (int i = lo; i < hi; ++i) G.at(i, col) = sys.at(i, k);
        members.push_back(col++);
        ls.groups.push_back(members);
    }
    for (int j = k + 1; j < n1; ++j, ++col)
        for (int i = 0; i < k; ++i) G.at(i, col) = sys.at(i, j);
    LinearCode c = with_params(code_from_generator(G), r, 1, "LR");
    c.structure = ls;
    return c;
}

LinearCode tamo_barg_code(int n, int k, int r, const FieldSpec& F) {
    if (k < 1 || k >= n || r < 1) throw Error("InvalidArgument", "need 1 <= k < n and r >= 1");
    const EvalPoints E = subgroup_cosets(F, n, r);
    const int a = k / r, b = k % r;
    std::vector<int> degrees;
    for (int j = 0; j < a; ++j)
        for (int i = 0; i < r; ++i) degrees.push_back(j * (r + 1) + i);
    for (int i = 0; i < b; ++i) degrees.push_back(a * (r + 1) + i);

    Mat G(F, k, n);
    LocalStructure ls;
    int col = 0;
    for (const auto& coset : E.cosets) {
        std::vector<int> members;
        for (Fe x : coset) {
            for (int row = 0; row < k; ++row) G.at(row, col) = F.pow(x, degrees[row]);
            members.push_back(col++);
        }
        ls.groups.push_back(members);
    }
    LinearCode c = with_params(code_from_generator(G), r, 1, "LR");
    if (c.k != k) throw Error("InvalidArgument", "monomial evaluations are dependent");
    c.structure = ls;
    return c;
}

LinearCode product_avail_code(int r, int t) {
    if (r < 1 || t < 1) throw Error("InvalidArgument", "need r, t >= 1");
    long long n = 1;
    for (int i = 0; i < t; ++i) {
        n *= (r + 1);
        if (n > (1 << 14)) throw Error("BudgetExceeded", "(r+1)^t exceeds 2^14");
    }
    // One check per axis-parallel line of the t-dimensional (r+1)-grid.
    std::vector<std::vector<int>> rows;
    long long stride = 1;
    for (int axis = 0; axis < t; ++axis, stride *= (r + 1)) {
        for (long long base = 0; base < n; ++base) {
            if ((base / stride) % (r + 1) != 0) continue;
            std::vector<int> line;
            for (int j = 0; j <= r; ++j) line.push_back(static_cast<int>(base + j * stride));
            rows.push_back(line);
        }
    }
    Mat H(gf2(), static_cast<int>(rows.size()), static_cast<int>(n));
    for (int i = 0; i < H.rows; ++i)
        for (int j : rows[i]) H.at(i, j) = 1;
    return with_params(code_from_parity(H), r, t, "availability");
}

LinearCode wang_avail_code(int r, int t) {
    if (r < 1 || t < 1) throw Error("InvalidArgument", "need r, t >= 1");
    const int l = r + t;
    if (binom(l, t) > 10000) throw Error("BudgetExceeded", "C(r+t, t) exceeds 10^4");
    std::vector<std::uint64_t> small, big;
    auto to_mask = [](const std::vector<int>& s) {
        std::uint64_t m = 0;
        for (int i : s) m |= std::uint64_t(1) << i;
        return m;
    };
    for_each_subset(l, t - 1, [&](const std::vector<int>& s) {
        small.push_back(to_mask(s));
        return true;
    });
    for_each_subset(l, t, [&](const std::vector<int>& s) {
        big.push_back(to_mask(s));
        return true;
    });
    Mat H(gf2(), static_cast<int>(small.size()), static_cast<int>(big.size()));
    for (int i = 0; i < H.rows; ++i)
        for (int j = 0; j < H.cols; ++j) H.at(i, j) = (small[i] & big[j]) == small[i];
    return with_params(code_from_parity(H), r, t, "SA");
}

LinearCode pg_plane_sa_code(int s) {
    if (s < 1 || s > 6) throw Error("InvalidArgument", "plane order 2^s needs 1 <= s <= 6");
    const FieldSpec F = field_make(2, s);
    const int Q = 1 << s;
    const auto lines = projective_plane_lines(F);
    const int N = static_cast<int>(lines.size());
    Mat H(gf2(), N, N);
    for (int i = 0; i < N; ++i)
        for (int p : lines[i]) H.at(i, p) = 1;
    LinearCode c = with_params(code_from_parity(H), Q, Q + 1, "SA");
    c.params.d_min = Q + 2;
    return c;
}

LinearCode steiner_sa_code(int s) {
    if (s < 3 || s > 10) throw Error("InvalidArgument", "need 3 <= s <= 10");
    const int m = (1 << s) - 1;
    // Points are the nonzero vectors 1..m; lines are triples {a, b, a^b}.
    std::vector<std::vector<int>> lines;
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b) {
            const int c = a ^ b;
            if (c > b) lines.push_back({a - 1, b - 1, c - 1});
        }
    Mat H(gf2(), m, static_cast<int>(lines.size()));
    for (int j = 0; j < H.cols; ++j)
        for (int p : lines[j]) H.at(p, j) = 1;
    LinearCode c = with_params(code_from_parity(H), (1 << (s - 1)) - 2, 3, "SA");
    c.params.d_min = 4;
    return c;
}

}  // namespace lrc
