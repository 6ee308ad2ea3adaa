#pragma once
// Independent reference computations used to cross-check the library.
#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "lrc/field.hpp"
#include "lrc/matrix.hpp"

namespace oracle {

using lrc::Fe;

// Schoolbook multiplication of base-p packed polynomials modulo `mod`.
inline Fe poly_mul(Fe a, Fe b, std::uint32_t p, const std::vector<std::uint32_t>& mod) {
    const std::size_t m = mod.empty() ? 1 : mod.size() - 1;
    if (mod.empty()) return static_cast<Fe>(std::uint64_t(a) * b % p);
    std::vector<std::int64_t> x(m), y(m), z(2 * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        x[i] = a % p;
        a /= p;
        y[i] = b % p;
        b /= p;
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) z[i + j] = (z[i + j] + x[i] * y[j]) % p;
    for (std::size_t d = 2 * m - 1; d >= m; --d) {
        const std::int64_t c = z[d];
        if (!c) continue;
        for (std::size_t i = 0; i <= m; ++i) z[d - m + i] = ((z[d - m + i] - c * mod[i]) % std::int64_t(p) + p) % p;
    }
    Fe v = 0;
    for (std::size_t i = m; i-- > 0;) v = v * p + static_cast<Fe>(z[i]);
    return v;
}

// Determinant by permutation expansion; only for tiny matrices.
inline Fe det(const lrc::Mat& M) {
    const int n = M.rows;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    Fe total = 0;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
        Fe prod = 1;
        for (int i = 0; i < n; ++i) prod = M.F.mul(prod, M.at(i, perm[i]));
        total = (inv % 2) ? M.F.sub(total, prod) : M.F.add(total, prod);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Point-line incidence of PG(2,q) as a binary matrix (points x lines).
inline std::vector<std::vector<int>> pg2_incidence(const lrc::FieldSpec& F) {
    const std::uint32_t q = F.q();
    std::vector<std::array<Fe, 3>> pts;
    for (Fe a = 0; a < q; ++a)
        for (Fe b = 0; b < q; ++b) pts.push_back({1, a, b});
    for (Fe b = 0; b < q; ++b) pts.push_back({0, 1, b});
    pts.push_back({0, 0, 1});
    const std::size_t N = pts.size();
    std::vector<std::vector<int>> inc(N, std::vector<int>(N, 0));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            Fe s = 0;
            for (int t = 0; t < 3; ++t) s = F.add(s, F.mul(pts[i][t], pts[j][t]));
            inc[i][j] = s == 0;
        }
    return inc;
}

inline lrc::Mat to_mat(const lrc::FieldSpec& F, const std::vector<std::vector<int>>& a) {
    std::vector<std::vector<Fe>> v;
    for (const auto& r : a) v.emplace_back(r.begin(), r.end());
    return lrc::Mat::from_rows(F, v);
}

inline lrc::Mat random_mat(const lrc::FieldSpec& F, int r, int c, std::mt19937_64& rng, double density = 1.0) {
    lrc::Mat M(F, r, c);
    std::uniform_int_distribution<Fe> d(0, F.q() - 1);
    std::uniform_real_distribution<double> u(0, 1);
    for (auto& x : M.data) x = (u(rng) < density) ? d(rng) : 0;
    return M;
}

// Rank by brute force over GF(2): size of the span of the rows.
inline int rank_gf2_span(const lrc::Mat& M) {
    std::set<std::vector<Fe>> span{std::vector<Fe>(M.cols, 0)};
    for (int i = 0; i < M.rows; ++i) {
        std::set<std::vector<Fe>> next = span;
        for (auto v : span) {
            for (int j = 0; j < M.cols; ++j) v[j] ^= M.at(i, j);
            next.insert(v);
        }
        span.swap(next);
    }
    int r = 0;
    while ((std::size_t(1) << r) < span.size()) ++r;
    return r;
}

// Sequential peeling over a binary H: repeatedly fix an erased symbol that is the only
// erased one in the support of some row.
inline bool peel_recovers(const lrc::Mat& H, std::vector<int> erased) {
    std::vector<char> gone(H.cols, 0);
    for (int e : erased) gone[e] = 1;
    bool progress = true;
    while (!erased.empty() && progress) {
        progress = false;
        for (int i = 0; i < H.rows && !progress; ++i) {
            int hit = -1, count = 0;
            for (int j = 0; j < H.cols; ++j)
                if (H.at(i, j) && gone[j]) {
                    ++count;
                    hit = j;
                }
            if (count == 1) {
                gone[hit] = 0;
                erased.erase(std::find(erased.begin(), erased.end(), hit));
                progress = true;
            }
        }
    }
    return erased.empty();
}

// GF(2) rank of a matrix with column weights 1 or 2, read as a graph in which weight-1
// columns end at a virtual node: node count minus component count.
inline int incidence_rank_by_components(const lrc::Mat& H) {
    std::vector<int> parent(H.rows + 1);
    for (int i = 0; i <= H.rows; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<char> touched(H.rows + 1, 0);
    for (int j = 0; j < H.cols; ++j) {
        std::vector<int> ends;
        for (int i = 0; i < H.rows; ++i)
            if (H.at(i, j)) ends.push_back(i);
        if (ends.size() == 1) ends.push_back(H.rows);
        if (ends.size() != 2) return -1;
        touched[ends[0]] = touched[ends[1]] = 1;
        parent[find(ends[0])] = find(ends[1]);
    }
    int nodes = 0, comps = 0;
    for (int i = 0; i <= H.rows; ++i)
        if (touched[i]) {
            ++nodes;
            comps += find(i) == i;
        }
    // The virtual row is the sum of the other rows of its component, so dropping it keeps the rank.
    return nodes - comps;
}

// Minimum nonzero weight of the row space of G by running over every message vector.
inline int min_weight_messages(const lrc::Mat& G) {
    const auto& F = G.F;
    std::vector<Fe> msg(G.rows, 0);
    int best = G.cols + 1;
    while (true) {
        int i = 0;
        while (i < G.rows && msg[i] == F.q() - 1) msg[i++] = 0;
        if (i == G.rows) break;
        ++msg[i];
        int wt = 0;
        for (int j = 0; j < G.cols; ++j) {
            Fe x = 0;
            for (int a = 0; a < G.rows; ++a) x = F.add(x, F.mul(msg[a], G.at(a, j)));
            wt += x != 0;
        }
        if (wt > 0) best = std::min(best, wt);
    }
    return best;
}

}  // namespace oracle
