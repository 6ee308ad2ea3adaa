#include <doctest.h>

#include <random>

#include "lrc/code.hpp"
#include "lrc/io.hpp"
#include "oracles.hpp"

using namespace lrc;

namespace {

// d_i by trying every i-tuple of codewords that is linearly independent.
int ghw_bruteforce(const LinearCode& c, int i) {
    auto words = all_codewords(c);
    words.erase(words.begin());  // drop zero word (sorted first)
    int best = c.n + 1;
    const int N = static_cast<int>(words.size());
    for_each_subset(N, i, [&](const std::vector<int>& S) {
        Mat M(c.F, i, c.n);
        for (int a = 0; a < i; ++a)
            for (int t = 0; t < c.n; ++t) M.at(a, t) = words[S[a]][t];
        if (mat_rank(M) < i) return true;
        int supp = 0;
        for (int t = 0; t < c.n; ++t) {
            bool nz = false;
            for (int a = 0; a < i; ++a) nz |= M.at(a, t) != 0;
            supp += nz;
        }
        best = std::min(best, supp);
        return true;
    });
    return best;
}

int min_weight_bruteforce(const LinearCode& c) {
    int best = c.n + 1;
    for (const auto& w : all_codewords(c)) {
        int wt = 0;
        for (Fe x : w) wt += x != 0;
        if (wt) best = std::min(best, wt);
    }
    return best;
}

}  // namespace

TEST_CASE("repetition code has distance n") {
    auto F = field_make(3, 1);
    auto c = code_from_generator(Mat::from_rows(F, {{1, 1, 1, 1, 1}}));
    CHECK(c.k == 1);
    CHECK(min_distance(c) == 5);
    CHECK(is_mds(c));
}

TEST_CASE("single parity code is MDS") {
    auto F = field_make(2, 1);
    auto c = code_from_parity(Mat::from_rows(F, {{1, 1, 1, 1}}));
    CHECK(c.k == 3);
    CHECK(is_mds(c));
    CHECK(min_distance(c) == 2);
}

TEST_CASE("Fano incidence gives [7,3,4]") {
    auto F = field_make(2, 1);
    auto c = code_from_parity(oracle::to_mat(F, oracle::pg2_incidence(F)));
    CHECK(c.n == 7);
    CHECK(c.k == 3);
    CHECK(min_distance(c) == 4);
}

TEST_CASE("PG(2,4) incidence gives [21,11,6]") {
    auto F = field_make(2, 1);
    auto c = code_from_parity(oracle::to_mat(F, oracle::pg2_incidence(field_make(2, 2))));
    CHECK(c.n == 21);
    CHECK(c.k == 11);
    CHECK(min_distance(c) == 6);
    CHECK(min_distance_columns(c) == 6);
}

TEST_CASE("[4,2] MDS over GF(5) has GHW (3,4)") {
    auto F = field_make(5, 1);
    auto c = code_from_generator(vandermonde(F, {1, 2, 3, 4}, 2));
    CHECK(support_weight(c, 1) == 3);
    CHECK(support_weight(c, 2) == 4);
    CHECK(ghw_bruteforce(c, 1) == 3);
    CHECK(ghw_bruteforce(c, 2) == 4);
    CHECK(is_mds(c));
}

TEST_CASE("shorten by empty set keeps the code, dual is an involution") {
    auto F = field_make(3, 1);
    std::mt19937_64 rng(5);
    auto c = code_from_parity(oracle::random_mat(F, 3, 7, rng));
    CHECK(all_codewords(shorten(c, {})) == all_codewords(c));
    CHECK(all_codewords(dual(dual(c))) == all_codewords(c));
    CHECK_THROWS_WITH_AS(shorten(c, {7}), doctest::Contains("IndexOutOfRange"), Error);
    CHECK_THROWS_WITH_AS(puncture(c, {-1}), doctest::Contains("IndexOutOfRange"), Error);
}

TEST_CASE("dual of puncture equals shorten of dual") {
    std::mt19937_64 rng(9);
    for (std::uint32_t q : {2u, 3u, 4u}) {
        auto F = field_of_order(q);
        for (int it = 0; it < 15; ++it) {
            const int n = 5 + rng() % 4;
            auto c = code_from_parity(oracle::random_mat(F, 2 + rng() % 3, n, rng));
            std::vector<int> S;
            for (int i = 0; i < n; ++i)
                if (rng() % 3 == 0) S.push_back(i);
            CHECK(all_codewords(dual(puncture(c, S))) == all_codewords(shorten(dual(c), S)));
        }
    }
}

TEST_CASE("enumeration and column-dependence distances agree for n <= 14") {
    std::mt19937_64 rng(21);
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        auto F = field_of_order(q);
        for (int it = 0; it < 25; ++it) {
            const int n = 4 + rng() % (q == 2 ? 11 : 5);
            auto c = code_from_parity(oracle::random_mat(F, 1 + rng() % (n - 2), n, rng, 0.7));
            if (c.k == 0) continue;
            const int d = min_distance_enumerate(c);
            CHECK(d == min_distance_columns(c));
            CHECK(d == min_weight_bruteforce(c));
        }
    }
}

TEST_CASE("support weights match brute force and increase strictly") {
    std::mt19937_64 rng(33);
    for (std::uint32_t q : {2u, 3u}) {
        auto F = field_of_order(q);
        for (int it = 0; it < 10; ++it) {
            const int n = 6 + rng() % 2;
            auto c = code_from_parity(oracle::random_mat(F, 3, n, rng, 0.7));
            if (c.k < 2 || c.k > (q == 2 ? 4 : 3)) continue;
            int prev = 0;
            for (int i = 1; i <= c.k; ++i) {
                const int di = support_weight(c, i);
                CHECK(di == ghw_bruteforce(c, i));
                CHECK(di > prev);
                prev = di;
            }
            CHECK(support_weight(c, 1) == min_distance(c));
        }
    }
}

TEST_CASE("budgets are enforced") {
    auto F = field_make(2, 1);
    Mat G(F, 30, 40);
    for (int i = 0; i < 30; ++i) G.at(i, i) = G.at(i, 30 + i % 10) = 1;
    auto c = code_from_generator(G);
    CHECK_THROWS_WITH_AS(support_weight(c, 15), doctest::Contains("BudgetExceeded"), Error);
    CHECK_THROWS_WITH_AS(min_distance_enumerate(c), doctest::Contains("BudgetExceeded"), Error);
    CHECK(min_distance(c) == 2);
}

TEST_CASE("code JSON round trip") {
    auto F = field_make(2, 1);
    auto c = code_from_parity(oracle::to_mat(F, oracle::pg2_incidence(F)));
    c.params.r = 2;
    c.params.t = 3;
    c.params.role = "SA";
    auto j = json::parse(code_to_json(c).dump());
    CHECK(j["params"]["role"] == "SA");
    auto back = code_from_json(j);
    CHECK(back.H == c.H);
    CHECK(back.k == 3);
    CHECK(back.params.t == 3);
    j["params"]["bogus"] = 1;
    CHECK_THROWS_AS(code_from_json(j), Error);
}
