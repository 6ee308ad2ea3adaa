#include <doctest.h>

#include "lrc/bounds.hpp"
#include "lrc/construct_lr.hpp"
#include "lrc/error.hpp"
#include "oracles.hpp"

using namespace lrc;

namespace {

// Every group must carry a nonzero dual codeword supported inside it.
bool groups_have_local_checks(const LinearCode& c) {
    const Mat G = c.generator();
    for (const auto& g : c.structure->groups)
        if (mat_rank(G.cols_subset(g)) >= static_cast<int>(g.size())) return false;
    return true;
}

std::vector<int> weights(const Mat& H, bool rows) {
    std::vector<int> w(rows ? H.rows : H.cols, 0);
    for (int i = 0; i < H.rows; ++i)
        for (int j = 0; j < H.cols; ++j)
            if (H.at(i, j)) ++w[rows ? i : j];
    return w;
}

// Availability t: every symbol lies in t checks that pairwise meet only in that symbol.
bool disjoint_checks(const Mat& H, int t) {
    for (int j = 0; j < H.cols; ++j) {
        std::vector<int> rows;
        for (int i = 0; i < H.rows; ++i)
            if (H.at(i, j)) rows.push_back(i);
        if (static_cast<int>(rows.size()) < t) return false;
        for (std::size_t a = 0; a < rows.size(); ++a)
            for (std::size_t b = a + 1; b < rows.size(); ++b)
                for (int x = 0; x < H.cols; ++x)
                    if (x != j && H.at(rows[a], x) && H.at(rows[b], x)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("pyramid codes") {
    const FieldSpec F8 = field_of_order(8);
    auto c = pyramid_code(7, 4, 2, F8);
    CHECK(c.n == 7);
    CHECK(c.k == 4);
    CHECK(oracle::min_weight_messages(c.generator()) == 3);
    CHECK(lr_singleton_bound(7, 4, 2) == 3);
    CHECK(groups_have_local_checks(c));
    // Systematic part: G restricted to the information columns is the identity.
    const Mat G = *c.G;
    CHECK(G.cols_subset({0, 1, 3, 4}) == Mat::identity(F8, 4));

    auto odd = pyramid_code(9, 5, 2, F8);
    CHECK(odd.structure->groups.size() == 3);
    CHECK(oracle::min_weight_messages(odd.generator()) == lr_singleton_bound(9, 5, 2));
    CHECK(groups_have_local_checks(odd));

    auto mds = pyramid_code(6, 3, 3, F8);
    CHECK(is_mds(mds));
    CHECK_THROWS_WITH_AS(pyramid_code(12, 4, 2, field_of_order(4)), doctest::Contains("FieldTooSmall"), Error);
}

TEST_CASE("Tamo-Barg codes") {
    const FieldSpec F9 = field_of_order(9);
    auto E = subgroup_cosets(F9, 8, 3);
    REQUIRE(E.cosets.size() == 2);
    for (const auto& coset : E.cosets) {
        std::vector<Fe> vals;
        for (Fe x : coset) vals.push_back(F9.pow(x, 4));
        CHECK(std::all_of(vals.begin(), vals.end(), [&](Fe v) { return v == vals[0]; }));
    }
    auto c = tamo_barg_code(8, 4, 3, F9);
    CHECK(c.k == 4);
    CHECK(oracle::min_weight_messages(c.generator()) == 4);
    CHECK(lr_singleton_bound(8, 4, 3) == 4);
    CHECK(groups_have_local_checks(c));

    const FieldSpec F13 = field_of_order(13);
    for (int k : {2, 3, 4, 5}) {
        auto t = tamo_barg_code(12, k, 2, F13);
        CHECK(oracle::min_weight_messages(t.generator()) == lr_singleton_bound(12, k, 2));
        CHECK(groups_have_local_checks(t));
    }
    CHECK_THROWS_WITH_AS(tamo_barg_code(10, 4, 4, F13), doctest::Contains("SubgroupUnavailable"), Error);
}

TEST_CASE("product availability codes") {
    auto spc = product_avail_code(3, 1);
    CHECK(spc.n == 4);
    CHECK(spc.k == 3);
    auto c = product_avail_code(2, 2);
    CHECK(c.n == 9);
    CHECK(c.k == 4);
    CHECK(disjoint_checks(c.H, 2));
    for (int r = 2; r <= 4; ++r)
        for (int t = 1; t <= 3; ++t) {
            auto p = product_avail_code(r, t);
            long long num = 1, den = 1;
            for (int i = 0; i < t; ++i) num *= r, den *= r + 1;
            CHECK(Rational(p.k, p.n) == Rational(num, den));
            CHECK(disjoint_checks(p.H, t));
        }
    CHECK_THROWS_WITH_AS(product_avail_code(3, 8), doctest::Contains("BudgetExceeded"), Error);
}

TEST_CASE("Wang availability codes") {
    auto a = wang_avail_code(2, 2);
    CHECK(a.n == 6);
    CHECK(a.k == 3);
    auto b = wang_avail_code(3, 2);
    CHECK(b.n == 10);
    CHECK(b.k == 6);
    CHECK(oracle::rank_gf2_span(b.H) == 4);
    auto c = wang_avail_code(3, 3);
    CHECK(c.n == 20);
    CHECK(oracle::rank_gf2_span(c.H) == 10);
    CHECK(Rational(c.k, c.n) == Rational(1, 2));
    for (int r = 2; r <= 4; ++r)
        for (int t = 2; t <= 4; ++t) {
            auto w = wang_avail_code(r, t);
            for (int x : weights(w.H, true)) CHECK(x == r + 1);
            for (int x : weights(w.H, false)) CHECK(x == t);
            CHECK(w.n - w.k == static_cast<int>(binom(r + t - 1, t - 1)));
            CHECK(disjoint_checks(w.H, t));
        }
}

TEST_CASE("projective plane SA code") {
    auto c = pg_plane_sa_code(2);
    CHECK(c.n == 21);
    CHECK(c.k == 11);
    CHECK(oracle::rank_gf2_span(c.H) == 10);
    CHECK(oracle::min_weight_messages(c.generator()) == 6);
    CHECK(c.n == sa_blocklength_bound(4, 5));
    for (int x : weights(c.H, true)) CHECK(x == 5);
    for (int x : weights(c.H, false)) CHECK(x == 5);
    CHECK(disjoint_checks(c.H, 5));
    auto c3 = pg_plane_sa_code(3);
    CHECK(c3.n == 73);
    CHECK(c3.n - c3.k == 28);
}

TEST_CASE("Steiner triple system SA codes") {
    auto f = steiner_sa_code(3);
    CHECK(f.n == 7);
    CHECK(f.k == 3);
    CHECK(oracle::min_weight_messages(f.generator()) == 4);
    CHECK(disjoint_checks(f.H, 3));
    auto g = steiner_sa_code(4);
    CHECK(g.n == 35);
    CHECK(g.k == 35 - 15 + 4);
    CHECK(g.params.r == 6);
    for (int x : weights(g.H, true)) CHECK(x == g.params.r + 1);
    CHECK(min_distance(g) == 4);
}
