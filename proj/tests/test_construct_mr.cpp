#include <doctest.h>

#include "lrc/bounds.hpp"
#include "lrc/construct_lr.hpp"
#include "lrc/construct_mr.hpp"
#include "lrc/error.hpp"
#include "oracles.hpp"

using namespace lrc;

namespace {

// Rank-based MR oracle: every delta-per-group plus s-extra erasure set has independent columns.
bool mr_oracle(const LinearCode& c, const LocalStructure& ls, int delta, int s) {
    const Mat H = c.full_rank_parity();
    // Locality: the dual words vanishing off a group span at least delta dimensions.
    for (const auto& g : ls.groups) {
        std::vector<int> off;
        for (int j = 0; j < c.n; ++j)
            if (std::find(g.begin(), g.end(), j) == g.end()) off.push_back(j);
        if (mat_nullspace(H.cols_subset(off).transpose()).rows < delta) return false;
    }
    bool ok = true;
    std::vector<int> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t g) {
        if (!ok) return;
        if (g == ls.groups.size()) {
            std::vector<int> rest;
            for (int j = 0; j < c.n; ++j)
                if (std::find(cur.begin(), cur.end(), j) == cur.end()) rest.push_back(j);
            for_each_subset(static_cast<int>(rest.size()), s, [&](const std::vector<int>& e) {
                std::vector<int> cols = cur;
                for (int i : e) cols.push_back(rest[i]);
                if (oracle::det(H.cols_subset(cols)) == 0) ok = false;
                return ok;
            });
            return;
        }
        const auto& grp = ls.groups[g];
        for_each_subset(static_cast<int>(grp.size()), delta, [&](const std::vector<int>& e) {
            for (int i : e) cur.push_back(grp[i]);
            rec(g + 1);
            cur.resize(cur.size() - e.size());
            return ok;
        });
    };
    rec(0);
    return ok;
}

// Every pattern in the suite is a square system when n-k = m*delta + s.
bool suite_passes(const LinearCode& c, const LocalStructure& ls, int delta, int s) {
    SampleOptions ex{VerifyMode::Exhaustive};
    return pmds_check(c, ls, delta, s, ex).pass;
}

struct MutationTally {
    int total = 0, caught = 0, disagreements = 0;
};

// Adds 1 to each entry of H in turn and compares the verifier with the oracle.
MutationTally mutate_all(const LinearCode& c, int delta, int s) {
    MutationTally tally;
    for (int i = 0; i < c.H.rows; ++i)
        for (int j = 0; j < c.H.cols; ++j) {
            Mat H = c.H;
            H.at(i, j) = c.F.add(H.at(i, j), 1);
            const LinearCode mutant = code_from_parity(H);
            ++tally.total;
            const bool verdict = mutant.k == c.k && suite_passes(mutant, *c.structure, delta, s);
            const bool truth = mutant.k == c.k && mr_oracle(mutant, *c.structure, delta, s);
            if (!verdict) ++tally.caught;
            if (verdict != truth) {
                ++tally.disagreements;
            }
        }
    return tally;
}

}  // namespace

TEST_CASE("parameter records") {
    MrParams p{2, 2, 2, 2};
    CHECK(p.n() == 8);
    CHECK(p.k() == 2);
    PmrParams q{3, 3, 5};
    CHECK(q.n() == 12);
    CHECK(q.k() == 4);
    CHECK(q.a() == 1);
    CHECK(q.b() == 2);
}

TEST_CASE("parity-splitting PMR codes") {
    CHECK_THROWS_AS(pmr_parity_split(3, 4, 4, field_of_order(13)), Error);
    CHECK_THROWS_WITH_AS(pmr_parity_split(3, 4, 3, field_of_order(11)), doctest::Contains("FieldTooSmall"), Error);

    const auto c = pmr_parity_split(3, 4, 3, field_of_order(13));
    CHECK(c.n == 15);
    CHECK(c.k == 9);
    CHECK(min_distance(c) == 5);
    CHECK(min_distance_columns(c) == 5);
    CHECK(lr_singleton_bound(15, 9, 4) == 5);
    const auto rep = pmr_check(c, *c.structure);
    CHECK(rep.pass);
    CHECK(rep.details["d_min"] == 5);

    const auto d = pmr_parity_split(2, 3, 2, field_of_order(7));
    CHECK(d.n == 8);
    CHECK(d.k == 4);
    CHECK(Rational(d.k, d.n) == Rational(1, 2));
    CHECK(oracle::min_weight_messages(d.generator()) == 4);
    CHECK(pmr_check(d, *d.structure).pass);

    const auto z = pmr_parity_split(2, 3, 0, field_of_order(7));
    CHECK(z.k == 6);
    CHECK(pmr_check(z, *z.structure).pass);
}

TEST_CASE("Tamo-Barg codes need not be PMR") {
    const FieldSpec F = field_of_order(13);
    int failures = 0;
    for (int k : {3, 4, 5, 6}) {
        const auto c = tamo_barg_code(12, k, 3, F);
        if (!pmr_check(c, *c.structure).pass) ++failures;
    }
    CHECK(failures > 0);
}

TEST_CASE("(r,1,2) MR codes from subfield cosets") {
    const auto c = mr_r12(3, 2);
    CHECK(c.F.q() == 16);
    CHECK(c.n == 9);
    CHECK(c.k == 4);
    CHECK(c.H.cols - mat_rank(c.H) == 4);
    CHECK(static_cast<int>(c.F.q()) <= 2 * c.n);
    const auto rep = pmds_check(c, *c.structure, 1, 2, {VerifyMode::Exhaustive});
    CHECK(rep.pass);
    CHECK(rep.mode == "exhaustive");
    CHECK(mr_oracle(c, *c.structure, 1, 2));

    const auto d = mr_r12(2, 3);
    CHECK(d.F.q() == 64);
    CHECK(d.n == 8);
    CHECK(d.k == 4);
    CHECK(pmds_check(d, *d.structure, 1, 2).pass);
}

TEST_CASE("(r,delta,2) MR codes") {
    const auto c = mr_rdelta2(2, 2, 2, 4);
    CHECK(c.F.q() == 9);
    CHECK(c.n == 8);
    CHECK(c.k == 2);
    CHECK(pmds_check(c, *c.structure, 2, 2, {VerifyMode::Exhaustive}).pass);
    CHECK(mr_oracle(c, *c.structure, 2, 2));
    // Each group is a [4,2] MDS code.
    for (const auto& g : c.structure->groups) {
        const Mat local = c.H.rows_subset({0, 1}).cols_subset(c.structure->groups[0]);
        CHECK(is_mds(code_from_parity(local)));
        (void)g;
    }

    const auto d = mr_rdelta2(3, 2, 1, 4);
    CHECK(d.F.q() == 13);
    CHECK(d.n == 9);
    CHECK(d.k == 4);
    CHECK(pmds_check(d, *d.structure, 1, 2).pass);
    CHECK(mr_oracle(d, *d.structure, 1, 2));
    CHECK_THROWS_AS(mr_rdelta2(2, 2, 2, 3), Error);
}

TEST_CASE("zeroing a global row breaks the MR property") {
    auto c = mr_r12(3, 2);
    for (int j = 0; j < c.H.cols; ++j) c.H.at(c.H.rows - 1, j) = 0;
    const auto rep = pmds_check(code_from_parity(c.H), *c.structure, 1, 2);
    CHECK_FALSE(rep.pass);
    CHECK(rep.witness.contains("pattern"));
}

TEST_CASE("mutated MR fixtures: verifier agrees with the determinant oracle") {
    const auto a = mutate_all(mr_r12(3, 2), 1, 2);
    CHECK(a.disagreements == 0);
    CHECK(a.caught > 0);
    CHECK(a.caught < a.total);  // some mutants are still MR codes
    const auto b = mutate_all(mr_rdelta2(2, 2, 2, 4), 2, 2);
    CHECK(b.disagreements == 0);
    CHECK(b.caught > 0);
}

TEST_CASE("PMR with a = 1 over a cubic extension") {
    const auto res = pmr_general_a1(3, 3, 5, 16, HChoice::RootsOfUnity, 0);
    CHECK(res.code.F.q() == 4096);
    CHECK(res.code.n == 12);
    CHECK(res.code.k == 4);
    CHECK(res.verdict.pass);
    CHECK(res.verdict.details["d_min"] == 8);

    const auto small = pmr_general_a1(3, 3, 2, 16, HChoice::RootsOfUnity, 1);
    CHECK(small.verdict.pass);

    const auto rnd = pmr_general_a1(2, 2, 3, 4, HChoice::Random, 5);
    const auto again = pmr_general_a1(2, 2, 3, 4, HChoice::Random, 5);
    CHECK(rnd.h == again.h);
    CHECK(rnd.verdict.pass == again.verdict.pass);
}

TEST_CASE("locality-2 MR codes by coset search") {
    const auto c = mr_r2_coset_search(6, 1, field_of_order(13));
    CHECK(c.n == 6);
    CHECK(c.k == 3);
    CHECK(pmds_check(c, *c.structure, 1, 6 - 3 - 2, {VerifyMode::Exhaustive}).pass);
    CHECK(mr_oracle(c, *c.structure, 1, 1));

    const auto d = mr_r2_coset_search(9, 2, field_of_order(31));
    CHECK(d.n == 9);
    CHECK(d.k == 5);
    CHECK(pmds_check(d, *d.structure, 1, 9 - 5 - 3).pass);

    const auto rep = mr_r2_coset_search(3, 0, field_of_order(7));
    CHECK(rep.k == 1);
    CHECK_THROWS_AS(mr_r2_coset_search(9, 3, field_of_order(31)), Error);
}
