// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Exit status is non-zero only for failures outside the known-failure list.
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "lrc/bounds.hpp"
#include "lrc/construct_lr.hpp"
#include "lrc/construct_mr.hpp"
#include "lrc/construct_seq.hpp"
#include "lrc/error.hpp"
#include "lrc/graph.hpp"
#include "lrc/verify.hpp"
#include "oracles.hpp"

using namespace lrc;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back(what);
        }
    }
};

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

long long ipow(long long b, long long e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}
long long cdiv(long long a, long long b) { return (a + b - 1) / b; }

Outcome moore_rate() {
    Outcome o;
    const auto p = moore_code(2, 4);
    const auto h = moore_code(2, 5);
    o.require(p.n == 15 && p.k == 6, "Petersen code is not (15,6)");
    o.require(Rational(p.k, p.n) == Rational(2, 5) && Rational(p.k, p.n) == seq_rate_bound(2, 4), "Petersen rate");
    o.require(h.n == 21 && h.k == 8, "Heawood code is not (21,8)");
    o.require(Rational(h.k, h.n) == Rational(8, 21) && Rational(h.k, h.n) == seq_rate_bound(2, 5), "Heawood rate");
    o.require(seq_recovery_check(p, 2, 4, {VerifyMode::Exhaustive}).pass, "Petersen t=4 recovery");
    o.require(seq_recovery_check(h, 2, 5, {VerifyMode::Exhaustive}).pass, "Heawood t=5 recovery");
    return o;
}

Outcome general_construction() {
    Outcome o;
    const auto b = seq_general_build(3, 5);
    const auto& c = b.code;
    o.require(c.n == 1352, "n != 1352");
    o.require(mat_rank(c.H) == 650, "rank(H) != 650");
    o.require(Rational(c.k, c.n) == Rational(27, 52) && Rational(c.k, c.n) == seq_rate_bound(3, 5), "rate != 27/52");
    o.require(c.n % 52 == 0 && c.n / 52 == 26, "n != 26*52");
    o.require(girth(b.expanded) >= 6, "expanded graph girth < 6");
    o.require(seq_recovery_check(c, 3, 5, {VerifyMode::Certificate}).pass, "girth certificate");
    const auto s = seq_recovery_check(c, 3, 5, {VerifyMode::Sampled, 100000, 0, workers()});
    o.require(s.pass && s.checked == 100000, "sampled 5-erasure patterns");
    return o;
}

Outcome t3_fixtures() {
    Outcome o;
    const auto a = t3_catalog("ex1");
    const auto b = t3_catalog("ex2");
    o.require(a.n == 10 && a.k == 5, "ex1 is not (10,5)");
    o.require(b.n == 14 && b.k == 8, "ex2 is not (14,8)");
    o.require(seq_recovery_check(a, 3, 3, {VerifyMode::Exhaustive}).pass, "ex1 t=3 recovery");
    o.require(seq_recovery_check(b, 4, 3, {VerifyMode::Exhaustive}).pass, "ex2 t=3 recovery");
    const auto ba = seq_blocklength_bounds(5, 3, 3);
    const auto bb = seq_blocklength_bounds(8, 4, 3);
    o.require(ba.prior == 9 && ba.improved == 10LL, "bounds for (5,3)");
    o.require(bb.prior == 13 && bb.improved == 14LL, "bounds for (8,4)");
    return o;
}

Outcome hamming_row() {
    Outcome o;
    const std::vector<int> want{15, 18, 20, 22, 23};
    for (int r = 2; r <= 6; ++r)
        o.require(hamming_type_bound(31, r) == want[r - 2], "r=" + std::to_string(r));
    return o;
}

Outcome sa_bibd() {
    Outcome o;
    const auto c = pg_plane_sa_code(2);
    o.require(c.n == 21, "n != 21");
    o.require(mat_rank(c.H) == 10, "rank != 10");
    o.require(min_distance(c) == 6, "d_min != 6");
    o.require(sa_check(c.H, 4, 5).pass, "sa_check");
    o.require(availability_check(c, 4, 5).pass, "availability t=5");
    o.require(sa_blocklength_bound(4, 5) == 21 && c.n == sa_blocklength_bound(4, 5), "length bound equality");
    const auto f = steiner_sa_code(3);
    o.require(f.n == 7 && f.k == 3 && min_distance(f) == 4, "Steiner code is not [7,3,4]");
    o.require(availability_check(f, 2, 3).pass, "Steiner availability t=3");
    return o;
}

Outcome mr_exhaustive() {
    Outcome o;
    const auto a = mr_r12(3, 2);
    const auto b = mr_rdelta2(2, 2, 2, 4);
    o.require(a.F.q() == 16, "mr_r12 field");
    o.require(b.F.q() == 9, "mr_rdelta2 field");
    const auto ra = pmds_check(a, *a.structure, 1, 2, {VerifyMode::Exhaustive});
    const auto rb = pmds_check(b, *b.structure, 2, 2, {VerifyMode::Exhaustive});
    o.require(ra.pass && ra.mode == "exhaustive", "mr_r12(3,2) pmds");
    o.require(rb.pass && rb.mode == "exhaustive", "mr_rdelta2(2,2,2,4) pmds");
    o.require(static_cast<int>(a.F.q()) <= 2 * a.n && static_cast<int>(b.F.q()) <= 2 * b.n, "field size above 2n");
    return o;
}

Outcome pmr() {
    Outcome o;
    const auto c = pmr_parity_split(3, 4, 3, field_of_order(13));
    o.require(min_distance(c) == 5, "parity-split d_min != 5");
    o.require(pmr_check(c, *c.structure).pass, "parity-split pmr_check");
    bool any = false;
    for (std::uint64_t seed = 0; seed < 10 && !any; ++seed) {
        const auto res = pmr_general_a1(3, 3, 5, 16, HChoice::RootsOfUnity, seed);
        any = res.code.n == 12 && res.verdict.pass;
    }
    o.require(any, "no passing a=1 instance over GF(16^3)");
    return o;
}

Outcome msw_vs_ghw() {
    Outcome o;
    const auto c = t2_turan_code(2, 2);
    const int b1 = static_cast<int>(cdiv(2LL * c.n, 2 + 2));
    const auto e = msw_sequence(c.n, b1, 2);
    const auto d = dual(c);
    for (int i = 1; i <= std::min(b1, d.k); ++i)
        o.require(support_weight(d, i) == e.at(i), "i=" + std::to_string(i));
    return o;
}

Outcome dominance() {
    Outcome o;
    for (int r = 3; r <= 20; ++r) {
        const auto b = avail_rate_bounds(r, 4);
        o.require(b.transpose_new && *b.transpose_new < b.tamo_barg, "t=4 r=" + std::to_string(r) + " transposeNew < tamoBarg");
    }
    for (int r = 3; r <= 10; ++r) {
        const int n = static_cast<int>(binom(r + 3, 3));
        const int k = n * r / (r + 3);
        const auto b = avail_dmin_bounds(n, k, r, 3);
        o.require(b.msw_new && *b.msw_new <= b.wang && *b.msw_new <= b.tamo_barg && *b.msw_new <= b.kruglik_frolov,
                  "t=3 r=" + std::to_string(r) + " mswNew");
    }
    for (int r = 2; r <= 20; ++r) {
        if (20 > std::pow(r, 1.8) - 1) continue;
        const auto b = seq_blocklength_bounds(20, r, 3);
        o.require(b.improved && *b.improved >= b.prior, "k=20 r=" + std::to_string(r) + " block length");
    }
    return o;
}

Outcome msr_arithmetic() {
    Outcome o;
    int points = 0;
    for (long long n = 5; points < 50; ++n)
        for (long long k = 2; k <= n - 2 && points < 50; ++k) {
            const long long d = std::min(n - 1, k + 2), w = std::min(n - 1, k + 1);
            const long long r = n - k, s = d - k + 1;
            auto cap = [&](long long b, long long e) { return std::min(ipow(b, e), ipow(b, k - 1)); };
            const auto tag = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
            o.require(msr_subpkt_bounds(n, k, n - 1, w, MsrMode::MsrDN1) == cap(r, cdiv(n - 1, r)), "dn1 " + tag);
            o.require(msr_subpkt_bounds(n, k, n - 1, w, MsrMode::MsrConstRepair) == cap(r, cdiv(n, r)), "const " + tag);
            o.require(msr_subpkt_bounds(n, k, d, w, MsrMode::MsrAnyD) == cap(s, cdiv(n - 1, s)), "anyd " + tag);
            o.require(msr_subpkt_bounds(n, k, n - 1, w, MsrMode::MdsWDN1) ==
                          (w > k - 1 ? cap(r, cdiv(w, r)) : ipow(r, cdiv(w, r))),
                      "mds-w-dn1 " + tag);
            o.require(msr_subpkt_bounds(n, k, d, w, MsrMode::MdsWAnyD) ==
                          (w > k - 1 ? cap(s, cdiv(w, s)) : ipow(s, cdiv(w, s))),
                      "mds-w-anyd " + tag);
            ++points;
        }
    int sweep = 0;
    for (long long n = 6; sweep < 20; ++n)
        for (long long k = 2; k < n && sweep < 20; k += 3)
            for (long long d = k; d <= n - 1 && sweep < 20; d += 2) {
                RgParams q;
                q.n = n;
                q.k = k;
                q.d = d;
                q.beta = Rational(3, 2);
                q.alpha = msr_point(n, k, d) * q.beta;
                o.require(cutset_bound(q) == Rational(k) * q.alpha, "cut-set at MSR point");
                ++sweep;
            }
    return o;
}

// Brute-force decoding order search over every dual word of weight <= r+1.
bool ordering_oracle(const LinearCode& c, int r, const std::vector<int>& erased) {
    static thread_local const LinearCode* cached = nullptr;
    static thread_local std::vector<std::vector<int>> words;
    if (cached != &c) {
        words.clear();
        for (const auto& w : all_codewords(dual(c))) {
            std::vector<int> s;
            for (int j = 0; j < c.n; ++j)
                if (w[j]) s.push_back(j);
            if (!s.empty() && static_cast<int>(s.size()) <= r + 1) words.push_back(s);
        }
        cached = &c;
    }
    std::function<bool(std::vector<int>)> solve = [&](std::vector<int> left) {
        if (left.empty()) return true;
        for (std::size_t a = 0; a < left.size(); ++a)
            for (const auto& s : words) {
                if (!std::binary_search(s.begin(), s.end(), left[a])) continue;
                bool alone = true;
                for (std::size_t b = 0; b < left.size() && alone; ++b)
                    if (b != a && std::binary_search(s.begin(), s.end(), left[b])) alone = false;
                if (!alone) continue;
                auto rest = left;
                rest.erase(rest.begin() + a);
                if (solve(rest)) return true;
            }
        return false;
    };
    return solve(erased);
}

bool mr_oracle(const LinearCode& c, const LocalStructure& ls, int delta, int s) {
    const Mat H = c.full_rank_parity();
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
                if (static_cast<int>(cols.size()) != H.rows || oracle::det(H.cols_subset(cols)) == 0) ok = false;
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

Outcome property_suites() {
    Outcome o;
    for (std::uint32_t q : {2u, 3u, 4u, 7u, 8u, 9u, 13u, 16u, 25u, 27u, 31u, 256u, 4096u}) {
        const auto F = field_of_order(q);
        std::mt19937_64 rng(q);
        std::uniform_int_distribution<Fe> pick(0, q - 1);
        int failures = 0;
        for (int i = 0; i < 10000; ++i) {
            const Fe a = pick(rng), b = pick(rng), c = pick(rng);
            failures += F.add(F.add(a, b), c) != F.add(a, F.add(b, c));
            failures += F.mul(F.mul(a, b), c) != F.mul(a, F.mul(b, c));
            failures += F.add(a, b) != F.add(b, a) || F.mul(a, b) != F.mul(b, a);
            failures += F.mul(a, F.add(b, c)) != F.add(F.mul(a, b), F.mul(a, c));
            failures += F.add(a, F.neg(a)) != 0;
            if (a) failures += F.mul(a, F.inv(a)) != 1;
        }
        o.require(failures == 0, "field axioms q=" + std::to_string(q));
    }

    struct SeqFixture {
        std::string name;
        LinearCode code;
        int r, t;
    };
    const FieldSpec F2 = field_make(2, 1);
    std::vector<SeqFixture> seq{{"t3-ex1", t3_catalog("ex1"), 3, 3},
                                {"K4", incidence_code(complete_graph(4), F2), 2, 2},
                                {"turan(2,1)", t2_turan_code(2, 1), 2, 2},
                                {"turan(2,2)", t2_turan_code(2, 2), 2, 2},
                                {"near-regular(3,2)", t2_near_regular_code(3, 2), 2, 2},
                                {"K5", seq_general_code(3, 2), 3, 2},
                                {"product(2,2)", product_avail_code(2, 2), 2, 2},
                                {"fano", pg_plane_sa_code(1), 2, 3},
                                {"K33", incidence_code(complete_bipartite(3, 3), F2), 2, 4}};
    for (const auto& f : seq) {
        const auto rep = seq_recovery_check(f.code, f.r, f.t, {VerifyMode::Exhaustive});
        bool truth = true;
        for (int w = 1; w <= f.t && truth; ++w)
            for_each_subset(f.code.n, w, [&](const std::vector<int>& s) {
                truth = ordering_oracle(f.code, f.r, s);
                return truth;
            });
        o.require(rep.pass == truth, "seq verifier disagrees with oracle on " + f.name);
    }

    struct MrFixture {
        std::string name;
        LinearCode code;
        int delta, s;
    };
    std::vector<MrFixture> mr{{"mr_r12(3,2)", mr_r12(3, 2), 1, 2},
                              {"mr_rdelta2(2,2,2,4)", mr_rdelta2(2, 2, 2, 4), 2, 2},
                              {"mr_rdelta2(3,2,1,4)", mr_rdelta2(3, 2, 1, 4), 1, 2},
                              {"coset(6,1)", mr_r2_coset_search(6, 1, field_of_order(13)), 1, 1}};
    for (const auto& f : mr) {
        const bool v = pmds_check(f.code, *f.code.structure, f.delta, f.s, {VerifyMode::Exhaustive}).pass;
        o.require(v == mr_oracle(f.code, *f.code.structure, f.delta, f.s), "pmds verifier disagrees with oracle on " + f.name);
    }

    // Mutation guard: every single-entry change of a passing MR fixture must be rejected.
    for (std::size_t i = 0; i < 2; ++i) {
        const auto& f = mr[i];
        int survivors = 0, total = 0;
        for (int a = 0; a < f.code.H.rows; ++a)
            for (int b = 0; b < f.code.H.cols; ++b) {
                Mat H = f.code.H;
                H.at(a, b) = f.code.F.add(H.at(a, b), 1);
                const LinearCode m = code_from_parity(H);
                ++total;
                if (m.k == f.code.k && pmds_check(m, *f.code.structure, f.delta, f.s, {VerifyMode::Exhaustive}).pass)
                    ++survivors;
            }
        o.require(survivors == 0, "mutation guard: " + std::to_string(survivors) + " of " + std::to_string(total) +
                                      " mutants of " + f.name + " remain MR codes");
    }
    return o;
}

struct Criterion {
    int id;
    std::string name;
    double limit_s;
    std::function<Outcome()> run;
    std::string known;  // reason when the criterion is expected to fail
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "Moore-graph rate optimality", 60, moore_rate, ""},
        {2, "general construction r=3 t=5", 300, general_construction, ""},
        {3, "t=3 fixtures and block-length table", 1e9, t3_fixtures, ""},
        {4, "Hamming-type bound row", 1e9, hamming_row, ""},
        {5, "SA / BIBD codes", 120, sa_bibd, ""},
        {6, "MR exhaustive", 120, mr_exhaustive, ""},
        {7, "PMR", 1e9, pmr, ""},
        {8, "MSW vs GHW", 300, msw_vs_ghw, ""},
        {9, "bound dominance", 1e9, dominance,
         "at r=3, t=4 the transposed bound equals the product bound (r+1 = t), so strict inequality fails"},
        {10, "MSR arithmetic", 1e9, msr_arithmetic, ""},
        {11, "property suites", 1e9, property_suites,
         "some single-entry mutants of the MR fixtures are themselves MR codes, so no verifier can reject them"},
    };
    int unexpected = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_s) o.require(false, "time limit exceeded");
        std::ostringstream line;
        line << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << std::fixed
             << std::setprecision(2) << secs << " s)";
        for (const auto& n : o.notes) line << " | " << n;
        if (!o.pass && !c.known.empty()) line << " | known failure: " << c.known;
        std::cout << line.str() << std::endl;
        if (!o.pass && c.known.empty()) ++unexpected;
    }
    return unexpected == 0 ? 0 : 1;
}
