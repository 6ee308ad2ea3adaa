#include <doctest.h>

#include <cmath>
#include <functional>

#include "lrc/bounds.hpp"

using namespace lrc;

namespace {

long long ipow(long long b, long long e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}
long long cdiv(long long a, long long b) { return (a + b - 1) / b; }

}  // namespace

TEST_CASE("LR Singleton bound") {
    CHECK(lr_singleton_bound(18, 14, 7) == 4);
    CHECK(lr_singleton_bound(12, 6, 3) == 6);
    for (int n = 4; n <= 20; ++n)
        for (int k = 1; k <= n; ++k) {
            CHECK(lr_singleton_bound(n, k, k) == n - k + 1);
            if (k > 1) CHECK(lr_singleton_bound(n, k, 3) <= lr_singleton_bound(n, k - 1, 3));
        }
}

TEST_CASE("MSW sequence recursion") {
    CHECK(msw_sequence(12, 4, 3).e == std::vector<long long>{4, 7, 10, 12});
    CHECK(msw_sequence(9, 1, 2).e == std::vector<long long>{9});
    for (int r = 2; r <= 6; ++r)
        for (int t = 2; t <= 4; ++t)
            for (int n = r + 2; n <= 60; ++n) {
                const int b1 = static_cast<int>(ceil(Rational(n) * (1 - avail_rho(r, t))));
                if (b1 < 1) continue;
                auto e = msw_sequence(n, b1, r);
                for (int i = 1; i <= b1; ++i) {
                    CHECK(e.at(i) <= i * r + 1 + (i == b1 ? n : 0));
                    if (i > 1) CHECK(e.at(i - 1) <= e.at(i));
                }
            }
}

TEST_CASE("Hamming-type dimension bound row for n=31") {
    const int expect[] = {15, 18, 20, 22, 23};
    for (int r = 2; r <= 6; ++r) CHECK(hamming_type_bound(31, r) == expect[r - 2]);
    CHECK_THROWS_WITH_AS(hamming_type_bound(31, 1), doctest::Contains("OutOfRegime"), Error);
    CHECK_THROWS_WITH_AS(hamming_type_bound(31, 14), doctest::Contains("OutOfRegime"), Error);
}

TEST_CASE("alphabet-dependent bounds") {
    auto ham = lr_alphabet_bounds(31, 5, 2, 2, AlphabetMode::Dimension, hamming_oracle());
    const long long v = ham.value["bound"].get<long long>();
    CHECK(v <= 17);
    MESSAGE("dimension bound n=31 d=5 r=2 with sphere-packing oracle: " << v << " (best-known-code table gives 16)");
    auto full = lr_alphabet_bounds(31, 5, 2, 2, AlphabetMode::Dimension);
    CHECK(full.value["bound"].get<long long>() <= v);
    // Looser e_i (here +1 on every non-final term) can only loosen the bound.
    auto e = msw_sequence(31, 11, 2);
    auto loose = e;
    for (int i = 0; i + 1 < loose.b1; ++i) loose.e[i] = std::min<long long>(loose.e[i] + 1, loose.e[i + 1]);
    for (int d = 3; d <= 7; ++d) {
        auto a = lr_alphabet_bounds_with(e, d, 2, AlphabetMode::Dimension, default_classical_oracle());
        auto b = lr_alphabet_bounds_with(loose, d, 2, AlphabetMode::Dimension, default_classical_oracle());
        CHECK(a.value["bound"].get<long long>() <= b.value["bound"].get<long long>());
    }
    auto dm = lr_alphabet_bounds(20, 10, 4, 4, AlphabetMode::Distance);
    CHECK(dm.value["bound"].get<long long>() <= lr_singleton_bound(20, 10, 4));
    CHECK_THROWS_WITH_AS(lr_alphabet_bounds(12, 1, 3, 2, AlphabetMode::Distance), doctest::Contains("EmptyS"), Error);
}

TEST_CASE("classical admissibility oracles") {
    // Binary Hamming [7,4,3] and Golay [23,12,7] are perfect.
    CHECK(hamming_admits(7, 4, 3, 2));
    CHECK_FALSE(hamming_admits(7, 5, 3, 2));
    CHECK(hamming_admits(23, 12, 7, 2));
    CHECK_FALSE(hamming_admits(23, 13, 7, 2));
    CHECK(griesmer_admits(7, 3, 4, 2));
    CHECK_FALSE(griesmer_admits(6, 3, 4, 2));
    CHECK_FALSE(plotkin_admits(6, 3, 4, 2));  // d > n/2 forces at most 4 codewords
    auto o = default_classical_oracle();
    CHECK(o.k_opt(7, 3, 2) == 4);
    CHECK(o.d_opt(7, 4, 2) == 3);
    // Griesmer and sphere packing both still admit d=8 at [23,12].
    CHECK(o.d_opt(23, 12, 2) == 8);
}

TEST_CASE("sequential recovery rate bound") {
    for (int r = 1; r <= 12; ++r) {
        CHECK(seq_rate_bound(r, 2) == Rational(r, r + 2));
        CHECK(seq_rate_bound(r, 3) == Rational(r * r, (r + 1) * (r + 1)));
    }
    CHECK(seq_rate_bound(2, 4) == Rational(2, 5));
    CHECK(seq_rate_bound(2, 5) == Rational(8, 21));
    CHECK(seq_rate_bound(3, 5) == Rational(27, 52));
    CHECK(seq_rate_bound(2, 3) == Rational(4, 9));
    CHECK(to_string(seq_rate_bound(3, 5)) == "27/52");
    for (int r = 2; r <= 6; ++r)
        for (int t = 1; t <= 9; ++t) {
            const int s = (t - 1) / 2;
            long long sum = 0;
            for (int i = (t % 2 ? 1 : 0); i <= s; ++i) sum += ipow(r, i);
            const long long top = ipow(r, s + 1);
            CHECK(seq_rate_bound(r, t) == Rational(top, top + 2 * sum + (t % 2 ? 1 : 0)));
        }
}

TEST_CASE("block-length bounds for t=2 and t=3") {
    CHECK(seq_blocklength_bounds(12, 4, 2).prior == 18);
    auto a = seq_blocklength_bounds(5, 3, 3);
    CHECK(a.prior == 9);
    CHECK(*a.improved == 10);
    auto b = seq_blocklength_bounds(8, 4, 3);
    CHECK(b.prior == 13);
    CHECK(*b.improved == 14);
    // The integer root ceilings agree with floating point away from ties.
    for (long long k = 1; k <= 30; ++k)
        for (long long r = 1; r <= 12; ++r)
            for (long long s1 = 0; s1 <= 3 * k; s1 += 3) {
                const double b1 = 2.0 * r - 5, c1 = 6.0 * k + s1 * s1 - 5.0 * s1;
                const double x1 = (-b1 + std::sqrt(b1 * b1 + 4 * c1)) / 2;
                if (std::fabs(x1 - std::round(x1)) > 1e-9) CHECK(seq_blocklength_t3_f1(k, r, s1) == (long long)std::ceil(x1));
                const double b2 = 4.0 * r - 4 + 2.0 * s1, c2 = 12.0 * k + 3.0 * s1 * s1 - 4.0 * s1 - 7;
                const double x2 = (-b2 + std::sqrt(b2 * b2 + 4 * c2)) / 2;
                if (std::fabs(x2 - std::round(x2)) > 1e-9) CHECK(seq_blocklength_t3_f2(k, r, s1) == (long long)std::ceil(x2));
            }
}

TEST_CASE("new t=3 block-length bound dominates the prior one for k=20") {
    for (int r = 2; r <= 20; ++r) {
        if (!(r <= 20 && 20 <= std::pow(r, 1.8) - 1)) continue;
        auto b = seq_blocklength_bounds(20, r, 3);
        CHECK_MESSAGE(*b.improved >= b.prior, "r=" << r);
    }
}

namespace {

// Max number of distinct nonzero binary columns of length m whose row sums stay within r+1.
int max_columns(int m, int r) {
    std::vector<int> cols;
    for (int v = 1; v < (1 << m); ++v) cols.push_back(v);
    std::sort(cols.begin(), cols.end(), [](int a, int b) { return __builtin_popcount(a) < __builtin_popcount(b); });
    std::vector<int> load(m, 0);
    int best = 0;
    std::function<void(std::size_t, int, int)> dfs = [&](std::size_t idx, int count, int budget) {
        best = std::max(best, count);
        if (idx == cols.size()) return;
        // Optimistic: every remaining column costs at least the current weight.
        const int w = __builtin_popcount(cols[idx]);
        if (count + budget / w <= best) return;
        const int c = cols[idx];
        bool fits = true;
        for (int i = 0; i < m; ++i)
            if ((c >> i & 1) && load[i] == r + 1) fits = false;
        if (fits) {
            for (int i = 0; i < m; ++i)
                if (c >> i & 1) ++load[i];
            dfs(idx + 1, count + 1, budget - w);
            for (int i = 0; i < m; ++i)
                if (c >> i & 1) --load[i];
        }
        dfs(idx + 1, count, budget);
    };
    dfs(0, 0, m * (r + 1));
    return best;
}

}  // namespace

TEST_CASE("t=2 dimension bound against column search") {
    // m=1 leaves only the L=1 term: floor(((r-1) + 1) / 2).
    for (int r = 1; r <= 7; ++r) CHECK(seq_dim_bound_t2(1, r) == r / 2);
    CHECK(seq_dim_bound_t2(5, 4) == 10);
    CHECK(max_columns(5, 4) - 5 == 10);
    for (int m = 3; m <= 5; ++m)
        for (int r = 2; r <= 6; ++r) CHECK(seq_dim_bound_t2(m, r) >= max_columns(m, r) - m);
    // r = sum_{i=2}^{L} C(m-1,i-1) + J gives sum_{i=2}^{L} C(m,i) + mJ/(L+1)
    CHECK(seq_dim_bound_t2(5, 4 + 6) == 10 + 10 + 0);  // m=5, L=3, J=0
}

TEST_CASE("availability rate bounds") {
    for (int r = 1; r <= 10; ++r) {
        CHECK(avail_rate_bounds(r, 1).tamo_barg == Rational(r, r + 1));
        CHECK(*avail_rate_bounds(r, 2).transpose_new == Rational(r, r + 2));
    }
    CHECK(*avail_rate_bounds(8, 4).transpose_new < avail_rate_bounds(8, 4).tamo_barg);
    // r = 3 makes the transposed product identical to the original one (r+1 = t).
    CHECK(*avail_rate_bounds(3, 4).transpose_new == avail_rate_bounds(3, 4).tamo_barg);
    for (int r = 4; r <= 20; ++r) {
        auto b = avail_rate_bounds(r, 4);
        CHECK(*b.transpose_new < b.tamo_barg);
    }
    for (int r = 2; r <= 8; ++r)
        for (int t = 2; t <= 6; ++t) {
            const Rational f(t, r + 1);
            CHECK(*avail_rate_bounds(r, t).transpose_new == 1 - f + f * avail_rate_bounds(t - 1, r + 1).tamo_barg);
        }
}

TEST_CASE("availability distance bounds") {
    for (int r = 3; r <= 10; ++r) {
        const int n = (r + 3) * (r + 2) * (r + 1) / 6;
        const int k = n * r / (r + 3);
        auto b = avail_dmin_bounds(n, k, r, 3);
        REQUIRE(b.msw_new);
        CHECK(*b.msw_new <= b.wang);
        CHECK(*b.msw_new <= b.tamo_barg);
        CHECK(*b.msw_new <= b.kruglik_frolov);
        // independent re-evaluation of the closed forms
        CHECK(b.wang == n - k + 2 - cdiv(3 * (k - 1) + 1, 3 * (r - 1) + 1));
        CHECK(b.tamo_barg == n - ((k - 1) + (k - 1) / r + (k - 1) / (r * r) + (k - 1) / (r * r * r)));
        CHECK(b.kruglik_frolov == n - k + 1 - (k - 2) / (r - 1));
    }
    auto c = avail_dmin_bounds(20, 9, 2, 2);
    REQUIRE(c.msw_new);
    for (long long v : {c.wang, c.tamo_barg, c.kruglik_frolov, *c.msw_new}) CHECK(v >= 1);
    CHECK(c.msw_b1 == 10);
}

TEST_CASE("direct-product tradeoff") {
    auto a = avail_product_tradeoff(100, 40, 100, Rational(2, 5), Rational(1, 2));
    // k = n R_c and n_c = n leave n (1 - R_c) / R_c + 1.
    CHECK(a.upper == 100 * Rational(3, 5) / Rational(2, 5) + 1);
    // Fractional distance approaches 1 - R/R_max for many blocks when R_c = R_max.
    const Rational Rm(1, 2), R(1, 4);
    const Rational n = 1000 * 10;
    auto asym = avail_product_tradeoff(n, R * n, 10, Rm, Rm);
    CHECK(asym.upper / n - (1 - R / Rm) == Rational(11, 10000));
    CHECK(asym.lower_exist / n - (1 - R / Rm) == Rational(1, 10000));
    auto b = avail_product_tradeoff(30, 12, 6, Rational(1, 2), Rational(1, 2));
    CHECK(b.upper == 30 - 24 + 6 + 1);
    CHECK(b.lower_exist == 30 - 24 + 1);
    CHECK_THROWS_AS(avail_product_tradeoff(10, 5, 5, Rational(3, 4), Rational(1, 2)), Error);
}

TEST_CASE("strict availability block-length and Moore bounds") {
    CHECK(sa_blocklength_bound(4, 5) == 21);
    CHECK(sa_blocklength_bound(2, 3) == 7);
    for (int r = 1; r <= 6; ++r) CHECK(sa_blocklength_bound(r, r * (r + 1)) == (r + 1) * (r + 1) - 1);
    CHECK(moore_bound(2, 4) == 10);
    CHECK(moore_bound(6, 4) == 50);
    for (int r = 1; r <= 8; ++r) CHECK(moore_bound(r, 3) == 2 * (r + 1));
    CHECK(moore_bound(3, 5) == 26);
}

TEST_CASE("sub-packetization formulas on a 50-point sweep") {
    CHECK(msr_subpkt_bounds(10, 8, 9, 0, MsrMode::MsrDN1) == 32);
    CHECK(msr_subpkt_bounds(10, 8, 9, 0, MsrMode::MsrConstRepair) == 32);
    for (auto m : {MsrMode::MdsWDN1, MsrMode::MdsWAnyD}) CHECK(msr_subpkt_bounds(10, 6, 8, 1, m) == (m == MsrMode::MdsWDN1 ? 4 : 3));
    CHECK_THROWS_WITH_AS(parse_msr_mode("nope"), doctest::Contains("InvalidMode"), Error);
    int points = 0;
    for (long long n = 5; n <= 14 && points < 50; ++n)
        for (long long k = 2; k <= n - 2 && points < 50; k += 2) {
            const long long d = std::min(n - 1, k + 2), w = std::min(n - 1, k + 1);
            const long long r = n - k, s = d - k + 1;
            auto cap = [&](long long b, long long e) { return std::min(ipow(b, e), ipow(b, k - 1)); };
            CHECK(msr_subpkt_bounds(n, k, n - 1, w, MsrMode::MsrDN1) == cap(r, cdiv(n - 1, r)));
            CHECK(msr_subpkt_bounds(n, k, n - 1, w, MsrMode::MsrConstRepair) == cap(r, cdiv(n, r)));
            CHECK(msr_subpkt_bounds(n, k, d, w, MsrMode::MsrAnyD) == cap(s, cdiv(n - 1, s)));
            CHECK(msr_subpkt_bounds(n, k, n - 1, w, MsrMode::MdsWDN1) ==
                  (w > k - 1 ? cap(r, cdiv(w, r)) : ipow(r, cdiv(w, r))));
            CHECK(msr_subpkt_bounds(n, k, d, w, MsrMode::MdsWAnyD) ==
                  (w > k - 1 ? cap(s, cdiv(w, s)) : ipow(s, cdiv(w, s))));
            ++points;
        }
    CHECK(points >= 25);
}

TEST_CASE("cut-set bound and operating points") {
    RgParams p;
    p.n = 4;
    p.k = 2;
    p.d = 2;
    p.alpha = 4;
    p.beta = 2;
    CHECK(cutset_bound(p) == 6);
    CHECK(msr_point(14, 10, 13) == 4);
    int sweep = 0;
    for (long long n = 6; n <= 12; ++n)
        for (long long k = 2; k < n && sweep < 20; k += 3)
            for (long long d = k; d <= n - 1 && sweep < 20; d += 2) {
                RgParams q;
                q.n = n;
                q.k = k;
                q.d = d;
                q.beta = Rational(3, 2);
                q.alpha = msr_point(n, k, d) * q.beta;
                CHECK(cutset_bound(q) == Rational(k) * q.alpha);
                ++sweep;
            }
    CHECK(sweep == 20);
    auto mbr = mbr_point(3, 5, 2);
    CHECK(mbr.alpha == 10);
    CHECK(mbr.B == (15 - 3) * 2);
    RgParams q;
    q.n = 8;
    q.k = 3;
    q.d = 5;
    q.beta = 2;
    q.alpha = mbr.alpha;
    CHECK(cutset_bound(q) == mbr.B);
}
