#include "lrc/bounds.hpp"

#include <algorithm>
#include <climits>
#include <cmath>

#include "lrc/error.hpp"

namespace lrc {

namespace {

BigInt bpow(long long b, long long e) {
    BigInt r = 1;
    for (long long i = 0; i < e; ++i) r *= b;
    return r;
}

BigInt bbinom(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long long ceil_ll(long long a, long long b) { return static_cast<long long>(ceil_div(BigInt(a), BigInt(b))); }
long long floor_ll(long long a, long long b) { return static_cast<long long>(floor_div(BigInt(a), BigInt(b))); }

BigInt isqrt_ceil(const BigInt& D) {
    BigInt s = boost::multiprecision::sqrt(D);
    if (s * s < D) ++s;
    return s;
}

// Smallest integer x with x >= (-b + sqrt(b^2 + 4c)) / 2.
long long quadratic_root_ceil(long long b, long long c) {
    const BigInt D = BigInt(b) * b + 4 * BigInt(c);
    if (D < 0) return LLONG_MIN;
    const BigInt y = isqrt_ceil(D);
    return static_cast<long long>(ceil_div(y - b, 2));
}

}  // namespace

std::string to_string(const Rational& x) {
    const BigInt num = boost::multiprecision::numerator(x), den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) { return -floor_div(-a, b); }

BigInt floor(const Rational& x) {
    return floor_div(boost::multiprecision::numerator(x), boost::multiprecision::denominator(x));
}
BigInt ceil(const Rational& x) {
    return ceil_div(boost::multiprecision::numerator(x), boost::multiprecision::denominator(x));
}

nlohmann::json BoundReport::to_json() const {
    return {{"bound", name}, {"inputs", inputs}, {"value", value}, {"citation", citation}};
}

bool singleton_admits(int n, int k, int d) { return d <= n - k + 1; }

bool hamming_admits(int n, int k, int d, std::uint32_t q) {
    const int e = (d - 1) / 2;
    BigInt ball = 0;
    for (int j = 0; j <= e && j <= n; ++j) ball += bbinom(n, j) * bpow(q - 1, j);
    return bpow(q, k) * ball <= bpow(q, n);
}

bool plotkin_admits(int n, int k, int d, std::uint32_t q) {
    // Applies when d > (1 - 1/q) n: A_q(n,d) <= floor(dq / (dq - (q-1)n)).
    const BigInt dq = BigInt(d) * q, tn = BigInt(q - 1) * n;
    if (dq <= tn) return true;
    return bpow(q, k) <= dq / (dq - tn);
}

bool griesmer_admits(int n, int k, int d, std::uint32_t q) {
    BigInt s = 0;
    for (int i = 0; i < k; ++i) s += ceil_div(BigInt(d), bpow(q, i));
    return s <= n;
}

namespace {

ClassicalOracle make_oracle(std::function<bool(int, int, int, std::uint32_t)> admits, std::string name) {
    ClassicalOracle o;
    o.name = std::move(name);
    o.d_opt = [admits](int n, int k, std::uint32_t q) {
        if (k <= 0) return n + 1;
        int best = 0;
        for (int d = 1; d <= n - k + 1; ++d)
            if (admits(n, k, d, q)) best = d;
        return best;
    };
    o.k_opt = [admits](int n, int d, std::uint32_t q) {
        int best = 0;
        for (int k = 1; k <= n; ++k)
            if (admits(n, k, d, q)) best = k;
        return best;
    };
    return o;
}

}  // namespace

ClassicalOracle default_classical_oracle() {
    return make_oracle(
        [](int n, int k, int d, std::uint32_t q) {
            return singleton_admits(n, k, d) && hamming_admits(n, k, d, q) && plotkin_admits(n, k, d, q) &&
                   griesmer_admits(n, k, d, q);
        },
        "min(Singleton,Hamming,Plotkin,Griesmer)");
}

ClassicalOracle hamming_oracle() {
    return make_oracle(
        [](int n, int k, int d, std::uint32_t q) { return singleton_admits(n, k, d) && hamming_admits(n, k, d, q); },
        "Hamming");
}

int lr_singleton_bound(int n, int k, int r) {
    if (k < 1 || k > n || r < 1) throw Error("InvalidArgument", "need 1 <= k <= n and r >= 1");
    return (n - k + 1) - (static_cast<int>(ceil_ll(k, r)) - 1);
}

MswSequence msw_sequence(int n, int b1, int r) {
    if (b1 < 1) throw Error("InvalidArgument", "b1 must be >= 1");
    MswSequence s;
    s.n = n;
    s.r = r;
    s.b1 = b1;
    s.e.assign(b1, 0);
    s.e[b1 - 1] = n;
    for (int i = b1; i >= 2; --i) {
        const long long ei = s.e[i - 1];
        s.e[i - 2] = std::min(ei, ei - ceil_ll(2 * ei, i) + r + 1);
    }
    return s;
}

BoundReport lr_alphabet_bounds_with(const MswSequence& e, int k_or_d, std::uint32_t q, AlphabetMode mode,
                                    const ClassicalOracle& oracle) {
    const int n = e.n;
    BoundReport rep;
    rep.inputs = {{"n", n}, {"r", e.r}, {"q", q}, {"b1", e.b1}, {"oracle", oracle.name}};
    long long best = LLONG_MAX;
    int arg = -1;
    if (mode == AlphabetMode::Distance) {
        const int k = k_or_d;
        rep.name = "lr-alphabet-dmin";
        rep.inputs["k"] = k;
        rep.citation = "d <= min_{i in S} d_q(n-e_i, k+i-e_i), S = {i : e_i - i < k}";
        for (int i = 1; i <= e.b1; ++i) {
            const long long ei = e.at(i);
            if (ei - i >= k) continue;
            const long long len = n - ei, dim = k + i - ei;
            if (dim > len) continue;
            const long long v = oracle.d_opt(static_cast<int>(len), static_cast<int>(dim), q);
            if (v < best) {
                best = v;
                arg = i;
            }
        }
    } else {
        const int d = k_or_d;
        rep.name = "lr-alphabet-dim";
        rep.inputs["d"] = d;
        rep.citation = "k <= min_{i : e_i < n-d+1} [e_i - i + k_opt(n-e_i, d)]";
        for (int i = 1; i <= e.b1; ++i) {
            const long long ei = e.at(i);
            if (ei >= n - d + 1) continue;
            const long long v = ei - i + oracle.k_opt(static_cast<int>(n - ei), d, q);
            if (v < best) {
                best = v;
                arg = i;
            }
        }
    }
    if (arg < 0) throw Error("EmptyS", "no admissible index; bound is vacuous");
    rep.value = {{"bound", best}, {"argmin_i", arg}, {"e", e.e}};
    return rep;
}

BoundReport lr_alphabet_bounds(int n, int k_or_d, int r, std::uint32_t q, AlphabetMode mode,
                               const ClassicalOracle& oracle) {
    const int b1 = static_cast<int>(ceil_ll(n, r + 1));
    return lr_alphabet_bounds_with(msw_sequence(n, b1, r), k_or_d, q, mode, oracle);
}

int cadambe_mazumdar_bound(int n, int d, int r, std::uint32_t q, const ClassicalOracle& oracle) {
    int best = INT_MAX;
    for (int t = 0; n - t * (r + 1) > 0; ++t) best = std::min(best, t * r + oracle.k_opt(n - t * (r + 1), d, q));
    return best;
}

int hamming_type_bound(int n, int r, std::uint32_t q) {
    if (q != 2) throw Error("OutOfRegime", "bound is stated for binary codes");
    if (r < 2 || 2 * r > n - 4) throw Error("OutOfRegime", "requires 2 <= r <= n/2 - 2");
    const Rational A = Rational(r * n, r + 1);
    const Rational B = Rational(r * n, (r + 1) * (r + 2));
    const long double L = std::log2(1.0L + static_cast<long double>(r) * n / 2.0L);
    if (B.convert_to<long double>() <= L) return static_cast<int>(floor(A - B));
    return static_cast<int>(std::floor(A.convert_to<long double>() - L));
}

Rational seq_rate_bound(int r, int t) {
    if (r < 1 || t < 1) throw Error("InvalidArgument", "need r, t >= 1");
    const int s = (t - 1) / 2;
    const BigInt top = bpow(r, s + 1);
    BigInt sum = 0;
    if (t % 2 == 0) {
        for (int i = 0; i <= s; ++i) sum += bpow(r, i);
        return Rational(top, top + 2 * sum);
    }
    for (int i = 1; i <= s; ++i) sum += bpow(r, i);
    return Rational(top, top + 2 * sum + 1);
}

long long seq_blocklength_t3_f1(long long k, long long r, long long s1) {
    return quadratic_root_ceil(2 * r - 5, 6 * k + s1 * s1 - 5 * s1);
}

long long seq_blocklength_t3_f2(long long k, long long r, long long s1) {
    return quadratic_root_ceil(4 * r - 4 + 2 * s1, 12 * k + 3 * s1 * s1 - 4 * s1 - 7);
}

SeqBlocklength seq_blocklength_bounds(long long k, long long r, int t) {
    if (k < 1 || r < 1) throw Error("InvalidArgument", "need k, r >= 1");
    SeqBlocklength out;
    if (t == 2) {
        out.prior = k + ceil_ll(2 * k, r);
        return out;
    }
    if (t != 3) throw Error("InvalidArgument", "block-length bounds cover t = 2 and t = 3");
    out.prior = k + ceil_ll(2 * k + ceil_ll(k, r), r);
    long long best = LLONG_MAX;
    for (long long s1 = 0; s1 <= 3 * k; ++s1) {
        const long long v = std::max({seq_blocklength_t3_f1(k, r, s1), seq_blocklength_t3_f2(k, r, s1), s1});
        if (v < best) {
            best = v;
            out.best_s1 = s1;
        }
    }
    out.improved = k + best;
    return out;
}

long long seq_dim_bound_t2(int m, int r) {
    if (m < 1 || r < 1) throw Error("InvalidArgument", "need m, r >= 1");
    BigInt best = -1;
    bool first = true;
    for (int L = 1; L <= m; ++L) {
        BigInt num = BigInt(m) * (r - L);
        for (int i = 1; i <= L; ++i) num += BigInt(L + 1 - i) * bbinom(m, i);
        const BigInt v = floor_div(num, L + 1);
        if (first || v < best) best = v;
        first = false;
    }
    return static_cast<long long>(best);
}

AvailRate avail_rate_bounds(int r, int t) {
    if (r < 1 || t < 1) throw Error("InvalidArgument", "need r, t >= 1");
    AvailRate out;
    Rational prod = 1;
    for (int j = 1; j <= t; ++j) prod *= Rational(j * r + 1, j * r);
    out.tamo_barg = 1 / prod;
    if (t >= 2) {
        Rational p2 = 1;
        for (int j = 1; j <= r + 1; ++j) p2 *= Rational(j * (t - 1) + 1, j * (t - 1));
        const Rational f = Rational(t, r + 1);
        out.transpose_new = 1 - f + f / p2;
    }
    return out;
}

Rational avail_rho(int r, int t) {
    if (t == 1) return Rational(r, r + 1);
    if (t == 2) return Rational(r, r + 2);
    if (t == 3) return Rational(r * r, (r + 1) * (r + 1));
    return avail_rate_bounds(r, t).tamo_barg;
}

AvailDmin avail_dmin_bounds(int n, int k, int r, int t) {
    if (n < 1 || k < 1 || r < 1 || t < 0) throw Error("InvalidArgument", "parameters must be positive");
    AvailDmin out;
    out.wang = n - k + 2 - ceil_ll(static_cast<long long>(t) * (k - 1) + 1, static_cast<long long>(t) * (r - 1) + 1);
    long long s = 0;
    BigInt rp = 1;
    for (int i = 0; i <= t; ++i, rp *= r) s += static_cast<long long>(floor_div(BigInt(k - 1), rp));
    out.tamo_barg = n - s;
    out.kruglik_frolov = r > 1 ? n - k + 1 - floor_ll(k - 2, r - 1) : n - k + 1;
    if (t >= 1) {
        const int b1 = static_cast<int>(ceil(Rational(n) * (1 - avail_rho(r, t))));
        out.msw_b1 = b1;
        if (b1 >= 1) {
            const MswSequence e = msw_sequence(n, b1, r);
            for (int i = 1; i <= b1; ++i) {
                const long long ei = e.at(i);
                if (ei - i >= k) continue;
                long long v = n - k - i + 1;
                BigInt rj = r;
                for (int j = 1; j <= t; ++j, rj *= r)
                    v -= static_cast<long long>(floor_div(BigInt(k + i - ei - 1), rj));
                if (!out.msw_new || v < *out.msw_new) out.msw_new = v;
            }
        }
    }
    return out;
}

ProductTradeoff avail_product_tradeoff(const Rational& n, const Rational& k, const Rational& n_c, const Rational& R_c,
                                       const Rational& R_max) {
    if (!(R_c > 0 && R_c <= R_max && R_max <= 1)) throw Error("InvalidArgument", "need 0 < R_c <= R_max <= 1");
    ProductTradeoff out;
    out.upper = n - k / R_c + n_c * (1 - R_c) / R_c + 1;
    out.lower_exist = n * R_c / R_max - k / R_max + 1;
    return out;
}

long long sa_blocklength_bound(int r, int t) {
    if (r < 1 || t < 1) throw Error("InvalidArgument", "need r, t >= 1");
    return static_cast<long long>(ceil(Rational((r + 1) * (r + 1)) - Rational((r + 1) * r, t)));
}

BigInt moore_bound(int r, int t) {
    if (r < 1 || t < 1) throw Error("InvalidArgument", "need r, t >= 1");
    BigInt s = 0;
    if (t % 2 == 0) {
        for (int i = 0; i <= (t - 2) / 2; ++i) s += (r + 1) * bpow(r, i);
        return 1 + s;
    }
    for (int i = 0; i <= (t - 1) / 2; ++i) s += bpow(r, i);
    return 2 * s;
}

MsrMode parse_msr_mode(const std::string& s) {
    if (s == "msr_d_n1") return MsrMode::MsrDN1;
    if (s == "msr_const_repair") return MsrMode::MsrConstRepair;
    if (s == "msr_any_d") return MsrMode::MsrAnyD;
    if (s == "mds_w_d_n1") return MsrMode::MdsWDN1;
    if (s == "mds_w_any_d") return MsrMode::MdsWAnyD;
    throw Error("InvalidMode", "unknown sub-packetization mode '" + s + "'");
}

std::string msr_mode_name(MsrMode m) {
    switch (m) {
        case MsrMode::MsrDN1: return "msr_d_n1";
        case MsrMode::MsrConstRepair: return "msr_const_repair";
        case MsrMode::MsrAnyD: return "msr_any_d";
        case MsrMode::MdsWDN1: return "mds_w_d_n1";
        case MsrMode::MdsWAnyD: return "mds_w_any_d";
    }
    return "";
}

BigInt msr_subpkt_bounds(long long n, long long k, long long d, long long w, MsrMode mode) {
    if (!(1 <= k && k <= d && d <= n - 1)) throw Error("InvalidArgument", "need k <= d <= n-1");
    if (w < 0 || w > n) throw Error("InvalidArgument", "need w <= n");
    const long long r = n - k, s = d - k + 1;
    auto capped = [&](long long base, long long e) { return std::min(bpow(base, e), bpow(base, k - 1)); };
    switch (mode) {
        case MsrMode::MsrDN1: return capped(r, ceil_ll(n - 1, r));
        case MsrMode::MsrConstRepair: return capped(r, ceil_ll(n, r));
        case MsrMode::MsrAnyD: return capped(s, ceil_ll(n - 1, s));
        case MsrMode::MdsWDN1: return w > k - 1 ? capped(r, ceil_ll(w, r)) : bpow(r, ceil_ll(w, r));
        case MsrMode::MdsWAnyD: return w > k - 1 ? capped(s, ceil_ll(w, s)) : bpow(s, ceil_ll(w, s));
    }
    throw Error("InvalidMode", "unknown mode");
}

Rational cutset_bound(const RgParams& p) {
    if (p.k > p.d) throw Error("InvalidArgument", "need k <= d");
    Rational B = 0;
    for (long long i = 0; i < p.k; ++i) B += std::min(p.alpha, Rational(p.d - i) * p.beta);
    return B;
}

Rational msr_point(long long n, long long k, long long d) {
    if (!(k <= d && d <= n - 1)) throw Error("InvalidArgument", "need k <= d <= n-1");
    return Rational(d - k + 1);
}

MbrPoint mbr_point(long long k, long long d, const Rational& beta) {
    if (k > d) throw Error("InvalidArgument", "need k <= d");
    return {Rational(d) * beta, Rational(d * k - k * (k - 1) / 2) * beta};
}

}  // namespace lrc
