#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lrc/error.hpp"

namespace lrc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& x);
BigInt ceil_div(const BigInt& a, const BigInt& b);
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil(const Rational& x);
BigInt floor(const Rational& x);

struct BoundReport {
    std::string name;
    nlohmann::json inputs;
    nlohmann::json value;
    std::string citation;  // formula summary
    nlohmann::json to_json() const;
};

struct MswSequence {
    int n = 0, r = 0, b1 = 0;
    std::vector<long long> e;  // e[i-1] = e_i
    long long at(int i) const { return e.at(i - 1); }
};

struct RgParams {
    long long n = 0, k = 0, d = 0;
    Rational alpha, beta, B;
    long long w = 0;
};

// Maximum d of a classical [n,k]_q code and maximum k of an (n,d)_q code.
struct ClassicalOracle {
    std::function<int(int n, int k, std::uint32_t q)> d_opt;
    std::function<int(int n, int d, std::uint32_t q)> k_opt;
    std::string name;
};

// Admissibility of (n,k,d)_q under each classical bound.
bool singleton_admits(int n, int k, int d);
bool hamming_admits(int n, int k, int d, std::uint32_t q);
bool plotkin_admits(int n, int k, int d, std::uint32_t q);
bool griesmer_admits(int n, int k, int d, std::uint32_t q);

// Min over Singleton, sphere packing, Plotkin and Griesmer.
ClassicalOracle default_classical_oracle();
// Sphere packing only.
ClassicalOracle hamming_oracle();

int lr_singleton_bound(int n, int k, int r);
MswSequence msw_sequence(int n, int b1, int r);

enum class AlphabetMode { Distance, Dimension };
// Distance mode takes k and bounds d; Dimension mode takes d and bounds k. Errors: EmptyS.
BoundReport lr_alphabet_bounds(int n, int k_or_d, int r, std::uint32_t q, AlphabetMode mode,
                               const ClassicalOracle& oracle = default_classical_oracle());
// Same with a caller supplied sequence of upper bounds on the dual support weights.
BoundReport lr_alphabet_bounds_with(const MswSequence& e, int k_or_d, std::uint32_t q, AlphabetMode mode,
                                    const ClassicalOracle& oracle);
// k <= min_t [t r + k_opt(n - t(r+1), d)].
int cadambe_mazumdar_bound(int n, int d, int r, std::uint32_t q, const ClassicalOracle& oracle);

// Errors: OutOfRegime.
int hamming_type_bound(int n, int r, std::uint32_t q = 2);

Rational seq_rate_bound(int r, int t);

struct SeqBlocklength {
    long long prior = 0;   // t=2 or prior t=3 bound
    std::optional<long long> improved;  // t=3 only
    long long best_s1 = -1;
};
// Errors: InvalidArgument for t outside {2,3}.
SeqBlocklength seq_blocklength_bounds(long long k, long long r, int t);
long long seq_blocklength_t3_f1(long long k, long long r, long long s1);
long long seq_blocklength_t3_f2(long long k, long long r, long long s1);

long long seq_dim_bound_t2(int m, int r);

struct AvailRate {
    Rational tamo_barg;
    std::optional<Rational> transpose_new;
};
AvailRate avail_rate_bounds(int r, int t);

struct AvailDmin {
    long long wang = 0, tamo_barg = 0, kruglik_frolov = 0;
    std::optional<long long> msw_new;
    int msw_b1 = 0;
};
Rational avail_rho(int r, int t);
AvailDmin avail_dmin_bounds(int n, int k, int r, int t);

struct ProductTradeoff {
    Rational upper, lower_exist;
};
ProductTradeoff avail_product_tradeoff(const Rational& n, const Rational& k, const Rational& n_c, const Rational& R_c,
                                       const Rational& R_max);

long long sa_blocklength_bound(int r, int t);
BigInt moore_bound(int r, int t);

enum class MsrMode { MsrDN1, MsrConstRepair, MsrAnyD, MdsWDN1, MdsWAnyD };
// Errors: InvalidMode.
MsrMode parse_msr_mode(const std::string& s);
std::string msr_mode_name(MsrMode m);
// Errors: InvalidArgument when k <= d <= n-1 or w <= n fails.
BigInt msr_subpkt_bounds(long long n, long long k, long long d, long long w, MsrMode mode);

Rational cutset_bound(const RgParams& p);
// alpha / beta at the MSR point.
Rational msr_point(long long n, long long k, long long d);
struct MbrPoint {
    Rational alpha, B;
};
MbrPoint mbr_point(long long k, long long d, const Rational& beta);

}  // namespace lrc
