#pragma once
#include <cstdint>
#include <string>

#include <json.hpp>

#include "lrc/code.hpp"
#include "lrc/verify.hpp"

namespace lrc {

// (r, delta, s) maximally recoverable parameters; n = m(r+delta), k = mr - s.
struct MrParams {
    int r = 0, delta = 1, s = 0, m = 0;
    int n() const { return m * (r + delta); }
    int k() const { return m * r - s; }
};

// Partial-MR parameters with Delta = a*r + b.
struct PmrParams {
    int m = 0, r = 0, Delta = 0;
    int k0() const { return m * r; }
    int n() const { return m * (r + 1); }
    int k() const { return k0() - Delta; }
    int a() const { return Delta / r; }
    int b() const { return Delta % r; }
};

// Errors: InvalidArgument, FieldTooSmall.
LinearCode pmr_parity_split(int m, int r, int Delta, const FieldSpec& F);

// Field GF(2^{l*rho}) chosen automatically. Errors: InvalidArgument.
LinearCode mr_r12(int m, int r);

// Smallest prime power q with psi | q-1 and q-1 >= psi*m. Errors: InvalidArgument, NoSuitableField.
LinearCode mr_rdelta2(int m, int r, int delta, int psi);

enum class HChoice { RootsOfUnity, Random };

struct PmrA1Result {
    LinearCode code;
    VerifyReport verdict;
    nlohmann::json h;  // chosen shifts as discrete logs in GF(baseQ^3), null for zero
};

// theta_ij = xi + h_ij over GF(baseQ^3). The verdict decides; success is not assumed.
// Errors: InvalidArgument.
PmrA1Result pmr_general_a1(int m, int r, int Delta, std::uint32_t baseQ, HChoice h, std::uint64_t seed = 0);

// Greedy choice of N/3 cube-root cosets for an (N, 2D+1) locality-2 code.
// Errors: InvalidArgument, SearchExhausted.
LinearCode mr_r2_coset_search(int N, int D, const FieldSpec& F);

// Groups {i} plus the i-th block of r columns, for the [I_m | F] layout.
LocalStructure identity_block_groups(int m, int r);

}  // namespace lrc
