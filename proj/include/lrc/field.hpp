#pragma once
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "lrc/error.hpp"

namespace lrc {

// Field element: base-p packing of the polynomial coefficients, x^i weighted by p^i.
using Fe = std::uint32_t;

struct FieldTables;

// GF(p^m) with verified irreducible modulus and primitive element.
class FieldSpec {
public:
    FieldSpec() = default;

    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t q() const { return q_; }
    Fe primitive() const { return primitive_; }
    // Coefficients low degree first, length m+1; empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Fe add(Fe a, Fe b) const;
    Fe sub(Fe a, Fe b) const;
    Fe neg(Fe a) const;
    Fe mul(Fe a, Fe b) const;
    Fe inv(Fe a) const;
    Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
    Fe pow(Fe a, std::int64_t e) const;
    // primitive^e for any integer e.
    Fe exp(std::int64_t e) const;
    // Discrete log base primitive; a must be nonzero.
    std::uint32_t log(Fe a) const;
    bool valid(Fe a) const { return a < q_; }

    bool operator==(const FieldSpec& o) const {
        return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
    }

    friend FieldSpec field_make(std::uint32_t, std::uint32_t,
                                std::optional<std::vector<std::uint32_t>>);

private:
    std::uint32_t p_ = 0, m_ = 0, q_ = 0;
    Fe primitive_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::shared_ptr<const FieldTables> tab_;
};

enum class FieldOp { Add, Sub, Mul, Inv, Pow };

// Errors: NotPrime, ReducibleModulus, InvalidArgument.
FieldSpec field_make(std::uint32_t p, std::uint32_t m,
                     std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);
// Convenience: GF(q) for a prime power q with the default modulus.
FieldSpec field_of_order(std::uint32_t q);
// Errors: DivideByZero.
Fe fe_arith(const FieldSpec& F, FieldOp op, Fe a, std::int64_t b);

bool is_prime(std::uint64_t n);
// Returns (p, m) with q = p^m, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);
bool poly_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& coeffs);

}  // namespace lrc
