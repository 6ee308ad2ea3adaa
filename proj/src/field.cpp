#include "lrc/field.hpp"

#include <string>

namespace lrc {

struct FieldTables {
    std::vector<Fe> exp;            // length 2(q-1)
    std::vector<std::uint32_t> log; // length q, log[0] unused
};

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::uint64_t r = 1, b = a % p;
    for (std::uint32_t e = p - 2; e; e >>= 1, b = b * b % p)
        if (e & 1) r = r * b % p;
    return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo b over GF(p); b nonzero and trimmed.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint32_t lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t c = std::uint64_t(a.back()) * lead_inv % p;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            const std::uint64_t sub = c * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

Poly to_poly(Fe v, std::uint32_t p, std::uint32_t m) {
    Poly r(m, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
        r[i] = v % p;
        v /= p;
    }
    return r;
}

Fe from_poly(const Poly& a, std::uint32_t p) {
    Fe v = 0;
    for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
    return v;
}

// Multiplication by direct polynomial arithmetic; used only while building tables.
Fe slow_mul(Fe a, Fe b, std::uint32_t p, std::uint32_t m, const Poly& mod) {
    if (m == 1) return static_cast<Fe>(std::uint64_t(a) * b % p);
    Poly x = to_poly(a, p, m), y = to_poly(b, p, m);
    Poly prod(2 * m, 0);
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(x[i]) * y[j]) % p);
    Poly r = poly_mod(prod, mod, p);
    r.resize(m, 0);
    return from_poly(r, p);
}

Fe slow_pow(Fe a, std::uint64_t e, std::uint32_t p, std::uint32_t m, const Poly& mod) {
    Fe r = 1;
    for (; e; e >>= 1, a = slow_mul(a, a, p, m, mod))
        if (e & 1) r = slow_mul(r, a, p, m, mod);
    return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> f;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            f.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) f.push_back(n);
    return f;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    for (std::uint64_t p = 2; p <= q; ++p) {
        if (q % p) continue;
        std::uint32_t m = 0;
        while (q % p == 0) {
            q /= p;
            ++m;
        }
        if (q != 1) return std::nullopt;
        return std::make_pair(static_cast<std::uint32_t>(p), m);
    }
    return std::nullopt;
}

bool poly_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& coeffs) {
    Poly f = coeffs;
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t v = 0; v < count; ++v) {
            Poly g(d + 1, 0);
            std::uint64_t t = v;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

FieldSpec field_make(std::uint32_t p, std::uint32_t m, std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime(p)) throw Error("NotPrime", std::to_string(p) + " is not prime");
    if (m < 1) throw Error("InvalidArgument", "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > (1u << 24)) throw Error("InvalidArgument", "field too large for table arithmetic");
    }

    Poly mod;
    if (m > 1) {
        if (modulus) {
            mod = *modulus;
            if (mod.size() != m + 1 || mod.back() == 0)
                throw Error("InvalidArgument", "modulus must have degree m");
            for (auto c : mod)
                if (c >= p) throw Error("InvalidArgument", "modulus coefficient out of range");
            if (!poly_irreducible(p, mod)) throw Error("ReducibleModulus", "modulus is reducible");
        } else {
            // Monic candidates in increasing base-p value, high-degree coefficient most significant.
            bool found = false;
            for (std::uint64_t v = 0; v < q && !found; ++v) {
                Poly cand(m + 1, 0);
                std::uint64_t t = v;
                for (std::uint32_t i = 0; i < m; ++i) {
                    cand[i] = static_cast<std::uint32_t>(t % p);
                    t /= p;
                }
                cand[m] = 1;
                if (poly_irreducible(p, cand)) {
                    mod = cand;
                    found = true;
                }
            }
        }
    } else if (modulus && !modulus->empty()) {
        throw Error("InvalidArgument", "prime field takes no modulus");
    }

    FieldSpec F;
    F.p_ = p;
    F.m_ = m;
    F.q_ = static_cast<std::uint32_t>(q);
    F.modulus_ = mod;

    const std::uint64_t order = q - 1;
    const auto factors = prime_factors(order);
    Fe g = 0;
    for (Fe cand = 1; cand < q; ++cand) {
        bool ok = true;
        for (auto f : factors)
            if (slow_pow(cand, order / f, p, m, mod) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            g = cand;
            break;
        }
    }
    F.primitive_ = g;

    auto tab = std::make_shared<FieldTables>();
    tab->exp.resize(2 * order);
    tab->log.assign(q, 0);
    Fe cur = 1;
    for (std::uint64_t i = 0; i < order; ++i) {
        tab->exp[i] = cur;
        tab->log[cur] = static_cast<std::uint32_t>(i);
        cur = slow_mul(cur, g, p, m, mod);
    }
    for (std::uint64_t i = order; i < 2 * order; ++i) tab->exp[i] = tab->exp[i - order];
    F.tab_ = tab;
    return F;
}

FieldSpec field_of_order(std::uint32_t q) {
    auto pm = prime_power(q);
    if (!pm) throw Error("NotPrime", std::to_string(q) + " is not a prime power");
    return field_make(pm->first, pm->second);
}

Fe FieldSpec::add(Fe a, Fe b) const {
    if (p_ == 2) return a ^ b;
    if (m_ == 1) return (a + b) % p_;
    Fe r = 0, w = 1;
    while (a || b) {
        r += ((a % p_ + b % p_) % p_) * w;
        a /= p_;
        b /= p_;
        w *= p_;
    }
    return r;
}

Fe FieldSpec::neg(Fe a) const {
    if (p_ == 2) return a;
    if (m_ == 1) return a ? p_ - a : 0;
    Fe r = 0, w = 1;
    while (a) {
        r += ((p_ - a % p_) % p_) * w;
        a /= p_;
        w *= p_;
    }
    return r;
}

Fe FieldSpec::sub(Fe a, Fe b) const { return add(a, neg(b)); }

Fe FieldSpec::mul(Fe a, Fe b) const {
    if (a == 0 || b == 0) return 0;
    return tab_->exp[tab_->log[a] + tab_->log[b]];
}

Fe FieldSpec::inv(Fe a) const {
    if (a == 0) throw Error("DivideByZero", "inverse of zero");
    return tab_->exp[(q_ - 1 - tab_->log[a]) % (q_ - 1)];
}

Fe FieldSpec::pow(Fe a, std::int64_t e) const {
    if (a == 0) {
        if (e < 0) throw Error("DivideByZero", "negative power of zero");
        return e == 0 ? 1 : 0;
    }
    const std::int64_t ord = q_ - 1;
    std::int64_t k = (static_cast<std::int64_t>(tab_->log[a]) * (e % ord)) % ord;
    if (k < 0) k += ord;
    return tab_->exp[k];
}

Fe FieldSpec::exp(std::int64_t e) const {
    const std::int64_t ord = q_ - 1;
    std::int64_t k = e % ord;
    if (k < 0) k += ord;
    return tab_->exp[k];
}

std::uint32_t FieldSpec::log(Fe a) const {
    if (a == 0) throw Error("DivideByZero", "log of zero");
    return tab_->log[a];
}

Fe fe_arith(const FieldSpec& F, FieldOp op, Fe a, std::int64_t b) {
    switch (op) {
        case FieldOp::Add: return F.add(a, static_cast<Fe>(b));
        case FieldOp::Sub: return F.sub(a, static_cast<Fe>(b));
        case FieldOp::Mul: return F.mul(a, static_cast<Fe>(b));
        case FieldOp::Inv: return F.inv(a);
        case FieldOp::Pow: return F.pow(a, b);
    }
    return 0;
}

}  // namespace lrc
