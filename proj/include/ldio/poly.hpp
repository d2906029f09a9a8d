// Polynomials over a finite field, their degree absolute value, gcds and
// monic divisor counts. Polynomials are immutable values in canonical
// trimmed form; the empty coefficient list is the zero polynomial.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ldio/field.hpp"

namespace ldio {

struct Poly {
    std::vector<FieldElem> c;  // c[i] multiplies X^i; empty <=> zero; back() nonzero

    static Poly zero() { return {}; }
    static Poly constant(FieldElem e) {
        Poly q;
        if (e.v != 0) q.c.push_back(e);
        return q;
    }
    // Trims trailing zeros into canonical form.
    static Poly from_coeffs(std::vector<FieldElem> coeffs) {
        while (!coeffs.empty() && coeffs.back().v == 0) coeffs.pop_back();
        return Poly{std::move(coeffs)};
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    FieldElem coeff(size_t i) const { return i < c.size() ? c[i] : FieldElem{0}; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a.c == b.c); }
};

struct PolyHash {
    size_t operator()(const Poly& q) const {
        size_t h = 1469598103934665603ull;
        for (FieldElem e : q.c) {
            h ^= e.v;
            h *= 1099511628211ull;
        }
        return h;
    }
};

using PolyVec = std::vector<Poly>;

Poly poly_add(const FieldSpec& F, const Poly& a, const Poly& b);
Poly poly_sub(const FieldSpec& F, const Poly& a, const Poly& b);
Poly poly_mul(const FieldSpec& F, const Poly& a, const Poly& b);

struct PolyDivMod {
    Poly quotient;
    Poly remainder;
};
// Long division by nonzero b.
PolyDivMod poly_divmod(const FieldSpec& F, const Poly& a, const Poly& b);
Poly poly_mod(const FieldSpec& F, const Poly& a, const Poly& b);

// Scales a nonzero polynomial to leading coefficient 1; zero stays zero.
Poly poly_monic(const FieldSpec& F, const Poly& a);

// Monic greatest common divisor; throws ZeroInputError when both are zero.
Poly poly_gcd(const FieldSpec& F, Poly a, Poly b);

// Degree exponent of the absolute value: ||q|| = k^deg(q), nullopt for q = 0.
inline std::optional<int> poly_abs_exponent(const Poly& q) {
    if (q.is_zero()) return std::nullopt;
    return q.degree();
}

// ||q|| as a real number: k^deg(q), or 0 for the zero polynomial.
double poly_abs(const Poly& q, const FieldSpec& F);

// Number of monic divisors of g (including 1 and the monic scaling of g),
// by trial division over all monic polynomials of degree <= deg g.
// Throws ZeroInputError for g = 0.
int64_t monic_divisor_count(const FieldSpec& F, const Poly& g);

// Height exponent of a vector: max degree over components, nullopt when all
// components are zero.
std::optional<int> inf_norm_exponent(const PolyVec& q);

// ||q||_inf = max over components of ||q_i||; 0 for the zero vector.
double inf_norm_polyvec(const PolyVec& q, const FieldSpec& F);

inline bool polyvec_is_zero(const PolyVec& q) {
    for (const Poly& qi : q) {
        if (!qi.is_zero()) return false;
    }
    return true;
}

}  // namespace ldio
