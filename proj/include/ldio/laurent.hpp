// Truncated fractional Laurent series: the known window of an element of
// the open unit ball I (pure tails x = sum_{i>=1} a_i X^{-i}). A Frac with
// t known coefficients stands for the cylinder of all tails agreeing with
// them to depth t, which has Haar measure k^{-t} per coordinate.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ldio/field.hpp"
#include "ldio/poly.hpp"

namespace ldio {

struct Frac {
    std::vector<FieldElem> a;  // a[i] is the coefficient of X^{-(i+1)}

    static Frac zeros(size_t t) { return Frac{std::vector<FieldElem>(t, FieldElem{0})}; }

    size_t precision() const { return a.size(); }
    FieldElem coeff(size_t depth) const { return a[depth - 1]; }  // depth is 1-based

    friend bool operator==(const Frac& x, const Frac& y) { return x.a == y.a; }
};

using FracVec = std::vector<Frac>;

// m x n matrix of tails with one uniform precision t, stored flat.
struct FracMatrix {
    uint32_t m = 0;
    uint32_t n = 0;
    uint32_t t = 0;
    std::vector<FieldElem> coeff;  // ((i * n) + j) * t + d, d in [0, t)

    static FracMatrix zeros(uint32_t m, uint32_t n, uint32_t t) {
        return FracMatrix{m, n, t, std::vector<FieldElem>(size_t(m) * n * t, FieldElem{0})};
    }

    FieldElem& at(uint32_t i, uint32_t j, uint32_t d) {
        return coeff[(size_t(i) * n + j) * t + d];
    }
    FieldElem at(uint32_t i, uint32_t j, uint32_t d) const {
        return coeff[(size_t(i) * n + j) * t + d];
    }
    Frac cell(uint32_t i, uint32_t j) const {
        const size_t base = (size_t(i) * n + j) * t;
        return Frac{{coeff.begin() + base, coeff.begin() + base + t}};
    }
};

// Absolute value of a known window: either exactly k^{-v} (v = index of the
// first nonzero coefficient) or below k^{-t} with the window exhausted.
struct Valuation {
    enum class Kind { Exact, BelowPrecision };
    Kind kind;
    int value;  // v for Exact, t for BelowPrecision

    static Valuation exact(int v) { return {Kind::Exact, v}; }
    static Valuation below_precision(int t) { return {Kind::BelowPrecision, t}; }
    bool is_exact() const { return kind == Kind::Exact; }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.kind == b.kind && a.value == b.value;
    }
};

Valuation frac_abs(const Frac& x);

struct PolyFracProduct {
    Poly integer_part;
    Frac fractional_part;  // precision t - deg q
};

// Exact split of q * x into polynomial part and tail, valid for every tail
// in the cylinder of x. Throws PrecisionError when deg q exceeds the
// precision of x.
PolyFracProduct poly_frac_mul(const FieldSpec& F, const Poly& q, const Frac& x);

// Coefficientwise sum, truncated to the smaller precision.
Frac frac_add(const FieldSpec& F, const Frac& x, const Frac& y);

// The fractional part <qA> of the row-vector/matrix product, component j =
// sum_i frac(q_i * A[i][j]), at precision t - max_i deg q_i. The distance
// from qA to the nearest polynomial vector is ||<qA>||.
FracVec qa_fracpart(const FieldSpec& F, const PolyVec& q, const FracMatrix& A);

// Min of first-nonzero depths across components; BelowPrecision when every
// known coefficient vanishes.
Valuation inf_norm_frac(const FracVec& v);

}  // namespace ldio
