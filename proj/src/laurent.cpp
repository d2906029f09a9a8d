#include "ldio/laurent.hpp"

#include <algorithm>
#include <string>

namespace ldio {

Valuation frac_abs(const Frac& x) {
    for (size_t i = 0; i < x.a.size(); ++i) {
        if (x.a[i].v != 0) return Valuation::exact(static_cast<int>(i) + 1);
    }
    return Valuation::below_precision(static_cast<int>(x.a.size()));
}

PolyFracProduct poly_frac_mul(const FieldSpec& F, const Poly& q, const Frac& x) {
    const size_t t = x.precision();
    if (q.is_zero()) {
        // 0 * x is exactly zero; keep the input window size.
        return {Poly::zero(), Frac::zeros(t)};
    }
    const size_t deg = static_cast<size_t>(q.degree());
    if (deg > t) {
        throw PrecisionError("poly_frac_mul: polynomial degree " + std::to_string(deg) +
                             " exceeds precision " + std::to_string(t));
    }
    // q * x = sum_{e,i} q_e a_i X^{e-i}. Nonnegative exponents form the
    // polynomial part; X^{-j} coefficients are exact for j <= t - deg.
    std::vector<FieldElem> integer(deg, FieldElem{0});
    for (size_t d = 0; d < deg; ++d) {
        FieldElem acc{0};
        for (size_t i = 1; i + d <= deg; ++i) {
            acc = F.add(acc, F.mul(q.c[d + i], x.a[i - 1]));
        }
        integer[d] = acc;
    }
    Frac frac = Frac::zeros(t - deg);
    for (size_t j = 1; j + deg <= t; ++j) {
        FieldElem acc{0};
        for (size_t e = 0; e <= deg; ++e) {
            acc = F.add(acc, F.mul(q.c[e], x.a[j + e - 1]));
        }
        frac.a[j - 1] = acc;
    }
    return {Poly::from_coeffs(std::move(integer)), std::move(frac)};
}

Frac frac_add(const FieldSpec& F, const Frac& x, const Frac& y) {
    const size_t t = std::min(x.precision(), y.precision());
    Frac out = Frac::zeros(t);
    for (size_t i = 0; i < t; ++i) out.a[i] = F.add(x.a[i], y.a[i]);
    return out;
}

FracVec qa_fracpart(const FieldSpec& F, const PolyVec& q, const FracMatrix& A) {
    if (q.size() != A.m) throw RangeError("qa_fracpart: vector length does not match rows");
    const auto max_deg = inf_norm_exponent(q);
    const size_t out_t = A.t - (max_deg ? static_cast<size_t>(*max_deg) : 0);
    FracVec out;
    out.reserve(A.n);
    for (uint32_t j = 0; j < A.n; ++j) {
        Frac acc = Frac::zeros(A.t);
        for (uint32_t i = 0; i < A.m; ++i) {
            if (q[i].is_zero()) continue;
            acc = frac_add(F, acc, poly_frac_mul(F, q[i], A.cell(i, j)).fractional_part);
        }
        acc.a.resize(out_t);
        out.push_back(std::move(acc));
    }
    return out;
}

Valuation inf_norm_frac(const FracVec& v) {
    std::optional<int> best;
    int t = 0;
    for (const Frac& x : v) {
        t = static_cast<int>(x.precision());
        const Valuation val = frac_abs(x);
        if (val.is_exact() && (!best || val.value < *best)) best = val.value;
    }
    return best ? Valuation::exact(*best) : Valuation::below_precision(t);
}

}  // namespace ldio
