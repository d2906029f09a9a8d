#include "ldio/poly.hpp"

#include <cmath>
#include <utility>

namespace ldio {

Poly poly_add(const FieldSpec& F, const Poly& a, const Poly& b) {
    std::vector<FieldElem> out(std::max(a.c.size(), b.c.size()), FieldElem{0});
    for (size_t i = 0; i < out.size(); ++i) out[i] = F.add(a.coeff(i), b.coeff(i));
    return Poly::from_coeffs(std::move(out));
}

Poly poly_sub(const FieldSpec& F, const Poly& a, const Poly& b) {
    std::vector<FieldElem> out(std::max(a.c.size(), b.c.size()), FieldElem{0});
    for (size_t i = 0; i < out.size(); ++i) out[i] = F.sub(a.coeff(i), b.coeff(i));
    return Poly::from_coeffs(std::move(out));
}

Poly poly_mul(const FieldSpec& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero();
    std::vector<FieldElem> out(a.c.size() + b.c.size() - 1, FieldElem{0});
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].v == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            out[i + j] = F.add(out[i + j], F.mul(a.c[i], b.c[j]));
        }
    }
    return Poly::from_coeffs(std::move(out));  // no trimming needed, but harmless
}

PolyDivMod poly_divmod(const FieldSpec& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw ZeroInputError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly::zero(), a};
    std::vector<FieldElem> rem = a.c;
    std::vector<FieldElem> quot(a.c.size() - b.c.size() + 1, FieldElem{0});
    const FieldElem lead_inv = F.inv(b.c.back());
    for (size_t pos = rem.size(); pos-- >= b.c.size();) {
        const FieldElem factor = F.mul(rem[pos], lead_inv);
        if (factor.v != 0) {
            const size_t shift = pos - (b.c.size() - 1);
            quot[shift] = factor;
            for (size_t i = 0; i < b.c.size(); ++i) {
                rem[shift + i] = F.sub(rem[shift + i], F.mul(factor, b.c[i]));
            }
        }
        if (pos == b.c.size() - 1) break;
    }
    return {Poly::from_coeffs(std::move(quot)), Poly::from_coeffs(std::move(rem))};
}

Poly poly_mod(const FieldSpec& F, const Poly& a, const Poly& b) {
    return poly_divmod(F, a, b).remainder;
}

Poly poly_monic(const FieldSpec& F, const Poly& a) {
    if (a.is_zero() || a.c.back() == F.one()) return a;
    const FieldElem scale = F.inv(a.c.back());
    std::vector<FieldElem> out(a.c.size());
    for (size_t i = 0; i < a.c.size(); ++i) out[i] = F.mul(a.c[i], scale);
    return Poly{std::move(out)};
}

Poly poly_gcd(const FieldSpec& F, Poly a, Poly b) {
    if (a.is_zero() && b.is_zero()) throw ZeroInputError("gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        Poly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(F, a);
}

double poly_abs(const Poly& q, const FieldSpec& F) {
    if (q.is_zero()) return 0.0;
    return std::pow(static_cast<double>(F.k()), q.degree());
}

int64_t monic_divisor_count(const FieldSpec& F, const Poly& g) {
    if (g.is_zero()) throw ZeroInputError("divisor count of the zero polynomial");
    const int deg = g.degree();
    int64_t count = 1;  // the divisor 1
    std::vector<FieldElem> cand;
    for (int d = 1; d <= deg; ++d) {
        cand.assign(d + 1, FieldElem{0});
        cand[d] = F.one();
        uint64_t tuples = 1;
        for (int i = 0; i < d; ++i) tuples *= F.k();
        for (uint64_t idx = 0; idx < tuples; ++idx) {
            uint64_t rest = idx;
            for (int i = 0; i < d; ++i) {
                cand[i] = FieldElem{static_cast<uint32_t>(rest % F.k())};
                rest /= F.k();
            }
            if (poly_mod(F, g, Poly{cand}).is_zero()) ++count;
        }
    }
    return count;
}

std::optional<int> inf_norm_exponent(const PolyVec& q) {
    std::optional<int> best;
    for (const Poly& qi : q) {
        if (qi.is_zero()) continue;
        if (!best || qi.degree() > *best) best = qi.degree();
    }
    return best;
}

double inf_norm_polyvec(const PolyVec& q, const FieldSpec& F) {
    const auto e = inf_norm_exponent(q);
    return e ? std::pow(static_cast<double>(F.k()), *e) : 0.0;
}

}  // namespace ldio
