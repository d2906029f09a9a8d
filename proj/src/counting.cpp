#include "ldio/counting.hpp"

#include <string>

namespace ldio {

void check_cell_budget(uint64_t base, uint32_t e, uint64_t budget, const char* what) {
    uint64_t cells = 1;
    for (uint32_t i = 0; i < e; ++i) {
        if (cells > budget / base) {
            throw BudgetError(std::string(what) + ": " + std::to_string(base) + "^" +
                              std::to_string(e) + " cells exceed the budget of " +
                              std::to_string(budget));
        }
        cells *= base;
    }
    if (cells > budget) {
        throw BudgetError(std::string(what) + ": " + std::to_string(cells) +
                          " cells exceed the budget of " + std::to_string(budget));
    }
}

int64_t count_height(const FieldSpec& F, uint32_t m, int r, CountVariant v) {
    if (r < 0 || m < 1) throw RangeError("count_height requires r >= 0 and m >= 1");
    const int64_t k = static_cast<int64_t>(F.k());
    if (v == CountVariant::PaperFormula) {
        // m (k-1) k^{m-1+rm}
        int64_t out = checked_mul(static_cast<int64_t>(m), k - 1);
        return checked_mul(out, checked_pow(F.k(), m - 1 + static_cast<uint32_t>(r) * m));
    }
    // k^{rm} (k^m - 1)
    return checked_mul(checked_pow(F.k(), static_cast<uint32_t>(r) * m),
                       checked_pow(F.k(), m) - 1);
}

Rational phi(const FieldSpec& F, Dims dims, const Psi& psi, int Q, CountVariant v) {
    if (Q < 0) throw RangeError("phi requires Q >= 0");
    Rational total(0, F.k());
    for (int r = 0; r <= Q; ++r) {
        const int64_t shell = count_height(F, dims.m, r, v);
        const int64_t s = psi_eval(psi, r);
        const int64_t exp = checked_mul(s, dims.n);
        if (exp > INT32_MAX) throw OverflowError("psi exponent too large");
        total += Rational::from_num_exp(shell, F.k(), static_cast<int32_t>(exp));
    }
    return total;
}

int64_t d_of(const FieldSpec& F, const PolyVec& q) {
    if (polyvec_is_zero(q)) throw ZeroInputError("d(q) of the zero vector");
    Poly g = Poly::zero();
    for (const Poly& qi : q) {
        if (qi.is_zero()) continue;
        g = g.is_zero() ? qi : poly_gcd(F, g, qi);
        if (g.degree() == 0) break;  // unit gcd, nothing smaller
    }
    return monic_divisor_count(F, poly_monic(F, g));
}

int64_t DivisorCountCache::operator()(const PolyVec& q) {
    if (polyvec_is_zero(q)) throw ZeroInputError("d(q) of the zero vector");
    Poly g = Poly::zero();
    for (const Poly& qi : q) {
        if (qi.is_zero()) continue;
        g = g.is_zero() ? qi : poly_gcd(*F_, g, qi);
        if (g.degree() == 0) break;
    }
    g = poly_monic(*F_, g);
    auto it = by_gcd_.find(g);
    if (it != by_gcd_.end()) return it->second;
    const int64_t count = monic_divisor_count(*F_, g);
    by_gcd_.emplace(std::move(g), count);
    return count;
}

Rational tau(const FieldSpec& F, const Psi& psi, uint32_t n, const PolyVec& q) {
    const auto r = inf_norm_exponent(q);
    if (!r) throw ZeroInputError("tau of the zero vector");
    const int64_t s = psi_eval(psi, *r);
    const int64_t exp = checked_mul(s, n);
    if (exp > INT32_MAX) throw OverflowError("psi exponent too large");
    return Rational::from_num_exp(d_of(F, q), F.k(), static_cast<int32_t>(exp));
}

std::vector<Rational> big_T_prefix(const FieldSpec& F, Dims dims, const Psi& psi, int Q,
                                   uint64_t budget) {
    if (Q < 0) throw RangeError("T(Q) requires Q >= 0");
    check_cell_budget(F.k(), dims.m * static_cast<uint32_t>(Q + 1), budget, "T(Q) enumeration");
    DivisorCountCache divisors(F);
    std::vector<Rational> prefix;
    prefix.reserve(Q + 1);
    Rational total(0, F.k());
    for (int r = 0; r <= Q; ++r) {
        int64_t divisor_sum = 0;
        for_each_height_vector(F, dims.m, r, [&](const PolyVec& q) {
            divisor_sum += divisors(q);
        });
        const int64_t s = psi_eval(psi, r);
        const int64_t exp = checked_mul(s, dims.n);
        if (exp > INT32_MAX) throw OverflowError("psi exponent too large");
        total += Rational::from_num_exp(divisor_sum, F.k(), static_cast<int32_t>(exp));
        prefix.push_back(total);
    }
    return prefix;
}

Rational big_T(const FieldSpec& F, Dims dims, const Psi& psi, int Q, uint64_t budget) {
    return big_T_prefix(F, dims, psi, Q, budget).back();
}

}  // namespace ldio
