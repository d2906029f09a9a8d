// Exact combinatorics of polynomial vectors by height: the enumeration
// stream, shell counts under both counting conventions, the main term
// Phi(Q), the divisor weight d(q), tau(q) and the partial sum T(Q).

#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "ldio/field.hpp"
#include "ldio/poly.hpp"
#include "ldio/psi.hpp"
#include "ldio/rational.hpp"

namespace ldio {

struct Dims {
    uint32_t m = 1;
    uint32_t n = 1;
};

// PaperFormula is the closed form m(k-1)k^{m-1+rm}; ExactEnumeration is the
// literal shell cardinality k^{rm}(k^m - 1). They differ for m >= 2 (the
// closed form multi-counts vectors with several maximal-degree components),
// so both are kept and reported side by side.
enum class CountVariant { PaperFormula, ExactEnumeration };

inline constexpr uint64_t kDefaultCountBudget = uint64_t(1) << 28;
inline constexpr uint64_t kDefaultMeasureBudget = uint64_t(1) << 26;

// Throws BudgetError when base^e > budget (or overflows).
void check_cell_budget(uint64_t base, uint32_t e, uint64_t budget, const char* what);

// Every q in F[X]^m with ||q||_inf = k^r, visited exactly once in graded-lex
// order: within the shell, the flattened coefficient word (component 0's
// constant term fastest, then its higher coefficients, then component 1,
// ...) counts upward. The callback receives a reused buffer.
template <class Fn>
void for_each_height_vector(const FieldSpec& F, uint32_t m, int r, Fn&& fn) {
    const uint64_t k = F.k();
    const uint32_t width = m * static_cast<uint32_t>(r + 1);
    std::vector<uint32_t> digits(width, 0);
    PolyVec q(m);
    bool done = false;
    while (!done) {
        // Keep exactly the vectors of height k^r: some component has degree r.
        bool full_height = r == 0;
        for (uint32_t i = 0; i < m && !full_height; ++i) {
            full_height = digits[i * (r + 1) + r] != 0;
        }
        bool nonzero = false;
        for (uint32_t v = 0; v < width && !nonzero; ++v) nonzero = digits[v] != 0;
        if (full_height && nonzero) {
            for (uint32_t i = 0; i < m; ++i) {
                auto& c = q[i].c;
                c.resize(r + 1);
                for (int e = 0; e <= r; ++e) c[e] = FieldElem{digits[i * (r + 1) + e]};
                while (!c.empty() && c.back().v == 0) c.pop_back();
            }
            fn(static_cast<const PolyVec&>(q));
        }
        done = true;
        for (uint32_t v = 0; v < width; ++v) {
            if (++digits[v] < k) {
                done = false;
                break;
            }
            digits[v] = 0;
        }
    }
}

// Shell cardinality under the chosen convention; overflow-checked.
int64_t count_height(const FieldSpec& F, uint32_t m, int r, CountVariant v);

// Phi(Q) = sum_{r=0..Q} count_height(r) * k^{-s(r) n}, exact.
Rational phi(const FieldSpec& F, Dims dims, const Psi& psi, int Q, CountVariant v);

// Number of common monic divisors of the coordinates of q (divisors of the
// gcd); throws ZeroInputError for the zero vector.
int64_t d_of(const FieldSpec& F, const PolyVec& q);

// Memoizes divisor counts by gcd polynomial across a long enumeration.
class DivisorCountCache {
  public:
    explicit DivisorCountCache(const FieldSpec& F) : F_(&F) {}
    int64_t operator()(const PolyVec& q);

  private:
    const FieldSpec* F_;
    std::unordered_map<Poly, int64_t, PolyHash> by_gcd_;
};

// tau(q) = psi(||q||)^n d(q) as an exact rational.
Rational tau(const FieldSpec& F, const Psi& psi, uint32_t n, const PolyVec& q);

// T(Q) = sum of tau over all nonzero q with ||q|| <= k^Q, by enumeration.
Rational big_T(const FieldSpec& F, Dims dims, const Psi& psi, int Q,
               uint64_t budget = kDefaultCountBudget);

// T(0), T(1), ..., T(Q) from a single enumeration pass.
std::vector<Rational> big_T_prefix(const FieldSpec& F, Dims dims, const Psi& psi, int Q,
                                   uint64_t budget = kDefaultCountBudget);

}  // namespace ldio
