// Exact arithmetic in the finite field of k = p^l elements, polynomial-basis
// representation. Elements are stored packed: the base-p digits of the index
// are the coordinates with respect to the basis 1, Y, ..., Y^{l-1}.

#pragma once

#include <cstdint>
#include <vector>

#include "ldio/errors.hpp"

namespace ldio {

struct FieldElem {
    uint32_t v = 0;

    friend bool operator==(FieldElem a, FieldElem b) { return a.v == b.v; }
    friend bool operator!=(FieldElem a, FieldElem b) { return a.v != b.v; }
    friend bool operator<(FieldElem a, FieldElem b) { return a.v < b.v; }
};

class FieldSpec {
  public:
    // Prime field with l = 1.
    explicit FieldSpec(uint32_t p);

    // Extension field of degree l. For l <= 4 a default modulus is used
    // (the lexicographically smallest monic irreducible, e.g. Y^2+Y+1 for
    // four elements); larger degrees require an explicit modulus.
    FieldSpec(uint32_t p, uint32_t l);

    // Extension field with caller-supplied monic irreducible modulus of
    // degree l over Z/p, coefficients low-to-high (length l + 1).
    FieldSpec(uint32_t p, uint32_t l, std::vector<uint32_t> modulus);

    uint32_t p() const { return p_; }
    uint32_t l() const { return l_; }
    uint64_t k() const { return k_; }

    // Empty for prime fields.
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    FieldElem zero() const { return FieldElem{0}; }
    FieldElem one() const { return FieldElem{1}; }

    // Element whose packed index is idx (must be < k).
    FieldElem element(uint64_t idx) const;

    // Element with the given polynomial-basis residues (low-to-high,
    // at most l of them, each reduced mod p on the way in).
    FieldElem from_coeffs(const std::vector<uint32_t>& residues) const;

    // The l residues of x, low-to-high.
    std::vector<uint32_t> coeffs(FieldElem x) const;

    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem sub(FieldElem a, FieldElem b) const;
    FieldElem neg(FieldElem a) const;
    FieldElem mul(FieldElem a, FieldElem b) const;

    // Multiplicative inverse; throws ZeroInputError for x = 0.
    FieldElem inv(FieldElem x) const;

    // The F_p-linear map "multiply by c" in the polynomial basis:
    // out[row * l + col] = digit `row` of c * Y^col. out must hold l*l bytes.
    // Requires p <= 255.
    void mul_matrix(FieldElem c, uint8_t* out) const;

    // The lexicographically smallest monic irreducible of degree l over Z/p
    // (trial division), available for l <= 4.
    static std::vector<uint32_t> default_modulus(uint32_t p, uint32_t l);

  private:
    void init();
    FieldElem mul_generic(FieldElem a, FieldElem b) const;

    uint32_t p_ = 0;
    uint32_t l_ = 1;
    uint64_t k_ = 0;
    std::vector<uint32_t> modulus_;

    // Lookup tables for small fields (k <= kLutMax); empty otherwise.
    static constexpr uint64_t kLutMax = 256;
    std::vector<uint32_t> mul_lut_;  // k * k
    std::vector<uint32_t> inv_lut_;  // k, entry 0 unused
};

// Free-function form of FieldSpec::inv, matching the other operations.
inline FieldElem field_inv(FieldElem x, const FieldSpec& F) { return F.inv(x); }

}  // namespace ldio
