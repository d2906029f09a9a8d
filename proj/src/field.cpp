#include "ldio/field.hpp"

#include <algorithm>
#include <string>

namespace ldio {

namespace {

bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

// Helpers on raw coefficient vectors over Z/p (low-to-high, trimmed).
using ZPoly = std::vector<uint32_t>;

void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            out[i + j] = static_cast<uint32_t>(
                (out[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
        }
    }
    ztrim(out);
    return out;
}

uint32_t zinv_mod_p(uint32_t a, uint32_t p) {
    // p is prime and a != 0, so a^(p-2) works; p is small.
    uint64_t result = 1, base = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(result);
}

// Remainder of a modulo b (deg b >= 1).
ZPoly zmod(ZPoly a, const ZPoly& b, uint32_t p) {
    ztrim(a);
    const size_t db = b.size() - 1;
    const uint32_t lead_inv = zinv_mod_p(b.back(), p);
    while (a.size() > db) {
        const uint64_t factor = static_cast<uint64_t>(a.back()) * lead_inv % p;
        const size_t shift = a.size() - 1 - db;
        for (size_t i = 0; i <= db; ++i) {
            const uint64_t sub = factor * b[i] % p;
            a[shift + i] = static_cast<uint32_t>((a[shift + i] + p - sub) % p);
        }
        ztrim(a);
    }
    return a;
}

bool z_is_irreducible(const ZPoly& f, uint32_t p) {
    const size_t deg = f.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    // Trial division against every monic polynomial of degree <= deg / 2.
    for (size_t d = 1; d <= deg / 2; ++d) {
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (uint64_t idx = 0; idx < count; ++idx) {
            ZPoly cand(d + 1, 0);
            uint64_t rest = idx;
            for (size_t i = 0; i < d; ++i) {
                cand[i] = static_cast<uint32_t>(rest % p);
                rest /= p;
            }
            cand[d] = 1;
            if (zmod(f, cand, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<uint32_t> FieldSpec::default_modulus(uint32_t p, uint32_t l) {
    if (l < 2 || l > 4) {
        throw ParseError("default modulus only available for extension degrees 2..4; "
                         "supply one explicitly");
    }
    // Lexicographic scan (constant term fastest) over monic degree-l candidates.
    uint64_t count = 1;
    for (uint32_t i = 0; i < l; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
        ZPoly cand(l + 1, 0);
        uint64_t rest = idx;
        for (uint32_t i = 0; i < l; ++i) {
            cand[i] = static_cast<uint32_t>(rest % p);
            rest /= p;
        }
        cand[l] = 1;
        if (z_is_irreducible(cand, p)) return cand;
    }
    throw Error("no irreducible modulus found");  // unreachable for prime p
}

FieldSpec::FieldSpec(uint32_t p) : p_(p), l_(1) { init(); }

FieldSpec::FieldSpec(uint32_t p, uint32_t l) : p_(p), l_(l) {
    if (l_ > 1) modulus_ = default_modulus(p, l);
    init();
}

FieldSpec::FieldSpec(uint32_t p, uint32_t l, std::vector<uint32_t> modulus)
    : p_(p), l_(l), modulus_(std::move(modulus)) {
    init();
}

void FieldSpec::init() {
    if (!is_prime(p_)) throw ParseError("field characteristic must be prime, got " + std::to_string(p_));
    if (l_ < 1 || l_ > 16) throw ParseError("extension degree must be in 1..16");
    if (l_ == 1) {
        if (!modulus_.empty()) throw ParseError("prime fields take no modulus");
    } else {
        if (modulus_.size() != l_ + 1) {
            throw ParseError("modulus must have degree l (l+1 coefficients)");
        }
        for (auto& c : modulus_) c %= p_;
        if (modulus_.back() != 1) throw ParseError("modulus must be monic");
        if (!z_is_irreducible(modulus_, p_)) throw ParseError("modulus is reducible");
    }
    k_ = 1;
    for (uint32_t i = 0; i < l_; ++i) {
        if (k_ > (uint64_t(1) << 42) / p_) throw OverflowError("field size p^l too large");
        k_ *= p_;
    }

    if (k_ <= kLutMax) {
        mul_lut_.assign(k_ * k_, 0);
        inv_lut_.assign(k_, 0);
        for (uint64_t a = 0; a < k_; ++a) {
            for (uint64_t b = a; b < k_; ++b) {
                const uint32_t prod = mul_generic(FieldElem{uint32_t(a)}, FieldElem{uint32_t(b)}).v;
                mul_lut_[a * k_ + b] = prod;
                mul_lut_[b * k_ + a] = prod;
                if (prod == 1) {
                    inv_lut_[a] = static_cast<uint32_t>(b);
                    inv_lut_[b] = static_cast<uint32_t>(a);
                }
            }
        }
    }
}

FieldElem FieldSpec::element(uint64_t idx) const {
    if (idx >= k_) throw RangeError("element index out of range");
    return FieldElem{static_cast<uint32_t>(idx)};
}

FieldElem FieldSpec::from_coeffs(const std::vector<uint32_t>& residues) const {
    if (residues.size() > l_) throw ParseError("too many residues for this field");
    uint64_t v = 0;
    for (size_t i = residues.size(); i-- > 0;) v = v * p_ + residues[i] % p_;
    return FieldElem{static_cast<uint32_t>(v)};
}

std::vector<uint32_t> FieldSpec::coeffs(FieldElem x) const {
    std::vector<uint32_t> out(l_, 0);
    uint32_t rest = x.v;
    for (uint32_t i = 0; i < l_; ++i) {
        out[i] = rest % p_;
        rest /= p_;
    }
    return out;
}

FieldElem FieldSpec::add(FieldElem a, FieldElem b) const {
    if (l_ == 1) return FieldElem{(a.v + b.v) % p_};
    uint32_t out = 0, mult = 1, av = a.v, bv = b.v;
    for (uint32_t i = 0; i < l_; ++i) {
        out += (av % p_ + bv % p_) % p_ * mult;
        av /= p_;
        bv /= p_;
        mult *= p_;
    }
    return FieldElem{out};
}

FieldElem FieldSpec::neg(FieldElem a) const {
    if (l_ == 1) return FieldElem{a.v == 0 ? 0 : p_ - a.v};
    uint32_t out = 0, mult = 1, av = a.v;
    for (uint32_t i = 0; i < l_; ++i) {
        const uint32_t d = av % p_;
        out += (d == 0 ? 0 : p_ - d) * mult;
        av /= p_;
        mult *= p_;
    }
    return FieldElem{out};
}

FieldElem FieldSpec::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem FieldSpec::mul(FieldElem a, FieldElem b) const {
    if (!mul_lut_.empty()) return FieldElem{mul_lut_[uint64_t(a.v) * k_ + b.v]};
    return mul_generic(a, b);
}

FieldElem FieldSpec::mul_generic(FieldElem a, FieldElem b) const {
    if (l_ == 1) {
        return FieldElem{static_cast<uint32_t>(uint64_t(a.v) * b.v % p_)};
    }
    ZPoly da = coeffs(a), db = coeffs(b);
    ztrim(da);
    ztrim(db);
    ZPoly prod = zmul(da, db, p_);
    if (prod.size() > l_) prod = zmod(std::move(prod), modulus_, p_);
    prod.resize(l_, 0);
    return from_coeffs(prod);
}

FieldElem FieldSpec::inv(FieldElem x) const {
    if (x.v == 0) throw ZeroInputError("inverse of zero field element");
    if (!inv_lut_.empty()) return FieldElem{inv_lut_[x.v]};
    // x^(k-2) by square-and-multiply.
    FieldElem result = one(), base = x;
    uint64_t e = k_ - 2;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

void FieldSpec::mul_matrix(FieldElem c, uint8_t* out) const {
    if (p_ > 255) throw RangeError("mul_matrix requires p <= 255");
    FieldElem power = c;
    for (uint32_t col = 0; col < l_; ++col) {
        const auto digits = coeffs(power);
        for (uint32_t row = 0; row < l_; ++row) {
            out[row * l_ + col] = static_cast<uint8_t>(digits[row]);
        }
        if (col + 1 < l_) {
            // power *= Y
            power = mul(power, element(p_));  // Y has packed index p
        }
    }
}

}  // namespace ldio
