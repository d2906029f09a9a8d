#include "ldio/rational.hpp"

#include <limits>

namespace ldio {

int64_t checked_mul(int64_t a, int64_t b) {
    const __int128 prod = static_cast<__int128>(a) * b;
    if (prod > std::numeric_limits<int64_t>::max() ||
        prod < std::numeric_limits<int64_t>::min()) {
        throw OverflowError("exact integer product exceeds 64 bits");
    }
    return static_cast<int64_t>(prod);
}

int64_t checked_pow(uint64_t base, uint32_t e) {
    int64_t out = 1;
    for (uint32_t i = 0; i < e; ++i) out = checked_mul(out, static_cast<int64_t>(base));
    return out;
}

Rational Rational::from_num_exp(int64_t num, uint64_t base, int32_t exp) {
    if (base < 2) throw RangeError("rational base must be >= 2");
    if (exp < 0) throw RangeError("denominator exponent must be >= 0");
    Rational r;
    r.num_ = num;
    r.base_ = base;
    r.exp_ = exp;
    r.reduce();
    return r;
}

void Rational::reduce() {
    if (num_ == 0) {
        exp_ = 0;
        return;
    }
    while (exp_ > 0 && num_ % static_cast<int64_t>(base_) == 0) {
        num_ /= static_cast<int64_t>(base_);
        --exp_;
    }
}

int64_t Rational::den() const { return base_ == 0 ? 1 : checked_pow(base_, exp_); }

double Rational::to_double() const {
    double out = static_cast<double>(num_);
    for (int32_t i = 0; i < exp_; ++i) out /= static_cast<double>(base_);
    return out;
}

std::string Rational::to_string() const {
    if (exp_ == 0) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(base_) + "^" + std::to_string(exp_);
}

uint64_t Rational::common_base(const Rational& a, const Rational& b) {
    if (a.base_ == 0) return b.base_;
    if (b.base_ == 0 || a.base_ == b.base_) return a.base_;
    throw Error("mixed rational bases " + std::to_string(a.base_) + " and " +
                std::to_string(b.base_));
}

Rational Rational::operator+(const Rational& o) const {
    const uint64_t base = common_base(*this, o);
    if (base == 0) return Rational();  // both uncommitted zeros
    const int32_t e = std::max(exp_, o.exp_);
    const int64_t lhs = checked_mul(num_, checked_pow(base, e - exp_));
    const int64_t rhs = checked_mul(o.num_, checked_pow(base, e - o.exp_));
    if ((rhs > 0 && lhs > std::numeric_limits<int64_t>::max() - rhs) ||
        (rhs < 0 && lhs < std::numeric_limits<int64_t>::min() - rhs)) {
        throw OverflowError("exact rational sum exceeds 64 bits");
    }
    return from_num_exp(lhs + rhs, base, e);
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    const uint64_t base = common_base(*this, o);
    if (base == 0) return Rational();
    return from_num_exp(checked_mul(num_, o.num_), base, exp_ + o.exp_);
}

Rational Rational::pow(uint32_t e) const {
    Rational out(1, base_ == 0 ? 2 : base_);
    for (uint32_t i = 0; i < e; ++i) out = out * *this;
    return out;
}

bool Rational::operator==(const Rational& o) const {
    if (num_ == 0 || o.num_ == 0) return num_ == o.num_;
    const uint64_t base = common_base(*this, o);
    (void)base;
    return num_ == o.num_ && exp_ == o.exp_;
}

bool Rational::operator<(const Rational& o) const {
    const uint64_t base = common_base(*this, o);
    if (base == 0) return false;
    const int32_t e = std::max(exp_, o.exp_);
    const __int128 lhs = static_cast<__int128>(num_) * checked_pow(base, e - exp_);
    const __int128 rhs = static_cast<__int128>(o.num_) * checked_pow(base, e - o.exp_);
    return lhs < rhs;
}

}  // namespace ldio
