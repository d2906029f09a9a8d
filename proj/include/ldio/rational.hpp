// Exact rationals whose denominator is a power of a fixed base k.
// All counting sums and measures in this library live in this ring.

#pragma once

#include <cstdint>
#include <string>

#include "ldio/errors.hpp"

namespace ldio {

class Rational {
  public:
    // Zero with no committed base; combines with any other value.
    Rational() = default;

    // The integer value n (denominator k^0).
    Rational(int64_t n, uint64_t base) : num_(n), base_(base) { reduce(); }

    // num / base^exp, reduced.
    static Rational from_num_exp(int64_t num, uint64_t base, int32_t exp);

    int64_t num() const { return num_; }
    int32_t exp() const { return exp_; }
    uint64_t base() const { return base_; }

    // The denominator base^exp as an integer; throws OverflowError if it
    // does not fit.
    int64_t den() const;

    bool is_zero() const { return num_ == 0; }
    double to_double() const;

    // "num" when the denominator is 1, otherwise "num/k^e" with k expanded,
    // e.g. "9/2^1".
    std::string to_string() const;

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator-() const;
    Rational operator*(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }

    // Nonnegative integer power.
    Rational pow(uint32_t e) const;

    bool operator==(const Rational& o) const;
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }

  private:
    void reduce();
    static uint64_t common_base(const Rational& a, const Rational& b);

    int64_t num_ = 0;
    int32_t exp_ = 0;
    uint64_t base_ = 0;  // 0 until the value commits to a base
};

// a * b with an overflow check.
int64_t checked_mul(int64_t a, int64_t b);
// base^e as int64, overflow-checked.
int64_t checked_pow(uint64_t base, uint32_t e);

}  // namespace ldio
