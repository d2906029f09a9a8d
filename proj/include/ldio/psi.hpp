// The error function psi, stored as its exponent map r -> s(r) with
// psi(k^r) = k^{-s(r)}, s nonnegative and nondecreasing. Also the floor into
// the value set V = {k^-n}: the unique n with k^-n <= x < k^{-n+1}.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ldio/errors.hpp"

namespace ldio {

class Psi {
  public:
    // s(r) = a*r + b.
    static Psi linear(int64_t a, int64_t b, bool allow_zero_exponent = false);
    // Explicit table s(0), s(1), ..., s(R).
    static Psi table(std::vector<int64_t> s, bool allow_zero_exponent = false);
    // "linear:a,b" or "table:s0,s1,...".
    static Psi parse(std::string_view text, bool allow_zero_exponent = false);

    // s(r); throws RangeError for r < 0 or beyond a table.
    int64_t exponent_at(int64_t r) const;

    bool is_table() const { return !table_.empty(); }
    std::string to_string() const;

  private:
    Psi() = default;
    void validate(bool allow_zero_exponent) const;

    int64_t a_ = 0;
    int64_t b_ = 0;
    std::vector<int64_t> table_;
};

inline int64_t psi_eval(const Psi& psi, int64_t r) { return psi.exponent_at(r); }

// The exponent n with k^-n <= x < k^{-n+1}; throws DomainError for x <= 0.
int floor_to_v_exponent(double x, uint64_t k);

}  // namespace ldio
