#include "ldio/psi.hpp"

#include <cmath>
#include <charconv>

namespace ldio {

namespace {

int64_t parse_int(std::string_view s) {
    int64_t out = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError("bad integer in psi spec: '" + std::string(s) + "'");
    }
    return out;
}

std::vector<int64_t> parse_int_list(std::string_view s) {
    std::vector<int64_t> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        const size_t comma = s.find(',', pos);
        const size_t end = comma == std::string_view::npos ? s.size() : comma;
        out.push_back(parse_int(s.substr(pos, end - pos)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

void Psi::validate(bool allow_zero_exponent) const {
    const int64_t min_s = allow_zero_exponent ? 0 : 1;
    if (is_table()) {
        int64_t prev = min_s;
        for (size_t r = 0; r < table_.size(); ++r) {
            if (table_[r] < min_s) {
                throw RangeError("psi exponent s(" + std::to_string(r) + ") = " +
                                 std::to_string(table_[r]) + " below minimum " +
                                 std::to_string(min_s));
            }
            if (r > 0 && table_[r] < prev) {
                throw RangeError("psi exponents must be nondecreasing");
            }
            prev = table_[r];
        }
    } else {
        if (a_ < 0) throw RangeError("psi slope must be nonnegative (psi non-increasing)");
        if (b_ < min_s) {
            throw RangeError("psi exponent s(0) = " + std::to_string(b_) +
                             " below minimum " + std::to_string(min_s));
        }
    }
}

Psi Psi::linear(int64_t a, int64_t b, bool allow_zero_exponent) {
    Psi psi;
    psi.a_ = a;
    psi.b_ = b;
    psi.validate(allow_zero_exponent);
    return psi;
}

Psi Psi::table(std::vector<int64_t> s, bool allow_zero_exponent) {
    if (s.empty()) throw ParseError("psi table must not be empty");
    Psi psi;
    psi.table_ = std::move(s);
    psi.validate(allow_zero_exponent);
    return psi;
}

Psi Psi::parse(std::string_view text, bool allow_zero_exponent) {
    const size_t colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw ParseError("psi spec must be 'linear:a,b' or 'table:s0,s1,...'");
    }
    const std::string_view kind = text.substr(0, colon);
    const auto values = parse_int_list(text.substr(colon + 1));
    if (kind == "linear") {
        if (values.size() != 2) throw ParseError("linear psi takes exactly a,b");
        return linear(values[0], values[1], allow_zero_exponent);
    }
    if (kind == "table") return table(values, allow_zero_exponent);
    throw ParseError("unknown psi kind '" + std::string(kind) + "'");
}

int64_t Psi::exponent_at(int64_t r) const {
    if (r < 0) throw RangeError("psi evaluated at negative height exponent");
    if (is_table()) {
        if (static_cast<size_t>(r) >= table_.size()) {
            throw RangeError("psi table has no entry for r = " + std::to_string(r));
        }
        return table_[static_cast<size_t>(r)];
    }
    return a_ * r + b_;
}

std::string Psi::to_string() const {
    if (is_table()) {
        std::string out = "table:";
        for (size_t i = 0; i < table_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(table_[i]);
        }
        return out;
    }
    return "linear:" + std::to_string(a_) + "," + std::to_string(b_);
}

int floor_to_v_exponent(double x, uint64_t k) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError("floor into V requires a positive finite input");
    }
    // Start from the log estimate, then settle on the unique exponent whose
    // sandwich holds under the same pow() the caller would use to check.
    const double kd = static_cast<double>(k);
    int n = static_cast<int>(std::ceil(-std::log(x) / std::log(kd)));
    for (int cand = n - 2; cand <= n + 2; ++cand) {
        if (std::pow(kd, -cand) <= x && x < std::pow(kd, -cand + 1)) return cand;
    }
    throw Error("floor into V failed to settle");  // not reachable for sane inputs
}

}  // namespace ldio
