#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "ldio/io.hpp"
#include "ldio/laurent.hpp"

using namespace ldio;

namespace {

Poly P(const FieldSpec& F, const char* text) { return poly_from_string(F, text); }
Frac X(const FieldSpec& F, const char* text) { return frac_from_string(F, text); }

struct Lcg {
    uint64_t state = 0x9E3779B97F4A7C15ull;
    uint64_t next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 11;
    }
    uint32_t below(uint32_t n) { return static_cast<uint32_t>(next() % n); }
};

Frac random_frac(const FieldSpec& F, Lcg& rng, size_t t) {
    Frac x = Frac::zeros(t);
    for (auto& c : x.a) c = F.element(rng.below(static_cast<uint32_t>(F.k())));
    return x;
}

Poly random_poly(const FieldSpec& F, Lcg& rng, int max_deg) {
    std::vector<FieldElem> c(rng.below(max_deg + 2));
    for (auto& e : c) e = F.element(rng.below(static_cast<uint32_t>(F.k())));
    return Poly::from_coeffs(std::move(c));
}

// Independent convolution oracle: multiplies q by the tail with coefficients
// a (a[i] for X^{-(i+1)}) as a doubly-indexed sum, exposing exponents from
// deg(q) down to -t.
struct ConvolutionSplit {
    std::vector<uint32_t> integer;  // index d = coefficient of X^d
    std::vector<uint32_t> tail;     // index j-1 = coefficient of X^{-j}
};

ConvolutionSplit convolve_oracle(const FieldSpec& F, const Poly& q,
                                 const std::vector<FieldElem>& a) {
    const int deg = q.is_zero() ? 0 : q.degree();
    ConvolutionSplit out;
    out.integer.assign(deg + 1, 0);
    out.tail.assign(a.size(), 0);
    for (int e = 0; e <= q.degree(); ++e) {
        for (size_t i = 1; i <= a.size(); ++i) {
            const FieldElem term = F.mul(q.coeff(e), a[i - 1]);
            const int exponent = e - static_cast<int>(i);
            if (exponent >= 0) {
                out.integer[exponent] = F.add(FieldElem{out.integer[exponent]}, term).v;
            } else {
                out.tail[-exponent - 1] = F.add(FieldElem{out.tail[-exponent - 1]}, term).v;
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("frac_abs finds the first nonzero depth") {
    const FieldSpec F2(2);
    const FieldSpec F3(3);
    CHECK(frac_abs(X(F2, "3:0,0,1")) == Valuation::exact(3));
    CHECK(frac_abs(X(F2, "3:0,0,0")) == Valuation::below_precision(3));
    CHECK(frac_abs(X(F3, "2:2,0")) == Valuation::exact(1));
}

TEST_CASE("poly_frac_mul splits exactly") {
    const FieldSpec F(2);
    SUBCASE("q = X against 1,0,1,1") {
        const auto [integer, frac] = poly_frac_mul(F, P(F, "0,1"), X(F, "4:1,0,1,1"));
        CHECK(integer == P(F, "1"));
        CHECK(frac == X(F, "3:0,1,1"));
    }
    SUBCASE("q = X+1 against 1,1") {
        const auto [integer, frac] = poly_frac_mul(F, P(F, "1,1"), X(F, "2:1,1"));
        CHECK(integer == P(F, "1"));
        CHECK(frac == X(F, "1:0"));
    }
    SUBCASE("q = 1 leaves the tail unchanged") {
        const Frac x = X(F, "4:1,0,1,1");
        const auto [integer, frac] = poly_frac_mul(F, P(F, "1"), x);
        CHECK(integer.is_zero());
        CHECK(frac == x);
    }
    SUBCASE("degree beyond precision throws") {
        CHECK_THROWS_AS((void)poly_frac_mul(F, P(F, "0,0,0,1"), X(F, "2:1,1")),
                        PrecisionError);
    }
}

TEST_CASE("poly_frac_mul matches the convolution oracle") {
    Lcg rng;
    for (const FieldSpec& F : {FieldSpec(2), FieldSpec(3), FieldSpec(2, 2)}) {
        for (int trial = 0; trial < 300; ++trial) {
            const Poly q = random_poly(F, rng, 3);
            const size_t t = 4 + rng.below(4);
            const Frac x = random_frac(F, rng, t);
            if (!q.is_zero() && static_cast<size_t>(q.degree()) > t) continue;
            const auto [integer, frac] = poly_frac_mul(F, q, x);
            const auto oracle = convolve_oracle(F, q, x.a);
            for (size_t d = 0; d < oracle.integer.size(); ++d) {
                CHECK(integer.coeff(d).v == oracle.integer[d]);
            }
            // the exposed window must agree with the oracle's exact leading part
            for (size_t j = 0; j < frac.precision(); ++j) {
                CHECK(frac.a[j].v == oracle.tail[j]);
            }
        }
    }
}

TEST_CASE("extending the input never changes exposed coefficients") {
    Lcg rng;
    const FieldSpec F(3);
    for (int trial = 0; trial < 200; ++trial) {
        const Poly q = random_poly(F, rng, 3);
        const Frac x = random_frac(F, rng, 4 + rng.below(3));
        if (!q.is_zero() && static_cast<size_t>(q.degree()) > x.precision()) continue;
        Frac extended = x;
        extended.a.push_back(F.element(rng.below(3)));
        extended.a.push_back(F.element(rng.below(3)));
        const auto narrow = poly_frac_mul(F, q, x);
        const auto wide = poly_frac_mul(F, q, extended);
        CHECK(narrow.integer_part == wide.integer_part);
        for (size_t j = 0; j < narrow.fractional_part.precision(); ++j) {
            CHECK(narrow.fractional_part.a[j] == wide.fractional_part.a[j]);
        }
    }
}

TEST_CASE("tail valuation of a product shifts by deg q when below the leading index") {
    Lcg rng;
    const FieldSpec F(2);
    for (int trial = 0; trial < 300; ++trial) {
        const Poly q = random_poly(F, rng, 3);
        if (q.is_zero()) continue;
        const size_t t = 5 + rng.below(3);
        const Frac x = random_frac(F, rng, t);
        const Valuation val = frac_abs(x);
        if (!val.is_exact()) continue;
        const int v = val.value;
        if (q.degree() >= v || static_cast<size_t>(v) + q.degree() > t) continue;
        const auto product = poly_frac_mul(F, q, x);
        CHECK(frac_abs(product.fractional_part) == Valuation::exact(v - q.degree()));
    }
}

TEST_CASE("ultrametric inequality for tail sums") {
    Lcg rng;
    const FieldSpec F(3);
    for (int trial = 0; trial < 400; ++trial) {
        const size_t t = 1 + rng.below(6);
        const Frac x = random_frac(F, rng, t);
        const Frac y = random_frac(F, rng, t);
        const Valuation vx = frac_abs(x);
        const Valuation vy = frac_abs(y);
        const Valuation vs = frac_abs(frac_add(F, x, y));
        if (vx.is_exact() && vy.is_exact()) {
            const int min_v = std::min(vx.value, vy.value);
            if (vs.is_exact()) CHECK(vs.value >= min_v);
            if (vx.value != vy.value) CHECK(vs == Valuation::exact(min_v));
        }
    }
}

TEST_CASE("qa_fracpart combines rows exactly") {
    const FieldSpec F(2);
    FracMatrix A = FracMatrix::zeros(2, 1, 3);
    const Frac row0 = X(F, "3:1,1,0");
    const Frac row1 = X(F, "3:1,0,1");
    for (uint32_t d = 0; d < 3; ++d) {
        A.at(0, 0, d) = row0.a[d];
        A.at(1, 0, d) = row1.a[d];
    }
    SUBCASE("q = (X, 1)") {
        const FracVec out = qa_fracpart(F, {P(F, "0,1"), P(F, "1")}, A);
        REQUIRE(out.size() == 1);
        CHECK(out[0] == X(F, "2:0,0"));
    }
    SUBCASE("unit vector picks out a row") {
        const FracVec out = qa_fracpart(F, {P(F, "1"), Poly::zero()}, A);
        CHECK(out[0] == row0);
    }
    SUBCASE("q = (1, 1) sums coefficientwise") {
        const FracVec out = qa_fracpart(F, {P(F, "1"), P(F, "1")}, A);
        CHECK(out[0] == X(F, "3:0,1,1"));
    }
}

TEST_CASE("qa_fracpart is linear in q on the common window") {
    Lcg rng;
    const FieldSpec F(2);
    for (int trial = 0; trial < 200; ++trial) {
        const uint32_t m = 2, n = 2, t = 8;
        FracMatrix A = FracMatrix::zeros(m, n, t);
        for (auto& c : A.coeff) c = F.element(rng.below(2));
        PolyVec q1{random_poly(F, rng, 2), random_poly(F, rng, 2)};
        PolyVec q2{random_poly(F, rng, 2), random_poly(F, rng, 2)};
        PolyVec sum{poly_add(F, q1[0], q2[0]), poly_add(F, q1[1], q2[1])};
        const FracVec lhs = qa_fracpart(F, sum, A);
        const FracVec a = qa_fracpart(F, q1, A);
        const FracVec b = qa_fracpart(F, q2, A);
        for (uint32_t j = 0; j < n; ++j) {
            const size_t common = std::min({lhs[j].precision(), a[j].precision(),
                                            b[j].precision()});
            for (size_t d = 0; d < common; ++d) {
                CHECK(lhs[j].a[d] == F.add(a[j].a[d], b[j].a[d]));
            }
        }
    }
}

TEST_CASE("inf norms") {
    const FieldSpec F2(2);
    const FieldSpec F3(3);
    CHECK(inf_norm_polyvec({P(F2, "1,0,1"), P(F2, "0,1")}, F2) == 4.0);
    CHECK(inf_norm_polyvec({Poly::zero(), Poly::zero()}, F2) == 0.0);
    CHECK(inf_norm_polyvec({P(F3, "1"), P(F3, "0,0,0,1")}, F3) == 27.0);

    CHECK(inf_norm_frac({X(F2, "2:0,1"), X(F2, "2:1,0")}) == Valuation::exact(1));
    CHECK(inf_norm_frac({X(F2, "2:0,0"), X(F2, "2:0,0")}) ==
          Valuation::below_precision(2));
    CHECK(inf_norm_frac({X(F2, "3:0,0,1")}) == Valuation::exact(3));
}
