#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "ldio/approx.hpp"
#include "ldio/counting.hpp"
#include "ldio/io.hpp"
#include "ldio/psi.hpp"

using namespace ldio;

namespace {

Poly P(const FieldSpec& F, const char* text) { return poly_from_string(F, text); }

struct Lcg {
    uint64_t state = 0xA0761D6478BD642Full;
    uint64_t next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 11;
    }
    uint32_t below(uint32_t n) { return static_cast<uint32_t>(next() % n); }
};

FracMatrix random_matrix(const FieldSpec& F, Lcg& rng, uint32_t m, uint32_t n,
                         uint32_t t) {
    FracMatrix A = FracMatrix::zeros(m, n, t);
    for (auto& c : A.coeff) c = F.element(rng.below(static_cast<uint32_t>(F.k())));
    return A;
}

FracMatrix column_matrix(const FieldSpec& F, const std::vector<const char*>& rows) {
    const uint32_t m = static_cast<uint32_t>(rows.size());
    std::vector<Frac> cells;
    for (const char* text : rows) cells.push_back(frac_from_string(F, text));
    FracMatrix A = FracMatrix::zeros(m, 1, static_cast<uint32_t>(cells[0].precision()));
    for (uint32_t i = 0; i < m; ++i) {
        for (uint32_t d = 0; d < A.t; ++d) A.at(i, 0, d) = cells[i].a[d];
    }
    return A;
}

// Naive solution counter: for every q and every candidate p, evaluates
// ||qA - p|| directly from a from-scratch convolution and tests it against
// psi(||q||). Only valid when the matrix window is wide enough for every
// tested q (guaranteed by t >= Q + s(Q) here).
uint64_t brute_force_count(const FieldSpec& F, int Q, const FracMatrix& A,
                           const Psi& psi) {
    REQUIRE(A.n == 1);
    uint64_t count = 0;
    for (int r = 0; r <= Q; ++r) {
        for_each_height_vector(F, A.m, r, [&](const PolyVec& q) {
            const int64_t s = psi_eval(psi, r);
            // exact convolution of the row product q * A[:,0]
            std::vector<FieldElem> integer(r + 1, FieldElem{0});
            std::vector<FieldElem> tail(A.t, FieldElem{0});
            for (uint32_t i = 0; i < A.m; ++i) {
                for (int e = 0; e <= q[i].degree(); ++e) {
                    for (uint32_t depth = 1; depth <= A.t; ++depth) {
                        const FieldElem term =
                            F.mul(q[i].coeff(e), A.at(i, 0, depth - 1));
                        const int exponent = e - static_cast<int>(depth);
                        if (exponent >= 0) {
                            integer[exponent] = F.add(integer[exponent], term);
                        } else if (static_cast<size_t>(-exponent) <= tail.size()) {
                            tail[-exponent - 1] = F.add(tail[-exponent - 1], term);
                        }
                    }
                }
            }
            const Poly int_part = Poly::from_coeffs(integer);
            // search every p of degree <= Q+1 for a solution
            bool found = false;
            uint64_t p_tuples = 1;
            for (int i = 0; i < Q + 3; ++i) p_tuples *= F.k();
            for (uint64_t idx = 0; idx < p_tuples && !found; ++idx) {
                std::vector<FieldElem> pc(Q + 3, FieldElem{0});
                uint64_t rest = idx;
                for (int i = 0; i < Q + 3; ++i) {
                    pc[i] = F.element(rest % F.k());
                    rest /= F.k();
                }
                const Poly p = Poly::from_coeffs(pc);
                if (p != int_part) continue;  // ||qA - p|| >= 1 > psi otherwise
                bool tail_small = true;
                for (int64_t j = 0; j < s && tail_small; ++j) {
                    tail_small = tail[static_cast<size_t>(j)].v == 0;
                }
                found = tail_small;
            }
            count += found;
        });
    }
    return count;
}

}  // namespace

TEST_CASE("psi evaluation") {
    CHECK(psi_eval(Psi::linear(1, 1), 2) == 3);
    CHECK(psi_eval(Psi::linear(2, 0, true), 3) == 6);
    CHECK(psi_eval(Psi::table({1, 2, 2}), 2) == 2);
    CHECK_THROWS_AS((void)psi_eval(Psi::table({1, 2}), 5), RangeError);
    CHECK_THROWS_AS((void)psi_eval(Psi::linear(1, 1), -1), RangeError);
    CHECK_THROWS_AS((void)Psi::linear(2, 0), RangeError);          // s(0)=0 needs the flag
    CHECK_THROWS_AS((void)Psi::linear(-1, 5), RangeError);         // increasing psi
    CHECK_THROWS_AS((void)Psi::table({2, 1}), RangeError);         // decreasing s
    CHECK(Psi::parse("linear:1,1").to_string() == "linear:1,1");
    CHECK(Psi::parse("table:1,2,2").to_string() == "table:1,2,2");
    CHECK_THROWS_AS((void)Psi::parse("linear:1"), ParseError);
    CHECK_THROWS_AS((void)Psi::parse("spline:1,2"), ParseError);
}

TEST_CASE("floor into V") {
    CHECK(floor_to_v_exponent(0.3, 2) == 2);    // 1/4 <= 0.3 < 1/2
    CHECK(floor_to_v_exponent(0.25, 2) == 2);   // boundary is left-closed
    CHECK(floor_to_v_exponent(1.0, 3) == 0);    // 1 <= 1 < 3
    CHECK(floor_to_v_exponent(9.0, 3) == -2);
    CHECK_THROWS_AS((void)floor_to_v_exponent(0.0, 2), DomainError);
    CHECK_THROWS_AS((void)floor_to_v_exponent(-1.5, 2), DomainError);
}

TEST_CASE("floor into V sandwich holds on random inputs") {
    Lcg rng;
    for (const uint64_t k : {uint64_t{2}, uint64_t{3}}) {
        for (int trial = 0; trial < 10000; ++trial) {
            const double x = (static_cast<double>(rng.next() % 10000000) + 1) / 1000000.0;
            const int n = floor_to_v_exponent(x, k);
            CHECK(std::pow(static_cast<double>(k), -n) <= x);
            CHECK(x < std::pow(static_cast<double>(k), -n + 1));
        }
    }
}

TEST_CASE("bq_member decides the examples") {
    const FieldSpec F(2);
    const FracMatrix A = column_matrix(F, {"3:1,1,0", "3:1,0,1"});
    SUBCASE("q = (X, 1) with s(1) = 2") {
        CHECK(bq_member(F, {P(F, "0,1"), P(F, "1")}, A, Psi::linear(1, 1)));
    }
    SUBCASE("q = (1, 1) with s(0) = 1") {
        CHECK(bq_member(F, {P(F, "1"), P(F, "1")}, A, Psi::linear(0, 1)));
    }
    SUBCASE("q = (1, 0) with s(0) = 1") {
        CHECK(!bq_member(F, {P(F, "1"), Poly::zero()}, A, Psi::linear(0, 1)));
    }
    SUBCASE("zero vector throws") {
        CHECK_THROWS_AS((void)bq_member(F, {Poly::zero(), Poly::zero()}, A,
                                        Psi::linear(0, 1)),
                        ZeroInputError);
    }
    SUBCASE("insufficient precision throws") {
        CHECK_THROWS_AS((void)bq_member(F, {P(F, "1"), P(F, "1")}, A, Psi::linear(0, 4)),
                        PrecisionError);
    }
}

TEST_CASE("membership is invariant under nonzero scalar multiples") {
    Lcg rng;
    for (const FieldSpec& F : {FieldSpec(3), FieldSpec(2, 2)}) {
        const Psi psi = Psi::linear(1, 1);
        for (int trial = 0; trial < 150; ++trial) {
            const FracMatrix A = random_matrix(F, rng, 2, 2, 6);
            PolyVec q{Poly::from_coeffs({F.element(rng.below(uint32_t(F.k()))),
                                         F.element(rng.below(uint32_t(F.k())))}),
                      Poly::from_coeffs({F.element(rng.below(uint32_t(F.k())))})};
            if (polyvec_is_zero(q)) continue;
            const bool base = bq_member(F, q, A, psi);
            for (uint64_t c = 1; c < F.k(); ++c) {
                PolyVec scaled;
                for (const Poly& qi : q) {
                    scaled.push_back(poly_mul(F, qi, Poly::constant(F.element(c))));
                }
                CHECK(bq_member(F, scaled, A, psi) == base);
            }
        }
    }
}

TEST_CASE("count_solutions matches the examples") {
    const FieldSpec F(2);
    SUBCASE("Q = 0 counts exactly q = (1,1)") {
        const FracMatrix A = column_matrix(F, {"1:1", "1:1"});
        CHECK(count_solutions(F, 0, A, Psi::linear(0, 1)) == 1);
    }
    SUBCASE("psi exceeding the precision throws") {
        const FracMatrix A = column_matrix(F, {"2:1,0", "2:1,1"});
        CHECK_THROWS_AS((void)count_solutions(F, 0, A, Psi::linear(0, 9)),
                        PrecisionError);
    }
    SUBCASE("budget exhaustion throws") {
        const FracMatrix A = column_matrix(F, {"8:1,0,1,0,1,0,1,0", "8:1,1,1,1,0,0,0,0"});
        CountOptions opts;
        opts.budget = 4;
        CHECK_THROWS_AS((void)count_solutions(F, 3, A, Psi::linear(1, 1), opts),
                        BudgetError);
    }
}

TEST_CASE("all counting strategies and backends agree") {
    Lcg rng;
    for (const FieldSpec& F : {FieldSpec(2), FieldSpec(3), FieldSpec(2, 2)}) {
        const Psi psi = Psi::linear(1, 1);
        for (int trial = 0; trial < 40; ++trial) {
            const int Q = static_cast<int>(rng.below(3));
            const uint32_t m = 1 + rng.below(2);
            const uint32_t n = 1 + rng.below(2);
            const uint32_t t = static_cast<uint32_t>(Q + psi_eval(psi, Q));
            const FracMatrix A = random_matrix(F, rng, m, n, t);
            CountOptions per_vector{CountStrategy::PerVector};
            CountOptions orbit{CountStrategy::OrbitRepresentative};
            CountOptions kernel{CountStrategy::Kernel};
            CountOptions kernel_ref{CountStrategy::Kernel, kernels::Backend::Reference};
            CountOptions kernel_scalar{CountStrategy::Kernel, kernels::Backend::Scalar};
            const uint64_t expected = count_solutions(F, Q, A, psi, per_vector);
            CHECK(count_solutions(F, Q, A, psi, orbit) == expected);
            CHECK(count_solutions(F, Q, A, psi, kernel) == expected);
            CHECK(count_solutions(F, Q, A, psi, kernel_ref) == expected);
            CHECK(count_solutions(F, Q, A, psi, kernel_scalar) == expected);
        }
    }
}

TEST_CASE("count_solutions equals the naive (q, p) double loop") {
    Lcg rng;
    const FieldSpec F(2);
    const Psi psi = Psi::linear(1, 1);
    for (int Q = 0; Q <= 2; ++Q) {
        for (int trial = 0; trial < 25; ++trial) {
            const uint32_t t = static_cast<uint32_t>(Q + psi_eval(psi, Q));
            const FracMatrix A = random_matrix(F, rng, 2, 1, t);
            CHECK(count_solutions(F, Q, A, psi) == brute_force_count(F, Q, A, psi));
        }
    }
}

TEST_CASE("solution counts are divisible by k - 1") {
    Lcg rng;
    for (const FieldSpec& F : {FieldSpec(3), FieldSpec(5), FieldSpec(2, 2)}) {
        const Psi psi = Psi::linear(1, 1);
        for (int trial = 0; trial < 30; ++trial) {
            const int Q = static_cast<int>(rng.below(2));
            const uint32_t t = static_cast<uint32_t>(Q + psi_eval(psi, Q));
            const FracMatrix A = random_matrix(F, rng, 2, 1, t);
            CHECK(count_solutions(F, Q, A, psi) % (F.k() - 1) == 0);
        }
    }
}

TEST_CASE("counts grow monotonically under precision refinement") {
    Lcg rng;
    const FieldSpec F(2);
    const Psi psi = Psi::linear(1, 1);
    for (int trial = 0; trial < 50; ++trial) {
        const int Q = 1 + static_cast<int>(rng.below(2));
        const uint32_t t_small = static_cast<uint32_t>(Q - 1 + psi_eval(psi, Q - 1));
        const uint32_t t_big = static_cast<uint32_t>(Q + psi_eval(psi, Q));
        FracMatrix A = random_matrix(F, rng, 2, 1, t_big);
        FracMatrix A_small = FracMatrix::zeros(2, 1, t_small);
        for (uint32_t i = 0; i < 2; ++i) {
            for (uint32_t d = 0; d < t_small; ++d) A_small.at(i, 0, d) = A.at(i, 0, d);
        }
        CHECK(count_solutions(F, Q, A, psi) >= count_solutions(F, Q - 1, A_small, psi));
    }
}

TEST_CASE("membership forms mirror the per-vector test") {
    Lcg rng;
    const FieldSpec F(2, 2);
    const Psi psi = Psi::linear(0, 1);
    for (int trial = 0; trial < 20; ++trial) {
        const FracMatrix A = random_matrix(F, rng, 2, 1, 3);
        const auto fs = membership_forms_in_q(F, A, 1, psi_eval(psi, 1));
        // count over the box deg <= 1 equals a literal walk
        uint64_t expected = 1;  // q = 0 satisfies all forms
        for (int r = 0; r <= 1; ++r) {
            for_each_height_vector(F, 2, r, [&](const PolyVec& q) {
                // degree <= 1 box, but membership threshold fixed at s(1)
                const FracVec frac = qa_fracpart(F, q, A);
                bool member = true;
                for (const Frac& comp : frac) {
                    for (int64_t j = 0; j < psi_eval(psi, 1) && member; ++j) {
                        member = comp.a[size_t(j)].v == 0;
                    }
                }
                expected += member;
            });
        }
        CHECK(kernels::count_common_zeros(fs) == expected);
    }
}
