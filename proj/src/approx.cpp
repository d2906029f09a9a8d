#include "ldio/approx.hpp"

#include <string>

namespace ldio {

namespace {

void check_precision(const FieldSpec& F, const FracMatrix& A, int r, int64_t s) {
    if (static_cast<int64_t>(A.t) < r + s) {
        throw PrecisionError("matrix precision " + std::to_string(A.t) +
                             " too small for height exponent " + std::to_string(r) +
                             " with psi exponent " + std::to_string(s) +
                             " (need deg + s coefficients)");
    }
    (void)F;
}

}  // namespace

bool bq_member(const FieldSpec& F, const PolyVec& q, const FracMatrix& A, const Psi& psi) {
    const auto r = inf_norm_exponent(q);
    if (!r) throw ZeroInputError("B_q membership for the zero vector");
    const int64_t s = psi_eval(psi, *r);
    check_precision(F, A, *r, s);
    const FracVec frac = qa_fracpart(F, q, A);
    for (const Frac& component : frac) {
        for (int64_t j = 0; j < s; ++j) {
            if (component.a[static_cast<size_t>(j)].v != 0) return false;
        }
    }
    return true;
}

kernels::FormSystem membership_forms_in_q(const FieldSpec& F, const FracMatrix& A,
                                          int box_deg, int64_t s) {
    const uint32_t l = F.l();
    const uint32_t coeffs_per_comp = static_cast<uint32_t>(box_deg + 1);
    const uint32_t num_vars = A.m * coeffs_per_comp * l;
    const uint32_t num_forms = static_cast<uint32_t>(s) * A.n * l;
    auto fs = kernels::FormSystem::make(F.p(), num_vars, num_forms);
    std::vector<uint8_t> mat(size_t(l) * l);
    for (uint32_t i = 0; i < A.m; ++i) {
        for (uint32_t col = 0; col < A.n; ++col) {
            for (uint32_t e = 0; e < coeffs_per_comp; ++e) {
                for (int64_t j = 1; j <= s; ++j) {
                    // coefficient of X^{-j} in <qA> picks up q_i[e] * a_i[j+e]
                    F.mul_matrix(A.at(i, col, static_cast<uint32_t>(j) + e - 1), mat.data());
                    for (uint32_t out_d = 0; out_d < l; ++out_d) {
                        const uint32_t form =
                            (static_cast<uint32_t>(j - 1) * A.n + col) * l + out_d;
                        for (uint32_t d = 0; d < l; ++d) {
                            const uint32_t var = (i * coeffs_per_comp + e) * l + d;
                            fs.at(form, var) = mat[out_d * l + d];
                        }
                    }
                }
            }
        }
    }
    return fs;
}

std::vector<uint64_t> count_solutions_by_shell(const FieldSpec& F, int Q,
                                               const FracMatrix& A, const Psi& psi,
                                               const CountOptions& opts) {
    if (Q < 0) throw RangeError("count_solutions requires Q >= 0");
    check_precision(F, A, Q, psi_eval(psi, Q));
    check_cell_budget(F.k(), A.m * static_cast<uint32_t>(Q + 1), opts.budget,
                      "solution counting");
    CountStrategy strategy = opts.strategy;
    if (strategy == CountStrategy::Auto) {
        strategy = F.p() <= 251 ? CountStrategy::Kernel : CountStrategy::PerVector;
    }

    std::vector<uint64_t> shells(static_cast<size_t>(Q) + 1, 0);
    if (strategy == CountStrategy::Kernel) {
        // The shell count is a difference of two box counts: q's of degree
        // <= r minus q's of degree <= r-1, both against the shell's s(r)
        // forms. q = 0 satisfies everything and cancels in the difference.
        for (int r = 0; r <= Q; ++r) {
            const int64_t s = psi_eval(psi, r);
            const auto outer = membership_forms_in_q(F, A, r, s);
            const uint64_t z_outer = kernels::count_common_zeros(outer, opts.backend);
            uint64_t z_inner = 1;
            if (r > 0) {
                const auto inner = membership_forms_in_q(F, A, r - 1, s);
                z_inner = kernels::count_common_zeros(inner, opts.backend);
            }
            shells[static_cast<size_t>(r)] = z_outer - z_inner;
        }
        return shells;
    }

    const uint64_t k = F.k();
    for (int r = 0; r <= Q; ++r) {
        uint64_t count = 0;
        if (strategy == CountStrategy::OrbitRepresentative) {
            for_each_height_vector(F, A.m, r, [&](const PolyVec& q) {
                // Representative: the first nonzero coefficient in the
                // flattened graded-lex word is 1.
                for (uint32_t i = 0; i < A.m; ++i) {
                    for (int e = 0; e <= r; ++e) {
                        const FieldElem c = q[i].coeff(static_cast<size_t>(e));
                        if (c.v == 0) continue;
                        if (c.v == 1 && bq_member(F, q, A, psi)) count += k - 1;
                        return;
                    }
                }
            });
        } else {
            for_each_height_vector(F, A.m, r, [&](const PolyVec& q) {
                if (bq_member(F, q, A, psi)) ++count;
            });
        }
        shells[static_cast<size_t>(r)] = count;
    }
    return shells;
}

uint64_t count_solutions(const FieldSpec& F, int Q, const FracMatrix& A, const Psi& psi,
                         const CountOptions& opts) {
    uint64_t total = 0;
    for (const uint64_t shell : count_solutions_by_shell(F, Q, A, psi, opts)) total += shell;
    return total;
}

}  // namespace ldio
