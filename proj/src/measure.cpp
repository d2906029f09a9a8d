#include "ldio/measure.hpp"

#include <limits>
#include <string>

#include "ldio/parallel.hpp"

namespace ldio {

namespace {

// Appends, for each of n_cols columns, the s forms "coefficient X^{-j} of
// column `col` of <qA> vanishes" (flattened to l prime-field rows each).
// Variables are the a-digits laid out as ((i * n_cols + col) * depth + dc) *
// l + d.
void append_forms_in_a(kernels::FormSystem& fs, const FieldSpec& F, const PolyVec& q,
                       int64_t s, uint32_t depth, uint32_t n_cols, uint32_t& next_form) {
    const uint32_t l = F.l();
    std::vector<uint8_t> mat(size_t(l) * l);
    for (uint32_t col = 0; col < n_cols; ++col) {
        for (int64_t j = 1; j <= s; ++j) {
            for (uint32_t out_d = 0; out_d < l; ++out_d) {
                const uint32_t form = next_form++;
                for (uint32_t i = 0; i < q.size(); ++i) {
                    for (int e = 0; e <= q[i].degree(); ++e) {
                        const uint32_t dc = static_cast<uint32_t>(j + e - 1);
                        F.mul_matrix(q[i].coeff(static_cast<size_t>(e)), mat.data());
                        for (uint32_t d = 0; d < l; ++d) {
                            const uint32_t var =
                                ((i * n_cols + col) * depth + dc) * l + d;
                            fs.at(form, var) = mat[out_d * l + d];
                        }
                    }
                }
            }
        }
    }
}

uint64_t count_zeros_parallel(const kernels::FormSystem& fs, const MeasureOptions& opts) {
    const uint64_t domain = fs.domain_size();
    return parallel_sum(domain, opts.threads, [&](uint64_t begin, uint64_t end) {
        return kernels::count_common_zeros_range(fs, begin, end, opts.backend);
    });
}

Rational enumerate_measure(const FieldSpec& F, const std::vector<const PolyVec*>& qs,
                           const std::vector<int64_t>& thresholds, uint32_t depth,
                           uint32_t n, const MeasureOptions& opts) {
    const uint32_t m = static_cast<uint32_t>(qs[0]->size());
    const uint32_t n_cols = opts.full_enumeration ? n : 1;
    check_cell_budget(F.k(), m * n_cols * depth, opts.budget, "measure enumeration");
    int64_t total_forms = 0;
    for (const int64_t s : thresholds) total_forms += s;
    auto fs = kernels::FormSystem::make(
        F.p(), m * n_cols * depth * F.l(),
        static_cast<uint32_t>(total_forms) * n_cols * F.l());
    uint32_t next_form = 0;
    for (size_t idx = 0; idx < qs.size(); ++idx) {
        append_forms_in_a(fs, F, *qs[idx], thresholds[idx], depth, n_cols, next_form);
    }
    const uint64_t zeros = count_zeros_parallel(fs, opts);
    if (zeros > uint64_t(std::numeric_limits<int64_t>::max())) {
        throw OverflowError("measure numerator exceeds 64 bits");
    }
    const Rational per_block = Rational::from_num_exp(
        static_cast<int64_t>(zeros), F.k(), static_cast<int32_t>(m * n_cols * depth));
    return opts.full_enumeration ? per_block : per_block.pow(n);
}

}  // namespace

bool lin_indep(const FieldSpec& F, const PolyVec& q, const PolyVec& q2) {
    if (polyvec_is_zero(q) || polyvec_is_zero(q2)) {
        throw ZeroInputError("linear independence of a zero vector");
    }
    if (q.size() != q2.size()) throw RangeError("vectors of different length");
    for (size_t i = 0; i < q.size(); ++i) {
        for (size_t j = i + 1; j < q.size(); ++j) {
            const Poly minor =
                poly_sub(F, poly_mul(F, q[i], q2[j]), poly_mul(F, q[j], q2[i]));
            if (!minor.is_zero()) return true;
        }
    }
    return false;
}

Rational measure_bq(const FieldSpec& F, const PolyVec& q, const Psi& psi, uint32_t n,
                    const MeasureOptions& opts) {
    const auto r = inf_norm_exponent(q);
    if (!r) throw ZeroInputError("measure of B_q for the zero vector");
    const int64_t s = psi_eval(psi, *r);
    const uint32_t depth = static_cast<uint32_t>(*r + s);
    return enumerate_measure(F, {&q}, {s}, depth, n, opts);
}

Rational measure_pair(const FieldSpec& F, const PolyVec& q, const PolyVec& q2,
                      const Psi& psi, uint32_t n, const MeasureOptions& opts) {
    const auto r1 = inf_norm_exponent(q);
    const auto r2 = inf_norm_exponent(q2);
    if (!r1 || !r2) throw ZeroInputError("measure of B_q for the zero vector");
    const int64_t s1 = psi_eval(psi, *r1);
    const int64_t s2 = psi_eval(psi, *r2);
    const uint32_t depth =
        static_cast<uint32_t>(std::max(*r1, *r2) + std::max(s1, s2));
    return enumerate_measure(F, {&q, &q2}, {s1, s2}, depth, n, opts);
}

Rational expected_n(const FieldSpec& F, Dims dims, const Psi& psi, int Q,
                    const MeasureOptions& opts, const CountOptions& count_opts) {
    if (Q < 0) throw RangeError("expected_n requires Q >= 0");
    const int64_t s_max = psi_eval(psi, Q);
    const uint32_t depth = static_cast<uint32_t>(Q + s_max);
    const uint32_t slots = dims.m * dims.n * depth;
    check_cell_budget(F.k(), slots, opts.budget, "cylinder average");
    check_cell_budget(F.k(), dims.m * static_cast<uint32_t>(Q + 1), count_opts.budget,
                      "solution counting");
    uint64_t cells = 1;
    for (uint32_t i = 0; i < slots; ++i) cells *= F.k();

    const uint32_t threads = opts.threads == 0 ? hardware_threads() : opts.threads;
    std::vector<unsigned __int128> partial(threads, 0);
    parallel_spans(cells, threads, [&](size_t span, uint64_t begin, uint64_t end) {
        // Cell digits share the FracMatrix layout, so the decomposition of
        // the cell index fills the matrix directly.
        FracMatrix A = FracMatrix::zeros(dims.m, dims.n, depth);
        unsigned __int128 sum = 0;
        for (uint64_t cell = begin; cell < end; ++cell) {
            uint64_t rest = cell;
            for (uint32_t v = 0; v < slots; ++v) {
                A.coeff[v] = FieldElem{static_cast<uint32_t>(rest % F.k())};
                rest /= F.k();
            }
            sum += count_solutions(F, Q, A, psi, count_opts);
        }
        partial[span] += sum;
    });
    unsigned __int128 total = 0;
    for (const auto v : partial) total += v;
    if (total > static_cast<unsigned __int128>(std::numeric_limits<int64_t>::max())) {
        throw OverflowError("cylinder-average numerator exceeds 64 bits");
    }
    return Rational::from_num_exp(static_cast<int64_t>(total), F.k(),
                                  static_cast<int32_t>(slots));
}

Prop1Report verify_prop1(const FieldSpec& F, uint32_t m, uint32_t n, const Psi& psi, int Q,
                         const MeasureOptions& opts) {
    Prop1Report report;
    report.m = m;
    report.n = n;
    report.max_height_exponent = Q;
    for (int r = 0; r <= Q; ++r) {
        const int64_t s = psi_eval(psi, r);
        const int64_t exp = checked_mul(s, n);
        const Rational expected =
            Rational::from_num_exp(1, F.k(), static_cast<int32_t>(exp));
        for_each_height_vector(F, m, r, [&](const PolyVec& q) {
            Prop1Case c;
            c.q = q;
            c.r = r;
            c.s = s;
            c.measured = measure_bq(F, q, psi, n, opts);
            c.expected = expected;
            c.pass = c.measured == c.expected;
            report.passed += c.pass;
            report.cases.push_back(std::move(c));
        });
    }
    return report;
}

Prop2Report verify_prop2(const FieldSpec& F, uint32_t m, uint32_t n, const Psi& psi, int Q,
                         const MeasureOptions& opts) {
    Prop2Report report;
    report.m = m;
    report.n = n;
    report.max_height_exponent = Q;
    std::vector<PolyVec> all;
    for (int r = 0; r <= Q; ++r) {
        for_each_height_vector(F, m, r, [&](const PolyVec& q) { all.push_back(q); });
    }
    if (all.size() > 4096) {
        throw BudgetError("pair verification over " + std::to_string(all.size()) +
                          " vectors; reduce the height bound");
    }
    // i == j is included: the pair (q, q) is the extreme dependent case (the
    // same event twice), the one the product rule visibly fails on.
    for (size_t i = 0; i < all.size(); ++i) {
        for (size_t j = i; j < all.size(); ++j) {
            Prop2Case c;
            c.q = all[i];
            c.q2 = all[j];
            c.independent = lin_indep(F, c.q, c.q2);
            c.joint = measure_pair(F, c.q, c.q2, psi, n, opts);
            c.product = measure_bq(F, c.q, psi, n, opts) * measure_bq(F, c.q2, psi, n, opts);
            c.product_rule_holds = c.joint == c.product;
            if (c.independent) {
                ++report.independent_checked;
                c.pass = c.product_rule_holds;
                report.passed += c.pass;
            } else {
                ++report.dependent_reported;
            }
            report.cases.push_back(std::move(c));
        }
    }
    return report;
}

}  // namespace ldio
