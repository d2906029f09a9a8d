#include "ldio/experiment.hpp"

#include <cmath>
#include <map>

#include "ldio/parallel.hpp"

namespace ldio {

uint32_t RunConfig::derived_precision() const {
    const int64_t s = psi_eval(psi, q_max);
    return static_cast<uint32_t>(q_max + s);
}

FracMatrix sample_matrix(SplitMix64& rng, uint32_t m, uint32_t n, uint32_t t,
                         const FieldSpec& F) {
    const uint64_t k = F.k();
    const bool power_of_two = (k & (k - 1)) == 0;
    const uint64_t accept_below = k * (UINT64_MAX / k);  // unused when k | 2^64
    FracMatrix A = FracMatrix::zeros(m, n, t);
    for (auto& c : A.coeff) {
        uint64_t draw = rng.next();
        while (!power_of_two && draw >= accept_below) draw = rng.next();
        c = FieldElem{static_cast<uint32_t>(draw % k)};
    }
    return A;
}

std::vector<RunRecord> run(const RunConfig& config) {
    const FieldSpec& F = config.field;
    const int q_max = config.q_max;
    if (q_max < 0) throw RangeError("run requires Q_max >= 0");
    if (config.samples < 1) throw RangeError("run requires at least one sample");
    const uint32_t t = config.derived_precision();

    // Per-Q exact terms are sample-independent; compute them once.
    std::vector<Rational> phi_exact(q_max + 1), phi_paper(q_max + 1);
    for (int Q = 0; Q <= q_max; ++Q) {
        phi_exact[Q] = phi(F, config.dims, config.psi, Q, CountVariant::ExactEnumeration);
        phi_paper[Q] = phi(F, config.dims, config.psi, Q, CountVariant::PaperFormula);
    }
    const std::vector<Rational> t_sum =
        big_T_prefix(F, config.dims, config.psi, q_max, config.count.budget);

    std::vector<RunRecord> records(size_t(config.samples) * (q_max + 1));
    parallel_spans(config.samples, config.threads, [&](size_t, uint64_t begin, uint64_t end) {
        for (uint64_t sample = begin; sample < end; ++sample) {
            SplitMix64 rng = sample_stream(config.seed, static_cast<uint32_t>(sample));
            const FracMatrix A =
                sample_matrix(rng, config.dims.m, config.dims.n, t, F);
            const auto shells =
                count_solutions_by_shell(F, q_max, A, config.psi, config.count);
            uint64_t n_cumulative = 0;
            for (int Q = 0; Q <= q_max; ++Q) {
                n_cumulative += shells[Q];
                RunRecord& rec = records[sample * (q_max + 1) + Q];
                rec.seed = config.seed;
                rec.sample = static_cast<uint32_t>(sample);
                rec.Q = Q;
                rec.N = n_cumulative;
                rec.phi_exact = phi_exact[Q];
                rec.phi_paper = phi_paper[Q];
                rec.T = t_sum[Q];
                const double phi_d = rec.phi_exact.to_double();
                rec.residual = static_cast<double>(rec.N) - phi_d;
                if (phi_d > 1.0) {
                    rec.normalized = std::abs(rec.residual) /
                                     (std::sqrt(phi_d) *
                                      std::pow(std::log(phi_d), 1.5 + config.epsilon));
                }
            }
        }
    });
    return records;
}

ResidualStats residual_stats(const std::vector<RunRecord>& records, double epsilon) {
    if (records.empty()) throw ZeroInputError("residual statistics of an empty record set");
    ResidualStats stats;
    stats.epsilon = epsilon;
    std::map<int, QStats> by_q;
    std::map<int, double> sum_n, sum_sq;
    for (const RunRecord& rec : records) {
        QStats& qs = by_q[rec.Q];
        qs.Q = rec.Q;
        qs.phi_exact = rec.phi_exact;
        ++qs.samples;
        const double n = static_cast<double>(rec.N);
        sum_n[rec.Q] += n;
        sum_sq[rec.Q] += n * n;
        const double phi_d = rec.phi_exact.to_double();
        if (phi_d > std::exp(1.0)) {
            const double normalized =
                std::abs(n - phi_d) /
                (std::sqrt(phi_d) * std::pow(std::log(phi_d), 1.5 + epsilon));
            qs.any_normalized = true;
            qs.max_abs_normalized = std::max(qs.max_abs_normalized, normalized);
        }
    }
    bool strictly_increasing = true;
    double prev_max = -1.0;
    int normalized_qs = 0;
    for (auto& [q, qs] : by_q) {
        const double count = static_cast<double>(qs.samples);
        qs.mean_n = sum_n[q] / count;
        qs.variance_n =
            count > 1 ? (sum_sq[q] - count * qs.mean_n * qs.mean_n) / (count - 1) : 0.0;
        if (qs.variance_n < 0) qs.variance_n = 0;  // rounding guard
        if (qs.any_normalized) {
            stats.max_abs_normalized =
                std::max(stats.max_abs_normalized, qs.max_abs_normalized);
            if (normalized_qs > 0 && qs.max_abs_normalized <= prev_max) {
                strictly_increasing = false;
            }
            prev_max = qs.max_abs_normalized;
            ++normalized_qs;
        }
        stats.per_q.push_back(qs);
    }
    stats.per_q_max_strictly_increasing = normalized_qs >= 2 && strictly_increasing;
    return stats;
}

}  // namespace ldio
