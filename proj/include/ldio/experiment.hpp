// Seeded uniform sampling of matrices from I^{mn} and the Monte Carlo run:
// per sample and per Q, the observed N(Q, A) next to the exact main term,
// with residuals normalized by sqrt(Phi) ln^{3/2+eps}(Phi).

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ldio/approx.hpp"
#include "ldio/counting.hpp"
#include "ldio/field.hpp"
#include "ldio/laurent.hpp"
#include "ldio/psi.hpp"
#include "ldio/rational.hpp"
#include "ldio/rng.hpp"

namespace ldio {

struct RunConfig {
    FieldSpec field;
    Dims dims;
    Psi psi;
    int q_max = 0;
    uint32_t samples = 1;
    uint64_t seed = 0;
    double epsilon = 0.1;
    CountOptions count;
    uint32_t threads = 1;

    // Derived, never supplied: the precision that makes every membership
    // test for heights <= k^q_max exact.
    uint32_t derived_precision() const;
};

struct RunRecord {
    uint64_t seed = 0;
    uint32_t sample = 0;
    int Q = 0;
    uint64_t N = 0;
    Rational phi_exact;
    Rational phi_paper;
    Rational T;
    double residual = 0.0;  // N - phi_exact
    // |residual| / (sqrt(phi_exact) * ln(phi_exact)^{3/2+eps}); only defined
    // where phi_exact > 1 keeps the logarithm positive.
    std::optional<double> normalized;
};

// Draws m*n*t coefficients i.i.d. uniform over the field: one 64-bit draw
// per coefficient, rejected while >= k * floor(2^64 / k), then reduced mod k
// (the residue is the packed polynomial-basis element for l > 1). Cells are
// filled row-major, each cell depth-first.
FracMatrix sample_matrix(SplitMix64& rng, uint32_t m, uint32_t n, uint32_t t,
                         const FieldSpec& F);

// One record per (sample, Q). N accumulates over height shells, so the
// whole Q sweep costs one enumeration per sample. Samples are independent
// streams merged in sample order; thread count never changes the output.
std::vector<RunRecord> run(const RunConfig& config);

struct QStats {
    int Q = 0;
    uint64_t samples = 0;
    double mean_n = 0.0;
    double variance_n = 0.0;  // sample variance
    Rational phi_exact;
    double max_abs_normalized = 0.0;  // over records with phi_exact > e
    bool any_normalized = false;
};

struct ResidualStats {
    double epsilon = 0.0;
    std::vector<QStats> per_q;
    double max_abs_normalized = 0.0;
    // True when the per-Q maxima strictly increase across the whole range
    // (the blow-up pattern the error term rules out).
    bool per_q_max_strictly_increasing = false;
};

// Recomputes normalizations from (N, phi_exact) at the given epsilon. The
// normalized aggregates skip records with phi_exact <= e, where the
// normalization is singular. Throws ZeroInputError for an empty input.
ResidualStats residual_stats(const std::vector<RunRecord>& records, double epsilon);

}  // namespace ldio
