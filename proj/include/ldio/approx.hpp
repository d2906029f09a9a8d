// Membership in B_q and the solution counter N(Q, A): the number of nonzero
// q in F[X]^m with ||q||_inf <= k^Q whose fractional part <qA> has every
// component smaller than psi(||q||_inf). With psi values < 1 the nearest
// polynomial vector is unique, so counting q's counts solutions of the
// inequality system.

#pragma once

#include <cstdint>
#include <vector>

#include "ldio/counting.hpp"
#include "ldio/field.hpp"
#include "ldio/kernels.hpp"
#include "ldio/laurent.hpp"
#include "ldio/poly.hpp"
#include "ldio/psi.hpp"

namespace ldio {

// PerVector walks every q and tests membership through the Laurent-series
// arithmetic; OrbitRepresentative walks one q per scalar orbit and scales by
// k - 1; Kernel rewrites each height shell as a common-zero count of linear
// forms over Z/p and runs the block-scan kernels. All strategies agree
// (tested); Auto picks Kernel.
enum class CountStrategy { Auto, PerVector, OrbitRepresentative, Kernel };

struct CountOptions {
    CountStrategy strategy = CountStrategy::Auto;
    kernels::Backend backend = kernels::Backend::Auto;
    uint64_t budget = kDefaultCountBudget;
};

// Exact membership test A in B_q. Requires precision t >= deg(q) + s so the
// strict inequality ||<qA>|| < k^{-s} is determined by the known window;
// throws PrecisionError otherwise and ZeroInputError for q = 0.
bool bq_member(const FieldSpec& F, const PolyVec& q, const FracMatrix& A, const Psi& psi);

// Solutions per height shell r = 0..Q; N(Q, A) is the sum of the first Q+1
// entries. Requires precision t >= Q + s(Q).
std::vector<uint64_t> count_solutions_by_shell(const FieldSpec& F, int Q,
                                               const FracMatrix& A, const Psi& psi,
                                               const CountOptions& opts = {});

uint64_t count_solutions(const FieldSpec& F, int Q, const FracMatrix& A, const Psi& psi,
                         const CountOptions& opts = {});

// The membership conditions "first s fractional coefficients of every
// component of <qA> vanish" as linear forms over Z/p in the flattened
// coefficients of q, for all q with deg <= box_deg (box_deg = -1 gives the
// zero-dimensional system of the single point q = 0). Shared by the Kernel
// counting strategy; exposed for tests.
kernels::FormSystem membership_forms_in_q(const FieldSpec& F, const FracMatrix& A,
                                          int box_deg, int64_t s);

}  // namespace ldio
