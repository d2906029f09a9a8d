// NEON variants of the block-table scans: 16 table bytes or 128 table bits
// per step. Mirrors the AVX2 TU; exercised by the same equivalence tests
// when built on aarch64.

#include "kernels_detail.hpp"

#if defined(LDIO_HAVE_NEON_TU)

#include <arm_neon.h>

#include <bit>
#include <cstdint>

namespace ldio::kernels::detail {

uint64_t scan_bytes_neon(const ByteScanArgs& a) {
    uint64_t count = 0;
    for (size_t u = 0; u < a.padded_n; u += 16) {
        uint8x16_t alive = vceqq_u8(vld1q_u8(a.planes[0] + u), vdupq_n_u8(a.targets[0]));
        for (size_t f = 1; f < a.nf; ++f) {
            const uint8x16_t eq =
                vceqq_u8(vld1q_u8(a.planes[f] + u), vdupq_n_u8(a.targets[f]));
            alive = vandq_u8(alive, eq);
        }
        // Lanes are 0x00 or 0xFF; summing the low bit of each lane counts hits.
        count += vaddvq_u8(vandq_u8(alive, vdupq_n_u8(1)));
    }
    return count;
}

uint64_t scan_bits_neon(const BitScanArgs& a) {
    uint64_t count = 0;
    size_t w = 0;
    for (; w + 2 <= a.nwords; w += 2) {
        uint64x2_t plane = vld1q_u64(a.planes[0] + w);
        uint64x2_t alive = a.offsets[0] ? plane : veorq_u64(plane, vdupq_n_u64(~uint64_t(0)));
        for (size_t f = 1; f < a.nf; ++f) {
            plane = vld1q_u64(a.planes[f] + w);
            if (!a.offsets[f]) plane = veorq_u64(plane, vdupq_n_u64(~uint64_t(0)));
            alive = vandq_u64(alive, plane);
        }
        uint64_t lanes[2];
        vst1q_u64(lanes, alive);
        if (w + 2 == a.nwords) lanes[1] &= a.last_mask;
        count += std::popcount(lanes[0]) + std::popcount(lanes[1]);
    }
    for (; w < a.nwords; ++w) {
        uint64_t alive = a.offsets[0] ? a.planes[0][w] : ~a.planes[0][w];
        for (size_t f = 1; f < a.nf; ++f) {
            alive &= a.offsets[f] ? a.planes[f][w] : ~a.planes[f][w];
        }
        if (w + 1 == a.nwords) alive &= a.last_mask;
        count += std::popcount(alive);
    }
    return count;
}

}  // namespace ldio::kernels::detail

#endif  // LDIO_HAVE_NEON_TU
