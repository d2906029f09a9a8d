// Block-table scans, portable scalar variants. The bit path is word-parallel
// (64 points per step); the byte path walks the padded tables directly.

#include "kernels_detail.hpp"

#include <bit>

namespace ldio::kernels::detail {

uint64_t scan_bytes_scalar(const ByteScanArgs& a) {
    uint64_t count = 0;
    for (size_t u = 0; u < a.padded_n; ++u) {
        bool alive = a.planes[0][u] == a.targets[0];
        for (size_t f = 1; alive && f < a.nf; ++f) {
            alive = a.planes[f][u] == a.targets[f];
        }
        count += alive;
    }
    return count;
}

uint64_t scan_bits_scalar(const BitScanArgs& a) {
    uint64_t count = 0;
    for (size_t w = 0; w < a.nwords; ++w) {
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
