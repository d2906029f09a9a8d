// AVX2 variants of the block-table scans: 32 table bytes or 256 table bits
// per step. Compiled with -mavx2 in its own TU; callers gate on the runtime
// CPU check in select_backend.

#include "kernels_detail.hpp"

#if defined(LDIO_HAVE_AVX2_TU)

#include <immintrin.h>

#include <bit>
#include <cstdint>

namespace ldio::kernels::detail {

uint64_t scan_bytes_avx2(const ByteScanArgs& a) {
    uint64_t count = 0;
    for (size_t u = 0; u < a.padded_n; u += 32) {
        __m256i alive = _mm256_cmpeq_epi8(
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.planes[0] + u)),
            _mm256_set1_epi8(static_cast<char>(a.targets[0])));
        for (size_t f = 1; f < a.nf; ++f) {
            const __m256i eq = _mm256_cmpeq_epi8(
                _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.planes[f] + u)),
                _mm256_set1_epi8(static_cast<char>(a.targets[f])));
            alive = _mm256_and_si256(alive, eq);
        }
        count += std::popcount(static_cast<uint32_t>(_mm256_movemask_epi8(alive)));
    }
    return count;
}

uint64_t scan_bits_avx2(const BitScanArgs& a) {
    uint64_t count = 0;
    size_t w = 0;
    for (; w + 4 <= a.nwords; w += 4) {
        __m256i plane = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.planes[0] + w));
        __m256i alive = a.offsets[0] ? plane
                                     : _mm256_xor_si256(plane, _mm256_set1_epi8(-1));
        for (size_t f = 1; f < a.nf; ++f) {
            plane = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.planes[f] + w));
            if (!a.offsets[f]) plane = _mm256_xor_si256(plane, _mm256_set1_epi8(-1));
            alive = _mm256_and_si256(alive, plane);
        }
        alignas(32) uint64_t lanes[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), alive);
        const bool has_tail = w + 4 == a.nwords;
        if (has_tail) lanes[3] &= a.last_mask;
        count += std::popcount(lanes[0]) + std::popcount(lanes[1]) +
                 std::popcount(lanes[2]) + std::popcount(lanes[3]);
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

#endif  // LDIO_HAVE_AVX2_TU
