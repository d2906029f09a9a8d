// Internal block-scan entry points implemented per backend TU.

#pragma once

#include <cstddef>
#include <cstdint>

namespace ldio::kernels::detail {

// Byte-plane scan: planes[f][u] holds the table value of form f at low-part
// u, padded to padded_n with 0xFF (which never equals a target < p). Returns
// the number of u < padded_n with planes[f][u] == targets[f] for every f.
struct ByteScanArgs {
    const uint8_t* const* planes;
    const uint8_t* targets;
    size_t nf;        // >= 1
    size_t padded_n;  // multiple of 32
};

// Bit-plane scan (p = 2): bit u of planes[f] is the table value of form f.
// Form f vanishes at u iff that bit equals offsets[f]. last_mask clears the
// slack bits of the final word.
struct BitScanArgs {
    const uint64_t* const* planes;
    const uint8_t* offsets;
    size_t nf;  // >= 1
    size_t nwords;
    uint64_t last_mask;
};

uint64_t scan_bytes_scalar(const ByteScanArgs& a);
uint64_t scan_bits_scalar(const BitScanArgs& a);

#if (defined(__x86_64__) || defined(_M_X64)) && !defined(LDIO_DISABLE_AVX2)
#define LDIO_HAVE_AVX2_TU 1
uint64_t scan_bytes_avx2(const ByteScanArgs& a);
uint64_t scan_bits_avx2(const BitScanArgs& a);
#endif

#if defined(__aarch64__)
#define LDIO_HAVE_NEON_TU 1
uint64_t scan_bytes_neon(const ByteScanArgs& a);
uint64_t scan_bits_neon(const BitScanArgs& a);
#endif

}  // namespace ldio::kernels::detail
