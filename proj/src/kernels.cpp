#include "ldio/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <cstring>

#include "kernels_detail.hpp"

namespace ldio::kernels {

namespace {

constexpr uint64_t kMaxBlock = 4096;  // low-part table entries per block

uint64_t pow_u64(uint64_t base, uint32_t e) {
    uint64_t out = 1;
    for (uint32_t i = 0; i < e; ++i) {
        if (out > (uint64_t(1) << 62) / base) {
            throw OverflowError("form-system domain exceeds 2^62 points");
        }
        out *= base;
    }
    return out;
}

bool host_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

// Plain per-point evaluation over an index range; the correctness oracle.
uint64_t count_reference(const FormSystem& fs, uint64_t begin, uint64_t end) {
    const uint32_t D = fs.num_vars;
    std::vector<uint32_t> digits(D, 0);
    uint64_t rest = begin;
    for (uint32_t v = 0; v < D; ++v) {
        digits[v] = static_cast<uint32_t>(rest % fs.p);
        rest /= fs.p;
    }
    uint64_t count = 0;
    for (uint64_t idx = begin; idx < end; ++idx) {
        bool all_zero = true;
        for (uint32_t f = 0; f < fs.num_forms && all_zero; ++f) {
            uint64_t acc = 0;
            const uint8_t* row = fs.coeff.data() + size_t(f) * D;
            for (uint32_t v = 0; v < D; ++v) acc += uint64_t(row[v]) * digits[v];
            all_zero = acc % fs.p == 0;
        }
        count += all_zero;
        // odometer step
        for (uint32_t v = 0; v < D; ++v) {
            if (++digits[v] < fs.p) break;
            digits[v] = 0;
        }
    }
    return count;
}

struct BlockPlan {
    uint32_t w = 0;           // low-part variables
    uint64_t block = 1;       // p^w
    size_t padded = 0;        // byte-plane stride (multiple of 32)
    size_t nwords = 0;        // bit-plane words
    uint64_t last_mask = ~uint64_t(0);
    bool bits = false;        // p == 2 path
    std::vector<std::vector<uint8_t>> byte_planes;
    std::vector<uint64_t> bit_planes;  // nf x nwords, flat
    std::vector<const uint8_t*> byte_ptrs;
    std::vector<const uint64_t*> bit_ptrs;
};

BlockPlan build_plan(const FormSystem& fs) {
    BlockPlan plan;
    plan.bits = fs.p == 2;
    while (plan.w < fs.num_vars && plan.block * fs.p <= kMaxBlock) {
        plan.block *= fs.p;
        ++plan.w;
    }
    const size_t nf = fs.num_forms;
    if (plan.bits) {
        plan.nwords = (plan.block + 63) / 64;
        plan.last_mask = plan.block % 64 == 0 ? ~uint64_t(0)
                                              : (uint64_t(1) << (plan.block % 64)) - 1;
        plan.bit_planes.assign(nf * plan.nwords, 0);
        for (size_t f = 0; f < nf; ++f) {
            uint64_t* words = plan.bit_planes.data() + f * plan.nwords;
            // Table over v variables is the table over v-1 variables followed
            // by a copy with the new coefficient added in.
            uint64_t size = 1;  // bits filled so far; bit 0 = value 0
            for (uint32_t v = 0; v < plan.w; ++v) {
                const bool c = fs.at(static_cast<uint32_t>(f), v) & 1;
                if (size < 64) {
                    const uint64_t mask = (uint64_t(1) << size) - 1;
                    const uint64_t lo = words[0] & mask;
                    const uint64_t hi = (c ? ~lo : lo) & mask;
                    words[0] = lo | (hi << size);
                } else {
                    const size_t wsz = size / 64;
                    for (size_t i = 0; i < wsz; ++i) {
                        words[wsz + i] = c ? ~words[i] : words[i];
                    }
                }
                size *= 2;
            }
            plan.bit_ptrs.push_back(words);
        }
    } else {
        plan.padded = (plan.block + 31) / 32 * 32;
        plan.byte_planes.assign(nf, {});
        for (size_t f = 0; f < nf; ++f) {
            auto& tbl = plan.byte_planes[f];
            tbl.assign(plan.padded, 0xFF);
            tbl[0] = 0;
            uint64_t size = 1;
            for (uint32_t v = 0; v < plan.w; ++v) {
                const uint32_t c = fs.at(static_cast<uint32_t>(f), v);
                for (uint32_t d = 1; d < fs.p; ++d) {
                    const uint8_t delta = static_cast<uint8_t>(uint64_t(c) * d % fs.p);
                    for (uint64_t u = 0; u < size; ++u) {
                        const uint32_t val = tbl[u] + delta;
                        tbl[d * size + u] = static_cast<uint8_t>(val >= fs.p ? val - fs.p : val);
                    }
                }
                size *= fs.p;
            }
            plan.byte_ptrs.push_back(tbl.data());
        }
    }
    return plan;
}

uint64_t scan_block(const FormSystem& fs, const BlockPlan& plan,
                    const std::vector<uint32_t>& high_digits, Backend backend,
                    std::vector<uint8_t>& scratch) {
    const size_t nf = fs.num_forms;
    scratch.resize(nf);
    for (size_t f = 0; f < nf; ++f) {
        uint64_t off = 0;
        const uint8_t* row = fs.coeff.data() + f * fs.num_vars;
        for (uint32_t v = plan.w; v < fs.num_vars; ++v) {
            off += uint64_t(row[v]) * high_digits[v - plan.w];
        }
        off %= fs.p;
        // Byte path matches against the negated offset; bit path keeps it.
        scratch[f] = plan.bits ? static_cast<uint8_t>(off)
                               : static_cast<uint8_t>((fs.p - off) % fs.p);
    }
    if (plan.bits) {
        detail::BitScanArgs args{plan.bit_ptrs.data(), scratch.data(), nf, plan.nwords,
                                 plan.last_mask};
#if defined(LDIO_HAVE_AVX2_TU)
        if (backend == Backend::Avx2) return detail::scan_bits_avx2(args);
#endif
#if defined(LDIO_HAVE_NEON_TU)
        if (backend == Backend::Neon) return detail::scan_bits_neon(args);
#endif
        return detail::scan_bits_scalar(args);
    }
    detail::ByteScanArgs args{plan.byte_ptrs.data(), scratch.data(), nf, plan.padded};
#if defined(LDIO_HAVE_AVX2_TU)
    if (backend == Backend::Avx2) return detail::scan_bytes_avx2(args);
#endif
#if defined(LDIO_HAVE_NEON_TU)
    if (backend == Backend::Neon) return detail::scan_bytes_neon(args);
#endif
    return detail::scan_bytes_scalar(args);
}

}  // namespace

uint64_t FormSystem::domain_size() const { return pow_u64(p, num_vars); }

bool backend_available(Backend b) {
    switch (b) {
        case Backend::Auto:
        case Backend::Reference:
        case Backend::Scalar:
            return true;
        case Backend::Avx2:
#if defined(LDIO_HAVE_AVX2_TU)
            return host_has_avx2();
#else
            return false;
#endif
        case Backend::Neon:
#if defined(LDIO_HAVE_NEON_TU)
            return true;
#else
            return false;
#endif
    }
    return false;
}

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::Auto: return "auto";
        case Backend::Reference: return "reference";
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
        case Backend::Neon: return "neon";
    }
    return "?";
}

Backend select_backend(Backend requested) {
    if (requested != Backend::Auto) {
        if (!backend_available(requested)) {
            throw RangeError(std::string("kernel backend not available: ") +
                             backend_name(requested));
        }
        return requested;
    }
    if (const char* env = std::getenv("LDIO_KERNELS")) {
        const std::string name = env;
        for (Backend b : {Backend::Reference, Backend::Scalar, Backend::Avx2, Backend::Neon}) {
            if (name == backend_name(b)) return select_backend(b);
        }
        throw RangeError("unknown LDIO_KERNELS value: " + name);
    }
    if (backend_available(Backend::Avx2)) return Backend::Avx2;
    if (backend_available(Backend::Neon)) return Backend::Neon;
    return Backend::Scalar;
}

uint64_t count_common_zeros_range(const FormSystem& fs, uint64_t begin, uint64_t end,
                                  Backend backend) {
    if (fs.p < 2 || fs.p > 251) throw RangeError("form system modulus must be in 2..251");
    const uint64_t domain = fs.domain_size();
    if (begin > end || end > domain) throw RangeError("kernel range out of bounds");
    if (begin == end) return 0;
    backend = select_backend(backend);
    if (fs.num_forms == 0 || fs.num_vars == 0) return end - begin;
    if (backend == Backend::Reference) return count_reference(fs, begin, end);

    const BlockPlan plan = build_plan(fs);
    const uint64_t B = plan.block;
    const uint64_t first_full = (begin + B - 1) / B * B;
    const uint64_t last_full = end / B * B;
    uint64_t count = 0;
    if (first_full >= last_full) {
        // Range lies inside fewer than two block boundaries.
        return count_reference(fs, begin, end);
    }
    if (begin < first_full) count += count_reference(fs, begin, first_full);
    if (last_full < end) count += count_reference(fs, last_full, end);

    std::vector<uint32_t> high_digits(fs.num_vars - plan.w, 0);
    uint64_t h = first_full / B;
    {
        uint64_t rest = h;
        for (auto& d : high_digits) {
            d = static_cast<uint32_t>(rest % fs.p);
            rest /= fs.p;
        }
    }
    std::vector<uint8_t> scratch;
    for (; h < last_full / B; ++h) {
        count += scan_block(fs, plan, high_digits, backend, scratch);
        for (auto& d : high_digits) {
            if (++d < fs.p) break;
            d = 0;
        }
    }
    return count;
}

}  // namespace ldio::kernels
