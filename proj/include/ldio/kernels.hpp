// Counting kernel shared by every exhaustive enumeration in the library:
// given a system of linear forms over Z/p in D variables, count the points
// of [0,p)^D at which all forms vanish. Membership tests for solution
// counting, cylinder measures and pair intersections all reduce to this.
//
// Points are indexed 0 .. p^D - 1 with variable 0 as the fastest-moving
// base-p digit. Backends: a plain per-point reference, a block-table scalar
// kernel, and AVX2/NEON variants of the block scan selected at runtime.
// All backends return identical counts (equivalence-tested).

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ldio/errors.hpp"

namespace ldio::kernels {

struct FormSystem {
    uint32_t p = 2;          // modulus, 2 <= p <= 251
    uint32_t num_vars = 0;   // D
    uint32_t num_forms = 0;  // F
    std::vector<uint8_t> coeff;  // F x D row-major, entries reduced mod p

    uint8_t at(uint32_t form, uint32_t var) const {
        return coeff[size_t(form) * num_vars + var];
    }
    uint8_t& at(uint32_t form, uint32_t var) {
        return coeff[size_t(form) * num_vars + var];
    }

    static FormSystem make(uint32_t p, uint32_t num_vars, uint32_t num_forms) {
        if (p < 2 || p > 251) throw RangeError("form system modulus must be in 2..251");
        FormSystem fs;
        fs.p = p;
        fs.num_vars = num_vars;
        fs.num_forms = num_forms;
        fs.coeff.assign(size_t(num_forms) * num_vars, 0);
        return fs;
    }

    // p^num_vars, overflow-checked.
    uint64_t domain_size() const;
};

enum class Backend { Auto, Reference, Scalar, Avx2, Neon };

// Compiled in and usable on this machine.
bool backend_available(Backend b);
// Resolves Auto to the fastest available backend. Honors the LDIO_KERNELS
// environment variable ("reference", "scalar", "avx2", "neon") when the
// request is Auto.
Backend select_backend(Backend requested);
const char* backend_name(Backend b);

// Number of points in [begin, end) at which every form vanishes mod p.
uint64_t count_common_zeros_range(const FormSystem& fs, uint64_t begin, uint64_t end,
                                  Backend backend = Backend::Auto);

inline uint64_t count_common_zeros(const FormSystem& fs, Backend backend = Backend::Auto) {
    return count_common_zeros_range(fs, 0, fs.domain_size(), backend);
}

}  // namespace ldio::kernels
