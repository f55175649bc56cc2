#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace zsr {

/// Dense integer matrix, row-major.
using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct SmithForm {
    std::vector<mpz_class> divisors;  // nonzero invariant factors, d_1 | d_2 | ...
    std::size_t rank = 0;
};

/// Invariant factors of an integer matrix. Elimination pivots on an entry of
/// least absolute value and runs in 64-bit arithmetic, restarting with GMP
/// integers if any intermediate would overflow.
SmithForm smith_normal_form(const IntMatrix& m);

/// Same as above but forces big-integer arithmetic throughout.
SmithForm smith_normal_form_exact(const IntMatrix& m);

}  // namespace zsr
