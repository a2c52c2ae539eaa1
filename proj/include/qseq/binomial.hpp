#pragma once

// Exact binomial coefficients.  The verification formulas use central and
// near-central binomials (C(2k,k), C(2k+1,k), C(2k+2,k+1)) at small k, but
// the computation multiplies before it divides, so intermediates are kept in
// 128 bits and the result is range-checked on the way back to 64.

#include <cstdint>

#include "qseq/errors.hpp"

namespace qseq {

inline std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc *= static_cast<unsigned __int128>(n - k + i);
        acc /= static_cast<unsigned __int128>(i);  // exact: C(n-k+i, i) is integral
        if (acc > static_cast<unsigned __int128>(INT64_MAX))
            throw Overflow("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                           ") exceeds 64 bits");
    }
    return static_cast<std::int64_t>(acc);
}

}  // namespace qseq
