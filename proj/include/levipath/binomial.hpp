#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace levipath {

/// Exact binomial coefficient C(n, r) as a 64-bit integer.
/// Convention: C(n, r) = 0 for r < 0 or r > n.
/// Throws std::overflow_error if the value does not fit in int64
/// (values fit for all n <= 60; larger n may still work for small r).
inline std::int64_t binomial(int n, int r) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (r < 0 || r > n) return 0;
    if (r > n - r) r = n - r;
    __int128 acc = 1;
    for (int i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;  // exact: C(n-r+i, i) is an integer
        if (acc > std::numeric_limits<std::int64_t>::max())
            throw std::overflow_error("binomial: value exceeds 64 bits");
    }
    return static_cast<std::int64_t>(acc);
}

}  // namespace levipath
