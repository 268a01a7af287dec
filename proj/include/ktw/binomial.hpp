#pragma once

#include <cstdint>

namespace ktw {

// Exact binomial coefficient in 64-bit integers. Returns 0 for k < 0 or
// k > n; throws std::invalid_argument for n < 0 and std::overflow_error when
// the value does not fit in int64_t. No silent wraparound anywhere.
std::int64_t binom(int n, int k);

}  // namespace ktw
