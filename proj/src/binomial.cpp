#include "ktw/binomial.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

namespace ktw {

namespace {

constexpr int kTableRows = 130;
constexpr std::int64_t kOverflow = -1;

// Pascal triangle rows with an overflow sentinel; additions are checked.
std::vector<std::vector<std::int64_t>> build_table() {
    std::vector<std::vector<std::int64_t>> t(kTableRows);
    for (int n = 0; n < kTableRows; ++n) {
        t[n].assign(n + 1, 1);
        for (int k = 1; k < n; ++k) {
            std::int64_t a = t[n - 1][k - 1];
            std::int64_t b = t[n - 1][k];
            std::int64_t s;
            if (a == kOverflow || b == kOverflow || __builtin_add_overflow(a, b, &s))
                s = kOverflow;
            t[n][k] = s;
        }
    }
    return t;
}

std::int64_t binom_large(int n, int k) {
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned>(i);
        if (r > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max()))
            throw std::overflow_error("binom: value exceeds int64 range");
    }
    return static_cast<std::int64_t>(r);
}

}  // namespace

std::int64_t binom(int n, int k) {
    if (n < 0) throw std::invalid_argument("binom: negative n");
    if (k < 0 || k > n) return 0;
    static const std::vector<std::vector<std::int64_t>> table = build_table();
    if (n < kTableRows) {
        std::int64_t v = table[n][k];
        if (v == kOverflow) throw std::overflow_error("binom: value exceeds int64 range");
        return v;
    }
    return binom_large(n, k);
}

}  // namespace ktw
