#pragma once

#include <stdexcept>

namespace ktw {

// Raised when an operation would exceed its configured enumeration or memory
// budget. Exhaustive oracles refuse instead of truncating.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ktw
