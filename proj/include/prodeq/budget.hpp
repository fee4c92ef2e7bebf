#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace prodeq {

// Thrown when a requested table would exceed the configured memory budget.
// The CLI maps it to exit code 3.
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& what, std::uint64_t requested_bytes, std::uint64_t budget_bytes)
        : std::runtime_error(what + ": needs " + std::to_string(requested_bytes) +
                             " bytes, budget is " + std::to_string(budget_bytes)),
          requested(requested_bytes),
          budget(budget_bytes) {}
    std::uint64_t requested;
    std::uint64_t budget;
};

struct Budget {
    // limit on any single table allocation; default 1 GiB
    std::uint64_t max_bytes = std::uint64_t(1) << 30;

    void check(unsigned __int128 bytes, const char* what) const {
        if (bytes > max_bytes)
            throw BudgetError(what,
                              bytes > ~std::uint64_t(0) ? ~std::uint64_t(0)
                                                        : static_cast<std::uint64_t>(bytes),
                              max_bytes);
    }
};

}  // namespace prodeq
