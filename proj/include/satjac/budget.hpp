#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "satjac/errors.hpp"

namespace satjac {

/// Resource guard for basis computations. Exceeding a cap raises
/// BudgetExceededError; it never degrades to a wrong answer.
struct Budget {
    long long max_spairs = 500000;
    int max_degree = 256;
    bool unbounded = false;
    /// Optional wall-clock cutoff for explicitly time-boxed computations.
    std::optional<std::chrono::steady_clock::time_point> deadline;

    void check_spairs(long long processed) const {
        if (deadline && std::chrono::steady_clock::now() > *deadline)
            throw BudgetExceededError("wall-clock budget exceeded");
        if (!unbounded && processed > max_spairs)
            throw BudgetExceededError("S-pair budget exceeded (" + std::to_string(max_spairs) + ")");
    }

    void check_degree(int degree) const {
        if (!unbounded && degree > max_degree)
            throw BudgetExceededError("degree budget exceeded (" + std::to_string(max_degree) +
                                      ", reached " + std::to_string(degree) + ")");
    }
};

}  // namespace satjac
