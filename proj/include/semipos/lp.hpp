#pragma once

#include <optional>

#include "semipos/matrix.hpp"

namespace semipos::lp {

enum class Status { Feasible, Infeasible };

struct FeasibilityResult {
    Status status = Status::Infeasible;
    // Present iff Feasible; satisfies its system exactly.
    std::optional<RatVector> witness;

    bool feasible() const { return status == Status::Feasible; }
};

// Decides whether {x : x >= 0, A x >= b} is nonempty.
FeasibilityResult feasible_nonneg(const RatMatrix& a, const RatVector& b);

// Decides whether {y : y >= 0, M y = c} is nonempty.
FeasibilityResult equality_feasible_nonneg(const RatMatrix& m, const RatVector& c);

// Phase-1 simplex on {z : z >= 0, A z = b} with Bland's rule. Returns a
// feasible point or nullopt. Exposed for tests that exercise degenerate
// tableaus directly.
std::optional<RatVector> phase_one(const RatMatrix& a, const RatVector& b,
                                   std::size_t* pivot_count = nullptr);

}  // namespace semipos::lp
