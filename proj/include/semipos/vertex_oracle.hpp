#pragma once

#include "semipos/matrix.hpp"

namespace semipos::oracle {

// Brute-force decision of {x : x >= 0, A x >= b} != empty. The region is
// pointed (it lies in the nonnegative orthant), so it is nonempty iff one of
// its vertices exists: some n of the m + n constraints, taken as equalities,
// have a unique solution satisfying every constraint. Exponential; meant for
// m + n <= ~10. Uses its own elimination, independent of the simplex.
bool brute_force_feasible(const RatMatrix& a, const RatVector& b);

}  // namespace semipos::oracle
