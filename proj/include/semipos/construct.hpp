#pragma once

#include <string>
#include <vector>

#include "semipos/matrix.hpp"

namespace semipos::construct {

// Which row rule fired in build_np, on the normalized coordinates.
// step1 in {a,b}; step2[k] in {a..i} for normalized row k+1; step3 in {a..e}.
struct NpCaseTrace {
    char step1 = '?';
    std::vector<char> step2;
    char step3 = '?';
    Permutation v_perm;  // (P v)[i] = v[v_perm[i]]
    Permutation w_perm;  // (Q w)[i] = w[w_perm[i]]
};

struct NpConstruction {
    RatMatrix b;
    NpCaseTrace trace;
};

struct PosConstruction {
    RatMatrix b;
    // Coordinate order placing the positive entries of v first; B permuted
    // by it on both sides is lower triangular.
    Permutation order;
    std::size_t positive_count = 0;
};

struct MixedSignResult {
    RatVector v;
    // True when v came from combining a nonpositive u and a nonnegative w.
    bool combined = false;
};

// Nonnegative invertible B with B v = w, for v with entries of both signs
// and w != 0. Throws InvalidInputError on precondition failure.
NpConstruction build_np(const RatVector& v, const RatVector& w);

// Nonnegative invertible B with B v = w, for v >= 0, v != 0 and w > 0.
PosConstruction build_pos(const RatVector& v, const RatVector& w);

// Nonnegative m x n B of rank m with B v = w, where n = dim v > m = dim w.
// Accepts either a mixed v (any w) or v >= 0, v != 0 with w > 0.
RatMatrix build_rect(const RatVector& v, const RatVector& w);

// For invertible X with neither X nor -X inverse nonnegative: v with
// entries of both signs and X v >= 0.
MixedSignResult mixed_sign_vector(const RatMatrix& x);

// Lower triangular check used for build_pos postconditions.
bool is_lower_triangular(const RatMatrix& a);

}  // namespace semipos::construct
