#pragma once

#include <optional>

#include "semipos/matrix.hpp"

namespace semipos::classify {

struct SemipositivityResult {
    bool semipositive = false;
    // Strictly positive x with A x > 0, when semipositive.
    std::optional<RatVector> witness;
};

struct LeftInverseResult {
    bool exists = false;
    // N >= 0 with N A = I.
    std::optional<RatMatrix> left_inverse;
};

struct InverseNonnegResult {
    bool inverse_nonnegative = false;
    // The inverse whenever A is invertible, even if it has negative entries.
    std::optional<RatMatrix> inverse;
};

// Aggregate verdicts. Fields that only make sense for square input
// (monomial, inverse_nonnegative) are empty for rectangular matrices.
struct ClassReport {
    std::size_t rows = 0;
    std::size_t cols = 0;
    bool nonnegative = false;
    bool positive = false;
    bool row_positive = false;
    std::optional<bool> monomial;
    std::optional<bool> inverse_nonnegative;
    bool semipositive = false;
    bool minimally_semipositive = false;

    std::optional<RatVector> sp_witness;
    std::optional<RatMatrix> inv;
    std::optional<RatMatrix> left_inv;
};

// The 0-column matrix is treated as not semipositive.
SemipositivityResult is_semipositive(const RatMatrix& a);

// Requires rows >= cols (DimensionError otherwise).
LeftInverseResult has_nonneg_left_inverse(const RatMatrix& a);

bool is_minimally_semipositive(const RatMatrix& a);

// Definitional oracle: semipositive, and no single-column deletion is.
bool msp_by_deletion(const RatMatrix& a);

bool is_row_positive(const RatMatrix& a);

// Requires a square matrix (DimensionError otherwise).
bool is_monomial(const RatMatrix& a);

InverseNonnegResult is_inverse_nonnegative(const RatMatrix& a);

ClassReport classify_all(const RatMatrix& a);

// Checks x > 0 and A x > 0 exactly.
bool is_semipositivity_vector(const RatMatrix& a, const RatVector& x);

}  // namespace semipos::classify
