#include "semipos/classify.hpp"

#include <stdexcept>
#include <string>

#include "semipos/lp.hpp"

namespace semipos::classify {

bool is_semipositivity_vector(const RatMatrix& a, const RatVector& x) {
    return x.dim() == a.cols() && x.is_positive() && (a * x).is_positive();
}

SemipositivityResult is_semipositive(const RatMatrix& a) {
    if (a.cols() == 0 || a.rows() == 0) return {};

    // Ax > 0 has a solution x >= 0 iff Ax >= e does (scale x).
    const auto res = lp::feasible_nonneg(a, RatVector::ones(a.rows()));
    if (!res.feasible()) return {};

    // Perturb x >= 0 into x' = x + delta*e > 0. With S the largest absolute
    // row sum, A x' >= e - delta*S*e > 0 for delta = 1 / (2 (1 + S)).
    Rational s;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Rational row_sum;
        for (std::size_t j = 0; j < a.cols(); ++j) row_sum += a(i, j).abs();
        s = max(s, row_sum);
    }
    const Rational delta = Rational(1) / (Rational(2) * (Rational(1) + s));
    RatVector x = *res.witness + delta * RatVector::ones(a.cols());
    if (!is_semipositivity_vector(a, x))
        throw std::logic_error("is_semipositive: perturbed witness failed re-verification");
    return {true, std::move(x)};
}

LeftInverseResult has_nonneg_left_inverse(const RatMatrix& a) {
    if (a.rows() < a.cols())
        throw DimensionError("has_nonneg_left_inverse: needs rows >= cols, got " +
                             std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    const std::size_t n = a.cols();
    const RatMatrix at = a.transpose();

    // Row j of N solves A^T y = e_j with y >= 0.
    std::vector<RatVector> rows;
    rows.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        auto res = lp::equality_feasible_nonneg(at, RatVector::unit(n, j));
        if (!res.feasible()) return {};
        rows.push_back(*std::move(res.witness));
    }
    RatMatrix left = RatMatrix::from_rows(rows);
    if (!left.is_nonnegative() || left * a != RatMatrix::identity(n))
        throw std::logic_error("has_nonneg_left_inverse: N failed re-verification");
    return {true, std::move(left)};
}

bool msp_by_deletion(const RatMatrix& a) {
    if (!is_semipositive(a).semipositive) return false;
    // Adding zero-weight columns back keeps a submatrix semipositive, so
    // single-column deletions cover every column-deleted submatrix.
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (is_semipositive(delete_column(a, j)).semipositive) return false;
    return true;
}

bool is_minimally_semipositive(const RatMatrix& a) {
    if (a.rows() < a.cols()) return msp_by_deletion(a);
    return is_semipositive(a).semipositive && has_nonneg_left_inverse(a).exists;
}

bool is_row_positive(const RatMatrix& a) {
    if (!a.is_nonnegative()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (a.row(i).is_zero()) return false;
    return true;
}

bool is_monomial(const RatMatrix& a) {
    if (!a.is_square())
        throw DimensionError("is_monomial: matrix is " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + ", expected square");
    if (!a.is_nonnegative()) return false;
    const std::size_t n = a.rows();
    std::vector<std::size_t> row_count(n, 0), col_count(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!a(i, j).is_zero()) {
                ++row_count[i];
                ++col_count[j];
            }
    for (std::size_t k = 0; k < n; ++k)
        if (row_count[k] != 1 || col_count[k] != 1) return false;
    return true;
}

InverseNonnegResult is_inverse_nonnegative(const RatMatrix& a) {
    if (!a.is_square())
        throw DimensionError("is_inverse_nonnegative: matrix is " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + ", expected square");
    auto inv = try_inverse(a);
    if (!inv) return {};
    const bool nonneg = inv->is_nonnegative();
    return {nonneg, std::move(inv)};
}

ClassReport classify_all(const RatMatrix& a) {
    ClassReport r;
    r.rows = a.rows();
    r.cols = a.cols();
    r.nonnegative = a.is_nonnegative();
    r.positive = a.is_positive();
    r.row_positive = is_row_positive(a);

    auto sp = is_semipositive(a);
    r.semipositive = sp.semipositive;
    r.sp_witness = std::move(sp.witness);

    if (a.is_square()) {
        r.monomial = is_monomial(a);
        auto inn = is_inverse_nonnegative(a);
        r.inverse_nonnegative = inn.inverse_nonnegative;
        r.inv = std::move(inn.inverse);
    }
    if (a.rows() >= a.cols()) {
        auto li = has_nonneg_left_inverse(a);
        r.left_inv = std::move(li.left_inverse);
        r.minimally_semipositive = r.semipositive && li.exists;
    } else {
        r.minimally_semipositive = msp_by_deletion(a);
    }
    return r;
}

}  // namespace semipos::classify
