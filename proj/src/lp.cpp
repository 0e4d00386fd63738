#include "semipos/lp.hpp"

#include <stdexcept>
#include <string>

namespace semipos::lp {

namespace {

void pivot(RatMatrix& t, RatVector& reduced, Rational& objective, std::size_t r, std::size_t c) {
    const std::size_t width = t.cols();
    const Rational inv = t(r, c).reciprocal();
    for (std::size_t j = 0; j < width; ++j) t(r, j) *= inv;
    for (std::size_t i = 0; i < t.rows(); ++i) {
        if (i == r || t(i, c).is_zero()) continue;
        const Rational f = t(i, c);
        for (std::size_t j = 0; j < width; ++j)
            if (!t(r, j).is_zero()) t(i, j) -= f * t(r, j);
    }
    if (!reduced[c].is_zero()) {
        const Rational f = reduced[c];
        for (std::size_t j = 0; j + 1 < width; ++j) reduced[j] -= f * t(r, j);
        objective += f * t(r, width - 1);
    }
}

}  // namespace

std::optional<RatVector> phase_one(const RatMatrix& a, const RatVector& b, std::size_t* pivot_count) {
    if (a.rows() != b.dim())
        throw DimensionError("phase_one: " + std::to_string(a.rows()) + " rows vs rhs dim " +
                             std::to_string(b.dim()));
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    const std::size_t total = n + m;  // structural + one artificial per row
    const std::size_t rhs = total;

    // Tableau [A | I | b] with every row oriented so b >= 0.
    RatMatrix t(m, total + 1);
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = b[i].is_negative();
        for (std::size_t j = 0; j < n; ++j) t(i, j) = flip ? -a(i, j) : a(i, j);
        t(i, n + i) = Rational(1);
        t(i, rhs) = flip ? -b[i] : b[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    // Phase-1 objective: minimize the sum of artificials. With the
    // artificials basic, reduced costs are minus the column sums.
    RatVector reduced(total);
    Rational objective;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) reduced[j] -= t(i, j);
        objective += t(i, rhs);
    }

    std::size_t pivots = 0;
    while (!objective.is_zero()) {
        // Bland: lowest-index improving column.
        std::size_t enter = total;
        for (std::size_t j = 0; j < total; ++j)
            if (reduced[j].is_negative()) {
                enter = j;
                break;
            }
        if (enter == total) break;

        // Min-ratio test; ties go to the lowest basic variable index.
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (!t(i, enter).is_positive()) continue;
            const Rational ratio = t(i, rhs) / t(i, enter);
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) throw std::logic_error("phase_one: unbounded phase-1 objective");

        pivot(t, reduced, objective, leave, enter);
        basis[leave] = enter;
        ++pivots;
    }
    if (pivot_count) *pivot_count = pivots;
    if (!objective.is_zero()) return std::nullopt;

    RatVector z(n);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) z[basis[i]] = t(i, rhs);
    return z;
}

FeasibilityResult feasible_nonneg(const RatMatrix& a, const RatVector& b) {
    if (a.rows() != b.dim())
        throw DimensionError("feasible_nonneg: " + std::to_string(a.rows()) + " rows vs rhs dim " +
                             std::to_string(b.dim()));
    // A x - s = b with surplus s >= 0.
    const RatMatrix std_form = hstack(a, -RatMatrix::identity(a.rows()));
    auto z = phase_one(std_form, b);
    if (!z) return {Status::Infeasible, std::nullopt};

    RatVector x(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) x[j] = (*z)[j];
    const RatVector ax = a * x;
    if (!x.is_nonnegative() || !(ax - b).is_nonnegative())
        throw std::logic_error("feasible_nonneg: witness failed re-verification");
    return {Status::Feasible, std::move(x)};
}

FeasibilityResult equality_feasible_nonneg(const RatMatrix& m, const RatVector& c) {
    if (m.rows() != c.dim())
        throw DimensionError("equality_feasible_nonneg: " + std::to_string(m.rows()) +
                             " rows vs rhs dim " + std::to_string(c.dim()));
    auto y = phase_one(m, c);
    if (!y) return {Status::Infeasible, std::nullopt};
    if (!y->is_nonnegative() || m * *y != c)
        throw std::logic_error("equality_feasible_nonneg: witness failed re-verification");
    return {Status::Feasible, std::move(y)};
}

}  // namespace semipos::lp
