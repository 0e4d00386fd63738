#include "semipos/vertex_oracle.hpp"

#include <optional>

namespace semipos::oracle {

namespace {

// Unique solution of the square system, or nullopt if singular.
std::optional<RatVector> solve_unique(std::vector<std::vector<Rational>> rows) {
    const std::size_t n = rows.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && rows[p][c].is_zero()) ++p;
        if (p == n) return std::nullopt;
        std::swap(rows[p], rows[c]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || rows[i][c].is_zero()) continue;
            const Rational f = rows[i][c] / rows[c][c];
            for (std::size_t j = c; j <= n; ++j) rows[i][j] -= f * rows[c][j];
        }
    }
    RatVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rows[i][n] / rows[i][i];
    return x;
}

}  // namespace

bool brute_force_feasible(const RatMatrix& a, const RatVector& b) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (b.dim() != m) throw DimensionError("brute_force_feasible: rhs dimension mismatch");

    // Constraint k < m is row k of A (a_k x >= b_k); k >= m is x_{k-m} >= 0.
    const auto coeff = [&](std::size_t k, std::size_t j) -> Rational {
        if (k < m) return a(k, j);
        return Rational(k - m == j ? 1 : 0);
    };
    const auto rhs = [&](std::size_t k) -> Rational { return k < m ? b[k] : Rational(0); };
    const auto satisfies = [&](const RatVector& x) {
        for (std::size_t k = 0; k < m + n; ++k) {
            Rational s;
            for (std::size_t j = 0; j < n; ++j) s += coeff(k, j) * x[j];
            if (s < rhs(k)) return false;
        }
        return true;
    };

    if (n == 0) return b.is_nonpositive();

    // Walk all n-subsets of the m + n constraints.
    const std::size_t total = m + n;
    std::vector<std::size_t> pick(n);
    for (std::size_t i = 0; i < n; ++i) pick[i] = i;
    while (true) {
        std::vector<std::vector<Rational>> sys(n, std::vector<Rational>(n + 1));
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t j = 0; j < n; ++j) sys[r][j] = coeff(pick[r], j);
            sys[r][n] = rhs(pick[r]);
        }
        if (auto x = solve_unique(std::move(sys)); x && satisfies(*x)) return true;

        std::size_t i = n;
        while (i > 0 && pick[i - 1] == total - n + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t k = i; k < n; ++k) pick[k] = pick[k - 1] + 1;
    }
    return false;
}

}  // namespace semipos::oracle
