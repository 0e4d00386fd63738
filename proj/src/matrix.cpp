#include "semipos/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <string>

namespace semipos {

namespace {

void require_same_dim(const RatVector& a, const RatVector& b, const char* what) {
    if (a.dim() != b.dim())
        throw DimensionError(std::string(what) + ": dimension " + std::to_string(a.dim()) +
                             " vs " + std::to_string(b.dim()));
}

void require_same_shape(const RatMatrix& a, const RatMatrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError(std::string(what) + ": shape mismatch");
}

void require_square(const RatMatrix& a, const char* what) {
    if (!a.is_square())
        throw DimensionError(std::string(what) + ": matrix is " + std::to_string(a.rows()) +
                             "x" + std::to_string(a.cols()) + ", expected square");
}

void swap_rows(RatMatrix& m, std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r1, j), m(r2, j));
}

struct BareissResult {
    RatMatrix reduced;
    std::size_t rank = 0;
    int swap_sign = 1;
};

// Fraction-free forward elimination restricted to the first `pivot_cols` columns.
// Rows below a pivot are updated as (p*a_ij - a_ic*a_rj) / prev, which keeps
// integer inputs integral and bounds fraction growth for rational ones.
BareissResult bareiss(RatMatrix m, std::size_t pivot_cols) {
    BareissResult out;
    Rational prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_cols && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r) {
            swap_rows(m, p, r);
            out.swap_sign = -out.swap_sign;
        }
        const Rational pivot = m(r, c);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            const Rational factor = m(i, c);
            for (std::size_t j = c + 1; j < m.cols(); ++j)
                m(i, j) = (pivot * m(i, j) - factor * m(r, j)) / prev;
            m(i, c) = Rational(0);
        }
        prev = pivot;
        ++r;
    }
    out.rank = r;
    out.reduced = std::move(m);
    return out;
}

}  // namespace

// ---------------------------------------------------------------- RatVector

RatVector RatVector::unit(std::size_t dim, std::size_t i) {
    if (i >= dim) throw DimensionError("unit vector index out of range");
    RatVector v(dim);
    v[i] = Rational(1);
    return v;
}

bool RatVector::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& x) { return x.is_zero(); });
}
bool RatVector::is_nonnegative() const {
    return std::none_of(entries_.begin(), entries_.end(), [](const Rational& x) { return x.is_negative(); });
}
bool RatVector::is_positive() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& x) { return x.is_positive(); });
}
bool RatVector::is_nonpositive() const {
    return std::none_of(entries_.begin(), entries_.end(), [](const Rational& x) { return x.is_positive(); });
}

RatVector RatVector::operator-() const {
    RatVector out(*this);
    for (auto& x : out.entries_) x = -x;
    return out;
}

RatVector& RatVector::operator+=(const RatVector& o) {
    require_same_dim(*this, o, "vector add");
    for (std::size_t i = 0; i < dim(); ++i) entries_[i] += o[i];
    return *this;
}

RatVector& RatVector::operator-=(const RatVector& o) {
    require_same_dim(*this, o, "vector subtract");
    for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= o[i];
    return *this;
}

RatVector& RatVector::operator*=(const Rational& c) {
    for (auto& x : entries_) x *= c;
    return *this;
}

Rational dot(const RatVector& a, const RatVector& b) {
    require_same_dim(a, b, "dot");
    Rational s;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

RatVector concat(const RatVector& top, const RatVector& bottom) {
    std::vector<Rational> xs(top.begin(), top.end());
    xs.insert(xs.end(), bottom.begin(), bottom.end());
    return RatVector(std::move(xs));
}

// ---------------------------------------------------------------- RatMatrix

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
    if (rows.empty()) return {};
    RatMatrix m(rows.size(), rows.front().dim());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].dim() != m.cols()) throw DimensionError("from_rows: ragged rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& cols) {
    return from_rows(cols).transpose();
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

RatMatrix RatMatrix::filled(std::size_t rows, std::size_t cols, const Rational& value) {
    RatMatrix m(rows, cols);
    std::fill(m.data_.begin(), m.data_.end(), value);
    return m;
}

RatMatrix RatMatrix::diagonal(const RatVector& d) {
    RatMatrix m(d.dim(), d.dim());
    for (std::size_t i = 0; i < d.dim(); ++i) m(i, i) = d[i];
    return m;
}

RatVector RatMatrix::row(std::size_t i) const {
    return RatVector(std::vector<Rational>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                           data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)));
}

RatVector RatMatrix::col(std::size_t j) const {
    RatVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

bool RatMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}
bool RatMatrix::is_nonnegative() const {
    return std::none_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_negative(); });
}
bool RatMatrix::is_positive() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_positive(); });
}
bool RatMatrix::is_nonpositive() const {
    return std::none_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_positive(); });
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RatMatrix RatMatrix::operator-() const {
    RatMatrix out(*this);
    for (auto& x : out.data_) x = -x;
    return out;
}

RatMatrix& RatMatrix::operator*=(const Rational& c) {
    for (auto& x : data_) x *= c;
    return *this;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
    require_same_shape(*this, o, "matrix add");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
    require_same_shape(*this, o, "matrix subtract");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionError("matrix multiply: " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " times " + std::to_string(b.rows()) +
                             "x" + std::to_string(b.cols()));
    RatMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

RatVector operator*(const RatMatrix& a, const RatVector& x) {
    if (a.cols() != x.dim())
        throw DimensionError("matrix-vector apply: " + std::to_string(a.cols()) + " columns vs dim " +
                             std::to_string(x.dim()));
    RatVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

std::ostream& operator<<(std::ostream& os, const RatVector& v) {
    os << '(';
    for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? ", " : "") << v[i];
    return os << ')';
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", " : "") << '[';
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
        os << ']';
    }
    return os << ']';
}

// ---------------------------------------------------------------- structure

bool is_permutation(const Permutation& perm) {
    std::vector<bool> seen(perm.size(), false);
    for (auto p : perm) {
        if (p >= perm.size() || seen[p]) return false;
        seen[p] = true;
    }
    return true;
}

RatMatrix permutation_matrix(const Permutation& perm) {
    if (!is_permutation(perm)) throw InvalidInputError("not a permutation");
    RatMatrix p(perm.size(), perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) p(i, perm[i]) = Rational(1);
    return p;
}

Permutation inverse_permutation(const Permutation& perm) {
    Permutation inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
    return inv;
}

RatVector permute(const Permutation& perm, const RatVector& x) {
    if (perm.size() != x.dim()) throw DimensionError("permute: size mismatch");
    RatVector y(x.dim());
    for (std::size_t i = 0; i < perm.size(); ++i) y[i] = x[perm[i]];
    return y;
}

RatMatrix hstack(const RatMatrix& left, const RatMatrix& right) {
    if (left.rows() != right.rows()) throw DimensionError("hstack: row count mismatch");
    RatMatrix m(left.rows(), left.cols() + right.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < left.cols(); ++j) m(i, j) = left(i, j);
        for (std::size_t j = 0; j < right.cols(); ++j) m(i, left.cols() + j) = right(i, j);
    }
    return m;
}

RatMatrix vstack(const RatMatrix& top, const RatMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw DimensionError("vstack: column count mismatch");
    RatMatrix m(top.rows() + bottom.rows(), top.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        for (std::size_t i = 0; i < top.rows(); ++i) m(i, j) = top(i, j);
        for (std::size_t i = 0; i < bottom.rows(); ++i) m(top.rows() + i, j) = bottom(i, j);
    }
    return m;
}

RatMatrix submatrix(const RatMatrix& a, std::span<const std::size_t> rows,
                    std::span<const std::size_t> cols) {
    RatMatrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (rows[i] >= a.rows() || cols[j] >= a.cols())
                throw DimensionError("submatrix index out of range");
            m(i, j) = a(rows[i], cols[j]);
        }
    return m;
}

RatMatrix top_rows(const RatMatrix& a, std::size_t count) {
    if (count > a.rows()) throw DimensionError("top_rows: not enough rows");
    std::vector<std::size_t> rows(count), cols(a.cols());
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    return submatrix(a, rows, cols);
}

RatMatrix delete_column(const RatMatrix& a, std::size_t j) {
    if (j >= a.cols()) throw DimensionError("delete_column: index out of range");
    std::vector<std::size_t> rows(a.rows()), cols;
    std::iota(rows.begin(), rows.end(), 0);
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (c != j) cols.push_back(c);
    RatMatrix m = submatrix(a, rows, cols);
    return m;
}

RatVector vectorize(const RatMatrix& a) {
    RatVector v(a.rows() * a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) v[i * a.cols() + j] = a(i, j);
    return v;
}

SignProfile sign_profile(const RatVector& v) {
    SignProfile s;
    for (const auto& x : v) {
        const int sg = x.sign();
        s.has_positive |= sg > 0;
        s.has_negative |= sg < 0;
        s.has_zero |= sg == 0;
    }
    return s;
}

// ---------------------------------------------------------------- elimination

Rational det(const RatMatrix& a) {
    require_square(a, "det");
    if (a.rows() == 0) return Rational(1);
    const auto br = bareiss(a, a.cols());
    if (br.rank < a.rows()) return Rational(0);
    // The last Bareiss pivot is the determinant up to row swaps.
    const std::size_t n = a.rows();
    return br.swap_sign > 0 ? br.reduced(n - 1, n - 1) : -br.reduced(n - 1, n - 1);
}

std::size_t rank(const RatMatrix& a) {
    return bareiss(a, a.cols()).rank;
}

std::optional<RatMatrix> try_inverse(const RatMatrix& a) {
    require_square(a, "inverse");
    const std::size_t n = a.rows();
    RatMatrix m = hstack(a, RatMatrix::identity(n));

    // Fraction-free Gauss-Jordan: every row other than the pivot row is
    // eliminated, leaving a diagonal left block.
    Rational prev(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return std::nullopt;
        swap_rows(m, p, c);
        const Rational pivot = m(c, c);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c) continue;
            const Rational factor = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if (j == c) continue;
                m(i, j) = (pivot * m(i, j) - factor * m(c, j)) / prev;
            }
            m(i, c) = Rational(0);
        }
        prev = pivot;
    }

    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Rational d = m(i, i);
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = m(i, n + j) / d;
    }
    if (a * inv != RatMatrix::identity(n))
        throw std::logic_error("inverse: A * A^-1 != I after elimination");
    return inv;
}

RatMatrix inverse(const RatMatrix& a) {
    auto inv = try_inverse(a);
    if (!inv) throw SingularMatrixError("matrix is singular");
    return *std::move(inv);
}

std::optional<RatVector> null_vector(const RatMatrix& a) {
    // Reduced row echelon form over the rationals.
    RatMatrix m(a);
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        swap_rows(m, p, r);
        const Rational inv_pivot = m(r, c).reciprocal();
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv_pivot;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivot_col) is_pivot[c] = true;
    const auto free_it = std::find(is_pivot.begin(), is_pivot.end(), false);
    if (free_it == is_pivot.end()) return std::nullopt;
    const auto free = static_cast<std::size_t>(free_it - is_pivot.begin());

    RatVector x(m.cols());
    x[free] = Rational(1);
    for (std::size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = -m(k, free);
    if (!(a * x).is_zero()) throw std::logic_error("null_vector: A x != 0");
    return x;
}

}  // namespace semipos
