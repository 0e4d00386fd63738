#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "semipos/errors.hpp"
#include "semipos/rational.hpp"

namespace semipos {

class RatVector {
public:
    RatVector() = default;
    explicit RatVector(std::size_t dim) : entries_(dim) {}
    RatVector(std::size_t dim, const Rational& fill) : entries_(dim, fill) {}
    RatVector(std::initializer_list<Rational> xs) : entries_(xs) {}
    explicit RatVector(std::vector<Rational> xs) : entries_(std::move(xs)) {}

    // All-ones vector e.
    static RatVector ones(std::size_t dim) { return RatVector(dim, Rational(1)); }
    // Standard basis vector e_i (0-based).
    static RatVector unit(std::size_t dim, std::size_t i);

    std::size_t dim() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    Rational& operator[](std::size_t i) { return entries_[i]; }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }

    std::span<const Rational> entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    bool is_zero() const;
    bool is_nonnegative() const;
    bool is_positive() const;
    bool is_nonpositive() const;

    RatVector operator-() const;
    RatVector& operator+=(const RatVector& o);
    RatVector& operator-=(const RatVector& o);
    RatVector& operator*=(const Rational& c);

    friend RatVector operator+(RatVector a, const RatVector& b) { return a += b; }
    friend RatVector operator-(RatVector a, const RatVector& b) { return a -= b; }
    friend RatVector operator*(const Rational& c, RatVector v) { return v *= c; }

    friend bool operator==(const RatVector&, const RatVector&) = default;

private:
    std::vector<Rational> entries_;
};

Rational dot(const RatVector& a, const RatVector& b);
RatVector concat(const RatVector& top, const RatVector& bottom);

// Dense row-major exact matrix.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
    static RatMatrix from_rows(const std::vector<RatVector>& rows);
    static RatMatrix from_columns(const std::vector<RatVector>& cols);

    static RatMatrix identity(std::size_t n);
    static RatMatrix filled(std::size_t rows, std::size_t cols, const Rational& value);
    static RatMatrix diagonal(const RatVector& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RatVector row(std::size_t i) const;
    RatVector col(std::size_t j) const;

    bool is_zero() const;
    bool is_nonnegative() const;
    bool is_positive() const;
    bool is_nonpositive() const;

    RatMatrix transpose() const;
    RatMatrix operator-() const;
    RatMatrix& operator*=(const Rational& c);
    RatMatrix& operator+=(const RatMatrix& o);
    RatMatrix& operator-=(const RatMatrix& o);

    friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
    friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
    friend RatMatrix operator*(const Rational& c, RatMatrix a) { return a *= c; }
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatVector operator*(const RatMatrix& a, const RatVector& x);

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, const RatVector& v);
std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

// A permutation as an index map: (P x)[i] = x[perm[i]].
using Permutation = std::vector<std::size_t>;

RatMatrix permutation_matrix(const Permutation& perm);
Permutation inverse_permutation(const Permutation& perm);
RatVector permute(const Permutation& perm, const RatVector& x);
bool is_permutation(const Permutation& perm);

RatMatrix hstack(const RatMatrix& left, const RatMatrix& right);
RatMatrix vstack(const RatMatrix& top, const RatMatrix& bottom);
RatMatrix submatrix(const RatMatrix& a, std::span<const std::size_t> rows,
                    std::span<const std::size_t> cols);
RatMatrix top_rows(const RatMatrix& a, std::size_t count);
// The m x (n-1) matrix obtained by deleting column j.
RatMatrix delete_column(const RatMatrix& a, std::size_t j);

// Vectorization (row-major) as a single vector of length rows*cols.
RatVector vectorize(const RatMatrix& a);

struct SignProfile {
    bool has_positive = false;
    bool has_negative = false;
    bool has_zero = false;

    bool mixed() const { return has_positive && has_negative; }
    bool nonnegative() const { return !has_negative; }
    bool positive() const { return !has_negative && !has_zero && has_positive; }

    friend bool operator==(const SignProfile&, const SignProfile&) = default;
};

SignProfile sign_profile(const RatVector& v);

// Fraction-free (Bareiss) elimination.
Rational det(const RatMatrix& a);
std::size_t rank(const RatMatrix& a);

// Exact inverse, nullopt when singular. A * inverse(A) = I is checked.
std::optional<RatMatrix> try_inverse(const RatMatrix& a);
// Throws SingularMatrixError when singular.
RatMatrix inverse(const RatMatrix& a);

// Some nonzero x with A x = 0, or nullopt if A has full column rank.
std::optional<RatVector> null_vector(const RatMatrix& a);

}  // namespace semipos
