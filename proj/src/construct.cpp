#include "semipos/construct.hpp"

#include <numeric>
#include <stdexcept>


namespace semipos::construct {

namespace {

Permutation identity_permutation(std::size_t n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

// Order with a positive coordinate first and a negative one last.
Permutation normalize_mixed(const RatVector& v) {
    const std::size_t n = v.dim();
    Permutation p = identity_permutation(n);
    if (!v[p[0]].is_positive()) {
        std::size_t k = 0;
        while (!v[k].is_positive()) ++k;
        std::swap(p[0], p[k]);
    }
    if (!v[p[n - 1]].is_negative()) {
        std::size_t k = n - 1;
        while (!v[p[k]].is_negative()) --k;
        std::swap(p[k], p[n - 1]);
    }
    return p;
}

// Order with a nonzero coordinate first.
Permutation normalize_nonzero(const RatVector& w) {
    Permutation p = identity_permutation(w.dim());
    std::size_t k = 0;
    while (w[k].is_zero()) ++k;
    std::swap(p[0], p[k]);
    return p;
}

// B[qperm[i]][pperm[j]] = B'[i][j], i.e. B = Q^T B' P.
RatMatrix unpermute(const RatMatrix& bp, const Permutation& row_perm, const Permutation& col_perm) {
    RatMatrix b(bp.rows(), bp.cols());
    for (std::size_t i = 0; i < bp.rows(); ++i)
        for (std::size_t j = 0; j < bp.cols(); ++j) b(row_perm[i], col_perm[j]) = bp(i, j);
    return b;
}

}  // namespace

bool is_lower_triangular(const RatMatrix& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j)
            if (!a(i, j).is_zero()) return false;
    return true;
}

NpConstruction build_np(const RatVector& v, const RatVector& w) {
    if (v.dim() != w.dim())
        throw InvalidInputError("build_np: v and w differ in dimension");
    if (v.dim() < 2) throw InvalidInputError("build_np: dimension must be at least 2");
    if (!sign_profile(v).mixed()) throw InvalidInputError("build_np: v must have entries of both signs");
    if (w.is_zero()) throw InvalidInputError("build_np: w must be nonzero");

    const std::size_t n = v.dim();
    const std::size_t last = n - 1;
    NpConstruction out;
    out.trace.v_perm = normalize_mixed(v);
    out.trace.w_perm = normalize_nonzero(w);
    const RatVector pv = permute(out.trace.v_perm, v);
    const RatVector qw = permute(out.trace.w_perm, w);
    const Rational& v1 = pv[0];
    const Rational& vn = pv[last];
    const Rational one(1);

    RatMatrix b(n, n);

    // Row 1.
    if (qw[0].is_positive()) {
        b(0, 0) = qw[0] / v1;
        out.trace.step1 = 'a';
    } else {
        b(0, last) = qw[0] / vn;
        out.trace.step1 = 'b';
    }

    // Middle rows: column i is used by row i alone.
    for (std::size_t i = 1; i < last; ++i) {
        const int ws = qw[i].sign();
        const int vs = pv[i].sign();
        const Rational& wi = qw[i];
        const Rational& vi = pv[i];
        char label;
        if (ws > 0) {
            if (vs > 0) {
                b(i, 0) = wi / (Rational(2) * v1);
                b(i, i) = wi / (Rational(2) * vi);
                label = 'a';
            } else if (vs < 0) {
                b(i, 0) = (wi + one) / v1;
                b(i, i) = -one / vi;
                label = 'b';
            } else {
                b(i, 0) = wi / v1;
                b(i, i) = one;
                label = 'c';
            }
        } else if (ws < 0) {
            if (vs > 0) {
                b(i, i) = one / vi;
                b(i, last) = (wi - one) / vn;
                label = 'd';
            } else if (vs < 0) {
                b(i, i) = wi / (Rational(2) * vi);
                b(i, last) = wi / (Rational(2) * vn);
                label = 'e';
            } else {
                b(i, i) = one;
                b(i, last) = wi / vn;
                label = 'f';
            }
        } else {
            if (vs > 0) {
                b(i, i) = one / vi;
                b(i, last) = -one / vn;
                label = 'g';
            } else if (vs < 0) {
                b(i, 0) = one / v1;
                b(i, i) = -one / vi;
                label = 'h';
            } else {
                b(i, i) = one;
                label = 'i';
            }
        }
        out.trace.step2.push_back(label);
    }

    // Row n, chosen against row 1 so the {1, n} corner stays invertible.
    const Rational& wn = qw[last];
    const bool w1_pos = qw[0].is_positive();
    if (wn.is_positive() && !w1_pos) {
        b(last, 0) = wn / v1;
        out.trace.step3 = 'a';
    } else if (wn.is_positive()) {
        b(last, 0) = (wn + one) / v1;
        b(last, last) = -one / vn;
        out.trace.step3 = 'b';
    } else if (wn.is_negative() && !w1_pos) {
        b(last, 0) = one / v1;
        b(last, last) = (wn - one) / vn;
        out.trace.step3 = 'c';
    } else if (wn.is_negative()) {
        b(last, last) = wn / vn;
        out.trace.step3 = 'd';
    } else {
        b(last, 0) = one / v1;
        b(last, last) = -one / vn;
        out.trace.step3 = 'e';
    }

    out.b = unpermute(b, out.trace.w_perm, out.trace.v_perm);
    if (!out.b.is_nonnegative() || out.b * v != w || det(out.b).is_zero())
        throw std::logic_error("build_np: construction failed re-verification");
    return out;
}

PosConstruction build_pos(const RatVector& v, const RatVector& w) {
    if (v.dim() != w.dim()) throw InvalidInputError("build_pos: v and w differ in dimension");
    if (v.dim() == 0) throw InvalidInputError("build_pos: empty vectors");
    if (!v.is_nonnegative() || v.is_zero())
        throw InvalidInputError("build_pos: v must be nonnegative and nonzero");
    if (!w.is_positive()) throw InvalidInputError("build_pos: w must be positive");

    const std::size_t n = v.dim();
    PosConstruction out;
    for (std::size_t i = 0; i < n; ++i)
        if (v[i].is_positive()) out.order.push_back(i);
    out.positive_count = out.order.size();
    for (std::size_t i = 0; i < n; ++i)
        if (v[i].is_zero()) out.order.push_back(i);

    const RatVector pv = permute(out.order, v);
    const RatVector pw = permute(out.order, w);
    const std::size_t k = out.positive_count;
    const Rational two(2);

    // Column images: B e_1 carries all of w (halved on rows 2..k),
    // B e_j = (w_j / 2 v_j) e_j for 2 <= j <= k, B e_j = e_j beyond k.
    RatMatrix b(n, n);
    b(0, 0) = pw[0] / pv[0];
    for (std::size_t i = 1; i < n; ++i) b(i, 0) = i < k ? pw[i] / (two * pv[0]) : pw[i] / pv[0];
    for (std::size_t j = 1; j < k; ++j) b(j, j) = pw[j] / (two * pv[j]);
    for (std::size_t j = k; j < n; ++j) b(j, j) = Rational(1);

    if (!is_lower_triangular(b)) throw std::logic_error("build_pos: normalized B not lower triangular");
    out.b = unpermute(b, out.order, out.order);
    if (!out.b.is_nonnegative() || out.b * v != w || det(out.b).is_zero())
        throw std::logic_error("build_pos: construction failed re-verification");
    return out;
}

RatMatrix build_rect(const RatVector& v, const RatVector& w) {
    const std::size_t n = v.dim();
    const std::size_t m = w.dim();
    if (m == 0) throw InvalidInputError("build_rect: target w must be nonempty");
    if (n <= m) throw InvalidInputError("build_rect: needs dim v > dim w");

    // Extend w by ones to dimension n, build the square witness, keep m rows.
    const RatVector extended = concat(w, RatVector::ones(n - m));
    RatMatrix square;
    if (sign_profile(v).mixed()) {
        square = build_np(v, extended).b;
    } else if (v.is_nonnegative() && !v.is_zero() && w.is_positive()) {
        square = build_pos(v, extended).b;
    } else {
        throw InvalidInputError("build_rect: need v with both signs, or v >= 0 nonzero with w > 0");
    }
    RatMatrix b = top_rows(square, m);
    if (!b.is_nonnegative() || b * v != w || rank(b) != m)
        throw std::logic_error("build_rect: construction failed re-verification");
    return b;
}

MixedSignResult mixed_sign_vector(const RatMatrix& x) {
    if (!x.is_square()) throw InvalidInputError("mixed_sign_vector: X must be square");
    const auto inv_opt = try_inverse(x);
    if (!inv_opt) throw InvalidInputError("mixed_sign_vector: X is singular");
    const RatMatrix& inv = *inv_opt;
    if (inv.is_nonnegative()) throw InvalidInputError("mixed_sign_vector: X is inverse nonnegative");
    if (inv.is_nonpositive()) throw InvalidInputError("mixed_sign_vector: -X is inverse nonnegative");

    const std::size_t n = x.rows();
    // u = X^{-1} e_j has a negative entry, w = X^{-1} e_k a positive one, so
    // X u and X w are unit vectors. Columns are scanned from the last.
    std::size_t ju = n, jw = n;
    for (std::size_t j = n; j-- > 0;) {
        const auto sp = sign_profile(inv.col(j));
        if (ju == n && sp.has_negative) ju = j;
        if (jw == n && sp.has_positive) jw = j;
    }
    const RatVector u = inv.col(ju);
    const RatVector w = inv.col(jw);

    MixedSignResult out;
    if (sign_profile(u).mixed()) {
        out.v = u;
    } else if (sign_profile(w).mixed()) {
        out.v = w;
    } else {
        // u <= 0 and w >= 0 are independent. Take the first coordinate pair
        // with D = [u_i w_i; u_j w_j] invertible, ordered so det D > 0; then
        // alpha, beta >= 0 and D (alpha, beta) = (1, -1).
        bool found = false;
        for (std::size_t i = 0; i < n && !found; ++i)
            for (std::size_t j = i + 1; j < n && !found; ++j) {
                Rational d = u[i] * w[j] - w[i] * u[j];
                if (d.is_zero()) continue;
                std::size_t p = i, q = j;
                if (d.is_negative()) {
                    std::swap(p, q);
                    d = -d;
                }
                const Rational alpha = (w[p] + w[q]) / d;
                const Rational beta = -(u[p] + u[q]) / d;
                out.v = alpha * u + beta * w;
                out.combined = true;
                found = true;
            }
        if (!found) throw std::logic_error("mixed_sign_vector: u and w are dependent");
    }

    if (!sign_profile(out.v).mixed() || !(x * out.v).is_nonnegative())
        throw std::logic_error("mixed_sign_vector: result failed re-verification");
    return out;
}

}  // namespace semipos::construct
