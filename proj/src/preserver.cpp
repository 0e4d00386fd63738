#include "semipos/preserver.hpp"

#include <stdexcept>
#include <string>

#include "semipos/classify.hpp"
#include "semipos/construct.hpp"
#include "semipos/genfuzz.hpp"

namespace semipos::preserver {

namespace {

using classify::is_inverse_nonnegative;
using classify::is_monomial;
using classify::is_row_positive;

bool inv_nonneg(const RatMatrix& a) { return is_inverse_nonnegative(a).inverse_nonnegative; }

std::optional<Reason> into_sp_condition(const PreserverMap& l) {
    if (is_row_positive(l.x) && inv_nonneg(l.y)) return Reason::PositivePair;
    if (is_row_positive(-l.x) && inv_nonneg(-l.y)) return Reason::NegatedPair;
    return std::nullopt;
}

std::optional<Reason> into_msp_square_condition(const PreserverMap& l) {
    if (inv_nonneg(l.x) && inv_nonneg(l.y)) return Reason::PositivePair;
    if (inv_nonneg(-l.x) && inv_nonneg(-l.y)) return Reason::NegatedPair;
    return std::nullopt;
}

std::optional<Reason> monomial_pair(const PreserverMap& l) {
    if (is_monomial(l.x) && is_monomial(l.y)) return Reason::PositivePair;
    if (is_monomial(-l.x) && is_monomial(-l.y)) return Reason::NegatedPair;
    return std::nullopt;
}

PreserverVerdict yes(Reason r) { return {Status::Yes, r, std::nullopt}; }

PreserverVerdict no(Reason r, FalsifyCertificate cert) { return {Status::No, r, std::move(cert)}; }

FalsifyCertificate checked(const PreserverMap& l, FalsifyCertificate cert) {
    if (!verify(l, cert)) throw std::logic_error("certificate failed re-verification");
    return cert;
}

FalsifyCertificate into_violation(const PreserverMap& l, MatrixClass cls, ProofCase pc, RatMatrix a) {
    FalsifyCertificate c;
    c.cls = cls;
    c.kind = CertificateKind::IntoViolation;
    c.proof_case = pc;
    c.image = apply(l, a);
    c.a = std::move(a);
    return c;
}

// Row i of X has entries of both signs: v > 0 with (X v)_i = 0. Weight t on
// one entry, 1 elsewhere; the weighted entry is chosen opposite in sign to
// the row sum so t > 0.
RatVector balancing_vector(const RatVector& row) {
    Rational sum;
    for (const auto& x : row) sum += x;
    RatVector v = RatVector::ones(row.dim());
    if (sum.is_zero()) return v;
    std::size_t k = 0;
    while (sum.is_positive() ? !row[k].is_negative() : !row[k].is_positive()) ++k;
    // t * row_k + (sum - row_k) = 0
    v[k] = (row[k] - sum) / row[k];
    return v;
}

// m x 1 case: MSP members are exactly the positive columns.
PreserverVerdict into_msp_column(const PreserverMap& l) {
    const Rational& y = l.y(0, 0);
    if (y.is_positive() && is_row_positive(l.x)) return yes(Reason::PositivePair);
    if (y.is_negative() && is_row_positive(-l.x)) return yes(Reason::NegatedPair);

    const std::size_t m = l.m();
    // A zero row already kills e; otherwise push a negative entry x_ij of
    // the sign-corrected X until (X a)_i <= 0.
    const auto column = [&]() {
        RatVector a = RatVector::ones(m);
        if (y.is_zero()) return a;
        const RatMatrix xs = y.is_positive() ? l.x : -l.x;
        for (std::size_t i = 0; i < m; ++i)
            if (xs.row(i).is_zero()) return a;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                if (!xs(i, j).is_negative()) continue;
                const Rational row_sum = (xs * a)[i];
                if (row_sum.is_positive()) a[j] += row_sum / -xs(i, j);
                return a;
            }
        return a;
    };
    return no(Reason::Falsified,
              checked(l, into_violation(l, MatrixClass::MinimallySemipositive, ProofCase::ColumnNotPositive,
                                        RatMatrix::from_columns({column()}))));
}

PreserverVerdict into_msp_sampled(const PreserverMap& l, const SearchOptions& opts) {
    const std::size_t m = l.m(), n = l.n();
    for (std::size_t t = 0; t < opts.trials; ++t) {
        genfuzz::GenConfig cfg;
        cfg.seed = genfuzz::derive_seed(opts.seed, t);
        cfg.entry_bound = opts.entry_bound;
        genfuzz::Generator gen(cfg);
        RatMatrix a;
        switch (t % 3) {
            case 0:
                a = gen.minimally_semipositive(m, n);
                break;
            case 1: {
                // Row order and positive row scaling preserve MSP.
                const RatMatrix base = gen.minimally_semipositive(m, n);
                const Permutation p = gen.permutation(m);
                a = RatMatrix(m, n);
                for (std::size_t i = 0; i < m; ++i) {
                    const Rational s = gen.positive_entry();
                    for (std::size_t j = 0; j < n; ++j) a(i, j) = s * base(p[i], j);
                }
                break;
            }
            default:
                a = gen.integer_matrix(m, n, opts.entry_bound);
                if (!classify::msp_by_deletion(a)) continue;
                break;
        }
        if (!in_class(MatrixClass::MinimallySemipositive, apply(l, a)))
            return no(Reason::Falsified, checked(l, into_violation(l, MatrixClass::MinimallySemipositive,
                                                                    ProofCase::Sampled, std::move(a))));
    }
    return {Status::Unknown, Reason::NoCounterexampleFound, std::nullopt};
}

// A in S outside the range of a singular X: every L(B) satisfies z^T L(B) = 0.
FalsifyCertificate range_deficient(const PreserverMap& l, MatrixClass cls, const RatVector& z) {
    RatVector c = RatVector::ones(l.m());
    if (dot(z, c).is_zero()) {
        std::size_t p = 0;
        while (z[p].is_zero()) ++p;
        c[p] += Rational(1);
    }
    FalsifyCertificate cert;
    cert.cls = cls;
    cert.kind = CertificateKind::NotInImage;
    cert.proof_case = ProofCase::RangeDeficient;
    cert.a = RatMatrix::from_columns(std::vector<RatVector>(l.n(), c));
    cert.left_null = z;
    return cert;
}

// Certificate for L^{-1} = (X^{-1}, Y^{-1}) not preserving S, restated for L.
FalsifyCertificate not_in_image(const PreserverMap& l, FalsifyCertificate inv_cert) {
    inv_cert.kind = CertificateKind::NotInImage;
    inv_cert.u.reset();
    inv_cert.z.reset();
    inv_cert.zero_row.reset();
    return checked(l, std::move(inv_cert));
}

}  // namespace

PreserverMap::PreserverMap(RatMatrix x_, RatMatrix y_) : x(std::move(x_)), y(std::move(y_)) {
    if (!x.is_square() || !y.is_square())
        throw DimensionError("PreserverMap: X and Y must be square");
    if (x.rows() == 0 || y.rows() == 0) throw DimensionError("PreserverMap: empty factor");
}

RatMatrix apply(const PreserverMap& l, const RatMatrix& a) {
    if (a.rows() != l.m() || a.cols() != l.n())
        throw DimensionError("apply: A is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                             ", map acts on " + std::to_string(l.m()) + "x" + std::to_string(l.n()));
    return l.x * a * l.y;
}

bool in_class(MatrixClass cls, const RatMatrix& a) {
    return cls == MatrixClass::Semipositive ? classify::is_semipositive(a).semipositive
                                            : classify::is_minimally_semipositive(a);
}

bool verify(const PreserverMap& l, const FalsifyCertificate& cert) {
    if (cert.a.rows() != l.m() || cert.a.cols() != l.n()) return false;
    if (!in_class(cert.cls, cert.a)) return false;

    if (cert.kind == CertificateKind::IntoViolation) {
        const RatMatrix image = apply(l, cert.a);
        if (cert.image && *cert.image != image) return false;
        if (in_class(cert.cls, image)) return false;
        if (cert.u && cert.z && image * *cert.u != *cert.z) return false;
        if (cert.zero_row && (*cert.zero_row >= image.rows() || !image.row(*cert.zero_row).is_zero()))
            return false;
        return true;
    }

    if (cert.left_null) {
        const RatVector& z = *cert.left_null;
        if (z.dim() != l.m() || z.is_zero()) return false;
        if (!(l.x.transpose() * z).is_zero()) return false;
        return !(cert.a.transpose() * z).is_zero();
    }
    const auto xi = try_inverse(l.x);
    const auto yi = try_inverse(l.y);
    if (!xi || !yi) return false;
    const RatMatrix pre = *xi * cert.a * *yi;
    if (cert.image && *cert.image != pre) return false;
    return !in_class(cert.cls, pre);
}

PreserverVerdict into_sp_preserver(const PreserverMap& l) {
    if (auto r = into_sp_condition(l)) return yes(*r);
    return no(Reason::Falsified, falsify_into_sp(l));
}

PreserverVerdict onto_sp_preserver(const PreserverMap& l) {
    if (auto r = monomial_pair(l)) return yes(*r);
    const auto into = into_sp_condition(l);
    if (!into) return no(Reason::Falsified, falsify_into_sp(l));

    const PreserverMap pos = *into == Reason::PositivePair ? l : l.negated();
    if (auto z = null_vector(pos.x.transpose()))
        return no(Reason::NotSurjective,
                  checked(l, range_deficient(l, MatrixClass::Semipositive, *z)));
    const PreserverMap inv(inverse(l.x), inverse(l.y));
    return no(Reason::NotSurjective, not_in_image(l, falsify_into_sp(inv)));
}

PreserverVerdict into_msp_preserver(const PreserverMap& l, const SearchOptions& opts) {
    const std::size_t m = l.m(), n = l.n();
    if (m == n) {
        if (auto r = into_msp_square_condition(l)) return yes(*r);
        FalsifyCertificate cert = falsify_into_msp(l);
        const Reason r = cert.proof_case == ProofCase::SingularFactor ? Reason::Singular : Reason::Falsified;
        return no(r, std::move(cert));
    }
    if (m < n) return {Status::Unknown, Reason::OutsideDecidedRegime, std::nullopt};
    if (n == 1) return into_msp_column(l);

    // Sufficient: X monomial keeps a nonnegative left inverse Y^{-1} N X^{-1}.
    if (is_monomial(l.x) && inv_nonneg(l.y)) return yes(Reason::PositivePair);
    if (is_monomial(-l.x) && inv_nonneg(-l.y)) return yes(Reason::NegatedPair);
    return into_msp_sampled(l, opts);
}

PreserverVerdict onto_msp_preserver(const PreserverMap& l) {
    if (l.m() != l.n()) throw DimensionError("onto_msp_preserver: only square matrix spaces are supported");
    if (auto r = monomial_pair(l)) return yes(*r);
    if (!into_msp_square_condition(l)) {
        FalsifyCertificate cert = falsify_into_msp(l);
        const Reason r = cert.proof_case == ProofCase::SingularFactor ? Reason::Singular : Reason::Falsified;
        return no(r, std::move(cert));
    }
    const PreserverMap inv(inverse(l.x), inverse(l.y));
    return no(Reason::NotSurjective, not_in_image(l, falsify_into_msp(inv)));
}

FalsifyCertificate falsify_into_msp(const PreserverMap& l) {
    if (l.m() != l.n()) throw InvalidInputError("falsify_into_msp: square matrix space required");
    if (into_msp_square_condition(l))
        throw InvalidInputError("falsify_into_msp: L preserves minimally semipositive matrices");
    const std::size_t n = l.n();
    constexpr auto msp = MatrixClass::MinimallySemipositive;

    const auto x_inv = try_inverse(l.x);
    const auto y_inv = try_inverse(l.y);
    if (!x_inv || !y_inv)
        return checked(l, into_violation(l, msp, ProofCase::SingularFactor, RatMatrix::identity(n)));

    if (!x_inv->is_nonnegative() && !x_inv->is_nonpositive()) {
        // X v >= 0 for a mixed v; B >= 0 with B v = Y w for w = -e_1, A = B^{-1}.
        // Then L(A) w = X v >= 0 while w is not >= 0.
        const RatVector v = construct::mixed_sign_vector(l.x).v;
        const RatVector w = -RatVector::unit(n, 0);
        const RatMatrix b = construct::build_np(v, l.y * w).b;
        FalsifyCertificate c = into_violation(l, msp, ProofCase::MixedSignX, inverse(b));
        c.u = w;
        c.z = l.x * v;
        return checked(l, std::move(c));
    }

    // X or -X is inverse nonnegative; flip signs so X is. L is unchanged.
    const bool flip = x_inv->is_nonpositive();
    const RatMatrix xs = flip ? -l.x : l.x;
    const RatMatrix xs_inv = flip ? -*x_inv : *x_inv;
    const RatMatrix ys_inv = flip ? -*y_inv : *y_inv;

    std::size_t ci = n, cj = n;
    for (std::size_t i = 0; i < n && ci == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (ys_inv(i, j).is_negative()) {
                ci = i;
                cj = j;
                break;
            }
    if (ci == n) throw std::logic_error("falsify_into_msp: expected a negative entry in Y^{-1}");

    // w = e_j + delta e > 0 keeps u = Y^{-1} w negative at i; v = X^{-1} w >= 0.
    const RatVector ce = ys_inv * RatVector::ones(n);
    Rational ce_max;
    for (const auto& x : ce) ce_max = max(ce_max, x.abs());
    const Rational delta = ys_inv(ci, cj).abs() / (Rational(2) * (Rational(1) + ce_max));
    const RatVector w = RatVector::unit(n, cj) + delta * RatVector::ones(n);
    const RatVector u = ys_inv * w;
    const RatVector v = xs_inv * w;
    const RatMatrix b = construct::build_pos(v, w).b;
    FalsifyCertificate c = into_violation(l, msp, ProofCase::YNotInverseNonneg, inverse(b));
    c.u = u;
    c.z = xs * v;
    return checked(l, std::move(c));
}

FalsifyCertificate falsify_into_sp(const PreserverMap& l) {
    if (into_sp_condition(l))
        throw InvalidInputError("falsify_into_sp: L preserves semipositive matrices");
    const std::size_t m = l.m(), n = l.n();
    constexpr auto sp = MatrixClass::Semipositive;

    if (!is_row_positive(l.x) && !is_row_positive(-l.x)) {
        for (std::size_t i = 0; i < m; ++i)
            if (l.x.row(i).is_zero()) {
                FalsifyCertificate c = into_violation(l, sp, ProofCase::ZeroRow, RatMatrix::filled(m, n, 1));
                c.zero_row = i;
                return checked(l, std::move(c));
            }
        for (std::size_t i = 0; i < m; ++i) {
            const RatVector row = l.x.row(i);
            if (!sign_profile(row).mixed()) continue;
            const RatVector v = balancing_vector(row);
            FalsifyCertificate c = into_violation(
                l, sp, ProofCase::MixedRow, RatMatrix::from_columns(std::vector<RatVector>(n, v)));
            c.zero_row = i;
            return checked(l, std::move(c));
        }
        // Rows are each nonnegative or nonpositive, with both kinds present:
        // every column of X (e, 0, ..., 0) Y is a multiple of X e, which has
        // entries of both signs.
        RatMatrix a(m, n);
        for (std::size_t i = 0; i < m; ++i) a(i, 0) = Rational(1);
        FalsifyCertificate c = into_violation(l, sp, ProofCase::OppositeRows, std::move(a));
        c.z = l.x * RatVector::ones(m);
        return checked(l, std::move(c));
    }

    // X or -X is row positive; flip so X is. Y is then not inverse nonnegative.
    const bool flip = !is_row_positive(l.x);
    const RatMatrix ys = flip ? -l.y : l.y;

    if (auto nv = null_vector(ys.transpose())) {
        RatVector v = *nv;
        std::size_t p = 0;
        while (v[p].is_zero()) ++p;
        if (v[p].is_negative()) v = -v;
        // Column p of A is positive, and A Y = 0.
        return checked(l, into_violation(l, sp, ProofCase::YSingular,
                                         RatMatrix::from_rows(std::vector<RatVector>(m, v))));
    }

    const RatMatrix c_inv = inverse(ys);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (c_inv(i, j).is_negative()) {
                // Rows of A are -(row i of Y^{-1}): column j positive, A Y <= 0.
                const RatVector r = -c_inv.row(i);
                return checked(l, into_violation(l, sp, ProofCase::YInverseNegativeEntry,
                                                 RatMatrix::from_rows(std::vector<RatVector>(m, r))));
            }
    throw std::logic_error("falsify_into_sp: Y^{-1} unexpectedly nonnegative");
}

std::string_view to_string(Status s) {
    switch (s) {
        case Status::Yes: return "yes";
        case Status::No: return "no";
        case Status::Unknown: return "unknown";
    }
    return "?";
}

std::string_view to_string(Reason r) {
    switch (r) {
        case Reason::PositivePair: return "positive-pair";
        case Reason::NegatedPair: return "negated-pair";
        case Reason::Singular: return "singular";
        case Reason::Falsified: return "falsified";
        case Reason::NotSurjective: return "not-surjective";
        case Reason::NoCounterexampleFound: return "no-counterexample-found";
        case Reason::OutsideDecidedRegime: return "outside-decided-regime";
    }
    return "?";
}

std::string_view to_string(MatrixClass c) {
    return c == MatrixClass::Semipositive ? "semipositive" : "minimally-semipositive";
}

std::string_view to_string(CertificateKind k) {
    return k == CertificateKind::IntoViolation ? "into-violation" : "not-in-image";
}

std::string_view to_string(ProofCase c) {
    switch (c) {
        case ProofCase::SingularFactor: return "singular-factor";
        case ProofCase::MixedSignX: return "mixed-sign-x";
        case ProofCase::YNotInverseNonneg: return "y-not-inverse-nonnegative";
        case ProofCase::ColumnNotPositive: return "column-not-positive";
        case ProofCase::Sampled: return "sampled";
        case ProofCase::ZeroRow: return "zero-row";
        case ProofCase::MixedRow: return "mixed-row";
        case ProofCase::OppositeRows: return "opposite-rows";
        case ProofCase::YSingular: return "y-singular";
        case ProofCase::YInverseNegativeEntry: return "y-inverse-negative-entry";
        case ProofCase::RangeDeficient: return "range-deficient";
    }
    return "?";
}

}  // namespace semipos::preserver
