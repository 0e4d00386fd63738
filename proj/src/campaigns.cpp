#include "semipos/campaigns.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "semipos/classify.hpp"
#include "semipos/construct.hpp"
#include "semipos/genfuzz.hpp"
#include "semipos/lp.hpp"
#include "semipos/preserver.hpp"
#include "semipos/vertex_oracle.hpp"

namespace semipos::campaigns {

namespace {

using genfuzz::Generator;
using Counters = std::map<std::string, std::size_t>;
// Returns an empty string on success, a description otherwise.
using Trial = std::function<std::string(Generator&, Counters&)>;

constexpr std::size_t kMaxRecordedFailures = 10;
constexpr std::size_t kSamplesPerMap = 20;

std::size_t pick(Generator& g, std::size_t lo, std::size_t hi) {
    return static_cast<std::size_t>(g.uniform(static_cast<long>(lo), static_cast<long>(hi)));
}

Generator trial_generator(std::uint64_t seed, std::size_t index, long bound = 5) {
    genfuzz::GenConfig cfg;
    cfg.seed = genfuzz::derive_seed(seed, index);
    cfg.entry_bound = bound;
    return Generator(cfg);
}

template <typename T>
std::string show(const T& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

// ---------------------------------------------------------------- construct

std::string np_trial(Generator& g, Counters& c) {
    const std::size_t n = pick(g, 2, 8);
    RatVector v, w;
    do v = g.integer_vector(n, 5);
    while (!sign_profile(v).mixed());
    do w = g.integer_vector(n, 5);
    while (w.is_zero());
    const auto res = construct::build_np(v, w);
    if (!res.b.is_nonnegative() || det(res.b).is_zero() || res.b * v != w)
        return "build_np postcondition failed for v=" + show(v) + " w=" + show(w);
    ++c[std::string("step1.") + res.trace.step1];
    for (char k : res.trace.step2) ++c[std::string("step2.") + k];
    ++c[std::string("step3.") + res.trace.step3];
    return {};
}

std::string pos_trial(Generator& g, Counters& c) {
    const std::size_t n = pick(g, 1, 8);
    RatVector v(n), w(n);
    do
        for (std::size_t i = 0; i < n; ++i) v[i] = g.coin() ? Rational(0) : g.positive_entry();
    while (v.is_zero());
    for (std::size_t i = 0; i < n; ++i) w[i] = g.positive_entry();
    const auto res = construct::build_pos(v, w);
    const RatMatrix p = permutation_matrix(res.order);
    if (!res.b.is_nonnegative() || det(res.b).is_zero() || res.b * v != w ||
        !construct::is_lower_triangular(p * res.b * p.transpose()))
        return "build_pos postcondition failed for v=" + show(v) + " w=" + show(w);
    ++c[res.positive_count == n ? "all-positive" : "has-zero"];
    return {};
}

std::string rect_trial(Generator& g, Counters& c) {
    const std::size_t n = pick(g, 2, 8);
    const std::size_t m = pick(g, 1, n - 1);
    RatVector v(n), w(m);
    if (g.coin()) {
        do v = g.integer_vector(n, 5);
        while (!sign_profile(v).mixed());
        w = g.integer_vector(m, 5);
        ++c["mixed"];
    } else {
        do
            for (std::size_t i = 0; i < n; ++i) v[i] = g.coin() ? Rational(0) : g.positive_entry();
        while (v.is_zero());
        for (std::size_t i = 0; i < m; ++i) w[i] = g.positive_entry();
        ++c["nonnegative"];
    }
    const RatMatrix b = construct::build_rect(v, w);
    if (b.rows() != m || b.cols() != n || !b.is_nonnegative() || rank(b) != m || b * v != w)
        return "build_rect postcondition failed for v=" + show(v) + " w=" + show(w);
    return {};
}

// Invertible X with neither X nor -X inverse nonnegative. One in three draws
// has X^{-1} = M S with M >= 0 invertible and S a diagonal sign matrix of
// both signs: then every column of X^{-1} is one-signed, forcing the
// combination step.
RatMatrix key1_matrix(Generator& g, std::size_t n, bool one_signed_columns) {
    if (one_signed_columns) {
        RatVector s(n, Rational(1));
        const std::size_t neg = pick(g, 0, n - 1);
        std::size_t posi = pick(g, 0, n - 2);
        if (posi >= neg) ++posi;
        for (std::size_t i = 0; i < n; ++i)
            if (i != posi && (i == neg || g.coin())) s[i] = Rational(-1);
        const RatMatrix m = inverse(g.inverse_nonneg(n));  // nonnegative, invertible
        return inverse(m * RatMatrix::diagonal(s));
    }
    while (true) {
        RatMatrix x = g.integer_matrix(n, n, 4);
        const auto inv = try_inverse(x);
        if (inv && !inv->is_nonnegative() && !inv->is_nonpositive()) return x;
    }
}

std::string key1_trial(Generator& g, Counters& c) {
    const std::size_t n = pick(g, 2, 6);
    const RatMatrix x = key1_matrix(g, n, g.uniform(0, 2) == 0);
    const auto res = construct::mixed_sign_vector(x);
    if (!sign_profile(res.v).mixed() || !(x * res.v).is_nonnegative())
        return "mixed_sign_vector postcondition failed for X=" + show(x);
    ++c[res.combined ? "combined" : "direct-column"];
    return {};
}

// ---------------------------------------------------------------- classify

std::string msp_char_trial(Generator& g, Counters& c) {
    const std::size_t m = pick(g, 2, 5);
    const std::size_t n = pick(g, 2, std::min<std::size_t>(m, 4));
    RatMatrix a;
    switch (g.uniform(0, 2)) {
        case 0:
            a = g.integer_matrix(m, n, 3);
            break;
        case 1:
            a = g.minimally_semipositive(m, n);
            break;
        default: {
            a = g.minimally_semipositive(m, n);
            const std::size_t i = pick(g, 0, m - 1), j = pick(g, 0, n - 1);
            a(i, j) = g.entry();
            break;
        }
    }
    const bool fast = classify::is_minimally_semipositive(a);
    const bool slow = classify::msp_by_deletion(a);
    if (fast != slow) return "left-inverse and deletion characterizations disagree on " + show(a);
    if (m == n) {
        const bool inn = classify::is_inverse_nonnegative(a).inverse_nonnegative;
        if (inn != fast) return "square MSP differs from inverse-nonnegative on " + show(a);
    }
    ++c[fast ? "msp" : "not-msp"];
    return {};
}

// ---------------------------------------------------------------- preservers

std::string into_msp_sound_trial(Generator& g, Counters& c) {
    const std::size_t n = pick(g, 1, 4);
    preserver::PreserverMap l(g.inverse_nonneg(n), g.inverse_nonneg(n));
    if (g.coin()) {
        l = l.negated();
        ++c["negated"];
    }
    const auto verdict = preserver::into_msp_preserver(l);
    if (verdict.status != preserver::Status::Yes) return "verdict not Yes for inverse-nonnegative pair";
    for (std::size_t s = 0; s < kSamplesPerMap; ++s) {
        const RatMatrix a = g.minimally_semipositive(n, n);
        if (!classify::is_minimally_semipositive(a)) return "generator produced non-MSP matrix";
        if (!classify::is_minimally_semipositive(preserver::apply(l, a)))
            return "XAY not MSP for A=" + show(a);
        ++c["samples"];
    }
    return {};
}

preserver::PreserverMap msp_violating_map(Generator& g, std::size_t n) {
    while (true) {
        RatMatrix x, y;
        switch (g.uniform(0, 3)) {
            case 0:
                x = g.integer_matrix(n, n, 3);
                y = g.integer_matrix(n, n, 3);
                break;
            case 1:
                x = g.inverse_nonneg(n);
                y = g.integer_matrix(n, n, 3);
                break;
            case 2:
                x = g.integer_matrix(n, n, 3);
                y = g.inverse_nonneg(n);
                break;
            default: {
                x = g.inverse_nonneg(n);
                y = g.inverse_nonneg(n);
                // Make one factor singular by repeating a row.
                RatMatrix& t = g.coin() ? x : y;
                for (std::size_t j = 0; j < n; ++j) t(n - 1, j) = t(0, j);
                break;
            }
        }
        if (g.coin()) {
            x = -x;
            y = -y;
        }
        preserver::PreserverMap l(x, y);
        const bool holds = (classify::is_inverse_nonnegative(x).inverse_nonnegative &&
                            classify::is_inverse_nonnegative(y).inverse_nonnegative) ||
                           (classify::is_inverse_nonnegative(-x).inverse_nonnegative &&
                            classify::is_inverse_nonnegative(-y).inverse_nonnegative);
        if (!holds) return l;
    }
}

std::string into_msp_complete_trial(Generator& g, Counters& c) {
    const std::size_t n = pick(g, 2, 4);
    const auto l = msp_violating_map(g, n);
    const auto cert = preserver::falsify_into_msp(l);
    if (!preserver::verify(l, cert)) return "certificate failed verification";
    if (!classify::is_minimally_semipositive(cert.a) ||
        classify::is_minimally_semipositive(preserver::apply(l, cert.a)))
        return "classification does not confirm certificate";
    if (preserver::into_msp_preserver(l).status != preserver::Status::No) return "verdict not No";
    ++c[std::string(preserver::to_string(cert.proof_case))];
    return {};
}

std::string into_sp_sound_trial(Generator& g, Counters& c) {
    const std::size_t m = pick(g, 1, 4);
    const std::size_t n = pick(g, 1, 4);
    preserver::PreserverMap l(g.row_positive(m, m), g.inverse_nonneg(n));
    if (g.coin()) {
        l = l.negated();
        ++c["negated"];
    }
    if (preserver::into_sp_preserver(l).status != preserver::Status::Yes)
        return "verdict not Yes for row-positive / inverse-nonnegative pair";
    for (std::size_t s = 0; s < kSamplesPerMap; ++s) {
        const RatMatrix a = g.semipositive(m, n);
        if (!classify::is_semipositive(a).semipositive) return "generator produced non-SP matrix";
        if (!classify::is_semipositive(preserver::apply(l, a)).semipositive)
            return "XAY not SP for A=" + show(a);
        ++c["samples"];
    }
    return {};
}

RatMatrix signed_rows(Generator& g, std::size_t m, bool want_mixed_row) {
    RatMatrix x(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool neg = !want_mixed_row && i < 2 ? i == 0 : g.coin();
        for (std::size_t j = 0; j < m; ++j) x(i, j) = g.nonneg_entry();
        if (x.row(i).is_zero()) x(i, pick(g, 0, m - 1)) = g.positive_entry();
        if (neg)
            for (std::size_t j = 0; j < m; ++j) x(i, j) = -x(i, j);
    }
    if (want_mixed_row) {
        const std::size_t i = pick(g, 0, m - 1);
        const std::size_t p = pick(g, 0, m - 2);
        x(i, p) = g.positive_entry();
        x(i, m - 1) = -g.positive_entry();
    }
    return x;
}

std::string into_sp_complete_trial(Generator& g, Counters& c) {
    using preserver::ProofCase;
    const std::size_t m = pick(g, 2, 4);
    const std::size_t n = pick(g, 1, 4);
    const long kind = g.uniform(0, 3);
    RatMatrix x, y = g.matrix(n, n);
    ProofCase expected{};
    switch (kind) {
        case 0: {
            x = g.matrix(m, m);
            const std::size_t r = pick(g, 0, m - 1);
            for (std::size_t j = 0; j < m; ++j) x(r, j) = Rational(0);
            expected = ProofCase::ZeroRow;
            break;
        }
        case 1:
            x = signed_rows(g, m, true);
            expected = ProofCase::MixedRow;
            break;
        case 2:
            x = signed_rows(g, m, false);
            expected = ProofCase::OppositeRows;
            break;
        default:
            x = g.row_positive(m, m);
            if (g.coin()) {
                // Singular Y: repeat a column (or zero it for n = 1).
                for (std::size_t i = 0; i < n; ++i) y(i, n - 1) = n > 1 ? y(i, 0) : Rational(0);
                expected = ProofCase::YSingular;
            } else {
                while (!try_inverse(y) || classify::is_inverse_nonnegative(y).inverse_nonnegative)
                    y = g.matrix(n, n);
                expected = ProofCase::YInverseNegativeEntry;
            }
            break;
    }
    if (g.coin()) {
        x = -x;
        y = -y;
    }
    const preserver::PreserverMap l(x, y);
    const auto cert = preserver::falsify_into_sp(l);
    if (!preserver::verify(l, cert)) return "certificate failed verification";
    if (!classify::is_semipositive(cert.a).semipositive ||
        classify::is_semipositive(preserver::apply(l, cert.a)).semipositive)
        return "classification does not confirm certificate";
    if (cert.proof_case != expected)
        return "expected case " + std::string(preserver::to_string(expected)) + ", got " +
               std::string(preserver::to_string(cert.proof_case));
    if (preserver::into_sp_preserver(l).status != preserver::Status::No) return "verdict not No";
    const char* label = "?";
    switch (cert.proof_case) {
        case ProofCase::ZeroRow: label = "case-i"; break;
        case ProofCase::MixedRow: label = "case-ii"; break;
        case ProofCase::OppositeRows: label = "case-iii"; break;
        default: label = "case-iv"; break;
    }
    ++c[label];
    return {};
}

std::string onto_trial(Generator& g, Counters& c) {
    const std::size_t n = pick(g, 1, 4);
    const bool negate = g.coin();
    preserver::PreserverMap l(g.monomial(n), g.monomial(n));
    if (negate) l = l.negated();
    if (preserver::onto_msp_preserver(l).status != preserver::Status::Yes)
        return "onto-MSP verdict not Yes for monomial pair";
    if (preserver::onto_sp_preserver(l).status != preserver::Status::Yes)
        return "onto-SP verdict not Yes for monomial pair";
    const preserver::PreserverMap inv(inverse(l.x), inverse(l.y));
    if (preserver::into_msp_preserver(l).status != preserver::Status::Yes ||
        preserver::into_msp_preserver(inv).status != preserver::Status::Yes)
        return "into-MSP verdict not Yes for L or its inverse";
    for (std::size_t s = 0; s < kSamplesPerMap; ++s) {
        const RatMatrix a = g.minimally_semipositive(n, n);
        if (!classify::is_minimally_semipositive(preserver::apply(l, a)) ||
            !classify::is_minimally_semipositive(preserver::apply(inv, a)))
            return "spot check failed for A=" + show(a);
    }
    ++c[negate ? "monomial-negated" : "monomial"];

    // Inverse nonnegative but not monomial: onto must fail.
    const std::size_t k = pick(g, 2, 4);
    RatMatrix x;
    do x = g.inverse_nonneg(k);
    while (classify::is_monomial(x));
    preserver::PreserverMap bad(x, g.inverse_nonneg(k));
    if (g.coin()) bad = bad.negated();
    const auto verdict = preserver::onto_msp_preserver(bad);
    if (verdict.status != preserver::Status::No) return "onto-MSP verdict not No for non-monomial X";
    if (!verdict.certificate || !preserver::verify(bad, *verdict.certificate))
        return "onto-MSP No verdict without valid certificate";
    ++c["non-monomial-rejected"];
    return {};
}

// m x 1 into-MSP verdicts against empirical preservation on a sign-complete
// family of positive columns: e, e + t e_j for growing t, and random ones.
std::string column_trial(Generator& g, Counters& c) {
    const std::size_t m = pick(g, 2, 4);
    RatMatrix x = g.integer_matrix(m, m, 3);
    if (g.uniform(0, 2) == 0) x = g.row_positive(m, m);
    if (g.coin()) x = -x;
    const RatMatrix y{{Rational(g.uniform(-2, 2))}};
    const preserver::PreserverMap l(x, y);
    const auto verdict = preserver::into_msp_preserver(l);

    std::vector<RatVector> columns{RatVector::ones(m)};
    for (std::size_t j = 0; j < m; ++j)
        for (long t : {1L, 10L, 100L, 1000L}) {
            RatVector a = RatVector::ones(m);
            a[j] += Rational(t);
            columns.push_back(a);
        }
    for (int k = 0; k < 10; ++k) {
        RatVector a(m);
        for (std::size_t i = 0; i < m; ++i) a[i] = g.positive_entry();
        columns.push_back(a);
    }
    bool empirical = true;
    for (const auto& a : columns)
        empirical &= (y(0, 0) * (x * a)).is_positive();

    const bool yes = verdict.status == preserver::Status::Yes;
    if (yes != empirical) return "column verdict disagrees with sampling for X=" + show(x) + " y=" + show(y);
    if (!yes && (!verdict.certificate || !preserver::verify(l, *verdict.certificate)))
        return "No verdict without valid certificate";
    ++c[yes ? "yes" : "no"];
    return {};
}

// ---------------------------------------------------------------- lp

std::string lp_trial(Generator& g, Counters& c) {
    const std::size_t m = pick(g, 1, 6);
    const std::size_t n = pick(g, 1, 8 - m);
    const RatMatrix a = g.integer_matrix(m, n, 3);
    const RatVector b = g.integer_vector(m, 3);
    const bool simplex = lp::feasible_nonneg(a, b).feasible();
    const bool brute = oracle::brute_force_feasible(a, b);
    if (simplex != brute) return "simplex and vertex enumeration disagree on A=" + show(a) + " b=" + show(b);
    ++c[simplex ? "feasible" : "infeasible"];
    return {};
}

const std::map<std::string, Trial, std::less<>>& registry() {
    static const std::map<std::string, Trial, std::less<>> r{
        {"np", np_trial},
        {"pos", pos_trial},
        {"rect", rect_trial},
        {"key1", key1_trial},
        {"msp-char", msp_char_trial},
        {"into-msp-sound", into_msp_sound_trial},
        {"into-msp-complete", into_msp_complete_trial},
        {"into-sp-sound", into_sp_sound_trial},
        {"into-sp-complete", into_sp_complete_trial},
        {"onto", onto_trial},
        {"column", column_trial},
        {"lp", lp_trial},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& campaign_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [k, _] : registry()) out.push_back(k);
        return out;
    }();
    return names;
}

CampaignSummary run_campaign(std::string_view name, std::uint64_t seed, std::size_t trials) {
    const auto it = registry().find(name);
    if (it == registry().end()) throw std::invalid_argument("unknown campaign '" + std::string(name) + "'");

    CampaignSummary s;
    s.name = std::string(name);
    s.seed = seed;
    s.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
        Generator g = trial_generator(seed, t);
        std::string failure;
        try {
            failure = it->second(g, s.counters);
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        if (failure.empty()) {
            ++s.passed;
        } else if (s.failures.size() < kMaxRecordedFailures) {
            s.failures.push_back("trial " + std::to_string(t) + ": " + failure);
        }
    }
    return s;
}

}  // namespace semipos::campaigns
