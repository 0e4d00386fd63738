// Acceptance suite: one PASS/FAIL line per criterion. Trial counts, seeds
// and thresholds below are fixed; everything is exact, so no numeric
// tolerance applies anywhere.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "semipos/campaigns.hpp"
#include "semipos/classify.hpp"
#include "semipos/construct.hpp"
#include "semipos/genfuzz.hpp"
#include "semipos/lp.hpp"
#include "semipos/preserver.hpp"

using namespace semipos;
using campaigns::CampaignSummary;
using campaigns::run_campaign;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Checker {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok) {
            out_.pass = false;
            if (!first_) out_.detail += "; ";
            out_.detail += "FAILED " + what;
            first_ = false;
        }
    }
    void note(const std::string& s) {
        if (!first_) out_.detail += "; ";
        out_.detail += s;
        first_ = false;
    }
    Outcome result() const { return out_; }

private:
    Outcome out_;
    bool first_ = true;
};

// passed == trials, plus a minimum count on each listed counter.
void expect_campaign(Checker& c, const CampaignSummary& s,
                     const std::vector<std::pair<std::string, std::size_t>>& minimums = {}) {
    c.note(s.name + " " + std::to_string(s.passed) + "/" + std::to_string(s.trials));
    c.expect(s.ok(), s.name + (s.failures.empty() ? "" : " (" + s.failures.front() + ")"));
    for (const auto& [key, least] : minimums) {
        const std::size_t got = s.count(key);
        c.expect(got >= least, s.name + " counter " + key + "=" + std::to_string(got) + " < " +
                                   std::to_string(least));
    }
}

RatMatrix ints(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<RatVector> rs;
    for (const auto& r : rows) {
        RatVector v(r.size());
        std::size_t j = 0;
        for (long x : r) v[j++] = Rational(x);
        rs.push_back(v);
    }
    return RatMatrix::from_rows(rs);
}

RatVector ints(std::initializer_list<long> xs) {
    RatVector v(xs.size());
    std::size_t j = 0;
    for (long x : xs) v[j++] = Rational(x);
    return v;
}

// --------------------------------------------------------------- criteria

Outcome worked_example() {
    Checker c;
    const RatVector v = ints({1, 0, -5, -1});
    const RatVector w = ints({3, 2, -10, 0});
    const auto r = construct::build_np(v, w);
    c.expect(r.b == ints({{3, 0, 0, 0}, {2, 1, 0, 0}, {0, 0, 1, 5}, {1, 0, 0, 1}}), "B matches exactly");
    c.expect(r.b * v == w, "Bv = w");
    return c.result();
}

Outcome np_property() {
    Checker c;
    std::vector<std::pair<std::string, std::size_t>> cases;
    for (char k = 'a'; k <= 'i'; ++k) cases.emplace_back(std::string("step2.") + k, 1);
    for (char k = 'a'; k <= 'e'; ++k) cases.emplace_back(std::string("step3.") + k, 1);
    expect_campaign(c, run_campaign("np", kSeed, 1000), cases);
    return c.result();
}

Outcome pos_property() {
    Checker c;
    expect_campaign(c, run_campaign("pos", kSeed, 1000), {{"all-positive", 1}, {"has-zero", 1}});
    return c.result();
}

Outcome rect_property() {
    Checker c;
    expect_campaign(c, run_campaign("rect", kSeed, 500), {{"mixed", 1}, {"nonnegative", 1}});
    return c.result();
}

Outcome key1_property() {
    Checker c;
    const auto s = run_campaign("key1", kSeed, 500);
    expect_campaign(c, s, {{"combined", 20}});
    c.note("combined=" + std::to_string(s.count("combined")));
    return c.result();
}

Outcome msp_characterization() {
    Checker c;
    expect_campaign(c, run_campaign("msp-char", kSeed, 300), {{"msp", 1}, {"not-msp", 1}});
    return c.result();
}

Outcome into_msp_soundness() {
    Checker c;
    const auto s = run_campaign("into-msp-sound", kSeed, 200);
    expect_campaign(c, s, {{"samples", 4000}, {"negated", 1}});
    c.note("samples=" + std::to_string(s.count("samples")));
    return c.result();
}

Outcome into_msp_completeness() {
    Checker c;
    expect_campaign(c, run_campaign("into-msp-complete", kSeed, 200));
    return c.result();
}

Outcome into_sp_both() {
    Checker c;
    const auto sound = run_campaign("into-sp-sound", kSeed, 200);
    expect_campaign(c, sound, {{"samples", 4000}});
    const auto complete = run_campaign("into-sp-complete", kSeed, 200);
    expect_campaign(c, complete, {{"case-i", 10}, {"case-ii", 10}, {"case-iii", 10}, {"case-iv", 10}});
    std::ostringstream os;
    os << "cases i/ii/iii/iv=" << complete.count("case-i") << "/" << complete.count("case-ii") << "/"
       << complete.count("case-iii") << "/" << complete.count("case-iv");
    c.note(os.str());
    return c.result();
}

Outcome onto_consistency() {
    Checker c;
    const auto s = run_campaign("onto", kSeed, 100);
    expect_campaign(c, s, {{"monomial", 1}, {"monomial-negated", 1}, {"non-monomial-rejected", 100}});
    c.expect(s.count("monomial") + s.count("monomial-negated") == 100, "100 monomial pairs");
    return c.result();
}

Outcome counterexample_column() {
    Checker c;
    const RatMatrix x = ints({{1, 1}, {1, 1}});
    const auto v = preserver::into_msp_preserver({x, RatMatrix::identity(1)});
    c.expect(v.status == preserver::Status::Yes, "into_msp_preserver = Yes");
    c.expect(!classify::is_monomial(x), "X not monomial");
    return c.result();
}

Outcome counterexample_no_zero_entry() {
    Checker c;
    const RatMatrix x = ints({{1, 0, 0}, {0, -1, 0}, {1, 1, 1}});
    c.expect(!classify::is_monomial(x) && !classify::is_monomial(-x), "neither +X nor -X monomial");
    // v = e + s with s >= 0 turns {v >= e, (Xv)_i = 0} into X_i s = -(Xe)_i.
    const RatVector xe = x * RatVector::ones(3);
    std::size_t infeasible = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        const RatMatrix row = RatMatrix::from_rows({x.row(i)});
        RatVector rhs(1);
        rhs[0] = -xe[i];
        if (!lp::equality_feasible_nonneg(row, rhs).feasible()) ++infeasible;
    }
    c.note(std::to_string(infeasible) + "/3 infeasible");
    c.expect(infeasible == 3, "all rows infeasible");
    return c.result();
}

Outcome basis_search() {
    Checker c;
    const std::pair<std::size_t, std::size_t> shapes[] = {{1, 1}, {2, 2}, {3, 2}, {3, 3}, {4, 3}};
    for (auto [m, n] : shapes) {
        const std::string tag = std::to_string(m) + "x" + std::to_string(n);
        genfuzz::GenConfig cfg;
        cfg.seed = kSeed;
        cfg.m = m;
        cfg.n = n;
        try {
            const auto basis = genfuzz::msp_basis_search(m, n, cfg, 10 * m * n);
            std::vector<RatVector> rows;
            bool all_msp = true;
            for (const auto& b : basis) {
                all_msp = all_msp && classify::is_minimally_semipositive(b);
                rows.push_back(vectorize(b));
            }
            c.expect(basis.size() == m * n && all_msp && rank(RatMatrix::from_rows(rows)) == m * n,
                     tag + " basis");
        } catch (const SearchExhaustedError& e) {
            c.expect(false, tag + " (" + e.what() + ")");
        }
    }
    return c.result();
}

Outcome lp_agreement() {
    Checker c;
    expect_campaign(c, run_campaign("lp", kSeed, 200), {{"feasible", 1}, {"infeasible", 1}});
    return c.result();
}

struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "worked example reproduction", worked_example},
        {2, "mixed-sign construction property", np_property},
        {3, "nonnegative construction property", pos_property},
        {4, "rectangular construction property", rect_property},
        {5, "mixed-sign vector property", key1_property},
        {6, "MSP characterization cross-check", msp_characterization},
        {7, "square into-MSP soundness", into_msp_soundness},
        {8, "square into-MSP completeness", into_msp_completeness},
        {9, "into-SP soundness and completeness", into_sp_both},
        {10, "onto consistency", onto_consistency},
        {11, "positive-column counterexample", counterexample_column},
        {12, "no-zero-entry counterexample", counterexample_no_zero_entry},
        {13, "MSP basis search", basis_search},
        {14, "LP oracle agreement", lp_agreement},
    };

    int failed = 0;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& cr : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = cr.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!o.pass) ++failed;
        std::printf("%s  %2d  %-36s %6.2fs  %s\n", o.pass ? "PASS" : "FAIL", cr.id, cr.name, secs,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%zu/%zu criteria passed in %.1fs\n", criteria.size() - static_cast<std::size_t>(failed),
                criteria.size(), total);
    return failed == 0 ? 0 : 1;
}
