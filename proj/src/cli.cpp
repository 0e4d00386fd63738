#include "semipos/cli.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "semipos/campaigns.hpp"
#include "semipos/classify.hpp"
#include "semipos/construct.hpp"
#include "semipos/genfuzz.hpp"
#include "semipos/matrix_io.hpp"
#include "semipos/preserver.hpp"
#include "semipos/report.hpp"

namespace semipos::cli {

namespace {

using report::json;
using report::to_json;

struct Outcome {
    json result;
    int code = kYes;
};

class VerificationFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

void require(bool ok, const char* what) {
    if (!ok) throw VerificationFailure(std::string("embedded witness failed re-verification: ") + what);
}

json matrix_input(const std::string& path, const RatMatrix& m) {
    return {{"path", path}, {"rows", m.rows()}, {"cols", m.cols()}, {"digest", report::digest(m)}};
}

json vector_input(const RatVector& v) {
    return {{"entries", to_json(v)}};
}

int verdict_code(preserver::Status s) {
    switch (s) {
        case preserver::Status::Yes: return kYes;
        case preserver::Status::No: return kNo;
        case preserver::Status::Unknown: return kUnknown;
    }
    return kInternalError;
}

// ------------------------------------------------------------ commands

Outcome cmd_classify(const RatMatrix& a) {
    const auto r = classify::classify_all(a);
    if (r.sp_witness) require(classify::is_semipositivity_vector(a, *r.sp_witness), "semipositivity vector");
    if (r.inv) require(a * *r.inv == RatMatrix::identity(a.rows()), "inverse");
    if (r.left_inv)
        require(r.left_inv->is_nonnegative() && *r.left_inv * a == RatMatrix::identity(a.cols()),
                "left inverse");
    return {to_json(r), kYes};
}

Outcome cmd_witness_sp(const RatMatrix& a) {
    const auto r = classify::is_semipositive(a);
    if (!r.semipositive) return {{{"semipositive", false}, {"witness", "none"}}, kNo};
    require(classify::is_semipositivity_vector(a, *r.witness), "semipositivity vector");
    return {{{"semipositive", true}, {"witness", to_json(*r.witness)}}, kYes};
}

Outcome cmd_build(const std::string& kind, const RatVector& v, const RatVector& w) {
    json out;
    out["kind"] = kind;
    if (kind == "np") {
        const auto r = construct::build_np(v, w);
        require(r.b.is_nonnegative() && r.b * v == w && !det(r.b).is_zero(), "B");
        out["b"] = to_json(r.b);
        out["det"] = to_json(det(r.b));
        out["trace"] = to_json(r.trace);
    } else if (kind == "pos") {
        const auto r = construct::build_pos(v, w);
        require(r.b.is_nonnegative() && r.b * v == w && !det(r.b).is_zero(), "B");
        out["b"] = to_json(r.b);
        out["det"] = to_json(det(r.b));
        out["order"] = to_json(r.order);
        out["positive_count"] = r.positive_count;
    } else {
        const RatMatrix b = construct::build_rect(v, w);
        require(b.is_nonnegative() && b * v == w && rank(b) == w.dim(), "B");
        out["b"] = to_json(b);
        out["rank"] = rank(b);
    }
    return {out, kYes};
}

Outcome cmd_key1(const RatMatrix& x) {
    const auto r = construct::mixed_sign_vector(x);
    const RatVector xv = x * r.v;
    require(sign_profile(r.v).mixed() && xv.is_nonnegative(), "mixed-sign vector");
    return {{{"v", to_json(r.v)}, {"xv", to_json(xv)}, {"combined", r.combined}}, kYes};
}

Outcome cmd_preserver(const std::string& kind, const preserver::PreserverMap& l,
                      const preserver::SearchOptions& opts) {
    preserver::PreserverVerdict v;
    if (kind == "into-sp")
        v = preserver::into_sp_preserver(l);
    else if (kind == "onto-sp")
        v = preserver::onto_sp_preserver(l);
    else if (kind == "into-msp")
        v = preserver::into_msp_preserver(l, opts);
    else
        v = preserver::onto_msp_preserver(l);
    if (v.certificate) require(preserver::verify(l, *v.certificate), "falsification certificate");
    json out = to_json(v);
    out["m"] = l.m();
    out["n"] = l.n();
    return {out, verdict_code(v.status)};
}

Outcome cmd_falsify(const std::string& kind, const preserver::PreserverMap& l) {
    std::optional<preserver::FalsifyCertificate> cert;
    try {
        cert = kind == "into-sp" ? preserver::falsify_into_sp(l) : preserver::falsify_into_msp(l);
    } catch (const InvalidInputError& e) {
        if (kind == "into-msp" && l.m() != l.n()) throw;
        return {{{"falsified", false}, {"detail", e.what()}}, kNo};
    }
    require(preserver::verify(l, *cert), "falsification certificate");
    return {{{"falsified", true}, {"certificate", to_json(*cert)}}, kYes};
}

Outcome cmd_fuzz(const std::string& name, std::uint64_t seed, std::size_t trials) {
    const auto s = campaigns::run_campaign(name, seed, trials);
    return {to_json(s), s.ok() ? kYes : kNo};
}

Outcome cmd_basis(std::size_t m, std::size_t n, std::uint64_t seed, std::size_t max_trials) {
    genfuzz::GenConfig cfg;
    cfg.seed = seed;
    cfg.m = m;
    cfg.n = n;
    try {
        const auto basis = genfuzz::msp_basis_search(m, n, cfg, max_trials);
        std::vector<RatVector> rows;
        json mats = json::array();
        for (const auto& b : basis) {
            require(classify::is_minimally_semipositive(b), "basis member");
            rows.push_back(vectorize(b));
            mats.push_back(to_json(b));
        }
        require(rank(RatMatrix::from_rows(rows)) == m * n, "basis rank");
        return {{{"found", true}, {"size", basis.size()}, {"basis", mats}}, kYes};
    } catch (const SearchExhaustedError& e) {
        return {{{"found", false}, {"detail", e.what()}}, kNo};
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact semipositivity classes, constructive witnesses and XAY preserver checks"};
    app.require_subcommand(1);
    bool table = false;
    app.add_flag("--table", table, "Human-readable output instead of JSON");

    std::string matrix_path, kind, campaign, x_path, y_path, v_text, w_text;
    std::optional<std::size_t> m_opt, n_opt;
    std::uint64_t seed = 1;
    std::size_t trials = 100;
    std::size_t max_trials = 0;
    std::size_t search_trials = preserver::SearchOptions{}.trials;

    auto* classify_cmd = app.add_subcommand("classify", "Decide every matrix class, with witnesses");
    classify_cmd->add_option("matrix", matrix_path, "Matrix file")->required();

    auto* witness_cmd = app.add_subcommand("witness", "Semipositivity vector of a matrix");
    witness_cmd->add_option("kind", kind)->required()->check(CLI::IsMember({"sp"}));
    witness_cmd->add_option("matrix", matrix_path, "Matrix file")->required();

    auto* build_cmd = app.add_subcommand("build", "Nonnegative B with B v = w");
    build_cmd->add_option("kind", kind)->required()->check(CLI::IsMember({"np", "pos", "rect"}));
    build_cmd->add_option("--v", v_text, "Source vector, whitespace separated")->required();
    build_cmd->add_option("--w", w_text, "Target vector, whitespace separated")->required();

    auto* key1_cmd = app.add_subcommand("key1", "Mixed-sign v with X v >= 0");
    key1_cmd->add_option("matrix", matrix_path, "Matrix file for X")->required();

    const std::vector<std::string> preserver_kinds{"into-sp", "onto-sp", "into-msp", "onto-msp"};
    auto* pres_cmd = app.add_subcommand("preserver", "Decide whether L(A) = XAY is a preserver");
    pres_cmd->add_option("kind", kind)->required()->check(CLI::IsMember(preserver_kinds));
    pres_cmd->add_option("--x", x_path, "File with the m x m factor X")->required();
    pres_cmd->add_option("--y", y_path, "File with the n x n factor Y")->required();
    pres_cmd->add_option("--m", m_opt, "Expected m");
    pres_cmd->add_option("--n", n_opt, "Expected n");
    pres_cmd->add_option("--seed", seed, "Seed for randomized falsification");
    pres_cmd->add_option("--trials", search_trials, "Trials for randomized falsification");

    auto* fals_cmd = app.add_subcommand("falsify", "Certificate that XAY is not an into-preserver");
    fals_cmd->add_option("kind", kind)->required()->check(CLI::IsMember({"into-sp", "into-msp"}));
    fals_cmd->add_option("--x", x_path, "File with X")->required();
    fals_cmd->add_option("--y", y_path, "File with Y")->required();

    auto* fuzz_cmd = app.add_subcommand("fuzz", "Run a seeded verification campaign");
    fuzz_cmd->add_option("campaign", campaign)->required()->check(CLI::IsMember(campaigns::campaign_names()));
    fuzz_cmd->add_option("--seed", seed);
    fuzz_cmd->add_option("--trials", trials);

    auto* basis_cmd = app.add_subcommand("basis", "Search for a basis of minimally semipositive matrices");
    basis_cmd->add_option("--m", m_opt)->required();
    basis_cmd->add_option("--n", n_opt)->required();
    basis_cmd->add_option("--seed", seed);
    basis_cmd->add_option("--max-trials", max_trials, "Default 10*m*n");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kYes;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kYes;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    const auto started = std::chrono::steady_clock::now();
    json rep;
    Outcome outcome;
    try {
        const auto load_map = [&] {
            const RatMatrix x = read_matrix_file(x_path);
            const RatMatrix y = read_matrix_file(y_path);
            rep["inputs"] = {{"x", matrix_input(x_path, x)}, {"y", matrix_input(y_path, y)}};
            if (!x.is_square()) throw DimensionError(x_path + ": X must be square");
            if (!y.is_square()) throw DimensionError(y_path + ": Y must be square");
            if (m_opt && *m_opt != x.rows())
                throw DimensionError("--m " + std::to_string(*m_opt) + " but X is " + std::to_string(x.rows()) +
                                     "x" + std::to_string(x.rows()));
            if (n_opt && *n_opt != y.rows())
                throw DimensionError("--n " + std::to_string(*n_opt) + " but Y is " + std::to_string(y.rows()) +
                                     "x" + std::to_string(y.rows()));
            return preserver::PreserverMap(x, y);
        };

        if (*classify_cmd) {
            rep["command"] = "classify";
            const RatMatrix a = read_matrix_file(matrix_path);
            rep["inputs"] = {{"matrix", matrix_input(matrix_path, a)}};
            outcome = cmd_classify(a);
        } else if (*witness_cmd) {
            rep["command"] = "witness sp";
            const RatMatrix a = read_matrix_file(matrix_path);
            rep["inputs"] = {{"matrix", matrix_input(matrix_path, a)}};
            outcome = cmd_witness_sp(a);
        } else if (*build_cmd) {
            rep["command"] = "build " + kind;
            const RatVector v = parse_vector(v_text);
            const RatVector w = parse_vector(w_text);
            rep["inputs"] = {{"v", vector_input(v)}, {"w", vector_input(w)}};
            outcome = cmd_build(kind, v, w);
        } else if (*key1_cmd) {
            rep["command"] = "key1";
            const RatMatrix x = read_matrix_file(matrix_path);
            rep["inputs"] = {{"matrix", matrix_input(matrix_path, x)}};
            outcome = cmd_key1(x);
        } else if (*pres_cmd) {
            rep["command"] = "preserver " + kind;
            const auto l = load_map();
            preserver::SearchOptions opts;
            opts.seed = seed;
            opts.trials = search_trials;
            outcome = cmd_preserver(kind, l, opts);
        } else if (*fals_cmd) {
            rep["command"] = "falsify " + kind;
            outcome = cmd_falsify(kind, load_map());
        } else if (*fuzz_cmd) {
            rep["command"] = "fuzz " + campaign;
            rep["inputs"] = {{"seed", seed}, {"trials", trials}};
            outcome = cmd_fuzz(campaign, seed, trials);
        } else if (*basis_cmd) {
            rep["command"] = "basis";
            const std::size_t m = *m_opt, n = *n_opt;
            if (n == 0 || m < n) throw InvalidInputError("basis needs m >= n >= 1");
            const std::size_t cap = max_trials ? max_trials : 10 * m * n;
            rep["inputs"] = {{"m", m}, {"n", n}, {"seed", seed}, {"max_trials", cap}};
            outcome = cmd_basis(m, n, seed, cap);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const VerificationFailure& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    } catch (const DimensionError& e) {
        err << "error: dimension mismatch: " << e.what() << '\n';
        return kInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }

    rep["exit_code"] = outcome.code;
    rep["verified"] = true;
    rep["result"] = outcome.result;
    rep["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    out << (table ? report::render_table(rep) : rep.dump(2) + "\n");
    return outcome.code;
}

}  // namespace semipos::cli
