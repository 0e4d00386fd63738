#include "semipos/report.hpp"

#include <cstdint>
#include <iomanip>
#include <sstream>

#include "semipos/matrix_io.hpp"

namespace semipos::report {

json to_json(const Rational& r) { return r.str(); }

json to_json(const RatVector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

json to_json(const RatMatrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
    return out;
}

json to_json(const Permutation& p) {
    json out = json::array();
    for (auto i : p) out.push_back(i);
    return out;
}

namespace {

template <typename T>
json optional_json(const std::optional<T>& x) {
    return x ? to_json(*x) : json(nullptr);
}

json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

}  // namespace

json to_json(const classify::ClassReport& r) {
    json out;
    out["rows"] = r.rows;
    out["cols"] = r.cols;
    out["nonnegative"] = r.nonnegative;
    out["positive"] = r.positive;
    out["row_positive"] = r.row_positive;
    out["monomial"] = optional_bool(r.monomial);
    out["inverse_nonnegative"] = optional_bool(r.inverse_nonnegative);
    out["semipositive"] = r.semipositive;
    out["minimally_semipositive"] = r.minimally_semipositive;
    out["sp_witness"] = optional_json(r.sp_witness);
    out["inverse"] = optional_json(r.inv);
    out["left_inverse"] = optional_json(r.left_inv);
    return out;
}

json to_json(const construct::NpCaseTrace& t) {
    json out;
    out["step1"] = std::string(1, t.step1);
    json mid = json::array();
    for (char c : t.step2) mid.push_back(std::string(1, c));
    out["step2"] = mid;
    out["step3"] = std::string(1, t.step3);
    out["v_perm"] = to_json(t.v_perm);
    out["w_perm"] = to_json(t.w_perm);
    return out;
}

json to_json(const preserver::FalsifyCertificate& c) {
    json out;
    out["class"] = preserver::to_string(c.cls);
    out["kind"] = preserver::to_string(c.kind);
    out["case"] = preserver::to_string(c.proof_case);
    out["a"] = to_json(c.a);
    out[c.kind == preserver::CertificateKind::IntoViolation ? "image" : "preimage"] = optional_json(c.image);
    if (c.u) out["u"] = to_json(*c.u);
    if (c.z) out["z"] = to_json(*c.z);
    if (c.zero_row) out["zero_row"] = *c.zero_row;
    if (c.left_null) out["left_null"] = to_json(*c.left_null);
    return out;
}

json to_json(const preserver::PreserverVerdict& v) {
    json out;
    out["status"] = preserver::to_string(v.status);
    out["reason"] = preserver::to_string(v.reason);
    out["certificate"] = v.certificate ? to_json(*v.certificate) : json(nullptr);
    return out;
}

json to_json(const campaigns::CampaignSummary& s) {
    json out;
    out["name"] = s.name;
    out["seed"] = s.seed;
    out["trials"] = s.trials;
    out["passed"] = s.passed;
    json counters = json::object();
    for (const auto& [k, v] : s.counters) counters[k] = v;
    out["counters"] = counters;
    out["failures"] = s.failures;
    return out;
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    return Rational::parse(j.get<std::string>());
}

RatVector vector_from_json(const json& j) {
    std::vector<Rational> xs;
    for (const auto& e : j) xs.push_back(rational_from_json(e));
    return RatVector(std::move(xs));
}

RatMatrix matrix_from_json(const json& j) {
    std::vector<RatVector> rows;
    for (const auto& r : j) rows.push_back(vector_from_json(r));
    return RatMatrix::from_rows(rows);
}

std::string digest(const RatMatrix& m) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : format_matrix(m)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

namespace {

bool is_scalar_array(const json& j) {
    if (!j.is_array()) return false;
    for (const auto& e : j)
        if (e.is_structured()) return false;
    return true;
}

bool is_matrix(const json& j) {
    if (!j.is_array() || j.empty()) return false;
    for (const auto& e : j)
        if (!is_scalar_array(e) || e.empty()) return false;
    return true;
}

std::string scalar(const json& j) {
    return j.is_string() ? j.get<std::string>() : j.dump();
}

std::string row_text(const json& row) {
    std::string s;
    for (const auto& e : row) s += (s.empty() ? "" : "  ") + scalar(e);
    return s;
}

void render(const json& j, int indent, std::ostringstream& os) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (auto it = j.begin(); it != j.end(); ++it) {
        const json& v = it.value();
        os << pad << it.key() << ':';
        if (is_matrix(v)) {
            os << '\n';
            for (const auto& row : v) os << pad << "  [ " << row_text(row) << " ]\n";
        } else if (is_scalar_array(v)) {
            os << " [ " << row_text(v) << " ]\n";
        } else if (v.is_object()) {
            os << '\n';
            render(v, indent + 2, os);
        } else if (v.is_array()) {
            os << '\n';
            for (const auto& e : v) {
                if (e.is_object()) {
                    os << pad << "  -\n";
                    render(e, indent + 4, os);
                } else {
                    os << pad << "  - " << scalar(e) << '\n';
                }
            }
        } else {
            os << ' ' << scalar(v) << '\n';
        }
    }
}

}  // namespace

std::string render_table(const json& j) {
    std::ostringstream os;
    render(j, 0, os);
    return os.str();
}

}  // namespace semipos::report
