#pragma once

#include <string>

#include <json.hpp>

#include "semipos/campaigns.hpp"
#include "semipos/classify.hpp"
#include "semipos/construct.hpp"
#include "semipos/matrix.hpp"
#include "semipos/preserver.hpp"

namespace semipos::report {

using json = nlohmann::ordered_json;

// Rationals travel as exact strings ("p" or "p/q"); vectors as arrays of
// them, matrices as arrays of rows.
json to_json(const Rational& r);
json to_json(const RatVector& v);
json to_json(const RatMatrix& m);
json to_json(const Permutation& p);
json to_json(const classify::ClassReport& r);
json to_json(const construct::NpCaseTrace& t);
json to_json(const preserver::FalsifyCertificate& c);
json to_json(const preserver::PreserverVerdict& v);
json to_json(const campaigns::CampaignSummary& s);

Rational rational_from_json(const json& j);
RatVector vector_from_json(const json& j);
RatMatrix matrix_from_json(const json& j);

// FNV-1a 64 of the canonical text form, as "fnv1a64:<16 hex digits>".
std::string digest(const RatMatrix& m);

// Indented key/value rendering of a report for terminals.
std::string render_table(const json& j);

}  // namespace semipos::report
