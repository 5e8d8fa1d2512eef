#pragma once

#include <json.hpp>

#include "epsring/corpus.hpp"
#include "epsring/separability.hpp"

namespace epsring {

using Json = nlohmann::ordered_json;

// ring files
GradedRing parse_ring(const std::string& text);  // ParseError / ValidationError
Json ring_to_json(const GradedRing& s);

// action files
TwistedPartialAction parse_action(const std::string& text);
Json action_to_json(const TwistedPartialAction& a);

Json scalar_vec_to_json(const Vec& v);
Vec scalar_vec_from_json(const FieldSpec& spec, const Json& j, std::size_t expect);

struct Report {
    int status = 0;
    Json doc;
};

Report classify_report(const GradedRing& s);
Report separability_report(const GradedRing& s);
Report frobenius_report(const GradedRing& s);
Report validate_ring_report(const GradedRing& s);
Report validate_action_report(const TwistedPartialAction& a);
Report crossed_product_report(const TwistedPartialAction& a, Json* ring_json_out);
Report extract_action_report(const GradedRing& s, const std::map<GroupElt, Vec>& sections,
                             bool auto_sections, std::uint64_t seed, std::uint64_t budget,
                             bool verify_roundtrip, Json* action_json_out);
Report example_report(const std::string& name, const FieldSpec& field, std::uint64_t seed,
                      Json* payload_out, bool* is_action);
Report corpus_run_report(std::uint64_t seed, std::size_t count, std::uint64_t budget);

// human-readable rendering of a report document
std::string render_text(const Json& doc);

}  // namespace epsring
