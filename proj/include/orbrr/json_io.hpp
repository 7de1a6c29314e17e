#ifndef ORBRR_JSON_IO_HPP
#define ORBRR_JSON_IO_HPP

#include <string>

#include "json.hpp"
#include "orbrr/parser.hpp"
#include "orbrr/search.hpp"

namespace orbrr {

using nlohmann::json;

// rationals travel as {"num": "...", "den": "..."} integer-string pairs;
// on input a bare "p/q" string is accepted too
json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j);

json laurent_to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const json& j);

json rational_fn_to_json(const RationalFn& f);
RationalFn rational_fn_from_json(const json& j);

// descriptor schema: see docs/schema.json
VarietyDescriptor descriptor_from_json(const json& j);
json descriptor_to_json(const VarietyDescriptor& v);

// per-curve Riemann-Roch extras ({"curves": [...]}, index-aligned),
// merged into the descriptor's curve loci
void apply_curve_extras(VarietyDescriptor& v, const json& extras);

SearchTemplate search_template_from_json(const json& j);

json parsed_to_json(const ParsedSeries& ps, const VarietyDescriptor& v);
json report_to_json(const VerificationReport& rep);
json candidates_to_json(const std::vector<Candidate>& cs);

json load_json_file(const std::string& path);

}  // namespace orbrr

#endif
