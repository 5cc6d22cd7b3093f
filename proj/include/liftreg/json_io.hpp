#pragma once

// JSON wire formats. Bodies use
//   { "n": int, "vertices": [["p/q", ...], ...],
//     "facets": [ {"incidence": [...]}, ... ] }        (facets optional)
// and every rational travels as the string "p/q" (or "p" when q = 1).

#include <string>

#include <json.hpp>

#include "liftreg/classify.hpp"
#include "liftreg/generators.hpp"
#include "liftreg/lifting.hpp"

namespace liftreg {

using Json = nlohmann::ordered_json;

SimplicialPolytope body_from_json(const std::string& text);
Json body_to_json(const SimplicialPolytope& body);

Json to_json(const RatVec& v);
Json to_json(const IntVec& v);
Json to_json(const MaximalityReport& report);
Json to_json(const Verdict& verdict);
Json to_json(const OracleReport& report);
Json to_json(const AffineVolume& affine);
Json to_json(const UnimodEquiv& equiv);

Json error_json(const Error& error);

}  // namespace liftreg
