#pragma once

#include "json.hpp"

#include "frieze/frieze.hpp"
#include "frieze/triangulation.hpp"

namespace frieze {

using json = nlohmann::json;

/// {"m": 6, "entries": {"1,3": "4", ...}} with every pair p < q present.
json frieze_to_json(const FriezeMap& f);
/// Scalars may be strings ("p" or "p/q") or JSON integers. Throws
/// std::invalid_argument on missing pairs, bad keys or malformed values.
FriezeMap frieze_from_json(const json& j);

/// {"m": 6, "diagonals": [[2,4],[2,5],[2,6]]}. Other keys are ignored.
json triangulation_to_json(const Triangulation& t);
Triangulation triangulation_from_json(const json& j);

json report_to_json(const ValidationReport& r);

/// Comma-separated scalars, e.g. "3,7,5,3" or "1/2,1".
std::vector<Scalar> parse_scalar_list(std::string_view text);

}  // namespace frieze
