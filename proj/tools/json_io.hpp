#pragma once

#include <json.hpp>

#include "geomr/tropical.hpp"

namespace geomr::io {

using json = nlohmann::json;

// Rationals travel as "p/q" strings; plain integers are accepted on input.
json to_json(const Rational& x);
json to_json(const Tableau& T);
json to_json(const KRectangle& r);
json to_json(const XPoint<Rational>& x);

Rational rational_from_json(const json& j);
// All parsers throw InvalidInput on malformed or out-of-range data.
Tableau tableau_from_json(const json& j);
// Accepts either {"n","k","B","L"} or a rectangular tableau {"n","rows"}.
KRectangle krect_from_json(const json& j);
XPoint<Rational> point_from_json(const json& j);

bool is_tableau(const json& j);
bool is_point(const json& j);

// The "factors" array of a request, checked for the expected length (0 = any).
const json& factors(const json& request, std::size_t expected);

}  // namespace geomr::io
