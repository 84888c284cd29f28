#pragma once

#include <json.hpp>

#include "eistrace/biseries.hpp"
#include "eistrace/cyclotomic.hpp"

namespace eistrace {

// Serialized forms, bit-exact on round trip:
//   q-series  {"denom": L, "trunc": N, "coeffs": [[exponent, coeff], ...]}
//   cyclo     {"conductor": m, "coords": ["p/q", ...]}
//   Z-series  {"var": v, "lo": t0, "qdenom": L, "qtrunc": N, "rows": [qseries, ...]}
// Rational coefficients serialize as canonical "p/q" strings; exponents are in
// 1/denom units.  nlohmann's default object keeps keys sorted, so dumps are
// byte-deterministic.

nlohmann::json to_json(const Cyclo& c);
nlohmann::json to_json(const QSeries<Rational>& s);
nlohmann::json to_json(const QSeries<Cyclo>& s);
nlohmann::json to_json(const BiSeries<Rational>& s);
nlohmann::json to_json(const BiSeries<Cyclo>& s);

Cyclo cyclo_from_json(const nlohmann::json& j);
QSeries<Rational> qseries_rational_from_json(const nlohmann::json& j);
QSeries<Cyclo> qseries_cyclo_from_json(const nlohmann::json& j);
BiSeries<Rational> biseries_rational_from_json(const nlohmann::json& j);
BiSeries<Cyclo> biseries_cyclo_from_json(const nlohmann::json& j);

}  // namespace eistrace
