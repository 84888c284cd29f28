#include "eistrace/json_io.hpp"

namespace eistrace {

namespace {

template <class T, class CoeffOut>
nlohmann::json qseries_to_json(const QSeries<T>& s, CoeffOut&& out) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [e, v] : s.coeffs()) coeffs.push_back({e, out(v)});
  return {{"denom", s.denom()}, {"trunc", s.trunc()}, {"coeffs", std::move(coeffs)}};
}

template <class T, class CoeffIn>
QSeries<T> qseries_from_json(const nlohmann::json& j, CoeffIn&& in) {
  QSeries<T> s(j.at("denom").get<long>(), j.at("trunc").get<long>());
  for (const auto& entry : j.at("coeffs")) {
    if (!entry.is_array() || entry.size() != 2)
      throw std::invalid_argument("series coefficient entries must be [exponent, value]");
    s.set(entry[0].get<long>(), in(entry[1]));
  }
  return s;
}

template <class T, class RowOut>
nlohmann::json biseries_to_json(const BiSeries<T>& s, RowOut&& out) {
  nlohmann::json rows = nlohmann::json::array();
  for (long t = s.lo(); t < s.hi(); ++t) rows.push_back(out(s.row(t)));
  return {{"var", s.var()},
          {"lo", s.lo()},
          {"qdenom", s.qdenom()},
          {"qtrunc", s.qtrunc()},
          {"rows", std::move(rows)}};
}

template <class T, class RowIn>
BiSeries<T> biseries_from_json(const nlohmann::json& j, RowIn&& in) {
  long lo = j.at("lo").get<long>();
  const nlohmann::json& rows = j.at("rows");
  BiSeries<T> s(j.at("var").get<std::string>(), lo, lo + static_cast<long>(rows.size()),
                j.at("qdenom").get<long>(), j.at("qtrunc").get<long>());
  long t = lo;
  for (const auto& row : rows) s.set_row(t++, in(row));
  return s;
}

}  // namespace

nlohmann::json to_json(const Cyclo& c) {
  nlohmann::json coords = nlohmann::json::array();
  for (const Rational& r : c.coords()) coords.push_back(rational_to_string(r));
  return {{"conductor", c.conductor()}, {"coords", std::move(coords)}};
}

nlohmann::json to_json(const QSeries<Rational>& s) {
  return qseries_to_json(s, [](const Rational& v) { return rational_to_string(v); });
}

nlohmann::json to_json(const QSeries<Cyclo>& s) {
  return qseries_to_json(s, [](const Cyclo& v) { return to_json(v); });
}

nlohmann::json to_json(const BiSeries<Rational>& s) {
  return biseries_to_json(s, [](const QSeries<Rational>& r) { return to_json(r); });
}

nlohmann::json to_json(const BiSeries<Cyclo>& s) {
  return biseries_to_json(s, [](const QSeries<Cyclo>& r) { return to_json(r); });
}

Cyclo cyclo_from_json(const nlohmann::json& j) {
  std::vector<Rational> coords;
  for (const auto& c : j.at("coords")) coords.push_back(rational_from_string(c.get<std::string>()));
  return Cyclo(j.at("conductor").get<long>(), std::move(coords));
}

QSeries<Rational> qseries_rational_from_json(const nlohmann::json& j) {
  return qseries_from_json<Rational>(
      j, [](const nlohmann::json& v) { return rational_from_string(v.get<std::string>()); });
}

QSeries<Cyclo> qseries_cyclo_from_json(const nlohmann::json& j) {
  return qseries_from_json<Cyclo>(j, [](const nlohmann::json& v) { return cyclo_from_json(v); });
}

BiSeries<Rational> biseries_rational_from_json(const nlohmann::json& j) {
  return biseries_from_json<Rational>(
      j, [](const nlohmann::json& row) { return qseries_rational_from_json(row); });
}

BiSeries<Cyclo> biseries_cyclo_from_json(const nlohmann::json& j) {
  return biseries_from_json<Cyclo>(
      j, [](const nlohmann::json& row) { return qseries_cyclo_from_json(row); });
}

}  // namespace eistrace
