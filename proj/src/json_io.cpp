#include "hilbloc/json_io.hpp"

#include "hilbloc/error.hpp"

namespace hilbloc {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const ChernVector& v) {
  Json numbers = Json::object();
  for (const auto& [lambda, c] : v.numbers()) numbers[lambda.key()] = to_string(c);
  return Json{{"dim", v.dim()}, {"numbers", numbers}};
}

Json to_json(const Poly& p) {
  Json out = Json::object();
  for (int i = 0; i <= p.degree(); ++i)
    if (sgn(p[i]) != 0) out[std::to_string(i)] = to_string(p[i]);
  return out;
}

Json to_json(const Series& s) {
  Json out = Json::array();
  for (const auto& c : s.coeffs()) out.push_back(to_string(c));
  return out;
}

Json to_json(const PolySeries& s) {
  Json out = Json::array();
  for (const auto& c : s.coeffs()) out.push_back(to_json(c));
  return out;
}

Json to_json(const UniversalChernTable& t) {
  Json out = Json::object();
  for (const auto& [lambda, p] : t.polys) out[lambda.key()] = to_string(p);
  return out;
}

ChernVector chern_vector_from_json(const Json& j) {
  try {
    const int dim = j.at("dim").get<int>();
    ChernMap numbers;
    for (const auto& [key, value] : j.at("numbers").items())
      numbers.emplace(Partition::from_key(key), parse_rational(value.get<std::string>()));
    return ChernVector(dim, std::move(numbers));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed Chern vector: ") + e.what());
  }
}

Series series_from_json(const Json& j, const std::string& var) {
  if (!j.is_array() || j.empty()) throw Error("series must be a non-empty array");
  Series s(var, static_cast<int>(j.size()) - 1);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) throw Error("series coefficients must be strings");
    s[static_cast<int>(i)] = parse_rational(j[i].get<std::string>());
  }
  return s;
}

Json envelope(const std::string& command) { return Json{{"schema", kSchemaVersion}, {"command", command}}; }

}  // namespace hilbloc
