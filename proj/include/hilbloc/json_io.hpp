#pragma once

#include <json.hpp>

#include "hilbloc/cobordism.hpp"
#include "hilbloc/partitions.hpp"
#include "hilbloc/poly.hpp"
#include "hilbloc/rational.hpp"
#include "hilbloc/series.hpp"
#include "hilbloc/universal.hpp"

namespace hilbloc {

/// Insertion-ordered, so tables keep the reverse-lexicographic row order.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Rational& q);
/// [3, 1]
Json to_json(const Partition& p);
/// {"dim": d, "numbers": {"3,1": "p/q", ...}}
Json to_json(const ChernVector& v);
/// {"2": "p/q", "0": "1"}: exponent of the parameter to coefficient.
Json to_json(const Poly& p);
/// Array of coefficient strings, index = power of the variable.
Json to_json(const Series& s);
Json to_json(const PolySeries& s);
/// {"3,1": "c1sq*c2 + 3*c1sq", ...}
Json to_json(const UniversalChernTable& t);

ChernVector chern_vector_from_json(const Json& j);
Series series_from_json(const Json& j, const std::string& var = "z");

/// {"schema": 1, "command": name}
Json envelope(const std::string& command);

}  // namespace hilbloc
