#include <doctest.h>

#include "hilbloc/error.hpp"
#include "hilbloc/json_io.hpp"

using namespace hilbloc;

TEST_CASE("rationals and partitions") {
  CHECK(to_json(ratio(-3, 6)) == "-1/2");
  CHECK(to_json(Rational(7)) == "7");
  CHECK(to_json(Partition({3, 1})) == Json::array({3, 1}));
}

TEST_CASE("Chern vectors round trip") {
  const auto v = cp_product_class(std::vector<int>{2, 1});
  const Json j = to_json(v);
  CHECK(j["dim"] == 3);
  CHECK(j["numbers"]["3"] == "6");
  CHECK(j["numbers"].begin().key() == "3");  // canonical order
  CHECK(chern_vector_from_json(j) == v);
  CHECK(chern_vector_from_json(Json::parse(j.dump())) == v);
  Json bad = j;
  bad["numbers"].erase("3");
  CHECK_THROWS_AS(chern_vector_from_json(bad), Error);
}

TEST_CASE("series round trip") {
  Series s("z", 3, {1, ratio(1, 2), 0, -4});
  const Json j = to_json(s);
  CHECK(j == Json::array({"1", "1/2", "0", "-4"}));
  CHECK(series_from_json(j) == s);
  CHECK_THROWS_AS(series_from_json(Json::array({"x"})), Error);
  CHECK(to_json(Poly(std::vector<Rational>{0, ratio(3, 2)})).dump() == R"({"1":"3/2"})");
}

TEST_CASE("envelope") {
  const Json e = envelope("chern");
  CHECK(e["schema"] == kSchemaVersion);
  CHECK(e["command"] == "chern");
  CHECK(e.begin().key() == "schema");
}
