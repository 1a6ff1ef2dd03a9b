#include <concordia/errors.hpp>
#include <concordia/json_io.hpp>

#include "helpers.hpp"

#include <doctest.h>

using namespace concordia;
using nlohmann::json;

TEST_SUITE_BEGIN("jsonio");

TEST_CASE("scalars keep their arithmetic mode through the schema") {
  CHECK(scalar_from_json(json::parse("\"1/4\"")) == frac(1, 4));
  CHECK(scalar_from_json(json::parse("\"1/4\"")).is_rational());
  CHECK(scalar_from_json(json::parse("3")).is_rational());
  CHECK_FALSE(scalar_from_json(json::parse("0.25")).is_rational());
  CHECK(scalar_to_json(frac(-1, 2)) == json("-1/2"));
  CHECK(scalar_to_json(Scalar(-1)) == json("-1"));
  CHECK(scalar_to_json(Scalar::from_double(0.25)) == json(0.25));
}

TEST_CASE("round trip is the identity on random expressions") {
  CounterRng rng(31337);
  for (int t = 0; t < 50; ++t) {
    ExprPtr e = testutil::random_expr(rng, 2);
    std::string once = expr_to_json(*e).dump();
    ExprPtr back = parse_expr(once);
    CHECK(expr_to_json(*back).dump() == once);
    CHECK(testutil::grid_distance(*e, *back, 40) == 0.0);
  }
}

TEST_CASE("zero-width shuffle pieces survive serialization") {
  ExprPtr cb = shuffle_cb(frac(1, 4));  // six stated pieces, two zero-width
  json j = expr_to_json(*cb);
  CHECK(j["splits"].size() == 5);
  ExprPtr back = parse_expr(j.dump());
  CHECK(back->shuffle_data().piece_count() == 6);
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_expr("{\n  \"type\": \"M\",,\n}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() > 1);
  }
  CHECK_THROWS_AS(parse_expr("{\"type\":\"gauss\"}"), ValidationError);
  CHECK_THROWS_AS(parse_expr("{\"no_type\":1}"), ValidationError);
}

TEST_CASE("structural validation still applies to parsed input") {
  CHECK_THROWS_AS(
      parse_expr(R"({"type":"convex","parts":[{"w":"1/2","of":{"type":"M"}}]})"),
      ValidationError);
  CHECK_THROWS_AS(
      parse_expr(R"({"type":"shuffle","splits":["1/2"],"perm":[1,1],"flips":[1,1]})"),
      ValidationError);
}

TEST_CASE("region mesh export") {
  json mesh = region_mesh_json();
  REQUIRE(mesh["vertices"].size() == 6);
  REQUIRE(mesh["faces"].size() == 7);
  CHECK(mesh["vertices"][0]["label"] == "P1");
  CHECK(mesh["vertices"][0]["phi"] == "-1/2");
  CHECK(mesh["vertices"][0]["gamma"] == "-1");
  for (const auto& f : mesh["faces"]) {
    size_t n = f["cycle"].size();
    CHECK((n == 3 || n == 4));
    if (f["label"] == "F5") CHECK(n == 4);
  }

  std::string obj = region_mesh_obj();
  int vlines = 0, flines = 0;
  for (size_t pos = 0; pos < obj.size();) {
    size_t end = obj.find('\n', pos);
    std::string line = obj.substr(pos, end - pos);
    if (line.rfind("v ", 0) == 0) ++vlines;
    if (line.rfind("f ", 0) == 0) ++flines;
    pos = end + 1;
  }
  CHECK(vlines == 6);
  CHECK(flines == 8);  // six triangles plus the fanned quadrilateral
}

TEST_CASE("checkerboard csv has the resolution header") {
  Checkerboard cb = checkerboard_of(*CopulaExpr::pi(), 2);
  std::string csv = checkerboard_csv(cb);
  CHECK(csv.rfind("n=2\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}

TEST_CASE("measure and synthesis payloads include exactness and recipes") {
  MeasureVector m = all_measures(*CopulaExpr::m());
  json j = measures_to_json(m);
  CHECK(j["rho"] == "1");
  CHECK(j["exact"]["rho"] == true);

  auto r = attain(RegionPoint{frac(1, 4), frac(1, 2), frac(1, 2)});
  json s = synthesis_to_json(r);
  CHECK(s.contains("recipe"));
  CHECK(s.contains("expr"));
  CHECK(s["residual"] == 0.0);
}

TEST_SUITE_END();
