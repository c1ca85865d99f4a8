#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logconcave/error.hpp"
#include "logconcave/json_io.hpp"
#include "logconcave/random_pairs.hpp"

using namespace logconcave;

namespace {

ErrorCode parse_error(const std::string& text) {
  try {
    polygon_from_json(Json::parse(text));
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("polygons round trip") {
  for (std::uint64_t i = 0; i < 30; ++i) {
    const auto p = random_symmetric_pair(3, i);
    const Json j = polygon_json(p.k);
    CHECK(polygon_from_json(j) == p.k);
    CHECK(polygon_from_json(Json::parse(j.dump())).symmetry() == p.k.symmetry());
  }
  const auto j = polygon_json(scale(unit_square(), ratio(1, 3)));
  CHECK(j["vertices"][0][0] == "1/3");
  CHECK(j["symmetry"] == "unconditional");
}

TEST_CASE("lenient input") {
  const auto cw = polygon_from_json(Json::parse(R"({"vertices": [[1,1],[1,-1],[-1,-1],[-1,1]]})"));
  CHECK(cw == unit_square());
  CHECK(cw.symmetry() == Symmetry::unconditional);
  const auto mixed = polygon_from_json(
      Json::parse(R"({"vertices": [["3/2",0],[0,"3/2"],["-3/2",0],[0,"-6/4"]], "symmetry": "central"})"));
  CHECK(area(mixed) == ratio(9, 2));
  CHECK(mixed.symmetry() == Symmetry::central);
}

TEST_CASE("malformed input") {
  CHECK(parse_error("[1, 2]") == ErrorCode::Parse);
  CHECK(parse_error(R"({"points": []})") == ErrorCode::Parse);
  CHECK(parse_error(R"({"vertices": [[0,0],[1,0]]})") == ErrorCode::Parse);
  CHECK(parse_error(R"({"vertices": [[0,0],[1,0],[0,1,2]]})") == ErrorCode::Parse);
  CHECK(parse_error(R"({"vertices": [[0,0],[1.5,0],[0,1]]})") == ErrorCode::Parse);
  CHECK(parse_error(R"({"vertices": [[0,0],["x",0],[0,1]]})") == ErrorCode::Parse);
  CHECK(parse_error(R"({"vertices": [[0,0],[1,1],[2,2]]})") == ErrorCode::Parse);
  CHECK(parse_error(R"({"vertices": [[0,0],[1,0],[0,1]], "symmetry": 3})") == ErrorCode::Parse);
  CHECK(parse_error(R"({"vertices": [[0,0],[1,0],[1,1],[0,1]], "symmetry": "central"})") ==
        ErrorCode::Parse);
}

TEST_CASE("reports carry exact and decimal values") {
  const auto s = scalar_json(ratio(-7, 4));
  CHECK(s["exact"] == "-7/4");
  CHECK(s["decimal"] == -1.75);
  const auto w = to_json(certify_uniform_violation());
  CHECK(w["defect"]["decimal"].get<double>() < 0);
}
