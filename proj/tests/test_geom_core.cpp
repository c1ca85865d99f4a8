#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logconcave/error.hpp"
#include "logconcave/geometry.hpp"
#include "support/oracles.hpp"

#include <cmath>
#include <random>

using namespace logconcave;

namespace {

ConvexPolygon box(const Scalar& x0, const Scalar& x1, const Scalar& y0, const Scalar& y1) {
  return ConvexPolygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

ConvexPolygon triangle() {
  return ConvexPolygon({{-5, -2}, {5, -2}, {0, 3}});
}

ConvexPolygon random_polygon(std::mt19937_64& rng) {
  for (;;)
    if (auto p = oracle::symmetric_polygon(rng, 12, 16)) return *p;
}

}  // namespace

TEST_CASE("scalars parse, print and canonicalize") {
  CHECK(parse_scalar("6/4") == ratio(3, 2));
  CHECK(format_scalar(parse_scalar("-6/4")) == "-3/2");
  CHECK(format_scalar(parse_scalar("7")) == "7");
  CHECK(parse_scalar(" 2 ") == 2);
  CHECK(ratio(4, -6) == ratio(-2, 3));
  CHECK(format_scalar(ratio(10, 4)) == "5/2");
  CHECK_THROWS_AS(ratio(1, 0), Error);
  CHECK_THROWS_AS(parse_scalar("1/0"), Error);
  CHECK_THROWS_AS(parse_scalar("abc"), Error);
  CHECK_THROWS_AS(parse_scalar(""), Error);
  CHECK(to_double(ratio(1, 3)) == doctest::Approx(1.0 / 3));
  CHECK(from_double(0.375) == ratio(3, 8));
}

TEST_CASE("orientation") {
  CHECK(orientation({0, 0}, {1, 0}, {0, 1}) == 1);
  CHECK(orientation({0, 0}, {1, 0}, {2, 0}) == 0);
  CHECK(orientation({0, 0}, {0, 1}, {1, 0}) == -1);
}

TEST_CASE("convex hull") {
  const std::vector<Point> corners{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
  CHECK(convex_hull(corners) == unit_square());
  CHECK(convex_hull(corners).size() == 4);

  const std::vector<Point> tri{{-5, -2}, {0, 3}, {5, -2}};
  CHECK(convex_hull(tri) == triangle());

  std::vector<Point> with_center = corners;
  with_center.emplace_back(0, 0);
  with_center.emplace_back(1, 0);  // on an edge
  CHECK(convex_hull(with_center) == unit_square());

  const std::vector<Point> line{{0, 0}, {1, 1}, {2, 2}};
  CHECK_THROWS_AS(convex_hull(line), Error);
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {1, 0}}), Error);
  CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, Symmetry::central), Error);
  CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {0, 1}, {1, 1}, {1, 0}}), Error);  // clockwise
  CHECK_NOTHROW(ConvexPolygon({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}, Symmetry::unconditional));
}

TEST_CASE("areas") {
  CHECK(area(unit_square()) == 4);
  CHECK(area(box(-6, 6, -3, 1)) == 48);
  CHECK(area(triangle()) == 25);
}

TEST_CASE("intersection") {
  const auto q = unit_square();
  CHECK(*intersect(q, q) == q);
  CHECK(*intersect(q, scale(q, 2)) == q);
  CHECK_FALSE(intersect(q, box(1, 3, -1, 1)).has_value());  // shared edge only
  CHECK_FALSE(intersect(q, box(2, 3, 2, 3)).has_value());

  // Triangle clipped by y <= 1 by hand: everything below the line where the
  // width is 2(3 - y).
  const auto k = box(-6, 6, -3, 1);
  const auto inter = intersect(k, triangle());
  REQUIRE(inter);
  CHECK(area(*inter) == 21);
  const double naive =
      oracle::intersection_area(oracle::to_doubles(triangle()), oracle::to_doubles(k));
  CHECK(naive == doctest::Approx(21).epsilon(1e-12));
}

TEST_CASE("intersection area agrees with the naive clipper on random polygons") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_polygon(rng);
    const auto b = random_polygon(rng);
    const auto inter = intersect(a, b);
    const double exact = inter ? to_double(area(*inter)) : 0.0;
    const double naive = oracle::intersection_area(oracle::to_doubles(a), oracle::to_doubles(b));
    CHECK(exact == doctest::Approx(naive).epsilon(1e-9));
    if (inter) {
      CHECK(contains(a, *inter));
      CHECK(contains(b, *inter));
    }
  }
}

TEST_CASE("scaling and linear maps") {
  const auto q = unit_square();
  CHECK(scale(q, ratio(1, 2)) == box(ratio(-1, 2), ratio(1, 2), ratio(-1, 2), ratio(1, 2)));
  CHECK(area(scale(q, ratio(1, 2))) == 1);
  CHECK(area(scale(q, 2)) == 16);
  CHECK_THROWS_AS(scale(q, 0), Error);

  CHECK(linear_map(q, Matrix2::identity()) == q);
  const auto stretched = linear_map(q, Matrix2{2, 0, 0, 3});
  CHECK(stretched == box(-2, 2, -3, 3));
  CHECK(area(stretched) == 24);
  CHECK_THROWS_AS(linear_map(q, Matrix2{1, 2, 2, 4}), Error);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_polygon(rng);
    const Scalar a = ratio(entry(rng) + 6, 3);
    CHECK(area(scale(p, a)) == a * a * area(p));
    Matrix2 t{entry(rng), entry(rng), entry(rng), entry(rng)};
    if (t.det() == 0) continue;
    CHECK(area(linear_map(p, t)) == abs(t.det()) * area(p));
    CHECK(linear_map(linear_map(p, t), t.inverse()) == p);
  }
}

TEST_CASE("support and normals") {
  const auto q = unit_square();
  const auto right = support(q, Direction(1, 0));
  CHECK(right.value == 1);
  CHECK(right.argmax.x == 1);
  CHECK(support(q, Direction(1, 1)).value == 2);

  for (std::size_t i = 0; i < q.size(); ++i) {
    const auto n = edge_outer_normal(q, i);
    const Point e = q.vertex(i + 1) - q.vertex(i);
    CHECK(n.dx * e.x + n.dy * e.y == 0);
    if (q.vertex(i).x == 1 && q.vertex(i + 1).x == 1) CHECK(same_direction(n, Direction(1, 0)));
    if (q.vertex(i).y == 1 && q.vertex(i + 1).y == 1) CHECK(same_direction(n, Direction(0, 1)));
  }

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> c(-9, 9);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_polygon(rng);
    Direction u(c(rng), c(rng));
    if (u.dx == 0 && u.dy == 0) continue;
    CHECK(support(p, u).value + support(p, -u).value > 0);
  }
}

TEST_CASE("containment") {
  const auto q = unit_square();
  CHECK(contains(q, Point(1, 0)));
  CHECK_FALSE(contains_strictly(q, Point(1, 0)));
  CHECK(contains_strictly(q, Point(0, 0)));
  CHECK(contains(scale(q, 2), q));
  CHECK_FALSE(contains(q, scale(q, 2)));
}

TEST_CASE("symmetry detection") {
  CHECK(detect_symmetry(unit_square()) == Symmetry::unconditional);
  CHECK(detect_symmetry(box(-6, 6, -3, 3)) == Symmetry::unconditional);
  CHECK(detect_symmetry(box(-6, 6, -3, 1)) == Symmetry::none);
  CHECK(detect_symmetry(ConvexPolygon({{2, 0}, {1, 1}, {-2, 0}, {-1, -1}})) == Symmetry::central);
  CHECK(is_centrally_symmetric(unit_square()));
  CHECK_FALSE(is_centrally_symmetric(triangle()));
  CHECK(parse_symmetry("central") == Symmetry::central);
  CHECK_THROWS_AS(parse_symmetry("mirror"), Error);
}

TEST_CASE("hausdorff distance") {
  const auto q = unit_square();
  CHECK(hausdorff_distance(q, q).squared == 0);
  const auto d = hausdorff_distance(q, scale(q, 2));
  CHECK(d.squared == 2);
  CHECK(d.lower <= ratio(141421356238, 100000000000));
  CHECK(d.upper >= ratio(141421356237, 100000000000));
  CHECK(d.lower * d.lower <= 2);
  CHECK(d.upper * d.upper >= 2);
  CHECK(to_double(d.upper - d.lower) < 1e-12);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_polygon(rng);
    const auto b = random_polygon(rng);
    CHECK(hausdorff_distance(a, b).squared == hausdorff_distance(b, a).squared);
  }
}

TEST_CASE("regions") {
  const Region strip = Strip{Direction(1, 0), 1};
  CHECK_FALSE(is_bounded(strip));
  CHECK(contains(strip, Point(1, 100)));
  CHECK_FALSE(contains(strip, Point(2, 0)));
  CHECK(halfplanes(strip).size() == 2);
  CHECK(halfplanes(unit_square()).size() == 4);

  const std::vector<Line> lines = halfplanes(unit_square());
  CHECK(polygon_from_halfplanes(lines) == unit_square());
  const std::vector<Line> open{lines[0], lines[2]};
  CHECK_THROWS_AS(polygon_from_halfplanes(open), Error);
}
