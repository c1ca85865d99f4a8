#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logconcave/area_dynamics.hpp"
#include "logconcave/error.hpp"
#include "logconcave/parallelogram_oracle.hpp"
#include "logconcave/transversal.hpp"
#include "support/oracles.hpp"

#include <algorithm>
#include <random>

using namespace logconcave;

namespace {

ConvexPolygon edge_example() {
  return ConvexPolygon({{3, 0}, {0, ratio(1, 2)}, {-3, 0}, {0, ratio(-1, 2)}},
                       Symmetry::central);
}

// E is quadratic in S, so three values pin down both derivatives exactly.
std::pair<Scalar, Scalar> s_derivatives(const Scalar& a, const Scalar& b, const Scalar& s0) {
  const Scalar h = ratio(1, 7);
  const Scalar lo = e_polynomial(a, b, s0 - h), mid = e_polynomial(a, b, s0),
               hi = e_polynomial(a, b, s0 + h);
  return {(hi - lo) / (2 * h), (hi - 2 * mid + lo) / (h * h)};
}

}  // namespace

TEST_CASE("edge parameters of a concrete parallelogram") {
  const auto l = edge_example();
  const auto p = edge_case_params(l);
  CHECK(p.c == 3);
  CHECK(p.d == 0);
  CHECK(p.cot_alpha == ratio(1, 6));
  CHECK(p.cot_beta == ratio(-1, 6));
  CHECK(p.area_l == 3);
  CHECK(p.rotation == Matrix2::identity());

  const auto crossings = check_class_f(unit_square(), l).crossings;
  const auto at = [&](const Scalar& y) {
    return std::find(crossings.begin(), crossings.end(), Point(1, y)) != crossings.end();
  };
  CHECK(at((p.c - 1) * p.cot_alpha + p.d));
  CHECK(at((p.c - 1) * p.cot_beta + p.d));

  const auto forms = edge_closed_forms(p);
  CHECK(forms.g1 == g_value(unit_square(), l));
  CHECK(forms.g1_prime == g_derivative(unit_square(), l));
  CHECK(forms.area_ql == area_at(unit_square(), l, 1));

  const auto flipped = edge_case_params(linear_map(l, Matrix2{-1, 0, 0, -1}));
  CHECK(flipped.c == p.c);
  CHECK(flipped.cot_alpha == p.cot_alpha);
  CHECK(flipped.cot_beta == p.cot_beta);

  // The same shape turned a quarter: crossings on the horizontal edges.
  const auto turned = edge_case_params(linear_map(l, Matrix2{0, -1, 1, 0}));
  CHECK(turned.c == 3);
  CHECK(turned.cot_alpha - turned.cot_beta == ratio(1, 3));

  CHECK_THROWS_AS(edge_case_params(oracle::isosceles_corner(1, ratio(1, 4))), Error);
  CHECK_THROWS_AS(edge_case_params(scale(unit_square(), 2)), Error);
}

TEST_CASE("edge closed forms match the area dynamics on constructed pairs") {
  const auto q = unit_square();
  for (const auto& l : oracle::edge_case_polygons(40, 2)) {
    const auto p = edge_case_params(l);
    const auto forms = edge_closed_forms(p);
    CHECK(forms.g1 == g_value(q, l));
    CHECK(forms.g1_prime == g_derivative(q, l));
    CHECK(forms.area_ql == area_at(q, l, 1));
    const auto verdict = edge_case_check(p);
    const auto direct = property_b_check(q, l);
    CHECK(verdict.lhs == direct.lhs);
    CHECK(verdict.rhs == direct.rhs);
    CHECK(verdict.holds == (verdict.lhs <= verdict.rhs));
    CHECK(verdict.holds);
    const auto [area_l, bound] = edge_convexity_bound(p);
    CHECK(area_l <= bound);
  }
}

TEST_CASE("edge verdicts") {
  EdgeCaseParams p{ratio(1, 4), ratio(-1, 4), ratio(3, 2), 0, 1, Matrix2::identity()};
  const auto near = edge_case_check(p);
  CHECK(near.branch == OracleBranch::trivial_negative);
  CHECK(near.holds);
  CHECK(near.lhs <= 0);

  // c = 3, cot α - cot β = 1 and |L| at the convexity bound.
  p = {ratio(1, 2), ratio(-1, 2), 3, 0, 0, Matrix2::identity()};
  p.area_l = edge_convexity_bound(p).second;
  CHECK(p.area_l == 9);
  const auto far = edge_case_check(p);
  CHECK(far.branch == OracleBranch::main);
  CHECK(far.holds);
  const Scalar c = p.c;
  CHECK(c * c / ((c - 1) * (c - 1)) == ratio(9, 4));
  CHECK(1 + 2 / (c - 2) == 3);

  p.c = 1;
  CHECK_THROWS_AS(edge_case_check(p), Error);
  p = {ratio(-1, 2), ratio(1, 2), 3, 0, 1, Matrix2::identity()};
  CHECK_THROWS_AS(edge_case_check(p), Error);
}

TEST_CASE("an algebra identity behind the edge case") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> num(1, 1000);
  for (int i = 0; i < 200; ++i) {
    const Scalar c = 2 + ratio(num(rng), num(rng));
    const Scalar lhs = c * c / ((c - 1) * (c - 1));
    const Scalar rhs = 1 + (2 / (c - 2)) * (1 - (c / 2) / ((c - 1) * (c - 1)));
    CHECK(lhs == rhs);
    CHECK(lhs <= 1 + 2 / (c - 2));
  }
}

TEST_CASE("corner closed forms") {
  CHECK(g1_corner(1, 1) == 4);
  CHECK(g1_corner(ratio(1999, 1000), ratio(1999, 1000)) == ratio(4, 1000));
  CHECK_THROWS_AS(g1_corner(0, 1), Error);
  CHECK_THROWS_AS(g1_corner(1, 2), Error);

  CHECK(gprime_bound_corner(1, 1, ratio(7, 2)) == -8);
  const Scalar just_above = 3 + ratio(1, 1000000);
  const Scalar tiny = gprime_bound_corner(1, 1, just_above);
  CHECK(tiny < 0);
  CHECK(tiny > ratio(-1, 10000));
  CHECK_THROWS_AS(gprime_bound_corner(1, 1, 3), Error);
  CHECK_THROWS_AS(gprime_bound_corner(1, 1, 4), Error);

  CHECK(e_polynomial(1, 1, 3) == 4);
  CHECK(corner_boundary_forms(1, 1).value == 4);
}

TEST_CASE("the isosceles cut attains the bound") {
  for (const auto& [a, m] : {std::pair{Scalar(1), ratio(1, 4)}, std::pair{ratio(3, 2), ratio(1, 2)},
                             std::pair{ratio(1, 2), ratio(1, 8)}}) {
    const auto l = oracle::isosceles_corner(a, m);
    const auto p = corner_case_params(l);
    CHECK(p.a == a);
    CHECK(p.b == a);
    CHECK(p.s == 4 - 2 * a * m);
    const Scalar gp = g_derivative(unit_square(), l);
    CHECK(gp == gprime_corner(p));
    CHECK(gp == gprime_bound_corner(p.a, p.b, p.s));
    CHECK(gp == 8 - 4 * a / m);
  }
}

TEST_CASE("corner closed forms match the area dynamics on constructed pairs") {
  const auto q = unit_square();
  for (const auto& l : oracle::corner_case_polygons(40, 6)) {
    const auto p = corner_case_params(l);
    CHECK(g1_corner(p.a, p.b) == g_value(q, l));
    CHECK(gprime_corner(p) == g_derivative(q, l));
    CHECK(p.s == area_at(q, l, 1));
    CHECK(gprime_corner(p) <= gprime_bound_corner(p.a, p.b, p.s));
    const auto verdict = corner_case_check(p.a, p.b, p.s);
    if (verdict.holds) CHECK(property_b_check(q, l).holds);
  }
}

TEST_CASE("E at the lower end of S") {
  for (long i = 1; i < 16; ++i)
    for (long k = 1; k < 16; ++k) {
      const Scalar a = ratio(i, 8), b = ratio(k, 8);
      const Scalar s0 = 4 - a * b;
      const auto forms = corner_boundary_forms(a, b);
      CHECK(e_polynomial(a, b, s0) == forms.value);
      const auto [first, second] = s_derivatives(a, b, s0);
      CHECK(first == forms.first);
      CHECK(second == 32 - 4 * a - 4 * b);
      CHECK(forms.second == 18 * (4 - a * b));
      CHECK(forms.value > 0);
      CHECK(forms.first > 0);
      CHECK(second > 0);
      // E is quadratic: the second difference is the same at any S.
      CHECK(s_derivatives(a, b, s0 + ratio(1, 3)).second == second);
    }
}

TEST_CASE("corner verdicts on a rational grid") {
  std::size_t points = 0;
  for (long i = 1; i < 16; ++i)
    for (long k = 1; k < 16; ++k) {
      const Scalar a = ratio(i, 8), b = ratio(k, 8);
      const Scalar lo = 4 - a * b;
      for (long j = 1; j < 64; j += 9) {
        const Scalar s = lo + a * b * ratio(j, 64);
        const auto v = corner_case_check(a, b, s);
        CHECK(v.holds);
        CHECK(v.holds == (e_polynomial(a, b, s) >= 0));
        ++points;
      }
    }
  CHECK(points == 15 * 15 * 7);
  CHECK_THROWS_AS(corner_case_check(1, 1, 3), Error);
}

TEST_CASE("grids") {
  const auto corner = corner_grid(6);
  CHECK(corner.size() == 216);
  for (const auto& g : corner) {
    CHECK(g.verdict.holds);
    REQUIRE(g.e_value);
    CHECK(*g.e_value >= 0);
  }
  const auto edge = edge_grid(6);
  CHECK(edge.size() == 216);
  for (const auto& g : edge) CHECK(g.verdict.holds);
}
