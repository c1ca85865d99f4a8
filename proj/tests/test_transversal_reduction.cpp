#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logconcave/area_dynamics.hpp"
#include "logconcave/error.hpp"
#include "logconcave/parallelogram_oracle.hpp"
#include "logconcave/transversal.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace logconcave;

namespace {

ConvexPolygon diamond(const Scalar& r) {
  return ConvexPolygon({{r, 0}, {0, r}, {-r, 0}, {0, -r}}, Symmetry::central);
}

ConvexPolygon box(const Scalar& w, const Scalar& h) {
  return ConvexPolygon({{-w, -h}, {w, -h}, {w, h}, {-w, h}}, Symmetry::central);
}

// L crossing only the vertical edges of the square, apex (3, 0).
ConvexPolygon edge_example() {
  return ConvexPolygon({{3, 0}, {0, ratio(1, 2)}, {-3, 0}, {0, ratio(-1, 2)}},
                       Symmetry::central);
}

std::vector<oracle::Pair> random_pairs(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<oracle::Pair> out;
  while (out.size() < count)
    if (auto p = oracle::transversal_pair(rng, 12)) out.push_back(*p);
  return out;
}

bool has(const TransversalityDiagnosis& d, ViolationKind kind) {
  for (const auto& v : d.violations)
    if (v.kind == kind) return true;
  return false;
}

ConvexPolygon region_cap(const Region& r, const ConvexPolygon& p) {
  const auto lines = halfplanes(r);
  auto out = clip(p, lines);
  REQUIRE(out);
  return *out;
}

}  // namespace

TEST_CASE("class membership") {
  const auto q = unit_square();
  const auto same = check_class_f(q, q);
  CHECK_FALSE(same.in_class);
  CHECK(has(same, ViolationKind::infinite_intersection));

  const auto d = check_class_f(q, diamond(ratio(3, 2)));
  CHECK(d.in_class);
  CHECK(d.violations.empty());
  CHECK(d.crossings.size() == 8);

  const auto nested = check_class_f(q, scale(q, 2));
  CHECK(nested.in_class);
  CHECK(nested.crossings.empty());

  const auto touching = check_class_f(q, diamond(1));
  CHECK_FALSE(touching.in_class);
  CHECK(has(touching, ViolationKind::vertex_on_crossing));
  CHECK_FALSE(check_class_f(q, diamond(2)).in_class);

  CHECK_THROWS_AS(require_class_f(q, q), Error);
  CHECK_NOTHROW(require_class_f(q, diamond(ratio(3, 2))));
}

TEST_CASE("class membership agrees with brute force") {
  std::mt19937_64 rng(9);
  int seen = 0;
  while (seen < 300) {
    auto k = oracle::symmetric_polygon(rng, 8, 4);
    auto l = oracle::symmetric_polygon(rng, 8, 4);
    if (!k || !l) continue;
    ++seen;
    CHECK(check_class_f(*k, *l).in_class == oracle::crosses_transversally(*k, *l));
  }
}

TEST_CASE("perturbation into the class") {
  const auto q = unit_square();
  const auto moved = perturb_to_f(q, q, ratio(1, 10));
  CHECK(moved.delta == ratio(1, 10));
  CHECK(moved.l == scale(q, ratio(11, 10)));
  CHECK(check_class_f(moved.k, moved.l).crossings.empty());

  const auto d = diamond(ratio(3, 2));
  const auto kept = perturb_to_f(q, d, ratio(1, 10));
  CHECK(kept.delta == 0);
  CHECK(kept.l == d);

  const auto touching = perturb_to_f(q, diamond(1), ratio(1, 64));
  CHECK(touching.delta > 0);
  CHECK(touching.delta <= ratio(1, 64));
  CHECK(check_class_f(touching.k, touching.l).in_class);
  CHECK(oracle::crosses_transversally(touching.k, touching.l));
}

TEST_CASE("boundary components") {
  const auto q = unit_square();
  const auto comps = boundary_components(q, diamond(ratio(3, 2)));
  REQUIRE(comps.size() == 4);
  for (const auto& c : comps) {
    CHECK(c.first_edge == c.last_edge);
    const auto& partner = comps[c.partner_index];
    REQUIRE(partner.polyline.size() == c.polyline.size());
    for (std::size_t i = 0; i < c.polyline.size(); ++i)
      CHECK(partner.polyline[i] == -c.polyline[i]);
  }

  const auto edge = boundary_components(q, edge_example());
  REQUIRE(edge.size() == 2);
  for (const auto& c : edge) {
    CHECK(abs(c.entry().x) == 1);
    CHECK(abs(c.exit().x) == 1);
  }

  CHECK_THROWS_AS(boundary_components(q, scale(q, 2)), Error);
  CHECK_THROWS_AS(boundary_components(q, q), Error);

  for (const auto& [k, l] : random_pairs(40, 3)) {
    const auto cs = boundary_components(k, l);
    CHECK(cs.size() % 2 == 0);
    CHECK(cs.size() == check_class_f(k, l).crossings.size() / 2);
    for (const auto& c : cs) CHECK(cs[c.partner_index].entry() == -c.entry());
  }
}

TEST_CASE("extensions") {
  const auto q = unit_square();
  const auto k_ext = extend_k(q, edge_example(), 0);
  REQUIRE(std::holds_alternative<Strip>(k_ext));
  const auto& s = std::get<Strip>(k_ext);
  CHECK(parallel(s.normal, Direction(1, 0)));
  CHECK(contains(k_ext, Point(1, 1000)));
  CHECK_FALSE(contains(k_ext, Point(ratio(101, 100), 0)));

  // The diamond is a parallelogram, so each component's extension is itself.
  const auto d = diamond(ratio(3, 2));
  for (std::size_t i = 0; i < 4; ++i) {
    const auto l_ext = extend_l(q, d, i);
    REQUIRE(std::holds_alternative<ConvexPolygon>(l_ext));
    CHECK(std::get<ConvexPolygon>(l_ext) == d);
  }

  // A wide box: each component runs from the bottom edge to the top edge.
  const auto wide = box(3, ratio(1, 2));
  const auto strip = extend_l(q, wide, 0);
  REQUIRE(std::holds_alternative<Strip>(strip));
  CHECK(parallel(std::get<Strip>(strip).normal, Direction(0, 1)));

  for (const auto& [k, l] : random_pairs(40, 5)) {
    const auto cs = boundary_components(k, l);
    for (std::size_t i = 0; i < cs.size() / 2; ++i) {
      const auto ke = extend_k(k, l, i);
      const auto le = extend_l(k, l, i);
      for (const auto& v : k.vertices()) CHECK(contains(ke, v));
      for (const auto& v : l.vertices()) CHECK(contains(le, v));
      for (const auto& x : cs[i].polyline) {
        CHECK(contains(ke, x));
        CHECK(contains(le, x));
      }
      if (const auto* p = std::get_if<ConvexPolygon>(&ke)) {
        CHECK(p->size() % 2 == 0);
        CHECK(is_centrally_symmetric(*p));
        CHECK(contains(*p, k));
      }
      const bool segment = cs[i].first_edge == cs[i].last_edge;
      CHECK(std::holds_alternative<Strip>(ke) == segment);
      CHECK(extension_apex(k, l, i).has_value() == !segment);
    }
  }
}

TEST_CASE("strip truncation leaves the relevant intersection alone") {
  const auto q = unit_square();
  {
    const auto d = diamond(ratio(3, 2));
    const auto ke = extend_k(q, d, 0);
    const auto le = extend_l(q, d, 0);
    REQUIRE(std::holds_alternative<Strip>(ke));
    REQUIRE(std::holds_alternative<ConvexPolygon>(le));
    const auto pair = bounding_strip(q, d, ke, le, 0);
    REQUIRE(pair.strip_used);
    CHECK(*intersect(pair.k_ext, pair.l_ext) == region_cap(ke, std::get<ConvexPolygon>(le)));
    CHECK(check_class_f(pair.k_ext, pair.l_ext).in_class);
  }

  for (const auto& [k, l] : random_pairs(60, 7)) {
    const auto cs = boundary_components(k, l);
    for (std::size_t i = 0; i < cs.size() / 2; ++i) {
      const auto ke = extend_k(k, l, i);
      const auto le = extend_l(k, l, i);
      const auto pair = bounding_strip(k, l, ke, le, i);
      CHECK(pair.strip_used.has_value() != (is_bounded(ke) && is_bounded(le)));
      if (!pair.strip_used) {
        CHECK(pair.k_ext == std::get<ConvexPolygon>(ke));
        CHECK(pair.l_ext == std::get<ConvexPolygon>(le));
      }
      // Both regions meet in a bounded set when the pair is transversal.
      std::vector<Line> lines = halfplanes(ke);
      for (const auto& h : halfplanes(le)) lines.push_back(h);
      const auto direct = polygon_from_halfplanes(lines);
      CHECK(*intersect(pair.k_ext, pair.l_ext) == direct);
      CHECK(check_class_f(pair.k_ext, pair.l_ext).in_class);
      CHECK(contains(pair.k_ext, k));
      CHECK(contains(pair.l_ext, l));
    }
  }
}

TEST_CASE("reduction of the square against the diamond") {
  const auto q = unit_square();
  const auto d = diamond(ratio(3, 2));
  const auto pairs = reduce_pair(q, d);
  CHECK(pairs.size() == 2);
  const auto ledger = additivity_ledger(q, d, pairs);
  CHECK(ledger.additive);
  CHECK(ledger.g_total == 4);
  CHECK(ledger.g_sum == 4);
  CHECK(ledger.g_prime_total == -8);
  CHECK(ledger.g_prime_sum == -8);
}

TEST_CASE("an edge configuration reduces to itself") {
  const auto q = unit_square();
  const auto l = edge_example();
  const auto pairs = reduce_pair(q, l);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].l_ext == l);
  CHECK(*intersect(pairs[0].k_ext, pairs[0].l_ext) == *intersect(q, l));
  CHECK(g_value(pairs[0].k_ext, pairs[0].l_ext) == g_value(q, l));
}

TEST_CASE("ledger, closure and soundness on random pairs") {
  for (const auto& [k, l] : random_pairs(60, 11)) {
    const auto pairs = reduce_pair(k, l);
    CHECK(pairs.size() == boundary_components(k, l).size() / 2);
    CHECK(additivity_ledger(k, l, pairs).additive);
    const Scalar base = area(*intersect(k, l));
    bool all_hold = true;
    for (const auto& p : pairs) {
      CHECK(check_class_f(p.k_ext, p.l_ext).in_class);
      CHECK(base <= area(*intersect(p.k_ext, p.l_ext)));
      all_hold = all_hold && property_b_check(p.k_ext, p.l_ext).holds;
    }
    if (all_hold) CHECK(property_b_check(k, l).holds);
  }
}

TEST_CASE("normalization to the square") {
  const auto q = unit_square();
  const auto d = diamond(ratio(3, 2));
  const auto id = normalize_parallelogram(q, d);
  CHECK(id.t == Matrix2::identity());
  CHECK(id.l_image == d);

  const auto k = box(6, 3);
  const auto l = diamond(7);
  const auto n = normalize_parallelogram(k, l);
  CHECK(n.t == Matrix2{6, 0, 0, 3});
  CHECK(n.l_image == linear_map(l, n.t.inverse()));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> pick(1, 400);
  for (int i = 0; i < 25; ++i) {
    const Scalar a = ratio(pick(rng), 100);
    CHECK(area_at(k, l, a) == n.t.det() * area_at(q, n.l_image, a));
  }
  const auto before = property_b_check(k, l);
  const auto after = property_b_check(q, n.l_image);
  CHECK(before.holds == after.holds);
  const Scalar det2 = n.t.det() * n.t.det();
  CHECK(before.lhs == det2 * after.lhs);
  CHECK(before.rhs == det2 * after.rhs);

  CHECK_THROWS_AS(normalize_parallelogram(ConvexPolygon({{2, 0}, {1, 1}, {-1, 1}, {-2, 0}, {-1, -1}, {1, -1}}), l),
                  Error);
}

TEST_CASE("square case classification") {
  CHECK(classify_square_case(scale(unit_square(), 3)) == SquareCase::containment);
  CHECK(classify_square_case(edge_example()) == SquareCase::edge_case);
  CHECK(classify_square_case(oracle::isosceles_corner(1, ratio(1, 4))) == SquareCase::corner_case);
  CHECK(std::string(to_string(SquareCase::swap_then_classify)) == "swap_then_classify");

  // A long parallelogram through the top and bottom edges.
  const ConvexPolygon band({{ratio(1, 2), -5}, {ratio(3, 4), 5}, {ratio(-1, 2), 5}, {ratio(-3, 4), -5}},
                           Symmetry::central);
  CHECK(classify_square_case(band) == SquareCase::band);
  const auto b = property_b_check(unit_square(), band);
  CHECK(b.g1_prime == 0);
  CHECK(b.lhs == b.rhs);

  // No vertex of either inside the other and four components: the diamond.
  try {
    classify_square_case(diamond(ratio(3, 2)));
    FAIL("expected UnclassifiedConfiguration");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnclassifiedConfiguration);
  }
  CHECK(classify_square_case(box(ratio(3, 2), ratio(1, 4))) == SquareCase::band);
}

TEST_CASE("terminal cases of random pairs") {
  for (const auto& [k, l] : random_pairs(60, 13)) {
    const auto cases = reduce_to_square_cases(k, l);
    CHECK_FALSE(cases.empty());
    for (const auto& c : cases) {
      CHECK(c.t.det() > 0);
      CHECK(c.kind != SquareCase::swap_then_classify);
      if (c.kind == SquareCase::edge_case) {
        const auto p = edge_case_params(c.l_image);
        const auto forms = edge_closed_forms(p);
        CHECK(forms.g1 == g_value(unit_square(), c.l_image));
        CHECK(edge_case_check(p).holds);
      } else if (c.kind == SquareCase::corner_case) {
        const auto p = corner_case_params(c.l_image);
        CHECK(g1_corner(p.a, p.b) == g_value(unit_square(), c.l_image));
        CHECK(corner_case_check(p.a, p.b, p.s).holds);
      } else if (c.kind == SquareCase::band) {
        const auto b = property_b_check(unit_square(), c.l_image);
        CHECK(b.lhs == b.rhs);
      }
      CHECK(property_b_check(unit_square(), c.l_image).holds);
    }
  }
}
