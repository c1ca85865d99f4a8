#include "logconcave/area_dynamics.hpp"
#include "logconcave/error.hpp"
#include "logconcave/transversal.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace logconcave {

namespace {

Point along(const ConvexPolygon& k, std::size_t edge, const Scalar& t) {
  const Point& a = k.vertex(edge);
  return a + t * (k.vertex(edge + 1) - a);
}

}  // namespace

std::vector<BoundaryComponent> boundary_components(const ConvexPolygon& k,
                                                   const ConvexPolygon& l) {
  if (!is_centrally_symmetric(k) || !is_centrally_symmetric(l))
    fail(ErrorCode::NotSymmetric, "boundary_components needs centrally symmetric bodies");
  require_class_f(k, l);

  const auto spans = boundary_spans(k, l, 1);
  std::map<std::size_t, const EdgeSpan*> by_edge;
  for (const auto& s : spans) by_edge[s.edge] = &s;

  struct Keyed {
    Scalar t_in;
    BoundaryComponent component;
  };
  std::vector<Keyed> found;
  for (const auto& s : spans) {
    if (!s.entry_edge_of_l) continue;
    BoundaryComponent c;
    c.first_edge = s.edge;
    c.entry_edge_of_l = *s.entry_edge_of_l;
    c.polyline.push_back(along(k, s.edge, s.t_in));
    const EdgeSpan* cur = &s;
    for (std::size_t guard = 0; guard <= k.size(); ++guard) {
      if (cur->exit_edge_of_l) break;
      c.polyline.push_back(k.vertex(cur->edge + 1));
      const auto next = by_edge.find((cur->edge + 1) % k.size());
      if (next == by_edge.end() || next->second->t_in != 0 || next->second->entry_edge_of_l)
        fail(ErrorCode::Internal, "boundary component breaks off at a vertex of K");
      cur = next->second;
    }
    if (!cur->exit_edge_of_l)
      fail(ErrorCode::Internal, "boundary component does not leave L");
    c.last_edge = cur->edge;
    c.exit_edge_of_l = *cur->exit_edge_of_l;
    c.polyline.push_back(along(k, cur->edge, cur->t_out));
    found.push_back({s.t_in, std::move(c)});
  }
  if (found.empty()) fail(ErrorCode::NoCrossings, "boundaries of K and L do not cross");
  if (found.size() % 2 != 0)
    fail(ErrorCode::InvariantViolation, "odd number of boundary components");

  std::sort(found.begin(), found.end(), [](const Keyed& a, const Keyed& b) {
    if (a.component.first_edge != b.component.first_edge)
      return a.component.first_edge < b.component.first_edge;
    return a.t_in < b.t_in;
  });

  const std::size_t n = found.size() / 2;
  std::vector<BoundaryComponent> out;
  out.reserve(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) {
    auto c = std::move(found[i].component);
    c.index = i;
    c.partner_index = (i + n) % found.size();
    out.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = out[i].polyline;
    const auto& b = out[i + n].polyline;
    bool negated = a.size() == b.size();
    for (std::size_t j = 0; negated && j < a.size(); ++j) negated = b[j] == -a[j];
    if (!negated)
      fail(ErrorCode::InvariantViolation, "component pairing is not an exact negation");
  }
  return out;
}

namespace {

const BoundaryComponent& component_at(const std::vector<BoundaryComponent>& comps,
                                      std::size_t i) {
  if (i >= comps.size()) fail(ErrorCode::OutOfRange, "component index out of range");
  return comps[i];
}

}  // namespace

Region extend_k(const ConvexPolygon& k, const ConvexPolygon& l, std::size_t i) {
  const auto comps = boundary_components(k, l);
  const auto& c = component_at(comps, i);
  const std::size_t count = (c.last_edge + k.size() - c.first_edge) % k.size() + 1;
  if (count == 1) {
    const Line line = edge_line(k, c.first_edge);
    return Strip{line.normal, line.offset};
  }
  std::vector<Line> lines;
  for (std::size_t e = 0; e < count; ++e) {
    const Line line = edge_line(k, c.first_edge + e);
    lines.push_back(line);
    lines.push_back(line.negated());
  }
  return polygon_from_halfplanes(lines, Symmetry::central);
}

Region extend_l(const ConvexPolygon& k, const ConvexPolygon& l, std::size_t i) {
  const auto comps = boundary_components(k, l);
  const auto& c = component_at(comps, i);
  const Line m1 = edge_line(l, c.entry_edge_of_l);
  const Line m2 = edge_line(l, c.exit_edge_of_l);
  if (parallel(m1.normal, m2.normal)) return Strip{m1.normal, m1.offset};
  const std::vector<Line> lines{m1, m1.negated(), m2, m2.negated()};
  return polygon_from_halfplanes(lines, Symmetry::central);
}

std::optional<Point> extension_apex(const ConvexPolygon& k, const ConvexPolygon& l,
                                    std::size_t i) {
  const auto comps = boundary_components(k, l);
  const auto& c = component_at(comps, i);
  const Line n1 = edge_line(k, c.first_edge);
  const Line n2 = edge_line(k, c.last_edge);
  if (parallel(n1.normal, n2.normal)) return std::nullopt;
  return intersect_lines(n1, Line{n2.normal, -n2.offset});
}

namespace {

std::vector<Direction> strip_candidates(const ConvexPolygon& k, const ConvexPolygon& l) {
  std::vector<Direction> out;
  for (std::size_t i = 0; i < k.size(); ++i) out.push_back(edge_outer_normal(k, i));
  for (std::size_t j = 0; j < l.size(); ++j) out.push_back(edge_outer_normal(l, j));
  for (int step = 0; step < 32; ++step) {
    const double angle = std::numbers::pi * step / 32.0;
    out.emplace_back(Scalar(std::lround(64 * std::cos(angle))),
                     Scalar(std::lround(64 * std::sin(angle))));
  }
  return out;
}

ConvexPolygon truncate(const Region& region, const Direction& u, const Scalar& width) {
  if (const auto* poly = std::get_if<ConvexPolygon>(&region)) return *poly;
  auto lines = halfplanes(region);
  lines.push_back({u, width});
  lines.push_back({-u, width});
  return polygon_from_halfplanes(lines, Symmetry::central);
}

}  // namespace

ExtendedPair bounding_strip(const ConvexPolygon& k, const ConvexPolygon& l,
                            const Region& k_ext, const Region& l_ext,
                            std::size_t source_component) {
  if (is_bounded(k_ext) && is_bounded(l_ext))
    return {std::get<ConvexPolygon>(k_ext), std::get<ConvexPolygon>(l_ext), std::nullopt,
            source_component};

  std::vector<Direction> open_normals;
  std::vector<Point> relevant(k.vertices());
  relevant.insert(relevant.end(), l.vertices().begin(), l.vertices().end());
  for (const Region* r : {&k_ext, &l_ext}) {
    if (const auto* poly = std::get_if<ConvexPolygon>(r))
      relevant.insert(relevant.end(), poly->vertices().begin(), poly->vertices().end());
    else
      open_normals.push_back(std::get<Strip>(*r).normal);
  }
  auto both = halfplanes(k_ext);
  const auto more = halfplanes(l_ext);
  both.insert(both.end(), more.begin(), more.end());
  const ConvexPolygon core = polygon_from_halfplanes(both);
  relevant.insert(relevant.end(), core.vertices().begin(), core.vertices().end());

  for (const auto& u : strip_candidates(k, l)) {
    if (u.dx == 0 && u.dy == 0) continue;
    if (std::any_of(open_normals.begin(), open_normals.end(),
                    [&](const Direction& s) { return parallel(u, s); }))
      continue;
    Scalar reach = 0;
    for (const auto& p : relevant) {
      Scalar v = abs(dot(u, p));
      if (v > reach) reach = std::move(v);
    }
    const Scalar width = 8 * reach;
    return {truncate(k_ext, u, 2 * width), truncate(l_ext, u, width),
            StripUsed{u, width}, source_component};
  }
  fail(ErrorCode::NoValidStrip, "no candidate strip direction is transversal");
}

std::vector<ExtendedPair> reduce_pair(const ConvexPolygon& k, const ConvexPolygon& l) {
  const auto comps = boundary_components(k, l);
  const std::size_t n = comps.size() / 2;
  std::vector<ExtendedPair> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(bounding_strip(k, l, extend_k(k, l, i), extend_l(k, l, i), i));
  return out;
}

AdditivityLedger additivity_ledger(const ConvexPolygon& k, const ConvexPolygon& l,
                                   const std::vector<ExtendedPair>& pairs) {
  AdditivityLedger ledger;
  ledger.g_total = g_value(k, l);
  ledger.g_prime_total = g_derivative(k, l);
  for (const auto& p : pairs) {
    ledger.g_sum += g_value(p.k_ext, p.l_ext);
    ledger.g_prime_sum += g_derivative(p.k_ext, p.l_ext);
  }
  ledger.additive = ledger.g_sum == ledger.g_total && ledger.g_prime_sum == ledger.g_prime_total;
  return ledger;
}

bool is_symmetric_parallelogram(const ConvexPolygon& p) {
  return p.size() == 4 && p.vertex(2) == -p.vertex(0) && p.vertex(3) == -p.vertex(1);
}

namespace {

int half_of(const Point& d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; }

// Counterclockwise angle from the positive x axis, compared exactly.
bool angle_less(const Point& a, const Point& b) {
  if (half_of(a) != half_of(b)) return half_of(a) < half_of(b);
  return cross(a, b) > 0;
}

}  // namespace

Normalization normalize_parallelogram(const ConvexPolygon& k_par, const ConvexPolygon& l) {
  if (!is_symmetric_parallelogram(k_par))
    fail(ErrorCode::NotAParallelogram, "normalize_parallelogram: K is not a symmetric parallelogram");
  const Scalar half(1, 2);
  std::size_t start = 0;
  for (std::size_t i = 1; i < 4; ++i) {
    const Point mi = k_par.vertex(i) + k_par.vertex(i + 1);
    const Point ms = k_par.vertex(start) + k_par.vertex(start + 1);
    if (angle_less(mi, ms)) start = i;
  }
  const Point& v0 = k_par.vertex(start);
  const Point& v1 = k_par.vertex(start + 1);
  const Matrix2 t = Matrix2::from_columns(half * (v0 + v1), half * (v1 - v0));
  return {t, linear_map(l, t.inverse())};
}

const char* to_string(SquareCase c) noexcept {
  switch (c) {
    case SquareCase::containment: return "containment";
    case SquareCase::edge_case: return "edge_case";
    case SquareCase::corner_case: return "corner_case";
    case SquareCase::swap_then_classify: return "swap_then_classify";
    case SquareCase::band: return "band";
  }
  return "unknown";
}

SquareCase classify_square_case(const ConvexPolygon& l_par) {
  const ConvexPolygon q = unit_square();
  const auto diag = check_class_f(q, l_par);
  if (!diag.in_class)
    fail(ErrorCode::NotTransversal, "classify_square_case: pair is not transversal");
  if (diag.crossings.empty()) return SquareCase::containment;

  const auto inside_q = std::count_if(l_par.vertices().begin(), l_par.vertices().end(),
                                      [&](const Point& v) { return contains_strictly(q, v); });
  const auto inside_l = std::count_if(q.vertices().begin(), q.vertices().end(),
                                      [&](const Point& v) { return contains_strictly(l_par, v); });
  if (inside_q == 4 || inside_l == 4) return SquareCase::containment;
  if (inside_q == 2 && inside_l == 0) return SquareCase::edge_case;
  if (inside_q == 2 && inside_l == 2) return SquareCase::corner_case;
  if (inside_q == 0 && inside_l == 2) return SquareCase::swap_then_classify;
  if (inside_q == 0 && inside_l == 0 && diag.crossings.size() == 4) return SquareCase::band;
  fail(ErrorCode::UnclassifiedConfiguration,
       "square case with " + std::to_string(inside_q) + " vertices of L in Q and " +
           std::to_string(inside_l) + " corners of Q in L");
}

namespace {

void classify_parallelograms(const ConvexPolygon& kp, const ConvexPolygon& lp,
                             std::size_t depth, std::vector<TerminalCase>& out);

void reduce_twice(const ConvexPolygon& k, const ConvexPolygon& l, std::size_t depth,
                  std::vector<TerminalCase>& out) {
  for (const auto& first : reduce_pair(k, l))
    for (const auto& second : reduce_pair(first.l_ext, first.k_ext))
      classify_parallelograms(second.l_ext, second.k_ext, depth, out);
}

void classify_parallelograms(const ConvexPolygon& kp, const ConvexPolygon& lp,
                             std::size_t depth, std::vector<TerminalCase>& out) {
  Normalization norm = normalize_parallelogram(kp, lp);
  SquareCase kind;
  try {
    kind = classify_square_case(norm.l_image);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnclassifiedConfiguration || depth >= 1) throw;
    reduce_twice(kp, lp, depth + 1, out);
    return;
  }
  bool swapped = false;
  if (kind == SquareCase::swap_then_classify) {
    norm = normalize_parallelogram(lp, kp);
    kind = classify_square_case(norm.l_image);
    swapped = true;
  }
  out.push_back({norm.t, std::move(norm.l_image), kind, depth, swapped});
}

}  // namespace

std::vector<TerminalCase> reduce_to_square_cases(const ConvexPolygon& k,
                                                 const ConvexPolygon& l) {
  std::vector<TerminalCase> out;
  reduce_twice(k, l, 0, out);
  return out;
}

}  // namespace logconcave
