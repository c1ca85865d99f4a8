#include "logconcave/transversal.hpp"

#include "logconcave/error.hpp"

#include <algorithm>

namespace logconcave {

const char* to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::infinite_intersection: return "infinite_intersection";
    case ViolationKind::vertex_on_crossing: return "vertex_on_crossing";
    case ViolationKind::parallel_normals: return "parallel_normals";
  }
  return "unknown";
}

namespace {

bool is_vertex(const ConvexPolygon& p, const Point& x) {
  return std::find(p.vertices().begin(), p.vertices().end(), x) != p.vertices().end();
}

void add_unique(std::vector<Point>& points, const Point& x) {
  if (std::find(points.begin(), points.end(), x) == points.end()) points.push_back(x);
}

void add_violation(std::vector<Violation>& out, ViolationKind kind, const Point& x) {
  for (const auto& v : out)
    if (v.kind == kind && v.location == x) return;
  out.push_back({kind, x});
}

}  // namespace

TransversalityDiagnosis check_class_f(const ConvexPolygon& k, const ConvexPolygon& l) {
  TransversalityDiagnosis diag{true, {}, {}};
  std::vector<Point> common;

  for (std::size_t i = 0; i < k.size(); ++i) {
    const Point p0 = k.vertex(i);
    const Point d1 = k.vertex(i + 1) - p0;
    for (std::size_t j = 0; j < l.size(); ++j) {
      const Point q0 = l.vertex(j);
      const Point d2 = l.vertex(j + 1) - q0;
      const Point w = q0 - p0;
      const Scalar den = cross(d1, d2);
      if (den != 0) {
        const Scalar t = cross(w, d2) / den;
        const Scalar s = cross(w, d1) / den;
        if (t < 0 || t > 1 || s < 0 || s > 1) continue;
        const Point x = p0 + t * d1;
        add_unique(common, x);
        if (t == 0 || t == 1 || s == 0 || s == 1)
          add_violation(diag.violations, ViolationKind::vertex_on_crossing, x);
        continue;
      }
      if (cross(w, d1) != 0) continue;  // parallel, different lines
      // Collinear: overlap of the two parameter intervals along d1.
      const Scalar len2 = d1.x * d1.x + d1.y * d1.y;
      Scalar a = (w.x * d1.x + w.y * d1.y) / len2;
      Scalar b = a + (d2.x * d1.x + d2.y * d1.y) / len2;
      if (a > b) std::swap(a, b);
      const Scalar lo = a > 0 ? a : Scalar(0);
      const Scalar hi = b < 1 ? b : Scalar(1);
      if (lo > hi) continue;
      const Point x = p0 + lo * d1;
      add_unique(common, x);
      if (lo < hi) {
        add_violation(diag.violations, ViolationKind::infinite_intersection, x);
      } else {
        add_violation(diag.violations, ViolationKind::vertex_on_crossing, x);
        add_violation(diag.violations, ViolationKind::parallel_normals, x);
      }
    }
  }

  for (const auto& x : common)
    if (is_vertex(k, x) || is_vertex(l, x))
      add_violation(diag.violations, ViolationKind::vertex_on_crossing, x);

  diag.in_class = diag.violations.empty();
  if (diag.in_class) diag.crossings = std::move(common);
  return diag;
}

void require_class_f(const ConvexPolygon& k, const ConvexPolygon& l) {
  const auto diag = check_class_f(k, l);
  if (diag.in_class) return;
  const auto& v = diag.violations.front();
  fail(ErrorCode::NotTransversal, std::string("pair is not transversal: ") +
                                      to_string(v.kind) + " at (" +
                                      format_scalar(v.location.x) + ", " +
                                      format_scalar(v.location.y) + ")");
}

namespace {

Scalar squared_diameter(const ConvexPolygon& p) {
  Scalar best = 0;
  for (const auto& a : p.vertices())
    for (const auto& b : p.vertices()) {
      const Point d = a - b;
      Scalar s = d.x * d.x + d.y * d.y;
      if (s > best) best = std::move(s);
    }
  return best;
}

}  // namespace

PerturbedPair perturb_to_f(const ConvexPolygon& k, const ConvexPolygon& l,
                           const Scalar& eps) {
  if (eps <= 0) fail(ErrorCode::InvalidArgument, "perturb_to_f: eps must be positive");
  if (check_class_f(k, l).in_class) return {k, l, 0};
  const Scalar budget = eps * eps * squared_diameter(l);
  Scalar delta = eps;
  for (int attempt = 0; attempt < 20; ++attempt, delta /= 2) {
    ConvexPolygon moved = scale(l, 1 + delta);
    if (!check_class_f(k, moved).in_class) continue;
    if (hausdorff_distance(l, moved).squared > budget) continue;
    return {k, std::move(moved), delta};
  }
  fail(ErrorCode::PerturbationFailed, "no transversal scaling of L within 20 halvings");
}

}  // namespace logconcave
