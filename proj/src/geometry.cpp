#include "logconcave/geometry.hpp"

#include "logconcave/error.hpp"

#include <algorithm>
#include <string>

namespace logconcave {

bool same_direction(const Direction& u, const Direction& v) {
  return cross(u, v) == 0 && u.dx * v.dx + u.dy * v.dy > 0;
}

bool parallel(const Direction& u, const Direction& v) { return cross(u, v) == 0; }

Scalar dot(const Direction& u, const Point& p) { return u.dx * p.x + u.dy * p.y; }

Scalar cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }

Scalar cross(const Direction& a, const Direction& b) {
  return a.dx * b.dy - a.dy * b.dx;
}

Point intersect_lines(const Line& a, const Line& b) {
  const Scalar det = cross(a.normal, b.normal);
  if (det == 0) fail(ErrorCode::DegenerateInput, "intersect_lines: parallel lines");
  return {(a.offset * b.normal.dy - b.offset * a.normal.dy) / det,
          (a.normal.dx * b.offset - b.normal.dx * a.offset) / det};
}

int orientation(const Point& p, const Point& q, const Point& r) {
  return sgn((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x));
}

const char* to_string(Symmetry s) noexcept {
  switch (s) {
    case Symmetry::none: return "none";
    case Symmetry::central: return "central";
    case Symmetry::unconditional: return "unconditional";
  }
  return "none";
}

Symmetry parse_symmetry(std::string_view text) {
  if (text == "none") return Symmetry::none;
  if (text == "central") return Symmetry::central;
  if (text == "unconditional") return Symmetry::unconditional;
  fail(ErrorCode::Parse, "unknown symmetry '" + std::string(text) + "'");
}

namespace {

// 0 for directions in [0, pi), 1 for [pi, 2 pi).
int half_of(const Point& d) {
  return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1;
}

bool point_less(const Point& a, const Point& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

std::vector<Point> sorted_points(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), point_less);
  return pts;
}

bool same_point_set(const std::vector<Point>& a, const std::vector<Point>& b) {
  return sorted_points(a) == sorted_points(b);
}

std::vector<Point> transformed(const std::vector<Point>& pts, int sx, int sy) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back({sx * p.x, sy * p.y});
  return out;
}

bool has_central(const std::vector<Point>& v) {
  return same_point_set(v, transformed(v, -1, -1));
}

bool has_unconditional(const std::vector<Point>& v) {
  return same_point_set(v, transformed(v, -1, 1)) &&
         same_point_set(v, transformed(v, 1, -1));
}

void verify_symmetry(const std::vector<Point>& v, Symmetry s) {
  if (s == Symmetry::central && !has_central(v))
    fail(ErrorCode::NotSymmetric, "polygon is not centrally symmetric");
  if (s == Symmetry::unconditional && !has_unconditional(v))
    fail(ErrorCode::NotSymmetric, "polygon is not unconditional");
}

}  // namespace

ConvexPolygon::ConvexPolygon(std::vector<Point> vertices, Symmetry symmetry)
    : vertices_(std::move(vertices)), symmetry_(symmetry) {
  const std::size_t n = vertices_.size();
  if (n < 3) fail(ErrorCode::DegenerateInput, "polygon needs at least 3 vertices");
  int half_changes = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& prev = vertices_[(i + n - 1) % n];
    const Point& cur = vertices_[i];
    const Point& next = vertices_[(i + 1) % n];
    if (orientation(prev, cur, next) <= 0)
      fail(ErrorCode::DegenerateInput,
           "vertices are not strictly convex and counterclockwise");
    if (half_of(cur - prev) != half_of(next - cur)) ++half_changes;
  }
  if (half_changes != 2)
    fail(ErrorCode::DegenerateInput, "vertex sequence winds more than once");
  verify_symmetry(vertices_, symmetry_);
}

ConvexPolygon ConvexPolygon::with_symmetry(Symmetry symmetry) const {
  return ConvexPolygon(vertices_, symmetry);
}

bool operator==(const ConvexPolygon& a, const ConvexPolygon& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return false;
  for (std::size_t shift = 0; shift < n; ++shift) {
    if (!(a.vertices_[0] == b.vertices_[shift])) continue;
    bool all = true;
    for (std::size_t i = 0; i < n && all; ++i)
      all = a.vertices_[i] == b.vertices_[(i + shift) % n];
    if (all) return true;
  }
  return false;
}

bool is_centrally_symmetric(const ConvexPolygon& p) { return has_central(p.vertices()); }

bool is_unconditional(const ConvexPolygon& p) { return has_unconditional(p.vertices()); }

Symmetry detect_symmetry(const ConvexPolygon& p) {
  if (is_unconditional(p)) return Symmetry::unconditional;
  if (is_centrally_symmetric(p)) return Symmetry::central;
  return Symmetry::none;
}

ConvexPolygon convex_hull(std::span<const Point> points, Symmetry symmetry) {
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), point_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) fail(ErrorCode::DegenerateInput, "convex_hull: fewer than 3 distinct points");

  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && orientation(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orientation(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) fail(ErrorCode::DegenerateInput, "convex_hull: points are collinear");
  return ConvexPolygon(std::move(hull), symmetry);
}

Scalar area(const ConvexPolygon& p) {
  Scalar twice = 0;
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) twice += cross(p.vertex(i), p.vertex(i + 1));
  return twice / 2;
}

Line edge_line(const ConvexPolygon& p, std::size_t i) {
  Direction n = edge_outer_normal(p, i);
  Scalar offset = dot(n, p.vertex(i));
  return {std::move(n), std::move(offset)};
}

Direction edge_outer_normal(const ConvexPolygon& p, std::size_t i) {
  const Point e = p.vertex(i + 1) - p.vertex(i);
  return {e.y, -e.x};
}

bool contains(const ConvexPolygon& p, const Point& q) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (orientation(p.vertex(i), p.vertex(i + 1), q) < 0) return false;
  return true;
}

bool contains_strictly(const ConvexPolygon& p, const Point& q) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (orientation(p.vertex(i), p.vertex(i + 1), q) <= 0) return false;
  return true;
}

bool contains(const ConvexPolygon& outer, const ConvexPolygon& inner) {
  return std::all_of(inner.vertices().begin(), inner.vertices().end(),
                     [&](const Point& v) { return contains(outer, v); });
}

namespace {

// Working polygon for clipping: vertex i carries the supporting line of the
// edge leaving it. New vertices are always computed as intersections of two
// original lines, so coordinate sizes stay bounded across many clips.
struct TrackedVertex {
  Point point;
  Line outgoing;
};

std::vector<TrackedVertex> clip_tracked(const std::vector<TrackedVertex>& poly,
                                        const Line& cut) {
  std::vector<TrackedVertex> out;
  const std::size_t n = poly.size();
  if (n == 0) return out;
  std::vector<int> side(n);
  bool any_outside = false;
  for (std::size_t i = 0; i < n; ++i) {
    side[i] = sgn(cut.evaluate(poly[i].point));
    any_outside = any_outside || side[i] > 0;
  }
  if (!any_outside) return poly;

  out.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& cur = poly[i];
    const int s_cur = side[i];
    const int s_next = side[(i + 1) % n];
    if (s_cur < 0) {
      out.push_back(cur);
      if (s_next > 0) out.push_back({intersect_lines(cur.outgoing, cut), cut});
    } else if (s_cur == 0) {
      out.push_back({cur.point, s_next > 0 ? cut : cur.outgoing});
    } else if (s_next < 0) {
      out.push_back({intersect_lines(cur.outgoing, cut), cur.outgoing});
    }
  }
  return out;
}

std::optional<ConvexPolygon> finish(std::vector<TrackedVertex> tracked) {
  std::vector<Point> pts;
  pts.reserve(tracked.size());
  for (auto& t : tracked)
    if (pts.empty() || !(pts.back() == t.point)) pts.push_back(std::move(t.point));
  while (pts.size() > 1 && pts.front() == pts.back()) pts.pop_back();

  bool changed = true;
  while (changed && pts.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < pts.size() && pts.size() >= 3; ++i) {
      const std::size_t n = pts.size();
      if (orientation(pts[(i + n - 1) % n], pts[i], pts[(i + 1) % n]) == 0) {
        pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (pts.size() < 3) return std::nullopt;
  return ConvexPolygon(std::move(pts));
}

std::vector<TrackedVertex> tracked(const ConvexPolygon& p) {
  std::vector<TrackedVertex> t;
  t.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) t.push_back({p.vertex(i), edge_line(p, i)});
  return t;
}

}  // namespace

std::optional<ConvexPolygon> clip(const ConvexPolygon& p,
                                  std::span<const Line> cuts) {
  auto work = tracked(p);
  for (const auto& cut : cuts) {
    work = clip_tracked(work, cut);
    if (work.size() < 3) return std::nullopt;
  }
  return finish(std::move(work));
}

std::optional<ConvexPolygon> intersect(const ConvexPolygon& p,
                                       const ConvexPolygon& r) {
  const auto cuts = halfplanes(r);
  auto result = clip(p, cuts);
  if (result && p.symmetry() != Symmetry::none && r.symmetry() != Symmetry::none)
    result = result->with_symmetry(Symmetry::central);
  return result;
}

ConvexPolygon polygon_from_halfplanes(std::span<const Line> lines, Symmetry symmetry) {
  bool have_point = false;
  Scalar min_x, max_x, min_y, max_y;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (parallel(lines[i].normal, lines[j].normal)) continue;
      const Point p = intersect_lines(lines[i], lines[j]);
      if (!have_point) {
        min_x = max_x = p.x;
        min_y = max_y = p.y;
        have_point = true;
      } else {
        if (p.x < min_x) min_x = p.x;
        if (p.x > max_x) max_x = p.x;
        if (p.y < min_y) min_y = p.y;
        if (p.y > max_y) max_y = p.y;
      }
    }
  }
  if (!have_point) fail(ErrorCode::DegenerateInput, "halfplane intersection is unbounded");
  min_x -= 1;
  min_y -= 1;
  max_x += 1;
  max_y += 1;
  const ConvexPolygon box({{min_x, min_y}, {max_x, min_y}, {max_x, max_y}, {min_x, max_y}});
  auto result = clip(box, lines);
  if (!result) fail(ErrorCode::DegenerateInput, "halfplane intersection has empty interior");
  for (const auto& v : result->vertices())
    if (v.x == min_x || v.x == max_x || v.y == min_y || v.y == max_y)
      fail(ErrorCode::DegenerateInput, "halfplane intersection is unbounded");
  return result->with_symmetry(symmetry);
}

ConvexPolygon scale(const ConvexPolygon& p, const Scalar& factor) {
  if (factor <= 0) fail(ErrorCode::NonPositiveScale, "scale factor must be positive");
  std::vector<Point> v;
  v.reserve(p.size());
  for (const auto& q : p.vertices()) v.push_back(factor * q);
  return ConvexPolygon(std::move(v), p.symmetry());
}

Matrix2 Matrix2::inverse() const {
  const Scalar dt = det();
  if (dt == 0) fail(ErrorCode::SingularMatrix, "matrix is singular");
  return {d / dt, -b / dt, -c / dt, a / dt};
}

ConvexPolygon linear_map(const ConvexPolygon& p, const Matrix2& t) {
  const Scalar dt = t.det();
  if (dt == 0) fail(ErrorCode::SingularMatrix, "linear_map: singular matrix");
  std::vector<Point> v;
  v.reserve(p.size());
  for (const auto& q : p.vertices()) v.push_back(t.apply(q));
  if (dt < 0) std::reverse(v.begin(), v.end());
  ConvexPolygon image(std::move(v));
  if (p.symmetry() == Symmetry::none) return image;
  return image.with_symmetry(detect_symmetry(image));
}

SupportResult support(const ConvexPolygon& p, const Direction& u) {
  if (u.dx == 0 && u.dy == 0) fail(ErrorCode::InvalidArgument, "support: zero direction");
  std::size_t best = 0;
  Scalar best_value = dot(u, p.vertex(0));
  for (std::size_t i = 1; i < p.size(); ++i) {
    Scalar v = dot(u, p.vertex(i));
    if (v > best_value) {
      best_value = std::move(v);
      best = i;
    }
  }
  return {best_value, p.vertex(best), best};
}

namespace {

Scalar squared_norm(const Point& p) { return p.x * p.x + p.y * p.y; }

Scalar squared_distance_to_segment(const Point& a, const Point& b, const Point& q) {
  const Point ab = b - a;
  const Scalar len2 = squared_norm(ab);
  Scalar t = ((q.x - a.x) * ab.x + (q.y - a.y) * ab.y) / len2;
  if (t < 0) t = 0;
  if (t > 1) t = 1;
  return squared_norm(q - (a + t * ab));
}

}  // namespace

Scalar squared_distance(const ConvexPolygon& p, const Point& q) {
  if (contains(p, q)) return 0;
  Scalar best = squared_distance_to_segment(p.vertex(0), p.vertex(1), q);
  for (std::size_t i = 1; i < p.size(); ++i) {
    Scalar d = squared_distance_to_segment(p.vertex(i), p.vertex(i + 1), q);
    if (d < best) best = std::move(d);
  }
  return best;
}

DistanceBracket sqrt_bracket(const Scalar& squared) {
  if (squared < 0) fail(ErrorCode::InvalidArgument, "sqrt of negative value");
  constexpr unsigned long bits = 45;
  mpz_class scale_factor;
  mpz_ui_pow_ui(scale_factor.get_mpz_t(), 2, 2 * bits);
  mpz_class scaled = squared.get_num() * scale_factor;
  mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), squared.get_den_mpz_t());
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  mpz_class unit;
  mpz_ui_pow_ui(unit.get_mpz_t(), 2, bits);
  Scalar lower(root, unit);
  lower.canonicalize();
  Scalar upper(mpz_class(root + 1), unit);
  upper.canonicalize();
  if (lower * lower == squared) upper = lower;
  return {squared, lower, upper};
}

DistanceBracket hausdorff_distance(const ConvexPolygon& p, const ConvexPolygon& r) {
  Scalar worst = 0;
  for (const auto& v : p.vertices()) {
    Scalar d = squared_distance(r, v);
    if (d > worst) worst = std::move(d);
  }
  for (const auto& v : r.vertices()) {
    Scalar d = squared_distance(p, v);
    if (d > worst) worst = std::move(d);
  }
  return sqrt_bracket(worst);
}

bool is_bounded(const Region& region) {
  return std::holds_alternative<ConvexPolygon>(region);
}

std::vector<Line> halfplanes(const ConvexPolygon& p) {
  std::vector<Line> lines;
  lines.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) lines.push_back(edge_line(p, i));
  return lines;
}

std::vector<Line> halfplanes(const Region& region) {
  if (const auto* poly = std::get_if<ConvexPolygon>(&region)) return halfplanes(*poly);
  const auto& strip = std::get<Strip>(region);
  return {Line{strip.normal, strip.bound}, Line{-strip.normal, strip.bound}};
}

bool contains(const Region& region, const Point& q) {
  for (const auto& line : halfplanes(region))
    if (line.evaluate(q) > 0) return false;
  return true;
}

ConvexPolygon unit_square() {
  return ConvexPolygon({{1, -1}, {1, 1}, {-1, 1}, {-1, -1}}, Symmetry::unconditional);
}

}  // namespace logconcave
