#pragma once

#include "logconcave/scalar.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace logconcave {

struct Point {
  Scalar x;
  Scalar y;

  Point() = default;
  Point(Scalar x_, Scalar y_) : x(std::move(x_)), y(std::move(y_)) {}

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend Point operator+(const Point& a, const Point& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend Point operator-(const Point& a, const Point& b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend Point operator*(const Scalar& s, const Point& p) {
    return {s * p.x, s * p.y};
  }
  Point operator-() const { return {-x, -y}; }
};

/// Unnormalized direction. Two directions are the same when one is a
/// positive multiple of the other; keeping them unnormalized keeps every
/// support value and boundary weight rational.
struct Direction {
  Scalar dx;
  Scalar dy;

  Direction() = default;
  Direction(Scalar dx_, Scalar dy_) : dx(std::move(dx_)), dy(std::move(dy_)) {}

  Direction operator-() const { return {-dx, -dy}; }
};

bool same_direction(const Direction& u, const Direction& v);
bool parallel(const Direction& u, const Direction& v);

Scalar dot(const Direction& u, const Point& p);
Scalar cross(const Point& a, const Point& b);
Scalar cross(const Direction& a, const Direction& b);

/// Closed halfplane {x : <normal, x> <= offset}.
struct Line {
  Direction normal;
  Scalar offset;

  Scalar evaluate(const Point& p) const { return dot(normal, p) - offset; }
  Line negated() const { return {-normal, offset}; }
};

/// Unique intersection point of two non-parallel lines.
Point intersect_lines(const Line& a, const Line& b);

/// Sign of (q - p) x (r - p): +1 counterclockwise, 0 collinear, -1 clockwise.
int orientation(const Point& p, const Point& q, const Point& r);

enum class Symmetry { none, central, unconditional };

const char* to_string(Symmetry s) noexcept;
Symmetry parse_symmetry(std::string_view text);

/// Convex polygon with nonempty interior. Vertices are counterclockwise and
/// strictly convex (no three consecutive collinear). The symmetry flag is
/// verified on construction.
class ConvexPolygon {
 public:
  explicit ConvexPolygon(std::vector<Point> vertices,
                         Symmetry symmetry = Symmetry::none);

  const std::vector<Point>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  /// Cyclic access.
  const Point& vertex(std::size_t i) const {
    return vertices_[i % vertices_.size()];
  }
  Symmetry symmetry() const noexcept { return symmetry_; }

  ConvexPolygon with_symmetry(Symmetry symmetry) const;

  /// Equality as point sets: same cyclic vertex sequence.
  friend bool operator==(const ConvexPolygon& a, const ConvexPolygon& b);

 private:
  std::vector<Point> vertices_;
  Symmetry symmetry_;
};

bool is_centrally_symmetric(const ConvexPolygon& p);
/// Invariant under both coordinate reflections.
bool is_unconditional(const ConvexPolygon& p);
/// Strongest symmetry the vertex set actually has.
Symmetry detect_symmetry(const ConvexPolygon& p);

/// Minimal counterclockwise hull, starting at the lowest (x, then y) vertex.
/// Throws DegenerateInput when fewer than three non-collinear points remain.
ConvexPolygon convex_hull(std::span<const Point> points,
                          Symmetry symmetry = Symmetry::none);

Scalar area(const ConvexPolygon& p);

/// Supporting halfplane of edge i (from vertex i to vertex i + 1).
Line edge_line(const ConvexPolygon& p, std::size_t i);
/// Outward normal (dy, -dx) of edge i, unnormalized.
Direction edge_outer_normal(const ConvexPolygon& p, std::size_t i);

/// Closed / open containment.
bool contains(const ConvexPolygon& p, const Point& q);
bool contains_strictly(const ConvexPolygon& p, const Point& q);
bool contains(const ConvexPolygon& outer, const ConvexPolygon& inner);

/// Intersection by successive halfplane clipping. Returns nullopt when the
/// intersection has zero area (disjoint, a shared edge or a single point).
std::optional<ConvexPolygon> intersect(const ConvexPolygon& p,
                                       const ConvexPolygon& r);
std::optional<ConvexPolygon> clip(const ConvexPolygon& p,
                                  std::span<const Line> halfplanes);

/// Bounded intersection of halfplanes. Throws DegenerateInput when the set is
/// unbounded or has empty interior.
ConvexPolygon polygon_from_halfplanes(std::span<const Line> halfplanes,
                                      Symmetry symmetry = Symmetry::none);

ConvexPolygon scale(const ConvexPolygon& p, const Scalar& factor);

struct Matrix2 {
  Scalar a, b;  // first row
  Scalar c, d;  // second row

  static Matrix2 identity() { return {1, 0, 0, 1}; }
  static Matrix2 from_columns(const Point& col0, const Point& col1) {
    return {col0.x, col1.x, col0.y, col1.y};
  }

  Scalar det() const { return a * d - b * c; }
  Matrix2 inverse() const;
  Point apply(const Point& p) const { return {a * p.x + b * p.y, c * p.x + d * p.y}; }

  friend bool operator==(const Matrix2& l, const Matrix2& r) {
    return l.a == r.a && l.b == r.b && l.c == r.c && l.d == r.d;
  }
};

/// Image under T. Orientation is restored to counterclockwise when det T < 0.
ConvexPolygon linear_map(const ConvexPolygon& p, const Matrix2& t);

struct SupportResult {
  Scalar value;
  Point argmax;
  std::size_t index;
};

/// max_v <u, v> over the vertices; ties go to the lowest vertex index.
SupportResult support(const ConvexPolygon& p, const Direction& u);

Scalar squared_distance(const ConvexPolygon& p, const Point& q);

/// Rational bracket [lower, upper] around sqrt(squared), width <= 2^-45.
struct DistanceBracket {
  Scalar squared;
  Scalar lower;
  Scalar upper;
};

DistanceBracket sqrt_bracket(const Scalar& squared);

/// Hausdorff distance of two convex polygons. It is attained at vertices, so
/// the squared value is exact.
DistanceBracket hausdorff_distance(const ConvexPolygon& p,
                                   const ConvexPolygon& r);

/// Centrally symmetric strip {x : |<normal, x>| <= bound}.
struct Strip {
  Direction normal;
  Scalar bound;
};

/// Closed convex region that is either a bounded polygon or a strip.
using Region = std::variant<ConvexPolygon, Strip>;

bool is_bounded(const Region& region);
std::vector<Line> halfplanes(const Region& region);
std::vector<Line> halfplanes(const ConvexPolygon& p);
bool contains(const Region& region, const Point& q);

/// The unit square [-1, 1]^2.
ConvexPolygon unit_square();

}  // namespace logconcave
