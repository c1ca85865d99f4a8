#include "logconcave/parallelogram_oracle.hpp"

#include "logconcave/error.hpp"
#include "logconcave/transversal.hpp"

#include <algorithm>

namespace logconcave {

const char* to_string(OracleBranch b) noexcept {
  return b == OracleBranch::trivial_negative ? "trivial_negative" : "main";
}

namespace {

const Matrix2 kQuarterTurnCw{0, 1, -1, 0};   // (x, y) -> (y, -x)
const Matrix2 kQuarterTurnCcw{0, -1, 1, 0};  // (x, y) -> (-y, x)

std::vector<Point> square_crossings(const ConvexPolygon& l, ErrorCode code) {
  const auto diag = check_class_f(unit_square(), l);
  if (!diag.in_class) fail(code, "pair (Q, L) is not transversal");
  return diag.crossings;
}

}  // namespace

EdgeCaseParams edge_case_params(const ConvexPolygon& l) {
  const auto crossings = square_crossings(l, ErrorCode::NotEdgeCase);
  if (crossings.size() != 4) fail(ErrorCode::NotEdgeCase, "edge case needs four crossings");
  const bool vertical = std::all_of(crossings.begin(), crossings.end(), [](const Point& x) {
    return abs(x.x) == 1 && abs(x.y) < 1;
  });
  const bool horizontal = std::all_of(crossings.begin(), crossings.end(), [](const Point& x) {
    return abs(x.y) == 1 && abs(x.x) < 1;
  });
  if (!vertical && !horizontal)
    fail(ErrorCode::NotEdgeCase, "crossings are not confined to two opposite edges");

  EdgeCaseParams p;
  p.rotation = vertical ? Matrix2::identity() : kQuarterTurnCw;
  const ConvexPolygon image = vertical ? l : linear_map(l, p.rotation);

  std::optional<std::size_t> apex;
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image.vertex(i).x <= 1) continue;
    if (apex) fail(ErrorCode::NotEdgeCase, "more than one vertex of L beyond x = 1");
    apex = i;
  }
  if (!apex) fail(ErrorCode::NotEdgeCase, "no vertex of L beyond x = 1");

  const Point& v = image.vertex(*apex);
  const Point& next = image.vertex(*apex + 1);
  const Point& prev = image.vertex(*apex + image.size() - 1);
  p.c = v.x;
  p.d = v.y;
  p.cot_alpha = (next.y - v.y) / (v.x - next.x);
  p.cot_beta = (prev.y - v.y) / (v.x - prev.x);
  p.area_l = area(l);
  return p;
}

EdgeClosedForms edge_closed_forms(const EdgeCaseParams& p) {
  const Scalar spread = p.cot_alpha - p.cot_beta;
  const Scalar reach = p.c - 1;
  return {2 * reach * spread, -2 * spread, p.area_l - reach * reach * spread};
}

std::pair<Scalar, Scalar> edge_convexity_bound(const EdgeCaseParams& p) {
  const Scalar g1 = edge_closed_forms(p).g1;
  const Scalar grow = p.c / (p.c - 1);
  return {p.area_l, grow * grow * (p.c - 1) * g1 / 2};
}

OracleVerdict edge_case_check(const EdgeCaseParams& p) {
  if (p.c <= 1) fail(ErrorCode::InvariantViolation, "edge case needs c > 1");
  if (p.cot_alpha <= p.cot_beta)
    fail(ErrorCode::InvariantViolation, "edge case needs cot alpha > cot beta");
  const auto forms = edge_closed_forms(p);
  OracleVerdict v;
  v.lhs = forms.area_ql * (forms.g1 + forms.g1_prime);
  v.rhs = forms.g1 * forms.g1;
  v.holds = v.lhs <= v.rhs;
  v.branch = p.c < 2 ? OracleBranch::trivial_negative : OracleBranch::main;
  const auto [area_l, bound] = edge_convexity_bound(p);
  v.detail = "g+g'=" + format_scalar(forms.g1 + forms.g1_prime) + "; |L|=" +
             format_scalar(area_l) + " <= " + format_scalar(bound) +
             (area_l <= bound ? " (convexity bound met)" : " (convexity bound exceeded)");
  return v;
}

CornerCaseParams corner_case_params(const ConvexPolygon& l) {
  const ConvexPolygon q = unit_square();
  const auto crossings = square_crossings(l, ErrorCode::NotCornerCase);
  std::vector<Point> corners_in;
  for (const auto& v : q.vertices())
    if (contains_strictly(l, v)) corners_in.push_back(v);
  const auto inner = std::count_if(l.vertices().begin(), l.vertices().end(),
                                   [&](const Point& v) { return contains_strictly(q, v); });
  if (corners_in.size() != 2 || inner != 2)
    fail(ErrorCode::NotCornerCase, "corner case needs two corners of Q in L and two vertices of L in Q");

  CornerCaseParams p;
  const bool keeps_top_right = contains_strictly(l, Point(1, 1));
  p.rotation = keeps_top_right ? kQuarterTurnCcw : Matrix2::identity();
  const ConvexPolygon image = keeps_top_right ? linear_map(l, p.rotation) : l;

  std::optional<Point> apex;
  for (const auto& v : image.vertices())
    if (contains_strictly(q, v) && v.x + v.y > 0) apex = v;
  std::optional<Scalar> x_top, y_right;
  for (const auto& x : crossings) {
    const Point r = p.rotation.apply(x);
    if (r.y == 1) x_top = r.x;
    if (r.x == 1) y_right = r.y;
  }
  if (!apex || !x_top || !y_right)
    fail(ErrorCode::NotCornerCase, "could not locate the cut-off corner at (1, 1)");

  p.a = 1 - *x_top;
  p.b = 1 - *y_right;
  const auto inter = intersect(q, image);
  p.s = inter ? area(*inter) : Scalar(0);
  p.tan_alpha = (apex->x - *x_top) / (apex->y - 1);
  p.cot_beta = (apex->y - *y_right) / (apex->x - 1);
  return p;
}

namespace {

void require_ab(const Scalar& a, const Scalar& b) {
  if (a <= 0 || a >= 2 || b <= 0 || b >= 2)
    fail(ErrorCode::OutOfRange, "corner case needs 0 < a, b < 2");
}

void require_abs(const Scalar& a, const Scalar& b, const Scalar& s) {
  require_ab(a, b);
  if (s <= 4 - a * b || s >= 4)
    fail(ErrorCode::OutOfRange, "corner case needs 4 - ab < S < 4");
}

}  // namespace

Scalar g1_corner(const Scalar& a, const Scalar& b) {
  require_ab(a, b);
  return 8 - 2 * a - 2 * b;
}

Scalar gprime_corner(const CornerCaseParams& p) {
  return 4 + 2 * p.tan_alpha + 2 * p.cot_beta;
}

Scalar gprime_bound_corner(const Scalar& a, const Scalar& b, const Scalar& s) {
  require_abs(a, b, s);
  const Scalar gap = a - b;
  return -8 * (s - (4 - a * b)) / ((4 - s) + gap * gap / 2);
}

Scalar e_polynomial(const Scalar& a, const Scalar& b, const Scalar& s) {
  const Scalar g = 8 - 2 * a - 2 * b;
  const Scalar gap = a - b;
  return g * (g - s) * ((4 - s) + gap * gap / 2) + 8 * s * (s - (4 - a * b));
}

CornerBoundaryForms corner_boundary_forms(const Scalar& a, const Scalar& b) {
  const Scalar g = 8 - 2 * a - 2 * b;
  const Scalar gap = a - b;
  const Scalar tail = 5 - a - b;
  return {g * (2 - a) * (2 - b) * (a * a + b * b) / 2,
          (a + b) * (tail * tail - 1) + 2 * gap * gap,
          18 * (4 - a * b)};
}

OracleVerdict corner_case_check(const Scalar& a, const Scalar& b, const Scalar& s) {
  try {
    require_abs(a, b, s);
  } catch (const Error& e) {
    fail(ErrorCode::InvariantViolation, e.what());
  }
  const Scalar g1 = 8 - 2 * a - 2 * b;
  const Scalar bound = gprime_bound_corner(a, b, s);
  const Scalar e = e_polynomial(a, b, s);
  OracleVerdict v;
  v.lhs = s * (g1 + bound);
  v.rhs = g1 * g1;
  v.holds = v.lhs <= v.rhs;
  if (v.holds != (e >= 0))
    fail(ErrorCode::InvariantViolation, "E and the derivative inequality disagree");
  v.branch = g1 + bound < 0 ? OracleBranch::trivial_negative : OracleBranch::main;
  v.detail = "E=" + format_scalar(e);
  return v;
}

std::vector<GridPoint> corner_grid(std::size_t density) {
  std::vector<GridPoint> out;
  const Scalar step = ratio(2, static_cast<long>(density + 1));
  for (std::size_t i = 1; i <= density; ++i)
    for (std::size_t k = 1; k <= density; ++k) {
      const Scalar a = step * static_cast<unsigned long>(i);
      const Scalar b = step * static_cast<unsigned long>(k);
      const Scalar floor_s = 4 - a * b;
      for (std::size_t j = 1; j <= density; ++j) {
        Scalar s = floor_s + a * b * static_cast<unsigned long>(j) /
                                 static_cast<unsigned long>(density + 1);
        GridPoint point{{{"a", a}, {"b", b}, {"S", s}}, corner_case_check(a, b, s),
                        e_polynomial(a, b, s)};
        out.push_back(std::move(point));
      }
    }
  return out;
}

std::vector<GridPoint> edge_grid(std::size_t density) {
  std::vector<GridPoint> out;
  const auto parts = static_cast<long>(density + 1);
  for (std::size_t i = 1; i <= density; ++i)
    for (std::size_t k = 1; k <= density; ++k) {
      EdgeCaseParams p;
      p.c = 1 + ratio(3 * static_cast<long>(i), parts);
      const Scalar spread = ratio(2 * static_cast<long>(k), parts);
      p.cot_alpha = spread / 2;
      p.cot_beta = -spread / 2;
      p.d = 0;
      p.rotation = Matrix2::identity();
      const Scalar floor_area = (p.c - 1) * (p.c - 1) * spread;
      const Scalar ceiling_area = p.c * p.c * spread;
      for (std::size_t j = 1; j <= density; ++j) {
        p.area_l = floor_area + (ceiling_area - floor_area) *
                                    static_cast<unsigned long>(j) /
                                    static_cast<unsigned long>(density);
        GridPoint point{{{"c", p.c},
                         {"cot_alpha", p.cot_alpha},
                         {"cot_beta", p.cot_beta},
                         {"area_L", p.area_l}},
                        edge_case_check(p),
                        std::nullopt};
        out.push_back(std::move(point));
      }
    }
  return out;
}

}  // namespace logconcave
