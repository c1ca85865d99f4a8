#pragma once

#include "logconcave/geometry.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace logconcave {

enum class OracleBranch { trivial_negative, main };

const char* to_string(OracleBranch b) noexcept;

struct OracleVerdict {
  bool holds;
  Scalar lhs;
  Scalar rhs;
  OracleBranch branch;
  std::string detail;
};

// ---------------------------------------------------------------------------
// Edge case: L meets Q only across the two vertical edges, with the vertex
// (c, d) of L beyond x = 1 and its two incident edges making angles α, β.
// ---------------------------------------------------------------------------

struct EdgeCaseParams {
  Scalar cot_alpha;
  Scalar cot_beta;
  Scalar c;
  Scalar d;
  Scalar area_l;
  Matrix2 rotation;  // applied to L before reading the parameters
};

/// Reads the parameters off a polygon L in edge position relative to Q.
/// Cotangents are slope ratios of the edges at (c, d). Throws NotEdgeCase.
EdgeCaseParams edge_case_params(const ConvexPolygon& l);

struct EdgeClosedForms {
  Scalar g1;        // 2 (c - 1)(cot α - cot β)
  Scalar g1_prime;  // -2 (cot α - cot β)
  Scalar area_ql;   // |L| - (c - 1)^2 (cot α - cot β)
};

EdgeClosedForms edge_closed_forms(const EdgeCaseParams& p);

/// (|L|, (c/(c-1))^2 · ½ (c-1) g(1)); the first never exceeds the second for
/// a convex L.
std::pair<Scalar, Scalar> edge_convexity_bound(const EdgeCaseParams& p);

/// The derivative inequality from the closed forms. Throws InvariantViolation
/// when cot α <= cot β or c <= 1.
OracleVerdict edge_case_check(const EdgeCaseParams& p);

// ---------------------------------------------------------------------------
// Corner case: L cuts off the corners ±(1, 1) of Q, meeting the top edge at
// x = 1 - a and the right edge at y = 1 - b; S = |Q ∩ L|.
// ---------------------------------------------------------------------------

struct CornerCaseParams {
  Scalar a;
  Scalar b;
  Scalar s;
  Scalar tan_alpha;  // dx/dy along the edge of L from the top crossing to p
  Scalar cot_beta;   // dy/dx along the edge of L from the right crossing to p
  Matrix2 rotation;
};

/// Throws NotCornerCase.
CornerCaseParams corner_case_params(const ConvexPolygon& l);

/// 8 - 2a - 2b. Throws OutOfRange unless 0 < a, b < 2.
Scalar g1_corner(const Scalar& a, const Scalar& b);

/// Exact g'(1) of a concrete corner configuration: 4 + 2 tan α + 2 cot β.
Scalar gprime_corner(const CornerCaseParams& p);

/// -8 (S - (4 - ab)) / ((4 - S) + ½ (a - b)^2). Throws OutOfRange outside
/// 0 < a, b < 2, 4 - ab < S < 4.
Scalar gprime_bound_corner(const Scalar& a, const Scalar& b, const Scalar& s);

/// (8-2a-2b)(8-2a-2b-S)((4-S) + ½(a-b)^2) + 8 S (S - (4 - ab)).
Scalar e_polynomial(const Scalar& a, const Scalar& b, const Scalar& s);

/// The three closed forms stated for E at S = 4 - ab: the value, the first
/// S-derivative and the (constant) second S-derivative.
struct CornerBoundaryForms {
  Scalar value;   // (8-2a-2b)(2-a)(2-b) · ½ (a^2 + b^2)
  Scalar first;   // (a+b)((5-a-b)^2 - 1) + 2 (a-b)^2
  Scalar second;  // 18 (4 - ab)
};

CornerBoundaryForms corner_boundary_forms(const Scalar& a, const Scalar& b);

/// lhs = S (g(1) + bound), rhs = g(1)^2; holds exactly when E >= 0.
/// Throws InvariantViolation outside the parameter box.
OracleVerdict corner_case_check(const Scalar& a, const Scalar& b, const Scalar& s);

// ---------------------------------------------------------------------------
// Grids.
// ---------------------------------------------------------------------------

struct GridPoint {
  std::vector<std::pair<std::string, Scalar>> params;
  OracleVerdict verdict;
  std::optional<Scalar> e_value;
};

/// a, b = 2k/(N+1), S = 4 - ab + ab j/(N+1) for k, j = 1..N: N^3 points.
std::vector<GridPoint> corner_grid(std::size_t density);

/// c = 1 + 3k/(N+1), cot α - cot β = 2j/(N+1) split symmetrically, d = 0 and
/// |L| stepping from just above (c-1)^2 (cot α - cot β) up to the convexity
/// bound: N^3 points.
std::vector<GridPoint> edge_grid(std::size_t density);

}  // namespace logconcave
