#pragma once

#include "logconcave/geometry.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>

namespace logconcave {

/// K = [-6, 6] x [-3, 1] and the triangle L = conv{(-5,-2), (0,3), (5,-2)}.
/// Both are symmetric about the y axis only.
std::pair<ConvexPolygon, ConvexPolygon> uniform_counterexample();

struct UniformWitness {
  Scalar q;
  Scalar r;
  std::array<Scalar, 3> scales;  // q, qr, qr^2
  std::array<Scalar, 3> values;  // |a K ∩ L| at each scale
  Scalar defect;                 // values[1]^2 - values[0] values[2]
  std::string context;
};

/// Fixed search: r = 1 + j/256 for j = 8 down to 1, and for each r the scales
/// q = k/64, k = 56..72. Returns the first triple with a negative defect, or
/// nothing. Each scale pair is visited coarsest r first.
std::optional<UniformWitness> search_uniform_violation(const ConvexPolygon& k,
                                                       const ConvexPolygon& l);

/// Runs the fixed search on the one-axis example, then once more at doubled
/// r resolution (1 + j/512, j = 16..1). Throws NoViolationFound.
UniformWitness certify_uniform_violation();

/// μ(A) = |A ∩ Q| + |A| for a convex polygon A, exact.
Scalar quasi_concave_measure(const ConvexPolygon& a);

/// μ(e^t Q) = 4 min(e^{2t}, 1) + 4 e^{2t}.
double quasi_concave_measure_of_scaled_q(double t);

struct QuasiConcaveWitness {
  double h;
  std::array<double, 3> t;       // 1 - h, 1, 1 + h
  std::array<double, 3> values;  // μ(e^t Q)
  double defect;  // log μ(e Q) - ½ (log μ(e^{1-h} Q) + log μ(e^{1+h} Q))
  std::string context;
};

/// Closed-form midpoint test around t = 1. Throws NoViolationFound if the
/// defect is not negative.
QuasiConcaveWitness certify_quasiconcave_violation(double h = 0.1);

}  // namespace logconcave
