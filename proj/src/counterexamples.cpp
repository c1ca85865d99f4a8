#include "logconcave/counterexamples.hpp"

#include "logconcave/area_dynamics.hpp"
#include "logconcave/error.hpp"

#include <algorithm>
#include <cmath>

namespace logconcave {

std::pair<ConvexPolygon, ConvexPolygon> uniform_counterexample() {
  ConvexPolygon k({{-6, -3}, {6, -3}, {6, 1}, {-6, 1}});
  ConvexPolygon l({{-5, -2}, {5, -2}, {0, 3}});
  return {std::move(k), std::move(l)};
}

namespace {

std::optional<UniformWitness> search(const ConvexPolygon& k, const ConvexPolygon& l,
                                     long r_denominator, long j_max) {
  for (long j = j_max; j >= 1; --j) {
    const Scalar r = 1 + ratio(j, r_denominator);
    for (long step = 56; step <= 72; ++step) {
      const Scalar q = ratio(step, 64);
      UniformWitness w;
      w.q = q;
      w.r = r;
      w.scales = {q, q * r, q * r * r};
      for (std::size_t i = 0; i < 3; ++i) w.values[i] = area_at(k, l, w.scales[i]);
      if (std::any_of(w.values.begin(), w.values.end(), [](const Scalar& v) { return v == 0; }))
        continue;
      w.defect = w.values[1] * w.values[1] - w.values[0] * w.values[2];
      if (w.defect < 0) {
        w.context = "F(a) = |aK ∩ L| at a = q, qr, qr^2 with q = " + format_scalar(q) +
                    ", r = " + format_scalar(r);
        return w;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<UniformWitness> search_uniform_violation(const ConvexPolygon& k,
                                                       const ConvexPolygon& l) {
  return search(k, l, 256, 8);
}

UniformWitness certify_uniform_violation() {
  const auto [k, l] = uniform_counterexample();
  if (auto w = search(k, l, 256, 8)) return *w;
  if (auto w = search(k, l, 512, 16)) return *w;
  fail(ErrorCode::NoViolationFound, "no midpoint violation on the committed grid");
}

Scalar quasi_concave_measure(const ConvexPolygon& a) {
  const auto inter = intersect(a, unit_square());
  return (inter ? area(*inter) : Scalar(0)) + area(a);
}

double quasi_concave_measure_of_scaled_q(double t) {
  const double grow = std::exp(2 * t);
  return 4 * std::min(grow, 1.0) + 4 * grow;
}

QuasiConcaveWitness certify_quasiconcave_violation(double h) {
  if (!(h > 0)) fail(ErrorCode::InvalidArgument, "h must be positive");
  QuasiConcaveWitness w;
  w.h = h;
  w.t = {1 - h, 1, 1 + h};
  for (std::size_t i = 0; i < 3; ++i) w.values[i] = quasi_concave_measure_of_scaled_q(w.t[i]);
  w.defect = std::log(w.values[1]) - 0.5 * (std::log(w.values[0]) + std::log(w.values[2]));
  w.context = "mu(A) = |A ∩ Q| + |A| at A = e^t Q";
  if (!(w.defect < 0))
    fail(ErrorCode::NoViolationFound, "midpoint defect is not negative");
  return w;
}

}  // namespace logconcave
