#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's geometry; polygons are plain vectors of doubles.

#include "logconcave/geometry.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

struct P {
  double x;
  double y;
};
using Poly = std::vector<P>;

Poly to_doubles(const logconcave::ConvexPolygon& p);

double shoelace(const Poly& p);

// Sutherland-Hodgman against every edge of a counterclockwise convex clipper.
Poly clip(const Poly& subject, const Poly& clipper);

double intersection_area(const Poly& a, const Poly& b);

bool inside(const Poly& convex, double x, double y);

Poly scaled(const Poly& p, double a);

// Stratified Monte Carlo estimate of the midpoint defect
// F(qr)^2 - F(q) F(qr^2), F(a) = |aK ∩ L|, for an axis-aligned box K
// containing the origin. F(q) comes from the clipper, the two frame
// increments from samples; each frame rectangle is cut to bbox(L) and both
// frames reuse the same uniforms.
struct MonteCarlo {
  double core;     // F(q)
  double d1;       // F(qr) - F(q)
  double d2;       // F(qr^2) - F(qr)
  double defect;
  double stderr_;  // delta method
  std::size_t samples;
};

MonteCarlo midpoint_defect_mc(const Poly& box_k, const Poly& l, double q, double r,
                              std::size_t samples, std::uint64_t seed);

// Edge and corner configurations relative to the square [-1, 1]^2, built by
// rejection: every candidate is handed back only if the library's parameter
// extraction accepts it, so the tests still compare independent formulas.
std::vector<logconcave::ConvexPolygon> edge_case_polygons(std::size_t count,
                                                          std::uint64_t seed);
std::vector<logconcave::ConvexPolygon> corner_case_polygons(std::size_t count,
                                                            std::uint64_t seed);

// Corner configuration with a = b and the apex on the diagonal at
// (1 - m, 1 - m): an isosceles cut, where the bound on g'(1) is attained.
logconcave::ConvexPolygon isosceles_corner(const logconcave::Scalar& a,
                                           const logconcave::Scalar& m);

// Random centrally symmetric polygon: 2..budget/2 random points on the
// 1/den grid of [-2, 2]^2 and their negations, hulled. Generated here rather
// than by the library's sampler.
std::optional<logconcave::ConvexPolygon> symmetric_polygon(std::mt19937_64& rng,
                                                           std::size_t budget, long den);

// Pair scaled by the first 1 + k/64 that puts it in the transversal class,
// checked by brute force on all edge pairs.
struct Pair {
  logconcave::ConvexPolygon k;
  logconcave::ConvexPolygon l;
};
std::optional<Pair> transversal_pair(std::mt19937_64& rng, std::size_t budget);

// ∂K ∩ ∂L finite, away from vertices, never tangent. Exact, O(nm).
bool crosses_transversally(const logconcave::ConvexPolygon& k,
                           const logconcave::ConvexPolygon& l);

// Polygon with `vertices` points on r = rho(θ), θ = 2πj/vertices.
template <class F>
Poly polar_polygon(F rho, std::size_t vertices, double scale = 1, double turn = 0);

}  // namespace oracle

#include <cmath>
#include <numbers>

template <class F>
oracle::Poly oracle::polar_polygon(F rho, std::size_t vertices, double scale, double turn) {
  Poly out;
  out.reserve(vertices);
  for (std::size_t j = 0; j < vertices; ++j) {
    const double th = 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(vertices);
    const double r = scale * rho(th - turn);
    out.push_back({r * std::cos(th), r * std::sin(th)});
  }
  return out;
}
