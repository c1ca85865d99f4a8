#pragma once

#include "logconcave/geometry.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace logconcave {

/// F(a) = |aK ∩ L|, exact. Zero when the intersection has no interior.
Scalar area_at(const ConvexPolygon& k, const ConvexPolygon& l, const Scalar& a);

/// Piece of edge `edge` of rK lying inside L, as the parameter interval
/// [t_in, t_out] of the point r (v_i + t (v_{i+1} - v_i)). An endpoint is
/// either a vertex of rK (no line) or a crossing with the L edge recorded.
struct EdgeSpan {
  std::size_t edge;
  Scalar t_in;
  Scalar t_out;
  std::optional<std::size_t> entry_edge_of_l;
  std::optional<std::size_t> exit_edge_of_l;

  friend bool operator==(const EdgeSpan&, const EdgeSpan&) = default;
};

/// Nonempty pieces of ∂(rK) ∩ L, one per edge of K at most.
std::vector<EdgeSpan> boundary_spans(const ConvexPolygon& k, const ConvexPolygon& l,
                                     const Scalar& r = 1);

/// Open interval (lower, upper) around r = 1 on which the combinatorial
/// structure of ∂(rK) ∩ ∂L is constant. `upper` is empty when no event lies
/// above 1. Throws NotTransversal when r = 1 itself is an event.
struct StructureWindow {
  Scalar lower;
  std::optional<Scalar> upper;
};

StructureWindow structure_window(const ConvexPolygon& k, const ConvexPolygon& l);

/// Boundary flux g_{K,L}(r) = ∫_{r∂K ∩ L} h_K(ν_K(x/r)) dℓ, exact for any r > 0.
/// No transversality requirement; at r = 1 it is the derivative of F.
Scalar g_at(const ConvexPolygon& k, const ConvexPolygon& l, const Scalar& r);

/// g_{K,L}(1) for a transversal pair. Throws NotTransversal otherwise.
Scalar g_value(const ConvexPolygon& k, const ConvexPolygon& l);

/// g'_{K,L}(1) by exact differentiation of the crossing parameters. Throws
/// NotTransversal when the pair is not transversal or the span structure is
/// not constant around r = 1.
Scalar g_derivative(const ConvexPolygon& k, const ConvexPolygon& l);

struct PropertyBReport {
  Scalar area_kl;
  Scalar g1;
  Scalar g1_prime;
  Scalar lhs;  // area_kl * (g1 + g1_prime)
  Scalar rhs;  // g1^2
  bool holds;
};

/// |K ∩ L| (g(1) + g'(1)) <= g(1)^2 for a transversal pair.
PropertyBReport property_b_check(const ConvexPolygon& k, const ConvexPolygon& l);

/// Exact midpoint test at the scale triple (q, qr, qr^2).
struct MidpointWitness {
  Scalar q;
  Scalar r;
  Scalar f_q;
  Scalar f_qr;
  Scalar f_qr2;
  Scalar defect;  // f_qr^2 - f_q * f_qr2; negative certifies a violation
};

MidpointWitness midpoint_logconcavity_check(const ConvexPolygon& k,
                                            const ConvexPolygon& l,
                                            const Scalar& q, const Scalar& r);

/// Scales a where the intersection is proper: aK ⊆ L exactly for a <= lower
/// and L ⊆ aK exactly for a >= upper. Requires the origin inside both bodies.
std::pair<Scalar, Scalar> proper_scale_range(const ConvexPolygon& k,
                                             const ConvexPolygon& l);

/// `count` triples q_j = lower r^j, r a small-denominator rational, all
/// inside the proper scale range.
std::vector<MidpointWitness> midpoint_grid(const ConvexPolygon& k,
                                           const ConvexPolygon& l,
                                           std::size_t count = 9);

struct SampledFunction {
  std::vector<std::pair<double, double>> entries;  // (t, log F(e^t))
  std::string meta;
};

/// log F(e^t) on an even grid. e^t is taken as the exact rational value of
/// the double std::exp(t) (relative error below 1e-15); samples with F = 0
/// are dropped and listed in `meta`.
SampledFunction sample_logf(const ConvexPolygon& k, const ConvexPolygon& l,
                            double t_min, double t_max, std::size_t steps);

/// CSV with header `t,logf`, 17 significant digits.
std::string to_csv(const SampledFunction& f);

}  // namespace logconcave
