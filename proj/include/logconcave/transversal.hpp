#pragma once

#include "logconcave/geometry.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace logconcave {

// ---------------------------------------------------------------------------
// Membership in the class of transversely intersecting polygon pairs.
// ---------------------------------------------------------------------------

enum class ViolationKind { infinite_intersection, vertex_on_crossing, parallel_normals };

const char* to_string(ViolationKind kind) noexcept;

struct Violation {
  ViolationKind kind;
  Point location;
};

struct TransversalityDiagnosis {
  bool in_class;
  std::vector<Violation> violations;
  std::vector<Point> crossings;  // ∂K ∩ ∂L when finite
};

/// Exact test of the three boundary conditions: ∂K ∩ ∂L finite, no common
/// boundary point is a vertex of either polygon, and normals differ at every
/// common point.
TransversalityDiagnosis check_class_f(const ConvexPolygon& k, const ConvexPolygon& l);

/// Throws NotTransversal with the first violation when the pair is outside.
void require_class_f(const ConvexPolygon& k, const ConvexPolygon& l);

struct PerturbedPair {
  ConvexPolygon k;
  ConvexPolygon l;
  Scalar delta;  // L was scaled by 1 + delta; zero when unchanged
};

/// Scales L by 1 + delta for delta = eps, eps/2, ... (20 tries) and returns the
/// first transversal result. Throws PerturbationFailed.
PerturbedPair perturb_to_f(const ConvexPolygon& k, const ConvexPolygon& l,
                           const Scalar& eps);

// ---------------------------------------------------------------------------
// Decomposition of ∂K ∩ L and the per-component extensions.
// ---------------------------------------------------------------------------

/// One connected component of ∂K ∩ L, traversed counterclockwise from the
/// entry crossing x1 to the exit crossing x2.
struct BoundaryComponent {
  std::vector<Point> polyline;
  std::size_t first_edge;  // edge of K containing x1
  std::size_t last_edge;   // edge of K containing x2
  std::size_t entry_edge_of_l;
  std::size_t exit_edge_of_l;
  std::size_t index;
  std::size_t partner_index;

  const Point& entry() const { return polyline.front(); }
  const Point& exit() const { return polyline.back(); }
};

/// The 2n components in counterclockwise order with component i + n equal to
/// the negation of component i. Throws NotSymmetric, NotTransversal or
/// NoCrossings.
std::vector<BoundaryComponent> boundary_components(const ConvexPolygon& k,
                                                   const ConvexPolygon& l);

/// Largest convex set whose boundary contains S_i ∪ S_{i+n}: a strip when S_i
/// lies on one edge of K.
Region extend_k(const ConvexPolygon& k, const ConvexPolygon& l, std::size_t i);

/// The parallelogram cut out by the supporting lines of L at x1 and x2 and
/// their negations; a strip when those lines are parallel.
Region extend_l(const ConvexPolygon& k, const ConvexPolygon& l, std::size_t i);

/// Solution x of <ν1, x> = h_K(ν1), <ν2, x> = -h_K(ν2) for component i, where
/// ν1, ν2 are the normals of K at the entry and exit crossings. Empty when
/// ν1 and ν2 are parallel.
std::optional<Point> extension_apex(const ConvexPolygon& k, const ConvexPolygon& l,
                                    std::size_t i);

struct StripUsed {
  Direction normal;
  Scalar halfwidth;  // L_ext is cut to |<normal, x>| <= halfwidth, K_ext to twice that
};

struct ExtendedPair {
  ConvexPolygon k_ext;
  ConvexPolygon l_ext;
  std::optional<StripUsed> strip_used;
  std::size_t source_component;
};

/// Truncates unbounded extensions by a centrally symmetric strip that
/// contains K, L, the bounded extensions and K_ext ∩ L_ext. K_ext gets the
/// doubled strip so that two truncated strips never share a boundary line.
/// Throws NoValidStrip if no candidate direction works.
ExtendedPair bounding_strip(const ConvexPolygon& k, const ConvexPolygon& l,
                            const Region& k_ext, const Region& l_ext,
                            std::size_t source_component);

/// One bounded extended pair per opposite component pair.
std::vector<ExtendedPair> reduce_pair(const ConvexPolygon& k, const ConvexPolygon& l);

/// Bookkeeping identities of a reduction.
struct AdditivityLedger {
  Scalar g_total;
  Scalar g_sum;
  Scalar g_prime_total;
  Scalar g_prime_sum;
  bool additive;  // both sums equal their totals exactly
};

AdditivityLedger additivity_ledger(const ConvexPolygon& k, const ConvexPolygon& l,
                                   const std::vector<ExtendedPair>& pairs);

// ---------------------------------------------------------------------------
// Parallelogram cases.
// ---------------------------------------------------------------------------

/// Parallelogram test: four vertices with v2 = -v0 and v3 = -v1.
bool is_symmetric_parallelogram(const ConvexPolygon& p);

struct Normalization {
  Matrix2 t;            // maps Q onto the parallelogram, det T > 0
  ConvexPolygon l_image;  // T^{-1} L
};

/// T has the half-edge vectors of K_par as columns, starting from the edge
/// whose midpoint direction comes first counterclockwise from the positive
/// x axis (so K_par = Q gives the identity).
Normalization normalize_parallelogram(const ConvexPolygon& k_par, const ConvexPolygon& l);

enum class SquareCase { containment, edge_case, corner_case, swap_then_classify, band };

const char* to_string(SquareCase c) noexcept;

/// Case analysis of (Q, L_par) by vertex-containment counts. When neither
/// shape holds a vertex of the other, two boundary components make a band
/// (L crosses two opposite edges and F is log-linear near 1); four components
/// throw UnclassifiedConfiguration, which needs another reduction pass.
SquareCase classify_square_case(const ConvexPolygon& l_par);

/// A terminal (Q, L) case reached by reducing an arbitrary transversal pair.
struct TerminalCase {
  Matrix2 t;
  ConvexPolygon l_image;
  SquareCase kind;
  std::size_t depth;
  bool swapped;  // the roles of the two parallelograms were exchanged
};

/// Applies the reduction twice (K side, then L side) until both shapes are
/// parallelograms, normalizes to the square, and classifies. Unclassified
/// four-component configurations get one more reduction pass; swapped cases
/// are swapped and normalized again.
std::vector<TerminalCase> reduce_to_square_cases(const ConvexPolygon& k,
                                                 const ConvexPolygon& l);

}  // namespace logconcave
