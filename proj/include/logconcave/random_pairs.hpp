#pragma once

#include "logconcave/geometry.hpp"

#include <cstdint>
#include <random>

namespace logconcave {

/// Hull of `budget / 2` random points and their negations. Points lie on the
/// 1/16 grid in the annulus 1 <= |x| <= 2. Returns nothing when fewer than
/// four hull vertices remain.
std::optional<ConvexPolygon> random_symmetric_polygon(std::mt19937_64& engine,
                                                      std::size_t vertex_budget);

struct RandomPair {
  ConvexPolygon k;
  ConvexPolygon l;
  Scalar delta;          // scaling applied to L to enter the transversal class
  std::size_t attempts;  // draws used, at most 100
};

/// Pair number `index` of the stream for `seed`: the generator is seeded by
/// seed_seq{seed low word, seed high word, index low word, index high word},
/// so pairs are independent of one another and of evaluation order. The
/// pair is scaled into the transversal class (eps = 1/64) and has crossing
/// boundaries. Throws GenerationFailed after 100 draws.
RandomPair random_symmetric_pair(std::uint64_t seed, std::uint64_t index,
                                 std::size_t vertex_budget = 12);

}  // namespace logconcave
