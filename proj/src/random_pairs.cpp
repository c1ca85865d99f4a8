#include "logconcave/random_pairs.hpp"

#include "logconcave/error.hpp"
#include "logconcave/transversal.hpp"

namespace logconcave {

namespace {

constexpr std::int64_t kGrid = 16;       // coordinates are multiples of 1/16
constexpr std::int64_t kOuter = 2 * kGrid;
constexpr std::int64_t kInner = kGrid;

std::int64_t draw(std::mt19937_64& engine, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(engine() % span);
}

}  // namespace

std::optional<ConvexPolygon> random_symmetric_polygon(std::mt19937_64& engine,
                                                      std::size_t vertex_budget) {
  if (vertex_budget < 4) fail(ErrorCode::InvalidArgument, "vertex budget must be at least 4");
  std::vector<Point> points;
  const std::size_t wanted = vertex_budget / 2;
  while (points.size() < 2 * wanted) {
    const std::int64_t x = draw(engine, -kOuter, kOuter);
    const std::int64_t y = draw(engine, -kOuter, kOuter);
    const std::int64_t r2 = x * x + y * y;
    if (r2 < kInner * kInner || r2 > kOuter * kOuter) continue;
    const Point p(ratio(x, kGrid), ratio(y, kGrid));
    points.push_back(p);
    points.push_back(-p);
  }
  try {
    ConvexPolygon hull = convex_hull(points, Symmetry::central);
    if (hull.size() < 4) return std::nullopt;
    return hull.with_symmetry(detect_symmetry(hull));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DegenerateInput) return std::nullopt;
    throw;
  }
}

RandomPair random_symmetric_pair(std::uint64_t seed, std::uint64_t index,
                                 std::size_t vertex_budget) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 engine(seq);
  const Scalar eps = ratio(1, 64);
  for (std::size_t attempt = 1; attempt <= 100; ++attempt) {
    auto k = random_symmetric_polygon(engine, vertex_budget);
    auto l = random_symmetric_polygon(engine, vertex_budget);
    if (!k || !l) continue;
    try {
      PerturbedPair moved = perturb_to_f(*k, *l, eps);
      if (check_class_f(moved.k, moved.l).crossings.empty()) continue;
      return {std::move(moved.k), std::move(moved.l), moved.delta, attempt};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PerturbationFailed) throw;
    }
  }
  fail(ErrorCode::GenerationFailed, "no usable pair within 100 draws");
}

}  // namespace logconcave
