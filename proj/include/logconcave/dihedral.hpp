#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace logconcave {

/// Radial function of a D_n-symmetric shape, stored on the fundamental
/// interval [0, π/n]. The full function is its even, 2π/n-periodic extension.
struct RadialShape {
  int n = 2;
  std::vector<double> theta;  // uniform, theta.front() = 0, theta.back() = π/n
  std::vector<double> rho;
  std::function<double(double)> profile;  // on [0, π/n]; empty means interpolate
  std::string descriptor;

  /// ρ at any angle.
  double operator()(double angle) const;
};

struct ProfileSpec {
  enum class Kind { cosine, circle, ellipse };
  Kind kind = Kind::cosine;
  double eps = 0;  // cosine: 1 + eps cos(nθ); ellipse: (cos²θ + eps² sin²θ)^(-1/2)
};

ProfileSpec parse_profile(const std::string& text, double eps);

struct CurvatureReport {
  bool ok;
  double min_margin;  // min of ρ² + 2ρ'² - ρρ'' over the samples
  double argmin_theta;
};

/// Five-point central differences on the reflected extension of the samples.
/// Throws InsufficientSamples below 64 samples.
CurvatureReport curvature_condition(const RadialShape& k);

/// Samples `samples` uniform nodes of [0, π/n]. With `enforce_convexity`
/// throws NotConvexProfile when the curvature margin is not positive.
RadialShape make_dn_shape(const ProfileSpec& profile, int n, std::size_t samples,
                          bool enforce_convexity = true);

/// The same shape rotated by π/n, i.e. ρ(θ - π/n) = ρ(π/n - θ) on [0, π/n].
RadialShape rotate_half_period(const RadialShape& k);

/// (r cos θ, r sin θ) -> (r cos(nθ/2), r sin(nθ/2)) for θ in [0, π/n].
/// Throws OutsideSector beyond a 1e-12 slack.
std::pair<double, double> w_point(std::pair<double, double> p, int n);

/// D_2 shape with ρ(θ) = ρ_K(2θ/n). With `enforce_convexity` throws
/// CurvatureViolated when K fails the curvature condition.
RadialShape w_shape(const RadialShape& k, bool enforce_convexity = true);

struct Quadrature {
  double value;
  double error;  // |S_N - S_{N/2}| / 15
};

/// ∫ ½ min(scale·ρ_K, ρ_L)² dθ over [lo, hi] by composite Simpson with step
/// about 2π/intervals, with extra nodes at the crossings of the two curves.
Quadrature polar_min_area(const RadialShape& k, const RadialShape& l, double scale,
                          double lo, double hi, std::size_t intervals);

/// ∫_0^{π/n} ½ (a ρ_K)² dθ, i.e. |aK ∩ G_n|.
Quadrature sector_area(const RadialShape& k, double a, std::size_t intervals = 2048);

struct DihedralRow {
  double t;
  double full;       // over [0, 2π]
  double sector;     // 2n · over [0, π/n]
  double w_sector;   // 4 · w-images over [0, π/2]
  double w_full;     // w-images over [0, 2π]
  double error;      // quadrature error estimate of `full`
  double second_difference;  // of log full; 0 at the grid ends
  double allowance;          // propagated quadrature error of the second difference
};

struct DihedralReport {
  int n;
  std::vector<DihedralRow> rows;
  double max_dev_sector;
  double max_dev_w;
  double jacobian_deviation;  // |area(w(K) ∩ G_2) - (n/2) area(K ∩ G_n)|
  double jacobian_area;       // area(w(K) ∩ G_2)
  double max_second_difference_excess;  // max(D - allowance)
};

/// Evaluates f(t) = |e^t K ∩ L| by the four routes on the t grid. K and L
/// must share n. The w-map is applied without the curvature precondition
/// unless `enforce_convexity` is set.
DihedralReport dihedral_identity_check(const RadialShape& k, const RadialShape& l,
                                       const std::vector<double>& t_grid,
                                       std::size_t intervals = 2048,
                                       bool enforce_convexity = true);

}  // namespace logconcave
