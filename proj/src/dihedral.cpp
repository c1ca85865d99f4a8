#include "logconcave/dihedral.hpp"

#include "logconcave/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace logconcave {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2 * std::numbers::pi;

double fold(double angle, int n) {
  const double period = kTwoPi / n;
  double phi = std::fmod(angle, period);
  if (phi < 0) phi += period;
  if (phi > period / 2) phi = period - phi;
  return phi;
}

std::vector<double> uniform_nodes(double hi, std::size_t count) {
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i)
    out[i] = hi * static_cast<double>(i) / static_cast<double>(count - 1);
  out.back() = hi;
  return out;
}

RadialShape sampled(int n, std::size_t count, std::function<double(double)> profile,
                    std::string descriptor) {
  RadialShape s;
  s.n = n;
  s.theta = uniform_nodes(kPi / n, count);
  s.rho.reserve(count);
  for (double th : s.theta) s.rho.push_back(profile(th));
  s.profile = std::move(profile);
  s.descriptor = std::move(descriptor);
  return s;
}

template <typename Fn>
double simpson(const Fn& fn, double lo, double hi, std::size_t count) {
  const double h = (hi - lo) / static_cast<double>(count);
  double total = fn(lo) + fn(hi);
  for (std::size_t i = 1; i < count; ++i)
    total += (i % 2 == 1 ? 4.0 : 2.0) * fn(lo + h * static_cast<double>(i));
  return total * h / 3;
}

// Subinterval count for a piece of length `len` at target step `h`: a
// multiple of 4 so that the halved rule is still Simpson.
std::size_t piece_count(double len, double h) {
  const auto quarters = static_cast<std::size_t>(std::ceil(len / (4 * h)));
  return 4 * std::max<std::size_t>(quarters, 1);
}

}  // namespace

double RadialShape::operator()(double angle) const {
  const double phi = fold(angle, n);
  if (profile) return profile(phi);
  if (theta.size() < 2) fail(ErrorCode::InsufficientSamples, "radial shape has no samples");
  const double step = theta.back() / static_cast<double>(theta.size() - 1);
  const auto i = std::min(static_cast<std::size_t>(phi / step), theta.size() - 2);
  const double w = (phi - theta[i]) / step;
  return rho[i] * (1 - w) + rho[i + 1] * w;
}

ProfileSpec parse_profile(const std::string& text, double eps) {
  ProfileSpec spec;
  spec.eps = eps;
  if (text == "cosine" || text == "1+eps*cos(n*theta)") {
    spec.kind = ProfileSpec::Kind::cosine;
  } else if (text == "circle") {
    spec.kind = ProfileSpec::Kind::circle;
  } else if (text == "ellipse") {
    spec.kind = ProfileSpec::Kind::ellipse;
  } else {
    fail(ErrorCode::InvalidArgument, "unknown profile '" + text + "'");
  }
  return spec;
}

CurvatureReport curvature_condition(const RadialShape& k) {
  const std::size_t m = k.rho.size();
  if (m < 64) fail(ErrorCode::InsufficientSamples, "curvature check needs at least 64 samples");
  const double h = k.theta.back() / static_cast<double>(m - 1);
  const auto last = static_cast<long>(m - 1);
  auto at = [&](long j) {
    if (j < 0) j = -j;
    if (j > last) j = 2 * last - j;
    return k.rho[static_cast<std::size_t>(j)];
  };
  CurvatureReport report{true, INFINITY, 0};
  for (long i = 0; i <= last; ++i) {
    const double r = at(i);
    const double d1 = (-at(i + 2) + 8 * at(i + 1) - 8 * at(i - 1) + at(i - 2)) / (12 * h);
    const double d2 =
        (-at(i + 2) + 16 * at(i + 1) - 30 * r + 16 * at(i - 1) - at(i - 2)) / (12 * h * h);
    const double margin = r * r + 2 * d1 * d1 - r * d2;
    if (margin < report.min_margin) {
      report.min_margin = margin;
      report.argmin_theta = k.theta[static_cast<std::size_t>(i)];
    }
  }
  report.ok = report.min_margin > 0;
  return report;
}

RadialShape make_dn_shape(const ProfileSpec& profile, int n, std::size_t samples,
                          bool enforce_convexity) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "dihedral order must be at least 2");
  if (samples < 2) fail(ErrorCode::InsufficientSamples, "need at least two samples");
  std::function<double(double)> fn;
  std::string descriptor;
  const double eps = profile.eps;
  switch (profile.kind) {
    case ProfileSpec::Kind::cosine:
      fn = [eps, n](double th) { return 1 + eps * std::cos(n * th); };
      descriptor = "1+eps*cos(n*theta), eps=" + std::to_string(eps);
      break;
    case ProfileSpec::Kind::circle:
      fn = [](double) { return 1.0; };
      descriptor = "circle";
      break;
    case ProfileSpec::Kind::ellipse:
      if (n != 2) fail(ErrorCode::InvalidArgument, "the ellipse profile has n = 2");
      fn = [eps](double th) {
        const double c = std::cos(th), s = std::sin(th);
        return 1 / std::sqrt(c * c + eps * eps * s * s);
      };
      descriptor = "ellipse, ratio=" + std::to_string(eps);
      break;
  }
  RadialShape shape = sampled(n, samples, std::move(fn), std::move(descriptor));
  if (std::any_of(shape.rho.begin(), shape.rho.end(), [](double r) { return !(r > 0); }))
    fail(ErrorCode::NotConvexProfile, "profile is not positive");
  if (enforce_convexity) {
    const auto report = curvature_condition(shape);
    if (!report.ok)
      fail(ErrorCode::NotConvexProfile,
           "curvature margin " + std::to_string(report.min_margin) + " at theta=" +
               std::to_string(report.argmin_theta));
  }
  return shape;
}

RadialShape rotate_half_period(const RadialShape& k) {
  const double shift = kPi / k.n;
  return sampled(k.n, k.theta.size(), [k, shift](double th) { return k(th - shift); },
                 k.descriptor + ", rotated by pi/n");
}

std::pair<double, double> w_point(std::pair<double, double> p, int n) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "dihedral order must be at least 2");
  const double r = std::hypot(p.first, p.second);
  if (r == 0) return {0, 0};
  double theta = std::atan2(p.second, p.first);
  const double top = kPi / n;
  if (theta < -1e-12 || theta > top + 1e-12)
    fail(ErrorCode::OutsideSector, "point lies outside the sector [0, pi/n]");
  theta = std::clamp(theta, 0.0, top);
  const double image = theta * n / 2;
  return {r * std::cos(image), r * std::sin(image)};
}

RadialShape w_shape(const RadialShape& k, bool enforce_convexity) {
  if (enforce_convexity) {
    const auto report = curvature_condition(k);
    if (!report.ok)
      fail(ErrorCode::CurvatureViolated,
           "curvature margin " + std::to_string(report.min_margin) + " is not positive");
  }
  if (k.n == 2) return k;
  const int n = k.n;
  return sampled(2, k.theta.size(), [k, n](double th) { return k(2 * th / n); },
                 "w(" + k.descriptor + ")");
}

Quadrature polar_min_area(const RadialShape& k, const RadialShape& l, double scale,
                          double lo, double hi, std::size_t intervals) {
  if (!(hi > lo) || intervals < 4)
    fail(ErrorCode::InvalidArgument, "polar_min_area needs hi > lo and >= 4 intervals");
  const double h = kTwoPi / static_cast<double>(intervals);
  auto gap = [&](double th) { return scale * k(th) - l(th); };
  auto integrand = [&](double th) {
    const double r = std::min(scale * k(th), l(th));
    return 0.5 * r * r;
  };

  std::vector<double> breaks{lo};
  const auto scan = static_cast<std::size_t>(std::ceil((hi - lo) / h));
  double prev_th = lo, prev_gap = gap(lo);
  for (std::size_t i = 1; i <= scan; ++i) {
    const double th = i == scan ? hi : lo + (hi - lo) * static_cast<double>(i) /
                                               static_cast<double>(scan);
    const double cur_gap = gap(th);
    if (prev_gap * cur_gap < 0) {
      double a = prev_th, b = th, ga = prev_gap;
      while (b - a > 1e-12) {
        const double mid = 0.5 * (a + b);
        const double gm = gap(mid);
        if (ga * gm <= 0) {
          b = mid;
        } else {
          a = mid;
          ga = gm;
        }
      }
      breaks.push_back(0.5 * (a + b));
    } else if (cur_gap == 0 && i != scan) {
      breaks.push_back(th);
    }
    prev_th = th;
    prev_gap = cur_gap;
  }
  breaks.push_back(hi);

  Quadrature q{0, 0};
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i], b = breaks[i + 1];
    if (!(b > a)) continue;
    const std::size_t count = piece_count(b - a, h);
    const double fine = simpson(integrand, a, b, count);
    const double coarse = simpson(integrand, a, b, count / 2);
    q.value += fine;
    q.error += std::abs(fine - coarse) / 15;
  }
  return q;
}

Quadrature sector_area(const RadialShape& k, double a, std::size_t intervals) {
  const double hi = kPi / k.n;
  const double h = kTwoPi / static_cast<double>(intervals);
  auto integrand = [&](double th) {
    const double r = a * k(th);
    return 0.5 * r * r;
  };
  const std::size_t count = piece_count(hi, h);
  const double fine = simpson(integrand, 0, hi, count);
  const double coarse = simpson(integrand, 0, hi, count / 2);
  return {fine, std::abs(fine - coarse) / 15};
}

DihedralReport dihedral_identity_check(const RadialShape& k, const RadialShape& l,
                                       const std::vector<double>& t_grid,
                                       std::size_t intervals, bool enforce_convexity) {
  if (k.n != l.n) fail(ErrorCode::InvalidArgument, "K and L must share the dihedral order");
  const int n = k.n;
  const RadialShape wk = w_shape(k, enforce_convexity);
  const RadialShape wl = w_shape(l, enforce_convexity);

  DihedralReport report{n, {}, 0, 0, 0, 0, -INFINITY};
  for (double t : t_grid) {
    const double s = std::exp(t);
    DihedralRow row{};
    row.t = t;
    const auto full = polar_min_area(k, l, s, 0, kTwoPi, intervals);
    row.full = full.value;
    row.error = full.error;
    row.sector = 2 * n * polar_min_area(k, l, s, 0, kPi / n, intervals).value;
    row.w_sector = 4 * polar_min_area(wk, wl, s, 0, kPi / 2, intervals).value;
    row.w_full = polar_min_area(wk, wl, s, 0, kTwoPi, intervals).value;
    report.max_dev_sector = std::max(report.max_dev_sector, std::abs(row.full - row.sector));
    report.max_dev_w = std::max({report.max_dev_w, std::abs(row.full - row.w_sector),
                                 std::abs(row.full - row.w_full)});
    report.rows.push_back(row);
  }

  auto& rows = report.rows;
  for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
    rows[i].second_difference =
        std::log(rows[i + 1].full) - 2 * std::log(rows[i].full) + std::log(rows[i - 1].full);
    rows[i].allowance = rows[i - 1].error / rows[i - 1].full +
                        2 * rows[i].error / rows[i].full + rows[i + 1].error / rows[i + 1].full;
    report.max_second_difference_excess =
        std::max(report.max_second_difference_excess,
                 rows[i].second_difference - rows[i].allowance);
  }

  const double w_area = sector_area(wk, 1, intervals).value;
  report.jacobian_area = w_area;
  report.jacobian_deviation = std::abs(w_area - 0.5 * n * sector_area(k, 1, intervals).value);
  return report;
}

}  // namespace logconcave
