#include "logconcave/area_dynamics.hpp"

#include "logconcave/error.hpp"
#include "logconcave/transversal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace logconcave {

Scalar area_at(const ConvexPolygon& k, const ConvexPolygon& l, const Scalar& a) {
  const auto inter = intersect(scale(k, a), l);
  return inter ? area(*inter) : Scalar(0);
}

std::vector<EdgeSpan> boundary_spans(const ConvexPolygon& k, const ConvexPolygon& l,
                                     const Scalar& r) {
  if (r <= 0) fail(ErrorCode::NonPositiveScale, "boundary_spans: r must be positive");
  const auto l_lines = halfplanes(l);
  std::vector<EdgeSpan> spans;
  for (std::size_t i = 0; i < k.size(); ++i) {
    const Point start = r * k.vertex(i);
    const Point step = r * (k.vertex(i + 1) - k.vertex(i));
    EdgeSpan span{i, 0, 1, std::nullopt, std::nullopt};
    bool empty = false;
    for (std::size_t j = 0; j < l_lines.size() && !empty; ++j) {
      const Scalar coef = dot(l_lines[j].normal, step);
      const Scalar room = l_lines[j].offset - dot(l_lines[j].normal, start);
      if (coef == 0) {
        empty = room < 0;
        continue;
      }
      Scalar bound = room / coef;
      if (coef > 0 && bound < span.t_out) {
        span.t_out = std::move(bound);
        span.exit_edge_of_l = j;
      } else if (coef < 0 && bound > span.t_in) {
        span.t_in = std::move(bound);
        span.entry_edge_of_l = j;
      }
    }
    if (!empty && span.t_in < span.t_out) spans.push_back(std::move(span));
  }
  return spans;
}

StructureWindow structure_window(const ConvexPolygon& k, const ConvexPolygon& l) {
  StructureWindow window{0, std::nullopt};
  auto record = [&](const Scalar& event) {
    if (event == 1)
      fail(ErrorCode::NotTransversal, "boundary structure changes at r = 1");
    if (event < 1) {
      if (event > window.lower) window.lower = event;
    } else if (!window.upper || event < *window.upper) {
      window.upper = event;
    }
  };

  // A vertex of rK passes through an edge of L.
  for (std::size_t j = 0; j < l.size(); ++j) {
    const Line line = edge_line(l, j);
    const Point w0 = l.vertex(j);
    const Point d = l.vertex(j + 1) - w0;
    const Scalar len2 = d.x * d.x + d.y * d.y;
    for (const auto& v : k.vertices()) {
      const Scalar s = dot(line.normal, v);
      if (s <= 0) continue;
      const Scalar event = line.offset / s;
      const Point p = event * v - w0;
      const Scalar proj = p.x * d.x + p.y * d.y;
      if (proj >= 0 && proj <= len2) record(event);
    }
  }
  // A vertex of L passes through an edge of rK.
  for (std::size_t i = 0; i < k.size(); ++i) {
    const Line line = edge_line(k, i);
    if (line.offset <= 0)
      fail(ErrorCode::InvalidArgument, "structure_window: origin must be interior to K");
    const Point v0 = k.vertex(i);
    const Point e = k.vertex(i + 1) - v0;
    const Scalar len2 = e.x * e.x + e.y * e.y;
    for (const auto& w : l.vertices()) {
      const Scalar s = dot(line.normal, w);
      if (s <= 0) continue;
      const Scalar event = s / line.offset;
      const Point p = w - event * v0;
      const Scalar proj = p.x * e.x + p.y * e.y;
      if (proj >= 0 && proj <= event * len2) record(event);
    }
  }
  return window;
}

Scalar g_at(const ConvexPolygon& k, const ConvexPolygon& l, const Scalar& r) {
  Scalar total = 0;
  for (const auto& span : boundary_spans(k, l, r))
    total += cross(k.vertex(span.edge), k.vertex(span.edge + 1)) * (span.t_out - span.t_in);
  return r * total;
}

Scalar g_value(const ConvexPolygon& k, const ConvexPolygon& l) {
  require_class_f(k, l);
  return g_at(k, l, 1);
}

namespace {

struct SpanShape {
  std::size_t edge;
  std::optional<std::size_t> entry;
  std::optional<std::size_t> exit;
  friend bool operator==(const SpanShape&, const SpanShape&) = default;
};

std::vector<SpanShape> span_shapes(const ConvexPolygon& k, const ConvexPolygon& l,
                                   const Scalar& r) {
  std::vector<SpanShape> out;
  for (const auto& s : boundary_spans(k, l, r))
    out.push_back({s.edge, s.entry_edge_of_l, s.exit_edge_of_l});
  return out;
}

// d t / d r at r = 1 for a crossing of edge `step` of K with L's edge line.
Scalar crossing_rate(const Line& line, const Point& step) {
  return -line.offset / dot(line.normal, step);
}

}  // namespace

Scalar g_derivative(const ConvexPolygon& k, const ConvexPolygon& l) {
  require_class_f(k, l);
  const StructureWindow window = structure_window(k, l);
  Scalar delta(1, 1000000);
  const Scalar below = (1 - window.lower) / 2;
  if (below < delta) delta = below;
  if (window.upper) {
    const Scalar above = (*window.upper - 1) / 2;
    if (above < delta) delta = above;
  }
  const auto at_one = span_shapes(k, l, 1);
  if (span_shapes(k, l, 1 - delta) != at_one || span_shapes(k, l, 1 + delta) != at_one)
    fail(ErrorCode::NotTransversal, "boundary structure is not constant around r = 1");

  const auto l_lines = halfplanes(l);
  Scalar total = 0;
  for (const auto& span : boundary_spans(k, l, 1)) {
    const Point step = k.vertex(span.edge + 1) - k.vertex(span.edge);
    Scalar rate = span.t_out - span.t_in;
    if (span.exit_edge_of_l) rate += crossing_rate(l_lines[*span.exit_edge_of_l], step);
    if (span.entry_edge_of_l) rate -= crossing_rate(l_lines[*span.entry_edge_of_l], step);
    total += cross(k.vertex(span.edge), k.vertex(span.edge + 1)) * rate;
  }
  return total;
}

PropertyBReport property_b_check(const ConvexPolygon& k, const ConvexPolygon& l) {
  PropertyBReport report;
  report.g1 = g_value(k, l);
  report.g1_prime = g_derivative(k, l);
  report.area_kl = area_at(k, l, 1);
  report.lhs = report.area_kl * (report.g1 + report.g1_prime);
  report.rhs = report.g1 * report.g1;
  report.holds = report.lhs <= report.rhs;
  return report;
}

MidpointWitness midpoint_logconcavity_check(const ConvexPolygon& k,
                                            const ConvexPolygon& l,
                                            const Scalar& q, const Scalar& r) {
  if (q <= 0 || r <= 0 || r == 1)
    fail(ErrorCode::InvalidArgument, "midpoint check needs q > 0, r > 0, r != 1");
  MidpointWitness w;
  w.q = q;
  w.r = r;
  w.f_q = area_at(k, l, q);
  w.f_qr = area_at(k, l, q * r);
  w.f_qr2 = area_at(k, l, q * r * r);
  if (w.f_q == 0 || w.f_qr == 0 || w.f_qr2 == 0)
    fail(ErrorCode::ZeroArea, "midpoint check: an intersection area is zero");
  w.defect = w.f_qr * w.f_qr - w.f_q * w.f_qr2;
  return w;
}

namespace {

// Minkowski gauge of p with respect to a polygon containing the origin.
Scalar gauge(const ConvexPolygon& body, const Point& p) {
  Scalar best = 0;
  for (const auto& line : halfplanes(body)) {
    if (line.offset <= 0)
      fail(ErrorCode::InvalidArgument, "gauge: origin must be interior");
    Scalar g = dot(line.normal, p) / line.offset;
    if (g > best) best = std::move(g);
  }
  return best;
}

}  // namespace

std::pair<Scalar, Scalar> proper_scale_range(const ConvexPolygon& k,
                                             const ConvexPolygon& l) {
  Scalar worst_k_in_l = 0;
  for (const auto& v : k.vertices()) {
    Scalar g = gauge(l, v);
    if (g > worst_k_in_l) worst_k_in_l = std::move(g);
  }
  Scalar worst_l_in_k = 0;
  for (const auto& w : l.vertices()) {
    Scalar g = gauge(k, w);
    if (g > worst_l_in_k) worst_l_in_k = std::move(g);
  }
  return {1 / worst_k_in_l, worst_l_in_k};
}

std::vector<MidpointWitness> midpoint_grid(const ConvexPolygon& k,
                                           const ConvexPolygon& l, std::size_t count) {
  if (count == 0) return {};
  auto [lower, upper] = proper_scale_range(k, l);
  const auto steps = static_cast<unsigned long>(count + 1);

  Scalar q0 = lower;
  Scalar ratio;
  const double root = std::pow(to_double(upper / lower), 1.0 / static_cast<double>(steps));
  bool found = false;
  for (unsigned long denom = 64; denom <= (1UL << 24) && !found; denom *= 2) {
    auto numer = static_cast<long>(std::floor(root * static_cast<double>(denom)));
    for (; numer > static_cast<long>(denom); --numer) {
      Scalar candidate(numer, denom);
      candidate.canonicalize();
      Scalar top = lower;
      for (unsigned long s = 0; s < steps; ++s) top *= candidate;
      if (top <= upper) {
        ratio = candidate;
        found = true;
        break;
      }
    }
  }
  if (!found) {
    // K and L are (nearly) homothetic: no proper range worth sampling.
    q0 = lower / 2;
    ratio = Scalar(5, 4);
  }

  std::vector<MidpointWitness> out;
  out.reserve(count);
  Scalar q = q0;
  for (std::size_t j = 0; j < count; ++j) {
    out.push_back(midpoint_logconcavity_check(k, l, q, ratio));
    q *= ratio;
  }
  return out;
}

SampledFunction sample_logf(const ConvexPolygon& k, const ConvexPolygon& l,
                            double t_min, double t_max, std::size_t steps) {
  if (!(t_min < t_max) || steps < 3)
    fail(ErrorCode::InvalidArgument, "sample_logf needs t_min < t_max and steps >= 3");
  SampledFunction out;
  std::ostringstream dropped;
  for (std::size_t i = 0; i < steps; ++i) {
    const double t = t_min + (t_max - t_min) * static_cast<double>(i) /
                                 static_cast<double>(steps - 1);
    const Scalar value = area_at(k, l, from_double(std::exp(t)));
    if (value == 0) {
      dropped << (dropped.tellp() > 0 ? "," : "") << t;
      continue;
    }
    out.entries.emplace_back(t, std::log(to_double(value)));
  }
  out.meta = "F(e^t) at exact rational e^t";
  if (dropped.tellp() > 0) out.meta += "; dropped zero-area samples at t=" + dropped.str();
  return out;
}

std::string to_csv(const SampledFunction& f) {
  std::string csv = "t,logf\n";
  char buf[64];
  for (const auto& [t, v] : f.entries) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", t, v);
    csv += buf;
  }
  return csv;
}

}  // namespace logconcave
