#include "logconcave/json_io.hpp"

#include "logconcave/error.hpp"

#include <algorithm>

namespace logconcave {

Json scalar_json(const Scalar& value) {
  return Json{{"exact", format_scalar(value)}, {"decimal", to_double(value)}};
}

namespace {

Json point_json(const Point& p) {
  return Json::array({format_scalar(p.x), format_scalar(p.y)});
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return parse_scalar(j.dump());
  fail(ErrorCode::Parse, "expected a rational string or an integer, got " + j.dump());
}

}  // namespace

Json polygon_json(const ConvexPolygon& p) {
  Json vertices = Json::array();
  for (const auto& v : p.vertices()) vertices.push_back(point_json(v));
  return Json{{"vertices", std::move(vertices)}, {"symmetry", to_string(p.symmetry())}};
}

ConvexPolygon polygon_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    fail(ErrorCode::Parse, "polygon must be an object with a \"vertices\" array");
  std::vector<Point> points;
  for (const auto& v : j["vertices"]) {
    if (!v.is_array() || v.size() != 2) fail(ErrorCode::Parse, "vertex must be a pair");
    points.emplace_back(scalar_from_json(v[0]), scalar_from_json(v[1]));
  }
  if (points.size() < 3) fail(ErrorCode::Parse, "polygon needs at least three vertices");
  Scalar twice_area = 0;
  for (std::size_t i = 0; i < points.size(); ++i)
    twice_area += cross(points[i], points[(i + 1) % points.size()]);
  if (twice_area < 0) std::reverse(points.begin(), points.end());

  std::optional<Symmetry> symmetry;
  if (j.contains("symmetry")) {
    if (!j["symmetry"].is_string()) fail(ErrorCode::Parse, "symmetry must be a string");
    symmetry = parse_symmetry(j["symmetry"].get<std::string>());
  }
  try {
    ConvexPolygon p(std::move(points), symmetry.value_or(Symmetry::none));
    return symmetry ? p : p.with_symmetry(detect_symmetry(p));
  } catch (const Error& e) {
    fail(ErrorCode::Parse, std::string("invalid polygon: ") + e.what());
  }
}

Json to_json(const TransversalityDiagnosis& d) {
  Json violations = Json::array();
  for (const auto& v : d.violations)
    violations.push_back({{"kind", to_string(v.kind)}, {"location", point_json(v.location)}});
  Json crossings = Json::array();
  for (const auto& x : d.crossings) crossings.push_back(point_json(x));
  return Json{{"in_class", d.in_class},
              {"violations", std::move(violations)},
              {"crossings", std::move(crossings)}};
}

Json to_json(const PropertyBReport& r) {
  return Json{{"area", scalar_json(r.area_kl)}, {"g1", scalar_json(r.g1)},
              {"g1_prime", scalar_json(r.g1_prime)}, {"lhs", scalar_json(r.lhs)},
              {"rhs", scalar_json(r.rhs)}, {"holds", r.holds}};
}

Json to_json(const MidpointWitness& w) {
  return Json{{"q", scalar_json(w.q)},         {"r", scalar_json(w.r)},
              {"f_q", scalar_json(w.f_q)},     {"f_qr", scalar_json(w.f_qr)},
              {"f_qr2", scalar_json(w.f_qr2)}, {"defect", scalar_json(w.defect)},
              {"holds", w.defect >= 0}};
}

Json to_json(const BoundaryComponent& c) {
  Json line = Json::array();
  for (const auto& p : c.polyline) line.push_back(point_json(p));
  return Json{{"index", c.index},
              {"partner_index", c.partner_index},
              {"first_edge", c.first_edge},
              {"last_edge", c.last_edge},
              {"polyline", std::move(line)}};
}

Json to_json(const ExtendedPair& p) {
  Json strip = nullptr;
  if (p.strip_used)
    strip = Json{{"normal", Json::array({format_scalar(p.strip_used->normal.dx),
                                         format_scalar(p.strip_used->normal.dy)})},
                 {"halfwidth", format_scalar(p.strip_used->halfwidth)}};
  return Json{{"source_component", p.source_component},
              {"K_ext", polygon_json(p.k_ext)},
              {"L_ext", polygon_json(p.l_ext)},
              {"strip_used", std::move(strip)}};
}

Json to_json(const AdditivityLedger& l) {
  return Json{{"g_total", scalar_json(l.g_total)},
              {"g_sum", scalar_json(l.g_sum)},
              {"g_prime_total", scalar_json(l.g_prime_total)},
              {"g_prime_sum", scalar_json(l.g_prime_sum)},
              {"additive", l.additive}};
}

Json to_json(const Matrix2& t) {
  return Json::array({Json::array({format_scalar(t.a), format_scalar(t.b)}),
                      Json::array({format_scalar(t.c), format_scalar(t.d)})});
}

Json to_json(const TerminalCase& t) {
  return Json{{"kind", to_string(t.kind)},
              {"depth", t.depth},
              {"swapped", t.swapped},
              {"T", to_json(t.t)},
              {"L_image", polygon_json(t.l_image)}};
}

Json to_json(const OracleVerdict& v) {
  return Json{{"holds", v.holds},
              {"lhs", scalar_json(v.lhs)},
              {"rhs", scalar_json(v.rhs)},
              {"branch", to_string(v.branch)},
              {"detail", v.detail}};
}

Json to_json(const GridPoint& g) {
  Json params = Json::object();
  for (const auto& [name, value] : g.params) params[name] = format_scalar(value);
  Json out{{"params", std::move(params)}};
  if (g.e_value) out["E"] = scalar_json(*g.e_value);
  out["verdict"] = to_json(g.verdict);
  return out;
}

Json to_json(const UniformWitness& w) {
  Json scales = Json::array(), values = Json::array();
  for (const auto& s : w.scales) scales.push_back(scalar_json(s));
  for (const auto& v : w.values) values.push_back(scalar_json(v));
  return Json{{"scales", std::move(scales)},
              {"values", std::move(values)},
              {"defect", scalar_json(w.defect)},
              {"context", w.context}};
}

Json to_json(const QuasiConcaveWitness& w) {
  return Json{{"h", w.h},
              {"t", Json::array({w.t[0], w.t[1], w.t[2]})},
              {"values", Json::array({w.values[0], w.values[1], w.values[2]})},
              {"defect", w.defect},
              {"context", w.context}};
}

Json to_json(const DihedralReport& r) {
  return Json{{"n", r.n},
              {"t_points", r.rows.size()},
              {"max_dev_sector", r.max_dev_sector},
              {"max_dev_w", r.max_dev_w},
              {"jacobian_deviation", r.jacobian_deviation},
              {"jacobian_area", r.jacobian_area},
              {"max_second_difference_excess", r.max_second_difference_excess}};
}

}  // namespace logconcave
