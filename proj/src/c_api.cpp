#include "logconcave/logconcave.h"

#include "logconcave/area_dynamics.hpp"
#include "logconcave/counterexamples.hpp"
#include "logconcave/dihedral.hpp"
#include "logconcave/error.hpp"
#include "logconcave/json_io.hpp"
#include "logconcave/parallelogram_oracle.hpp"
#include "logconcave/random_pairs.hpp"
#include "logconcave/transversal.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct lc_polygon {
  logconcave::ConvexPolygon shape;
};

namespace {

using namespace logconcave;

thread_local std::string last_error;

static_assert(static_cast<int>(ErrorCode::Internal) + LC_ERR_INVALID_ARGUMENT == LC_ERR_INTERNAL);

lc_status status_of(ErrorCode code) {
  // lc_status lists the library codes in the same order after the null check.
  return static_cast<lc_status>(static_cast<int>(code) + LC_ERR_INVALID_ARGUMENT);
}

template <typename Fn>
lc_status guard(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return LC_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return LC_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return LC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return LC_ERR_INTERNAL;
  }
}

lc_status null_argument(const char* what) {
  last_error = std::string("null argument: ") + what;
  return LC_ERR_NULL_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

lc_polygon* wrap(ConvexPolygon p) { return new lc_polygon{std::move(p)}; }

}  // namespace

extern "C" {

const char* lc_version(void) { return "1.0.0"; }

const char* lc_status_string(lc_status status) {
  if (status == LC_OK) return "ok";
  if (status == LC_ERR_NULL_ARGUMENT) return "NullArgument";
  if (status < LC_OK || status > LC_ERR_INTERNAL) return "Unknown";
  return to_string(static_cast<ErrorCode>(status - LC_ERR_INVALID_ARGUMENT));
}

const char* lc_last_error(void) { return last_error.c_str(); }

void lc_string_free(char* s) { std::free(s); }

lc_status lc_polygon_from_json(const char* json, lc_polygon** out) {
  if (!json || !out) return null_argument("json/out");
  return guard([&] { *out = wrap(polygon_from_json(Json::parse(json))); });
}

lc_status lc_polygon_to_json(const lc_polygon* p, char** json_out) {
  if (!p || !json_out) return null_argument("polygon/json_out");
  return guard([&] { *json_out = copy_string(polygon_json(p->shape).dump()); });
}

void lc_polygon_free(lc_polygon* p) { delete p; }

lc_status lc_polygon_area(const lc_polygon* p, char** exact_out, double* decimal_out) {
  if (!p) return null_argument("polygon");
  return guard([&] {
    const Scalar a = area(p->shape);
    if (exact_out) *exact_out = copy_string(format_scalar(a));
    if (decimal_out) *decimal_out = to_double(a);
  });
}

lc_status lc_polygon_intersect(const lc_polygon* a, const lc_polygon* b, lc_polygon** out) {
  if (!a || !b || !out) return null_argument("a/b/out");
  return guard([&] {
    auto inter = intersect(a->shape, b->shape);
    *out = inter ? wrap(std::move(*inter)) : nullptr;
  });
}

lc_status lc_polygon_scale(const lc_polygon* p, const char* factor, lc_polygon** out) {
  if (!p || !factor || !out) return null_argument("polygon/factor/out");
  return guard([&] { *out = wrap(scale(p->shape, parse_scalar(factor))); });
}

lc_status lc_polygon_hausdorff(const lc_polygon* a, const lc_polygon* b, char** json_out) {
  if (!a || !b || !json_out) return null_argument("a/b/json_out");
  return guard([&] {
    const auto d = hausdorff_distance(a->shape, b->shape);
    const Json j{{"squared", scalar_json(d.squared)},
                 {"lower", scalar_json(d.lower)},
                 {"upper", scalar_json(d.upper)}};
    *json_out = copy_string(j.dump());
  });
}

lc_status lc_check_class_f(const lc_polygon* k, const lc_polygon* l, int* in_class,
                           char** json_out) {
  if (!k || !l) return null_argument("k/l");
  return guard([&] {
    const auto d = check_class_f(k->shape, l->shape);
    if (in_class) *in_class = d.in_class ? 1 : 0;
    if (json_out) *json_out = copy_string(to_json(d).dump());
  });
}

lc_status lc_perturb_to_f(const lc_polygon* k, const lc_polygon* l, const char* eps,
                          lc_polygon** l_out, char** delta_out) {
  if (!k || !l || !eps || !l_out) return null_argument("k/l/eps/l_out");
  return guard([&] {
    auto moved = perturb_to_f(k->shape, l->shape, parse_scalar(eps));
    std::string delta = format_scalar(moved.delta);
    *l_out = wrap(std::move(moved.l));
    if (delta_out) *delta_out = copy_string(delta);
  });
}

lc_status lc_property_b(const lc_polygon* k, const lc_polygon* l, int* holds,
                        char** json_out) {
  if (!k || !l) return null_argument("k/l");
  return guard([&] {
    const auto r = property_b_check(k->shape, l->shape);
    if (holds) *holds = r.holds ? 1 : 0;
    if (json_out) *json_out = copy_string(to_json(r).dump());
  });
}

lc_status lc_midpoint_check(const lc_polygon* k, const lc_polygon* l, const char* q,
                            const char* r, int* holds, char** json_out) {
  if (!k || !l || !q || !r) return null_argument("k/l/q/r");
  return guard([&] {
    const auto w =
        midpoint_logconcavity_check(k->shape, l->shape, parse_scalar(q), parse_scalar(r));
    if (holds) *holds = w.defect >= 0 ? 1 : 0;
    if (json_out) *json_out = copy_string(to_json(w).dump());
  });
}

lc_status lc_midpoint_grid(const lc_polygon* k, const lc_polygon* l, size_t count,
                           int* all_hold, char** json_out) {
  if (!k || !l) return null_argument("k/l");
  return guard([&] {
    Json rows = Json::array();
    bool ok = true;
    for (const auto& w : midpoint_grid(k->shape, l->shape, count)) {
      ok = ok && w.defect >= 0;
      rows.push_back(to_json(w));
    }
    if (all_hold) *all_hold = ok ? 1 : 0;
    if (json_out) *json_out = copy_string(rows.dump());
  });
}

lc_status lc_sample_logf(const lc_polygon* k, const lc_polygon* l, double t_min, double t_max,
                         size_t steps, char** csv_out) {
  if (!k || !l || !csv_out) return null_argument("k/l/csv_out");
  return guard([&] {
    *csv_out = copy_string(to_csv(sample_logf(k->shape, l->shape, t_min, t_max, steps)));
  });
}

lc_status lc_reduce_pair(const lc_polygon* k, const lc_polygon* l, int to_parallelograms,
                         char** json_out) {
  if (!k || !l || !json_out) return null_argument("k/l/json_out");
  return guard([&] {
    const auto pairs = reduce_pair(k->shape, l->shape);
    Json components = Json::array();
    for (const auto& c : boundary_components(k->shape, l->shape))
      components.push_back(to_json(c));
    Json extended = Json::array();
    for (const auto& p : pairs) extended.push_back(to_json(p));
    Json out{{"components", std::move(components)},
             {"pairs", std::move(extended)},
             {"ledger", to_json(additivity_ledger(k->shape, l->shape, pairs))}};
    if (to_parallelograms) {
      Json terminals = Json::array();
      for (const auto& t : reduce_to_square_cases(k->shape, l->shape))
        terminals.push_back(to_json(t));
      out["terminal_cases"] = std::move(terminals);
    }
    *json_out = copy_string(out.dump());
  });
}

lc_status lc_random_symmetric_pair(uint64_t seed, uint64_t index, size_t vertex_budget,
                                   lc_polygon** k_out, lc_polygon** l_out) {
  if (!k_out || !l_out) return null_argument("k_out/l_out");
  return guard([&] {
    auto pair = random_symmetric_pair(seed, index, vertex_budget);
    *k_out = wrap(std::move(pair.k));
    *l_out = wrap(std::move(pair.l));
  });
}

lc_status lc_scan_pair(uint64_t seed, uint64_t index, size_t vertex_budget, int* violation,
                       char** json_out) {
  return guard([&] {
    const auto pair = random_symmetric_pair(seed, index, vertex_budget);
    const auto report = property_b_check(pair.k, pair.l);
    bool midpoints_hold = true;
    Scalar min_defect;
    bool first = true;
    for (const auto& w : midpoint_grid(pair.k, pair.l)) {
      if (first || w.defect < min_defect) min_defect = w.defect;
      first = false;
      midpoints_hold = midpoints_hold && w.defect >= 0;
    }
    if (violation) *violation = (report.holds && midpoints_hold) ? 0 : 1;
    if (json_out) {
      const Json j{{"index", index},
                   {"attempts", pair.attempts},
                   {"delta", format_scalar(pair.delta)},
                   {"K", polygon_json(pair.k)},
                   {"L", polygon_json(pair.l)},
                   {"property_b", to_json(report)},
                   {"midpoint_min_defect", scalar_json(min_defect)},
                   {"midpoints_hold", midpoints_hold}};
      *json_out = copy_string(j.dump());
    }
  });
}

lc_status lc_oracle_grid(const char* which, size_t density, int* all_hold, char** jsonl_out) {
  if (!which || !jsonl_out) return null_argument("which/jsonl_out");
  return guard([&] {
    const std::string kind(which);
    std::vector<GridPoint> grid;
    if (kind == "edge")
      grid = edge_grid(density);
    else if (kind == "corner")
      grid = corner_grid(density);
    else
      fail(ErrorCode::InvalidArgument, "oracle grid case must be edge or corner");
    std::string out;
    std::size_t holding = 0;
    for (const auto& g : grid) {
      holding += g.verdict.holds ? 1 : 0;
      out += to_json(g).dump();
      out += '\n';
    }
    const Json summary{{"summary", {{"case", kind},
                                    {"density", density},
                                    {"points", grid.size()},
                                    {"holds", holding},
                                    {"all_hold", holding == grid.size()}}}};
    out += summary.dump();
    out += '\n';
    if (all_hold) *all_hold = holding == grid.size() ? 1 : 0;
    *jsonl_out = copy_string(out);
  });
}

lc_status lc_dihedral_verify(const lc_dihedral_options* options, int* within_tolerance,
                             char** csv_out, char** json_out) {
  if (!options || !options->profile) return null_argument("options");
  return guard([&] {
    const auto& o = *options;
    if (o.steps < 3) fail(ErrorCode::InvalidArgument, "need at least three t steps");
    if (!(o.t_min < o.t_max)) fail(ErrorCode::InvalidArgument, "need t_min < t_max");
    const bool enforce = o.allow_nonconvex == 0;
    const auto k = make_dn_shape(parse_profile(o.profile, o.eps), o.n, 2048, enforce);
    const auto l = rotate_half_period(k);
    std::vector<double> t_grid;
    for (std::size_t i = 0; i < o.steps; ++i)
      t_grid.push_back(o.t_min + (o.t_max - o.t_min) * static_cast<double>(i) /
                                     static_cast<double>(o.steps - 1));
    const auto report = dihedral_identity_check(k, l, t_grid, o.samples, enforce);
    const bool ok = report.max_dev_sector < 1e-5 && report.max_dev_w < 1e-5 &&
                    report.jacobian_deviation < 1e-6 * report.jacobian_area &&
                    report.max_second_difference_excess <= 1e-7;
    if (within_tolerance) *within_tolerance = ok ? 1 : 0;
    if (csv_out) {
      std::string csv = "t,f,logf,second_difference\n";
      char buf[160];
      for (const auto& row : report.rows) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", row.t, row.full,
                      std::log(row.full), row.second_difference);
        csv += buf;
      }
      *csv_out = copy_string(csv);
    }
    if (json_out) {
      Json j = to_json(report);
      j["profile"] = k.descriptor;
      j["curvature_margin"] = curvature_condition(k).min_margin;
      j["within_tolerance"] = ok;
      *json_out = copy_string(j.dump());
    }
  });
}

lc_status lc_counterexamples(char** json_out) {
  if (!json_out) return null_argument("json_out");
  return guard([&] {
    const auto [k, l] = uniform_counterexample();
    const auto uniform = certify_uniform_violation();
    const auto quasi = certify_quasiconcave_violation(0.1);
    const Json j{{"uniform", {{"K", polygon_json(k)}, {"L", polygon_json(l)},
                              {"witness", to_json(uniform)}}},
                 {"quasi_concave", to_json(quasi)}};
    *json_out = copy_string(j.dump());
  });
}

}  // extern "C"
