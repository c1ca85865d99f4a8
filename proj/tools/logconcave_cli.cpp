#include "logconcave/logconcave.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitHolds = 0;
constexpr int kExitInputError = 1;
constexpr int kExitViolation = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 42;
  std::string output;
  std::string format;  // empty: the command default
  unsigned jobs = 1;
};

// Owning wrappers around the C handles.
struct PolygonDeleter {
  void operator()(lc_polygon* p) const { lc_polygon_free(p); }
};
using Polygon = std::unique_ptr<lc_polygon, PolygonDeleter>;

struct StringDeleter {
  void operator()(char* s) const { lc_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

std::string take(char* s) {
  CString owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

void check(lc_status status, const std::string& what) {
  if (status == LC_OK) return;
  throw InputError(what + ": " + lc_status_string(status) + ": " + lc_last_error());
}

std::string read_all(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const Globals& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(g.output, std::ios::binary);
  if (!out) throw InputError("cannot write " + g.output);
  out << text;
}

struct Pair {
  Polygon k;
  Polygon l;
  bool symmetric;
};

Polygon polygon_from(const Json& j, const char* name) {
  lc_polygon* p = nullptr;
  check(lc_polygon_from_json(j.dump().c_str(), &p), std::string("polygon ") + name);
  return Polygon(p);
}

bool is_symmetric(const lc_polygon* p) {
  const Json j = Json::parse(take([&] {
    char* s = nullptr;
    check(lc_polygon_to_json(p, &s), "polygon");
    return s;
  }()));
  return j["symmetry"] != "none";
}

Pair read_pair(const std::string& path) {
  Json doc;
  try {
    doc = Json::parse(read_all(path));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("K") || !doc.contains("L"))
    throw InputError("input must be an object with polygons \"K\" and \"L\"");
  Pair pair{polygon_from(doc["K"], "K"), polygon_from(doc["L"], "L"), false};
  pair.symmetric = is_symmetric(pair.k.get()) && is_symmetric(pair.l.get());
  return pair;
}

// ---------------------------------------------------------------------------

int cmd_check_pair(const Globals& g, const std::string& input,
                   const std::optional<std::string>& perturb, bool allow_asymmetric) {
  Pair pair = read_pair(input);
  if (!pair.symmetric && !allow_asymmetric)
    throw InputError("K and L must be centrally symmetric (use --allow-asymmetric)");

  Json report;
  int in_class = 0;
  char* diag = nullptr;
  check(lc_check_class_f(pair.k.get(), pair.l.get(), &in_class, &diag), "class check");
  report["class_f"] = Json::parse(take(diag));
  if (!in_class) {
    if (!perturb) throw InputError("pair is not transversal (use --perturb EPS)");
    lc_polygon* moved = nullptr;
    char* delta = nullptr;
    check(lc_perturb_to_f(pair.k.get(), pair.l.get(), perturb->c_str(), &moved, &delta),
          "perturbation");
    pair.l.reset(moved);
    char* l_json = nullptr;
    check(lc_polygon_to_json(pair.l.get(), &l_json), "polygon L");
    report["perturbed"] = {{"delta", take(delta)}, {"L", Json::parse(take(l_json))}};
  }

  int b_holds = 0;
  char* b_json = nullptr;
  check(lc_property_b(pair.k.get(), pair.l.get(), &b_holds, &b_json), "property B");
  report["property_b"] = Json::parse(take(b_json));

  int mid_holds = 0;
  char* mid_json = nullptr;
  check(lc_midpoint_grid(pair.k.get(), pair.l.get(), 9, &mid_holds, &mid_json), "midpoint grid");
  report["midpoint"] = Json::parse(take(mid_json));

  const bool holds = b_holds && mid_holds;
  report["verdict"] = holds ? "holds" : "violation";
  emit(g, report.dump(2) + "\n");
  return holds ? kExitHolds : kExitViolation;
}

int cmd_scan_random(const Globals& g, std::size_t count, std::size_t budget) {
  struct Slot {
    lc_status status = LC_OK;
    int violation = 0;
    std::string json;
    std::string error;
  };
  std::vector<Slot> slots(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      char* out = nullptr;
      slots[i].status = lc_scan_pair(g.seed, i, budget, &slots[i].violation, &out);
      slots[i].json = take(out);
      if (slots[i].status != LC_OK) slots[i].error = lc_last_error();
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(g.jobs, static_cast<unsigned>(count)));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::size_t violations = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (slots[i].status != LC_OK)
      throw InputError("pair " + std::to_string(i) + ": " + slots[i].error);
    violations += slots[i].violation ? 1 : 0;
  }

  if (g.format == "csv") {
    std::string csv = "index,property_b_holds,lhs,rhs,midpoint_min_defect\n";
    for (const auto& s : slots) {
      const Json j = Json::parse(s.json);
      csv += std::to_string(j["index"].get<std::uint64_t>()) + "," +
             (j["property_b"]["holds"].get<bool>() ? "1" : "0") + "," +
             j["property_b"]["lhs"]["exact"].get<std::string>() + "," +
             j["property_b"]["rhs"]["exact"].get<std::string>() + "," +
             j["midpoint_min_defect"]["exact"].get<std::string>() + "\n";
    }
    emit(g, csv);
  } else {
    Json pairs = Json::array();
    for (const auto& s : slots) pairs.push_back(Json::parse(s.json));
    const Json out{{"seed", g.seed},         {"count", count},
                   {"vertex_budget", budget}, {"violations", violations},
                   {"pairs", std::move(pairs)}};
    emit(g, out.dump(2) + "\n");
  }
  return violations == 0 ? kExitHolds : kExitViolation;
}

int cmd_reduce(const Globals& g, const std::string& input, bool to_parallelograms) {
  Pair pair = read_pair(input);
  if (!pair.symmetric) throw InputError("reduce needs centrally symmetric K and L");
  char* out = nullptr;
  check(lc_reduce_pair(pair.k.get(), pair.l.get(), to_parallelograms ? 1 : 0, &out), "reduce");
  const Json j = Json::parse(take(out));
  emit(g, j.dump(2) + "\n");
  return j["ledger"]["additive"].get<bool>() ? kExitHolds : kExitViolation;
}

int cmd_oracle_grid(const Globals& g, const std::string& which, std::size_t density) {
  int all_hold = 0;
  char* out = nullptr;
  check(lc_oracle_grid(which.c_str(), density, &all_hold, &out), "oracle grid");
  emit(g, take(out));
  return all_hold ? kExitHolds : kExitViolation;
}

struct DihedralArgs {
  int n = 3;
  std::string profile = "cosine";
  double eps = 0.05;
  double t_min = -0.5;
  double t_max = 0.5;
  std::size_t steps = 21;
  std::size_t samples = 2048;
  bool allow_nonconvex = false;
};

int cmd_dihedral_verify(const Globals& g, const DihedralArgs& a) {
  const lc_dihedral_options options{a.n,     a.profile.c_str(), a.eps,
                                    a.t_min, a.t_max,           a.steps,
                                    a.samples, a.allow_nonconvex ? 1 : 0};
  int ok = 0;
  char* csv = nullptr;
  char* summary = nullptr;
  check(lc_dihedral_verify(&options, &ok, &csv, &summary), "dihedral verification");
  const std::string table = take(csv);
  const Json j = Json::parse(take(summary));
  if (g.format == "json") {
    Json rows = Json::array();
    std::istringstream lines(table);
    std::string line;
    std::getline(lines, line);  // header
    while (std::getline(lines, line)) {
      std::istringstream fields(line);
      std::string t, f, logf, d;
      std::getline(fields, t, ',');
      std::getline(fields, f, ',');
      std::getline(fields, logf, ',');
      std::getline(fields, d, ',');
      rows.push_back({{"t", std::stod(t)},
                      {"f", std::stod(f)},
                      {"logf", std::stod(logf)},
                      {"second_difference", std::stod(d)}});
    }
    emit(g, Json{{"summary", j}, {"rows", std::move(rows)}}.dump(2) + "\n");
  } else {
    emit(g, table);
    std::cerr << j.dump() << "\n";
  }
  return ok ? kExitHolds : kExitViolation;
}

int cmd_counterexamples(const Globals& g) {
  char* out = nullptr;
  check(lc_counterexamples(&out), "counterexamples");
  emit(g, Json::parse(take(out)).dump(2) + "\n");
  return kExitHolds;
}

int cmd_plot_data(const Globals& g, const std::string& input, double t_min, double t_max,
                  std::size_t steps) {
  Pair pair = read_pair(input);
  char* csv = nullptr;
  check(lc_sample_logf(pair.k.get(), pair.l.get(), t_min, t_max, steps, &csv), "sampling");
  emit(g, take(csv));
  return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of log-concavity of t -> |e^t K ∩ L| for planar convex shapes"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Seed for random pairs")->capture_default_str();
  app.add_option("--output,-o", g.output, "Write the result here instead of stdout");
  app.add_option("--format", g.format, "json or csv; the default depends on the command")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--jobs,-j", g.jobs, "Worker threads")->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string input;
  std::optional<std::string> perturb;
  bool allow_asymmetric = false;
  auto* check_pair = app.add_subcommand("check-pair", "Derivative inequality and midpoint tests for one pair");
  check_pair->add_option("input", input, "Pair JSON {\"K\": ..., \"L\": ...} or - for stdin")->required();
  check_pair->add_option("--perturb", perturb, "Scale L into the transversal class, up to this eps");
  check_pair->add_flag("--allow-asymmetric", allow_asymmetric, "Accept shapes that are not centrally symmetric");

  std::size_t count = 200;
  std::size_t budget = 12;
  auto* scan = app.add_subcommand("scan-random", "Check seeded random symmetric pairs");
  scan->add_option("--count,-n", count, "Number of pairs")->capture_default_str();
  scan->add_option("--budget", budget, "Vertex budget per polygon")->check(CLI::Range(4, 256))
      ->capture_default_str();

  bool to_parallelograms = false;
  auto* reduce = app.add_subcommand("reduce", "Component extensions and the additivity ledger");
  reduce->add_option("input", input, "Pair JSON or - for stdin")->required();
  reduce->add_flag("--to-parallelograms", to_parallelograms, "Continue down to square cases");

  std::string which = "corner";
  std::size_t density = 16;
  auto* oracle = app.add_subcommand("oracle-grid", "Closed-form checks on a parameter grid");
  oracle->add_option("--case", which, "edge or corner")
      ->check(CLI::IsMember({"edge", "corner"}))
      ->capture_default_str();
  oracle->add_option("--grid-density", density, "Points per parameter axis")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();

  DihedralArgs d;
  auto* dihedral = app.add_subcommand("dihedral-verify", "Area identities for D_n symmetric shapes");
  dihedral->add_option("--n", d.n, "Dihedral order")->check(CLI::Range(2, 64))->capture_default_str();
  dihedral->add_option("--profile", d.profile, "cosine (1+eps*cos(n*theta)), circle or ellipse")
      ->capture_default_str();
  dihedral->add_option("--eps", d.eps, "Profile parameter")->capture_default_str();
  dihedral->add_option("--t-min", d.t_min)->capture_default_str();
  dihedral->add_option("--t-max", d.t_max)->capture_default_str();
  dihedral->add_option("--steps", d.steps, "t grid points")->check(CLI::Range(3, 100000))
      ->capture_default_str();
  dihedral->add_option("--samples", d.samples, "Quadrature intervals on the full circle")
      ->check(CLI::Range(16, 1 << 22))
      ->capture_default_str();
  dihedral->add_flag("--allow-nonconvex", d.allow_nonconvex,
                     "Evaluate the identities without the curvature precondition");

  auto* counter = app.add_subcommand("counterexamples", "Certify both negative examples");

  double t_min = -1, t_max = 1;
  std::size_t steps = 201;
  auto* plot = app.add_subcommand("plot-data", "CSV of t, log |e^t K ∩ L|");
  plot->add_option("input", input, "Pair JSON or - for stdin")->required();
  plot->add_option("--t-min", t_min)->capture_default_str();
  plot->add_option("--t-max", t_max)->capture_default_str();
  plot->add_option("--steps", steps)->check(CLI::Range(3, 1000000))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (*check_pair) return cmd_check_pair(g, input, perturb, allow_asymmetric);
    if (*scan) return cmd_scan_random(g, count, budget);
    if (*reduce) return cmd_reduce(g, input, to_parallelograms);
    if (*oracle) return cmd_oracle_grid(g, which, density);
    if (*dihedral) return cmd_dihedral_verify(g, d);
    if (*counter) return cmd_counterexamples(g);
    if (*plot) return cmd_plot_data(g, input, t_min, t_max, steps);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
