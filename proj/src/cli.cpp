#include "trieig/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "trieig/bounds.hpp"
#include "trieig/certify.hpp"
#include "trieig/errors.hpp"
#include "trieig/fem.hpp"
#include "trieig/json_writer.hpp"

namespace trieig::cli {

namespace {

constexpr const char* kSchemaVersion = "1";
constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

Point parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw InputError("expected x,y but got '" + text + "'");
  try {
    std::size_t used_x = 0, used_y = 0;
    const std::string xs = text.substr(0, comma);
    const std::string ys = text.substr(comma + 1);
    const double x = std::stod(xs, &used_x);
    const double y = std::stod(ys, &used_y);
    if (used_x != xs.size() || used_y != ys.size()) throw std::invalid_argument(text);
    return {x, y};
  } catch (const std::logic_error&) {
    throw InputError("cannot parse coordinate pair '" + text + "'");
  }
}

int worker_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("TRIEIG_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs job(i) for i in [0, count) on a pool; results land by index so output
// order does not depend on scheduling.
void parallel_for(int count, int threads, const std::function<void(int)>& job, std::ostream& err) {
  std::atomic<int> next{0};
  std::atomic<int> done{0};
  std::mutex log_mutex;
  std::exception_ptr failure;
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        job(i);
      } catch (...) {
        std::lock_guard lock(log_mutex);
        if (!failure) failure = std::current_exception();
      }
      const int finished = ++done;
      if (finished % 25 == 0 || finished == count) {
        std::lock_guard lock(log_mutex);
        err << "progress: " << finished << "/" << count << "\n";
      }
    }
  };
  const int n = std::max(1, std::min(threads, count));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

Json triangle_json(const Triangle& t) {
  return Json{{"a", t.a}, {"b", t.b}, {"M", t.M}, {"N", t.N},
              {"L", t.L}, {"A", t.A}, {"scale", t.scale}};
}

Json coefficients_json(const CoefficientVector& c) {
  return Json{{"alpha", c.alpha}, {"beta", c.beta}, {"gamma", c.gamma}, {"epsilon", c.epsilon}};
}

Json point_json(Point p, RegionCoordinates vars) {
  return vars == RegionCoordinates::MN ? Json{{"M", p.x}, {"N", p.y}} : Json{{"U", p.x}, {"V", p.y}};
}

Json document(const std::string& command) {
  return Json{{"schema_version", kSchemaVersion}, {"command", command}};
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (k) line += ',';
    line += cells[k];
  }
  return line + "\n";
}

std::string num(double v) { return format_number(v); }

// ---- bound -------------------------------------------------------------

int cmd_bound(const RunConfig& cfg, std::ostream& out) {
  const Triangle t = triangle_from_config(cfg);
  const BoundResult b = upper_bound(t);
  const IsoperimetricBounds iso = isoperimetric_bounds(t);
  const ConjectureBounds conj = conjecture_bounds(t);
  const double upper_constant = kPi2 * t.L * t.L / (b.upper * t.A * t.A);
  const double upper_ratio = b.upper / iso.upper;
  const double lower_ratio = b.lower / iso.lower;

  if (cfg.format == OutputFormat::Csv) {
    out << csv_line({"M", "N", "a", "b", "scale", "lower", "upper", "method", "upper_constant",
                     "upper_ratio", "conj_lower", "conj_upper", "lower_input_units",
                     "upper_input_units"});
    out << csv_line({num(t.M), num(t.N), num(t.a), num(t.b), num(t.scale), num(b.lower),
                     num(b.upper), std::string(to_string(b.method)), num(upper_constant),
                     num(upper_ratio), num(conj.conj_lower), num(conj.conj_upper),
                     num(t.to_input_units(b.lower)), num(t.to_input_units(b.upper))});
    return kExitOk;
  }

  Json doc = document("bound");
  doc["triangle"] = triangle_json(t);
  Json cases = Json::array();
  for (RegionCase c : classify(t)) cases.push_back(std::string(to_string(c)));
  doc["cases"] = cases;
  doc["lower"] = b.lower;
  doc["upper"] = b.upper;
  doc["method"] = std::string(to_string(b.method));
  doc["witness"] = b.witness ? coefficients_json(*b.witness) : Json(nullptr);
  if (b.sector) {
    doc["sector"] = Json{{"apex_angle", b.sector->apex_angle},
                         {"radius", b.sector->radius},
                         {"order", b.sector->order},
                         {"zero_bound", b.sector->zero_bound}};
  } else {
    doc["sector"] = nullptr;
  }
  Json candidates = Json::array();
  for (const MethodBound& m : b.candidates) {
    candidates.push_back(Json{{"method", std::string(to_string(m.method))}, {"upper", m.upper}});
  }
  doc["candidates"] = candidates;
  doc["input_units"] = Json{{"lower", t.to_input_units(b.lower)}, {"upper", t.to_input_units(b.upper)}};
  doc["isoperimetric"] = Json{{"lower", iso.lower}, {"upper", iso.upper}};
  doc["constants"] = Json{{"upper_constant", upper_constant},
                          {"upper_ratio", upper_ratio},
                          {"lower_ratio", lower_ratio}};
  doc["conjecture"] = Json{{"conj_lower", conj.conj_lower},
                           {"conj_upper", conj.conj_upper},
                           {"lower_theta", conj.lower_theta},
                           {"upper_theta", conj.upper_theta},
                           {"e3_lower", conj.e3_lower},
                           {"e3_upper", conj.e3_upper}};
  write_json(out, doc);
  return kExitOk;
}

// ---- certify -----------------------------------------------------------

Json certificate_json(const CertificateReport& r) {
  const RegionCoordinates vars = region_info(r.tag).coordinates;
  Json j;
  j["case"] = std::string(to_string(r.tag));
  j["verdict"] = std::string(to_string(r.verdict));
  j["margin"] = r.margin;

  Json coeffs = Json::array();
  const BivariatePoly& p = r.polynomial.poly;
  for (std::size_t k = 0; k < p.support().size(); ++k) {
    coeffs.push_back(Json{{"i", p.support()[k].i}, {"j", p.support()[k].j}, {"coeff", p.coeffs()[k]}});
  }
  j["polynomial"] = Json{{"variables", p.variable_names()},
                         {"sup_norm", r.polynomial.sup_norm},
                         {"heldout_residual", r.polynomial.heldout_residual},
                         {"coefficients", coeffs}};

  Json points = Json::array();
  for (const CriticalPoint& cp : r.critical.points) {
    Json q = point_json(cp.location, vars);
    q["value"] = cp.value;
    q["inside_region"] = cp.inside_region;
    points.push_back(q);
  }
  j["interior_critical_points"] = Json{{"box_lo", point_json(r.critical.box_lo, vars)},
                                       {"box_hi", point_json(r.critical.box_hi, vars)},
                                       {"starts", r.critical.starts},
                                       {"failed_starts", r.critical.failed_starts},
                                       {"points", points}};

  Json segments = Json::array();
  for (const SegmentReport& s : r.segments) {
    Json real = Json::array();
    for (const RealRoot& root : s.roots.real) {
      real.push_back(Json{{"value", root.value}, {"multiplicity", root.multiplicity}});
    }
    Json complex = Json::array();
    for (const auto& z : s.roots.complex) complex.push_back(Json{{"re", z.real()}, {"im", z.imag()}});
    segments.push_back(Json{{"segment", s.segment.label},
                            {"parameter", s.segment.parameter},
                            {"t_lo", s.segment.t_lo},
                            {"t_hi", s.segment.t_hi},
                            {"real_roots", real},
                            {"complex_roots", complex},
                            {"roots_in_segment", s.roots_in_segment},
                            {"value_lo", s.value_lo},
                            {"value_hi", s.value_hi},
                            {"max_value", s.max_value},
                            {"nonpositive", s.nonpositive}});
  }
  j["boundary_segments"] = segments;

  Json eq = Json::array();
  for (const Point& e : r.equality_points) eq.push_back(point_json(e, vars));
  j["equality_points"] = eq;
  if (r.v_factor) {
    j["dv_factor"] = Json{{"q0", r.v_factor->q0},
                          {"q1", r.v_factor->q1},
                          {"q2", r.v_factor->q2},
                          {"discriminant", r.v_factor->discriminant}};
  }
  if (r.failure_location) {
    j["failure"] = Json{{"location", point_json(*r.failure_location, vars)}, {"reason", r.failure_reason}};
  } else {
    j["failure"] = nullptr;
  }
  return j;
}

Json grid_json(const GridCertificate& g) {
  const RegionCoordinates vars = region_info(g.tag).coordinates;
  return Json{{"resolution", g.resolution},
              {"holds", g.holds},
              {"sup_norm", g.sup_norm},
              {"min_value", g.min_value},
              {"min_location", point_json(g.min_location, vars)},
              {"min_cell_bound", g.min_cell_bound},
              {"min_cell_location", point_json(g.min_cell_location, vars)},
              {"tolerance", g.tolerance}};
}

int cmd_certify(const RunConfig& cfg, std::ostream& out) {
  std::vector<RegionCase> cases;
  if (cfg.region == "all") {
    cases = {RegionCase::C3, RegionCase::C4, RegionCase::C5};
  } else {
    const RegionCase c = parse_region_case(cfg.region);
    if (c == RegionCase::C6) throw WrongCase("C6 is covered by the sector estimate; certify C3, C4, C5 or all");
    cases = {c};
  }

  bool all_ok = true;
  Json reports = Json::array();
  for (RegionCase c : cases) {
    const CertificateReport r = certify_region(c);
    Json j = certificate_json(r);
    bool ok = r.verdict != Verdict::Failed;
    if (cfg.fallback_grid > 0) {
      const GridCertificate g = grid_fallback_certify(c, cfg.fallback_grid);
      j["grid_fallback"] = grid_json(g);
      j["agree"] = g.holds == ok;
      ok = ok && g.holds;
    }
    all_ok = all_ok && ok;
    reports.push_back(j);
  }

  Json doc = document("certify");
  doc["reports"] = reports;
  doc["all_certified"] = all_ok;
  write_json(out, doc);
  return all_ok ? kExitOk : kExitFailure;
}

// ---- solve -------------------------------------------------------------

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  const Triangle t = triangle_from_config(cfg);
  const FemEstimate e = estimate_lambda(t, cfg.k_min, cfg.k_max);
  if (cfg.format == OutputFormat::Csv) {
    out << csv_line({"level", "h", "lambda_h", "lambda_input_units"});
    for (const FemLevel& l : e.levels) {
      out << csv_line({std::to_string(l.level), num(l.h), num(l.lambda), num(t.to_input_units(l.lambda))});
    }
    return kExitOk;
  }
  Json doc = document("solve");
  doc["triangle"] = triangle_json(t);
  Json levels = Json::array();
  for (const FemLevel& l : e.levels) {
    levels.push_back(Json{{"level", l.level}, {"h", l.h}, {"lambda_h", l.lambda}});
  }
  doc["levels"] = levels;
  doc["lambda_extrap"] = e.lambda_extrap;
  doc["error_est"] = e.error_est;
  doc["order_obs"] = e.order_obs;
  doc["input_units"] = Json{{"lambda_extrap", t.to_input_units(e.lambda_extrap)},
                            {"error_est", t.to_input_units(e.error_est)}};
  write_json(out, doc);
  return kExitOk;
}

// ---- sweep -------------------------------------------------------------

void check_sweep_config(const RunConfig& cfg) {
  if (cfg.samples < 1) throw InputError("sample count must be at least 1");
  if (!(cfg.m_min >= 1.0) || !(cfg.m_max >= cfg.m_min)) throw InputError("need 1 <= m-min <= m-max");
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_sweep_config(cfg);
  std::vector<Point> mn = sample_mn(cfg.seed, cfg.samples, cfg.m_min, cfg.m_max);
  if (cfg.force_equilateral) mn[0] = {1.0, 1.0};

  std::vector<Triangle> tris(mn.size());
  for (std::size_t k = 0; k < mn.size(); ++k) tris[k] = triangle_from_mn(mn[k].x, mn[k].y);
  std::vector<ValidationReport> rows(mn.size());
  parallel_for(static_cast<int>(mn.size()), worker_count(cfg.threads),
               [&](int i) { rows[i] = validate_bounds(tris[i], cfg.k_min, cfg.k_max); }, err);

  int violations = 0;
  for (const ValidationReport& r : rows) violations += r.ok ? 0 : 1;

  if (cfg.format == OutputFormat::Csv) {
    out << csv_line({"index", "M", "N", "lower", "lambda_h", "lambda_extrap", "error_est", "upper",
                     "method", "lower_margin", "upper_margin", "ok"});
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const ValidationReport& r = rows[k];
      out << csv_line({std::to_string(k), num(tris[k].M), num(tris[k].N), num(r.lower),
                       num(r.lambda_finest), num(r.lambda_extrap), num(r.error_est), num(r.upper),
                       std::string(to_string(r.method)), num(r.lower_margin), num(r.upper_margin),
                       r.ok ? "1" : "0"});
    }
    err << "violations: " << violations << " of " << rows.size() << "\n";
  } else {
    Json doc = document("sweep");
    doc["seed"] = cfg.seed;
    doc["k_min"] = cfg.k_min;
    doc["k_max"] = cfg.k_max;
    Json samples = Json::array();
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const ValidationReport& r = rows[k];
      samples.push_back(Json{{"M", tris[k].M},
                             {"N", tris[k].N},
                             {"lower", r.lower},
                             {"lambda_h", r.lambda_finest},
                             {"lambda_extrap", r.lambda_extrap},
                             {"error_est", r.error_est},
                             {"upper", r.upper},
                             {"method", std::string(to_string(r.method))},
                             {"lower_margin", r.lower_margin},
                             {"upper_margin", r.upper_margin},
                             {"ok", r.ok}});
    }
    doc["samples"] = samples;
    doc["summary"] = Json{{"count", rows.size()}, {"violations", violations}};
    write_json(out, doc);
  }
  return violations == 0 ? kExitOk : kExitFailure;
}

// ---- conjecture-sweep --------------------------------------------------

struct ConjectureRow {
  Triangle t;
  ConjectureBounds conj;
  FemEstimate fem;
  double lower_excess = 0.0;  // conj_lower - lambda_extrap, > 0 is a violation
  double upper_excess = 0.0;  // lambda_extrap - conj_upper, > 0 is a violation
  double constant = 0.0;      // pi^2 L^2 / (lambda A^2)
  std::string status;
};

int cmd_conjecture_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<Point> mn;
  if (cfg.family == "random") {
    check_sweep_config(cfg);
    mn = sample_mn(cfg.seed, cfg.samples, cfg.m_min, cfg.m_max);
    if (cfg.force_equilateral) mn[0] = {1.0, 1.0};
  } else if (cfg.family == "half-perimeter") {
    // isosceles with legs 1 and base 2 - delta: the base approaches half the perimeter
    for (double delta : {0.5, 0.3, 0.1, 0.05, 0.03, 0.02, 0.01}) mn.push_back({1.0, 2.0 - delta});
  } else {
    throw InputError("unknown family '" + cfg.family + "' (expected random or half-perimeter)");
  }

  std::vector<ConjectureRow> rows(mn.size());
  parallel_for(static_cast<int>(mn.size()), worker_count(cfg.threads), [&](int i) {
    ConjectureRow& r = rows[i];
    r.t = triangle_from_mn(mn[i].x, mn[i].y);
    r.conj = conjecture_bounds(r.t);
    r.fem = estimate_lambda(r.t, cfg.k_min, cfg.k_max);
    const double lambda = r.fem.lambda_extrap;
    r.lower_excess = r.conj.conj_lower - lambda;
    r.upper_excess = lambda - r.conj.conj_upper;
    r.constant = kPi2 * r.t.L * r.t.L / (lambda * r.t.A * r.t.A);
    const double worst = std::max(r.lower_excess, r.upper_excess);
    r.status = worst <= 0.0 ? "ok" : worst <= 3.0 * r.fem.error_est ? "within_error" : "violation";
  }, err);

  int violations = 0;
  for (const ConjectureRow& r : rows) violations += r.status == "violation" ? 1 : 0;

  if (cfg.format == OutputFormat::Csv) {
    out << csv_line({"index", "M", "N", "conj_lower", "lambda_h", "lambda_extrap", "error_est",
                     "conj_upper", "constant", "status"});
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const ConjectureRow& r = rows[k];
      out << csv_line({std::to_string(k), num(r.t.M), num(r.t.N), num(r.conj.conj_lower),
                       num(r.fem.levels.back().lambda), num(r.fem.lambda_extrap), num(r.fem.error_est),
                       num(r.conj.conj_upper), num(r.constant), r.status});
    }
    err << "violations beyond 3x error: " << violations << " of " << rows.size() << "\n";
    return kExitOk;
  }

  Json doc = document("conjecture-sweep");
  doc["family"] = cfg.family;
  doc["seed"] = cfg.seed;
  doc["k_min"] = cfg.k_min;
  doc["k_max"] = cfg.k_max;
  Json samples = Json::array();
  for (const ConjectureRow& r : rows) {
    samples.push_back(Json{{"M", r.t.M},
                           {"N", r.t.N},
                           {"conj_lower", r.conj.conj_lower},
                           {"lambda_h", r.fem.levels.back().lambda},
                           {"lambda_extrap", r.fem.lambda_extrap},
                           {"error_est", r.fem.error_est},
                           {"conj_upper", r.conj.conj_upper},
                           {"constant", r.constant},
                           {"status", r.status}});
  }
  doc["samples"] = samples;
  doc["summary"] = Json{{"count", rows.size()}, {"violations", violations}};
  write_json(out, doc);
  return kExitOk;
}

void add_triangle_options(CLI::App* sub, RunConfig& cfg, std::vector<std::string>& vertices,
                          std::vector<double>& ab, std::vector<double>& mn) {
  auto* v = sub->add_option("--vertices", vertices, "three vertices x1,y1 x2,y2 x3,y3")->expected(3);
  auto* a = sub->add_option("--ab", ab, "apex a b over the unit base")->expected(2);
  auto* m = sub->add_option("--mn", mn, "side lengths M N (shortest side is 1)")->expected(2);
  v->excludes(a)->excludes(m);
  a->excludes(m);
  (void)cfg;
}

void add_format_option(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, OutputFormat>{{"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}}));
}

}  // namespace

Triangle triangle_from_config(const RunConfig& cfg) {
  const int forms = int(cfg.vertices.has_value()) + int(cfg.ab.has_value()) + int(cfg.mn.has_value());
  if (forms != 1) throw InputError("give exactly one of --vertices, --ab, --mn");
  if (cfg.vertices) return normalize((*cfg.vertices)[0], (*cfg.vertices)[1], (*cfg.vertices)[2]);
  if (cfg.ab) return triangle_from_ab(cfg.ab->x, cfg.ab->y);
  if (cfg.mn->x < 1.0 || cfg.mn->y < cfg.mn->x) {
    throw InputError("--mn expects 1 <= M <= N");
  }
  return triangle_from_mn(cfg.mn->x, cfg.mn->y);
}

std::vector<Point> sample_mn(std::uint64_t seed, int count, double m_min, double m_max) {
  std::mt19937_64 rng(seed);
  auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(out.size()) < count) {
    const double M = m_min + (m_max - m_min) * unit();
    const double N = M + unit();
    try {
      triangle_from_mn(M, N);
    } catch (const DegenerateTriangle&) {
      continue;
    }
    out.push_back({M, N});
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounds and certificates for the first Dirichlet eigenvalue of triangles", "trieig"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::vector<std::string> vertices;
  std::vector<double> ab, mn;

  auto* bound = app.add_subcommand("bound", "lower/upper eigenvalue bounds for one triangle");
  add_triangle_options(bound, cfg, vertices, ab, mn);
  add_format_option(bound, cfg);

  auto* certify = app.add_subcommand("certify", "certify a proof region (C3, C4, C5 or all)");
  certify->add_option("region", cfg.region, "C3, C4, C5 or all")->required();
  certify->add_option("--fallback-grid", cfg.fallback_grid, "cross-check on a direct grid of this resolution");

  auto* sweep = app.add_subcommand("sweep", "validate the bounds against the FEM oracle on random triangles");
  auto* conj = app.add_subcommand("conjecture-sweep", "compare the conjectured bounds with the FEM oracle");
  for (CLI::App* sub : {sweep, conj}) {
    sub->add_option("--samples", cfg.samples, "number of triangles");
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--m-min", cfg.m_min, "smallest middle side M");
    sub->add_option("--k-min", cfg.k_min, "coarsest refinement level");
    sub->add_option("--k-max", cfg.k_max, "finest refinement level");
    sub->add_flag("--equilateral", cfg.force_equilateral, "force the first sample to be equilateral");
    sub->add_option("--threads", cfg.threads, "worker threads (default: TRIEIG_THREADS or all cores)");
    add_format_option(sub, cfg);
  }
  double conj_m_max = 10.0;
  sweep->add_option("--m-max", cfg.m_max, "largest middle side M (default 50)");
  conj->add_option("--m-max", conj_m_max, "largest middle side M (default 10)");
  conj->add_option("--family", cfg.family, "random or half-perimeter");

  auto* solve = app.add_subcommand("solve", "FEM eigenvalue estimate with Richardson extrapolation");
  add_triangle_options(solve, cfg, vertices, ab, mn);
  solve->add_option("--k-min", cfg.k_min, "coarsest refinement level");
  solve->add_option("--k-max", cfg.k_max, "finest refinement level");
  add_format_option(solve, cfg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    Json doc = document(app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name());
    doc["error"] = Json{{"type", "UsageError"}, {"message", e.what()}};
    write_json(out, doc);
    err << e.what() << "\n";
    return kExitInput;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.command == "conjecture-sweep") cfg.m_max = conj_m_max;
  try {
    if (!vertices.empty()) {
      cfg.vertices = std::array<Point, 3>{parse_pair(vertices[0]), parse_pair(vertices[1]),
                                          parse_pair(vertices[2])};
    }
    if (!ab.empty()) cfg.ab = Point{ab[0], ab[1]};
    if (!mn.empty()) cfg.mn = Point{mn[0], mn[1]};

    if (cfg.command == "bound") return cmd_bound(cfg, out);
    if (cfg.command == "certify") return cmd_certify(cfg, out);
    if (cfg.command == "sweep") return cmd_sweep(cfg, out, err);
    if (cfg.command == "solve") return cmd_solve(cfg, out);
    return cmd_conjecture_sweep(cfg, out, err);
  } catch (const std::exception& e) {
    std::string type = "Error";
    int code = kExitInternal;
    if (dynamic_cast<const DegenerateTriangle*>(&e)) {
      type = "DegenerateTriangle";
      code = kExitInput;
    } else if (dynamic_cast<const OracleRefused*>(&e)) {
      type = "OracleRefused";
      code = kExitInput;
    } else if (dynamic_cast<const InputError*>(&e)) {
      type = "InputError";
      code = kExitInput;
    } else if (dynamic_cast<const CertificationFailed*>(&e)) {
      type = "CertificationFailed";
      code = kExitFailure;
    } else if (dynamic_cast<const BoundViolation*>(&e)) {
      type = "BoundViolation";
      code = kExitFailure;
    }
    Json doc = document(cfg.command);
    doc["error"] = Json{{"type", type}, {"message", e.what()}};
    write_json(out, doc);
    err << "error: " << e.what() << "\n";
    return code;
  }
}

}  // namespace trieig::cli
