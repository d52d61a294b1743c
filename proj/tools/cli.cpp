#include "cli.hpp"

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "loewner/chordal.hpp"
#include "loewner/error.hpp"
#include "loewner/expression.hpp"
#include "loewner/families.hpp"
#include "loewner/function_classes.hpp"
#include "loewner/inclusion.hpp"
#include "loewner/map_spec.hpp"

namespace loewner::cli {

using nlohmann::json;

namespace {

constexpr const char* kSchemaVersion = "1";

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct CsvRow {
  std::size_t line;
  std::vector<double> values;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

[[noreturn]] void parse_fail(ErrorCode code, const std::string& path, std::size_t line, const std::string& what) {
  fail(code, path + ":" + std::to_string(line) + ": " + what);
}

/// Reads a numeric CSV whose header must match one of `headers`; returns the matched header index.
std::vector<CsvRow> read_csv(const std::string& path, const std::vector<std::string>& headers, std::size_t& which) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, path + ": cannot open file");
  std::string line;
  std::size_t number = 0;
  bool have_header = false;
  std::vector<CsvRow> rows;
  while (std::getline(in, line)) {
    ++number;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (!have_header) {
      std::string h;
      for (char c : line)
        if (c != ' ') h += c;
      auto it = std::find(headers.begin(), headers.end(), h);
      if (it == headers.end()) parse_fail(ErrorCode::ParseError, path, number, "expected header '" + headers[0] + "'");
      which = static_cast<std::size_t>(it - headers.begin());
      have_header = true;
      continue;
    }
    const auto cells = split(line, ',');
    const std::size_t expected = split(headers[which], ',').size();
    if (cells.size() != expected)
      parse_fail(ErrorCode::ParseError, path, number, "expected " + std::to_string(expected) + " columns");
    CsvRow row{number, {}};
    for (const auto& c : cells) {
      const std::string cell = trim(c);
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      if (cell.empty() || end != cell.c_str() + cell.size() || !std::isfinite(v))
        parse_fail(ErrorCode::ParseError, path, number, "not a finite number: '" + cell + "'");
      row.values.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  if (!have_header) fail(ErrorCode::EmptyFile, path + ": file is empty");
  return rows;
}

std::vector<Complex> read_points(const std::string& path) {
  std::size_t which = 0;
  const auto rows = read_csv(path, {"re,im"}, which);
  if (rows.empty()) fail(ErrorCode::EmptyFile, path + ": no points");
  std::vector<Complex> pts;
  for (const auto& r : rows) pts.emplace_back(r.values[0], r.values[1]);
  return pts;
}

std::vector<Complex> read_trace(const std::string& path) {
  std::size_t which = 0;
  const auto rows = read_csv(path, {"t,re,im", "re,im"}, which);
  if (rows.empty()) fail(ErrorCode::EmptyFile, path + ": no trace points");
  std::vector<Complex> pts;
  for (const auto& r : rows) pts.emplace_back(r.values[which == 0 ? 1 : 0], r.values[which == 0 ? 2 : 1]);
  return pts;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, path + ": " + e.what());
  }
}

std::vector<double> parse_grid(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() != 3) fail(ErrorCode::ParseError, "--grid must be t0:t1:n");
  try {
    const double t0 = std::stod(parts[0]), t1 = std::stod(parts[1]);
    const long n = std::stol(parts[2]);
    if (n < 1 || !(t1 > t0)) fail(ErrorCode::ParseError, "--grid needs t0 < t1 and n >= 1");
    return uniform_grid(t0, t1, static_cast<std::size_t>(n));
  } catch (const std::logic_error&) {
    fail(ErrorCode::ParseError, "--grid must be t0:t1:n with numeric fields");
  }
}

Complex parse_point(const std::string& spec) {
  const auto parts = split(spec, ',');
  if (parts.size() != 2) fail(ErrorCode::ParseError, "point must be re,im");
  try {
    return {std::stod(parts[0]), std::stod(parts[1])};
  } catch (const std::logic_error&) {
    fail(ErrorCode::ParseError, "point must be re,im with numeric fields");
  }
}

std::vector<Knot> parse_schedule(const std::string& spec) {
  std::vector<Knot> knots;
  for (const auto& item : split(spec, ',')) {
    const auto tl = split(item, ':');
    if (tl.size() != 2) fail(ErrorCode::ParseError, "--schedule must be t:lambda,t:lambda,...");
    try {
      knots.push_back({std::stod(tl[0]), std::stod(tl[1])});
    } catch (const std::logic_error&) {
      fail(ErrorCode::ParseError, "--schedule entries must be numeric");
    }
  }
  return knots;
}

void write_output(const RunConfig& cfg, const std::string& path, const std::string& text, std::ostream& out) {
  (void)cfg;
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) fail(ErrorCode::ParseError, path + ": cannot open for writing");
    f << text;
    if (!f) fail(ErrorCode::ParseError, path + ": write failed");
  }
  std::filesystem::rename(tmp, target);
}

json config_json(const RunConfig& c) {
  json j{{"command", c.command}, {"seed", c.seed}, {"threads", c.threads}, {"format", c.format}};
  auto put = [&](const char* k, const std::string& v) {
    if (!v.empty()) j[k] = v;
  };
  put("demo", c.demo);
  put("driving", c.driving);
  put("points", c.points);
  put("trace", c.trace);
  put("map", c.map);
  put("family", c.family);
  put("schedule", c.schedule);
  put("basepoint", c.basepoint);
  if (c.command == "evolve" || c.command == "trace" || c.command == "chain" || c.command == "family-verify")
    j["interp"] = c.interp;
  if (c.horizon) j["horizon"] = *c.horizon;
  if (c.command == "evolve") {
    j["from"] = c.from;
    j["to"] = c.to;
    j["substeps"] = c.substeps;
    j["rk_check"] = c.rk_check;
  }
  if (c.command == "trace" || c.command == "chain") j["grid"] = c.grid;
  if (c.command == "chain") {
    j["order"] = std::isinf(c.order) ? json("inf") : json(c.order);
    if (c.family == "scaled-disks") j["gamma"] = c.gamma;
    if (c.family == "half-planes") j["shift_rate"] = c.shift_rate;
  }
  if (c.command == "family-verify") j["triples"] = c.triples;
  if (c.command == "demo") {
    j["tau_max"] = c.tau_max;
    j["n"] = c.n;
  }
  return j;
}

json report_header(const RunConfig& c) { return {{"schema_version", kSchemaVersion}, {"config", config_json(c)}}; }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

DrivingFunction load_driving(const RunConfig& c) {
  if (c.driving.empty()) fail(ErrorCode::ParseError, "--driving is required");
  return parse_driving_csv(c.driving, driving_mode_from_string(c.interp), c.horizon);
}

int cmd_evolve(const RunConfig& c, std::ostream& out) {
  const DrivingFunction d = load_driving(c);
  if (c.points.empty()) fail(ErrorCode::ParseError, "--points is required");
  const auto pts = read_points(c.points);
  SolveOptions opts;
  opts.substeps = c.substeps;
  const auto vals = solve_phi(d, c.from, c.to, pts, opts);
  double rk_dev = 0.0;
  if (c.rk_check) {
    const auto rk = solve_phi_rk(d, c.from, c.to, pts);
    for (std::size_t k = 0; k < vals.size(); ++k) rk_dev = std::max(rk_dev, std::abs(rk[k] - vals[k]));
  }
  if (c.format == "json") {
    json j = report_header(c);
    json rows = json::array();
    for (const Complex& v : vals) rows.push_back(complex_to_json(v));
    j["values"] = rows;
    if (c.rk_check) j["rk_max_deviation"] = rk_dev;
    write_output(c, c.out, dump(j), out);
    return 0;
  }
  std::string s = "re,im\n";
  for (const Complex& v : vals) s += fmt(v.real()) + "," + fmt(v.imag()) + "\n";
  write_output(c, c.out, s, out);
  return 0;
}

int cmd_trace(const RunConfig& c, std::ostream& out) {
  const DrivingFunction d = load_driving(c);
  const auto grid = parse_grid(c.grid);
  const auto samples = trace_from_driving(d, grid);
  std::string s = "t,re,im\n";
  for (const auto& p : samples) s += fmt(p.t) + "," + fmt(p.tip.real()) + "," + fmt(p.tip.imag()) + "\n";
  write_output(c, c.out, s, out);
  return 0;
}

int cmd_extract(const RunConfig& c, std::ostream& out) {
  if (c.trace.empty()) fail(ErrorCode::ParseError, "--trace is required");
  const auto pts = read_trace(c.trace);
  const DrivingFunction d = extract_driving(std::span<const Complex>(pts));
  std::string s = "t,lambda\n";
  for (const Knot& k : d.knots()) s += fmt(k.t) + "," + fmt(k.lambda) + "\n";
  // Closing knot records the horizon; in constant mode it repeats the last value.
  if (!d.empty()) s += fmt(d.horizon()) + "," + fmt(d.knots().back().lambda) + "\n";
  write_output(c, c.out, s, out);
  return 0;
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

int cmd_classify(const RunConfig& c, std::ostream& out) {
  if (c.map.empty()) fail(ErrorCode::ParseError, "--map is required");
  const json spec = read_json(c.map);
  Map m;
  try {
    m = map_from_json(spec);
  } catch (const Error& e) {
    fail(e.code(), c.map + ": " + e.what());
  }
  const ClassReport r = classify(m);
  json j = report_header(c);
  j["angular_derivative_infinity"] = optional_number(r.angular_derivative_infinity);
  j["ell"] = optional_number(r.ell);
  j["memberships"] = {{"P", r.in_P}, {"P0", r.in_P0}, {"C_conjugate", r.c_conjugate}, {"Ctilde_conjugate", r.ctilde_conjugate}};
  if (r.tail)
    j["tail"] = {{"a", complex_to_json(r.tail->a)}, {"b", complex_to_json(r.tail->b)}, {"c", complex_to_json(r.tail->c)}};
  else
    j["tail"] = nullptr;
  j["diagnostics"] = r.diagnostics;
  j["notes"] = r.notes;
  write_output(c, c.out, dump(j), out);
  return 0;
}

FamilyHandle make_family(const RunConfig& c, double& horizon, bool& unbounded) {
  unbounded = true;
  horizon = c.horizon.value_or(1.0);
  if (c.family == "radial") return families::radial();
  if (c.family == "translation") return families::translation(Region::UpperHalfPlane);
  if (c.family == "scaled-radial") return families::scaled_radial();
  if (c.family == "broken") {
    horizon = std::min(horizon, 0.9);
    unbounded = false;
    return families::broken();
  }
  if (c.family == "chordal") {
    const DrivingFunction d = load_driving(c);
    horizon = d.horizon();
    unbounded = false;
    return families::chordal(d, Region::UpperHalfPlane);
  }
  fail(ErrorCode::ParseError, "unknown family '" + c.family + "' (radial, chordal, translation, broken, scaled-radial)");
}

int cmd_family_verify(const RunConfig& c, std::ostream& out) {
  double horizon = 1.0;
  bool unbounded = true;
  const FamilyHandle base = make_family(c, horizon, unbounded);
  std::optional<DerivativeSchedule> schedule;
  if (!c.schedule.empty()) schedule = DerivativeSchedule(parse_schedule(c.schedule));
  if (schedule && !(base.fixed_point() && std::abs(std::abs(*base.fixed_point()) - 1.0) < 1e-12))
    fail(ErrorCode::PreconditionFailed, "--schedule needs a family with a boundary fixed point (chordal, translation)");
  const FamilyHandle fam = schedule ? conjugate_family(base, *schedule, *base.fixed_point()) : base;

  std::mt19937_64 rng(c.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Complex> probes;
  for (int k = 0; k < 25; ++k) {
    if (fam.region() == Region::UnitDisk) probes.push_back(std::polar(0.9 * std::sqrt(unit(rng)), 2.0 * std::numbers::pi * unit(rng)));
    else probes.emplace_back(-3.0 + 6.0 * unit(rng), 0.1 + 2.9 * unit(rng));
  }
  std::vector<Triple> triples;
  for (std::size_t k = 0; k < c.triples; ++k) {
    double a = horizon * unit(rng), b = horizon * unit(rng), t = horizon * unit(rng);
    if (a > b) std::swap(a, b);
    if (b > t) std::swap(b, t);
    if (a > b) std::swap(a, b);
    triples.push_back({a, b, t});
  }
  EfOptions ef_opts;
  const EfReport ef = verify_ef_axioms(fam, probes, triples, ef_opts);
  json j = report_header(c);
  double ef3 = 0.0;
  for (double m : ef.ef3_modulus) ef3 = std::max(ef3, m);
  j["axioms"] = {{"ef1", {{"residual", ef.ef1}, {"threshold", ef_opts.ef1_tolerance}, {"pass", ef.ef1_pass}}},
                 {"ef2", {{"residual", ef.ef2}, {"threshold", ef_opts.ef2_tolerance}, {"pass", ef.ef2_pass}}},
                 {"ef3_proxy", {{"max_lipschitz_modulus", ef3}}}};
  if (unbounded) {
    const BetaLimit bl = beta_limit(fam, Complex(0.0, 0.0));
    const auto radius = standard_range_radius(bl.value);
    j["beta"] = {{"limit", bl.value},
                 {"classification", bl.plane ? "plane" : "disk"},
                 {"radius", radius ? json(*radius) : json(nullptr)}};
  } else {
    j["beta"] = nullptr;
  }
  if (fam.fixed_point() && std::abs(std::abs(*fam.fixed_point()) - 1.0) < 1e-12) {
    try {
      const Complex tau = *fam.fixed_point();
      const Map rotated = compose(rotation(-std::arg(tau)), compose(fam.disk_map(0.0, horizon), rotation(std::arg(tau))));
      const ClassCResult cc = class_C_check(rotated);
      j["boundary_derivative"] = {{"t", horizon}, {"value", cc.member ? json(cc.derivative) : json(nullptr)}};
    } catch (const Error& e) {
      j["boundary_derivative"] = {{"t", horizon}, {"error", e.what()}};
    }
  }
  if (fam.region() == Region::UpperHalfPlane) {
    GoryainovBaOptions gb;
    gb.horizon = horizon;
    gb.seed = c.seed;
    gb.ac.coarse_intervals = 200;
    const GoryainovBaReport r = goryainov_ba_check(fam, gb);
    json table = json::array();
    for (const auto& [t, v] : r.v_table) table.push_back({t, v});
    j["capacity"] = {{"in_P0", r.in_P0},         {"v_defined", r.v_defined},     {"v_table", table},
                     {"monotone", r.monotone},   {"bound_checks", r.bound_checks},
                     {"bound_violations", r.bound_violations},
                     {"worst_margin", r.bound_checks ? json(r.worst_margin) : json(nullptr)},
                     {"ac_proxy", r.ac_proxy},   {"note", r.note}};
  }
  write_output(c, c.out, dump(j), out);
  return 0;
}

int cmd_chain(const RunConfig& c, std::ostream& out) {
  std::optional<DomainFamily> fam;
  if (c.family == "scaled-disks") {
    const Complex bp = c.basepoint.empty() ? Complex(0.0, 0.0) : parse_point(c.basepoint);
    if (c.gamma == "cantor") {
      fam = DomainFamily::scaled_disks([](double t) { return 1.0 + cantor_function(std::min(t, 1.0)); }, bp);
    } else {
      const Expression e = Expression::parse(c.gamma);
      fam = DomainFamily::scaled_disks([e](double t) { return e(t); }, bp);
    }
  } else if (c.family == "half-planes") {
    fam = DomainFamily::translated_half_planes(c.shift_rate, c.basepoint.empty() ? kI : parse_point(c.basepoint));
  } else if (c.family == "slit") {
    const DrivingFunction d = load_driving(c);
    fam = DomainFamily::slit_half_plane(d, d.horizon(), c.basepoint.empty() ? Complex(0.0, 2.0) : parse_point(c.basepoint));
  } else {
    fail(ErrorCode::ParseError, "unknown chain family '" + c.family + "' (scaled-disks, half-planes, slit)");
  }
  const auto grid = parse_grid(c.grid);
  const RadiusProfile profile = radius_profile(*fam, grid, c.threads);
  std::string s = "t,mu\n";
  for (const auto& [t, mu] : profile.samples) s += fmt(t) + "," + fmt(mu) + "\n";
  write_output(c, c.out, s, out);
  if (!c.report.empty()) {
    const ChainReport r = check_family(*fam, grid.front(), grid.back(), c.order, {}, c.threads);
    json j = report_header(c);
    j["inclusion_chain_proxy"] = r.inclusion_chain;
    j["l_admissible_proxy"] = r.admissible;
    j["order"] = std::isinf(r.order) ? json("inf") : json(r.order);
    j["diagnostics"] = {{"continuity_modulus", r.continuity_modulus},
                        {"monotonicity_defect", std::max(r.monotonicity_defect, profile.monotonicity_defect())},
                        {"reason", r.proxy.reason},
                        {"coarse", {{"concentration", r.proxy.coarse.concentration}, {"norm", r.proxy.coarse.norm},
                                    {"max_fraction", r.proxy.coarse.max_fraction}, {"max_jump", r.proxy.coarse.max_jump}}},
                        {"fine", {{"concentration", r.proxy.fine.concentration}, {"norm", r.proxy.fine.norm},
                                  {"max_fraction", r.proxy.fine.max_fraction}, {"max_jump", r.proxy.fine.max_jump}}}};
    write_output(c, c.report, dump(j), out);
  }
  return 0;
}

int cmd_demo(const RunConfig& c, std::ostream& out) {
  if (c.demo != "spiral") fail(ErrorCode::ParseError, "unknown demo '" + c.demo + "' (spiral)");
  if (c.n < 2 || !(c.tau_max > 0.0)) fail(ErrorCode::ParseError, "demo spiral needs --n >= 2 and --tau-max > 0");
  std::string s = "t,re,im\n";
  for (std::size_t k = 0; k < c.n; ++k) {
    const double tau = c.tau_max * static_cast<double>(k) / static_cast<double>(c.n - 1);
    const Complex z = spiral_curve(tau);
    s += fmt(tau) + "," + fmt(z.real()) + "," + fmt(z.imag()) + "\n";
  }
  write_output(c, c.out, s, out);
  return 0;
}

}  // namespace

DrivingFunction parse_driving_csv(const std::string& path, DrivingMode mode, std::optional<double> horizon) {
  std::size_t which = 0;
  const auto rows = read_csv(path, {"t,lambda"}, which);
  if (rows.empty()) fail(ErrorCode::EmptyFile, path + ": no driving knots");
  std::vector<Knot> knots;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const double t = rows[k].values[0];
    if (k == 0 && t != 0.0) parse_fail(ErrorCode::ParseError, path, rows[k].line, "first knot must be at t = 0");
    if (k > 0 && !(t > knots.back().t))
      parse_fail(ErrorCode::MonotoneViolation, path, rows[k].line, "t must be strictly increasing");
    knots.push_back({t, rows[k].values[1]});
  }
  const double T = horizon.value_or(knots.back().t);
  if (!(T > 0.0)) parse_fail(ErrorCode::ParseError, path, rows.front().line, "a single knot needs --horizon > 0");
  if (T < knots.back().t) fail(ErrorCode::ParseError, path + ": --horizon is smaller than the last knot");
  return DrivingFunction(std::move(knots), mode, T);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.format != "csv" && config.format != "json")
      fail(ErrorCode::ParseError, "--format must be csv or json");
    if (config.command == "evolve") return cmd_evolve(config, out);
    if (config.command == "trace") return cmd_trace(config, out);
    if (config.command == "extract") return cmd_extract(config, out);
    if (config.command == "classify") return cmd_classify(config, out);
    if (config.command == "family-verify") return cmd_family_verify(config, out);
    if (config.command == "chain") return cmd_chain(config, out);
    if (config.command == "demo") return cmd_demo(config, out);
    fail(ErrorCode::ParseError, "unknown command '" + config.command + "'");
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_parse_error(e.code()) ? 2 : 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chordal Loewner evolution toolkit"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_driving = [&](CLI::App* s) {
    s->add_option("--driving", c.driving, "Driving CSV with header t,lambda");
    s->add_option("--interp", c.interp, "Driving interpolation: const or linear")->check(CLI::IsMember({"const", "linear"}));
    s->add_option("--horizon", c.horizon, "Horizon T (default: last knot)");
  };
  auto add_out = [&](CLI::App* s) {
    s->add_option("--out", c.out, "Output file (default: stdout)");
    s->add_option("--seed", c.seed, "Random seed");
    s->add_option("--threads", c.threads, "Worker threads");
  };

  auto* evolve = app.add_subcommand("evolve", "Apply Phi_{s,t} to a grid of points");
  add_driving(evolve);
  add_out(evolve);
  evolve->add_option("--points", c.points, "Points CSV with header re,im")->required();
  evolve->add_option("--from", c.from, "Start time s");
  evolve->add_option("--to", c.to, "End time t");
  evolve->add_option("--substeps", c.substeps, "Substeps per interval for linear drivings");
  evolve->add_flag("--rk-check", c.rk_check, "Report the deviation from an adaptive Runge-Kutta solve (json)");
  evolve->add_option("--format", c.format, "csv or json");

  auto* trace = app.add_subcommand("trace", "Trace tips from a driving function");
  add_driving(trace);
  add_out(trace);
  trace->add_option("--grid", c.grid, "Time grid t0:t1:n");

  auto* extract = app.add_subcommand("extract", "Recover a driving function from a trace");
  add_out(extract);
  extract->add_option("--trace", c.trace, "Trace CSV (t,re,im or re,im)")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Class memberships of a JSON map spec");
  add_out(classify_cmd);
  classify_cmd->add_option("--map", c.map, "Map spec JSON")->required();

  auto* fv = app.add_subcommand("family-verify", "Check evolution-family axioms of a built-in family");
  add_driving(fv);
  add_out(fv);
  fv->add_option("--family", c.family, "radial, chordal, translation, broken, scaled-radial")->required();
  fv->add_option("--schedule", c.schedule, "Derivative schedule knots t:lambda,... for conjugation at 1");
  fv->add_option("--triples", c.triples, "Random (s,u,t) triples");

  auto* chain = app.add_subcommand("chain", "Radius profile and admissibility of a domain family");
  add_driving(chain);
  add_out(chain);
  chain->add_option("--family", c.family, "scaled-disks, half-planes or slit")->required();
  chain->add_option("--gamma", c.gamma, "Radius expression in t, or 'cantor'");
  chain->add_option("--shift-rate", c.shift_rate, "Rate c of the half-planes {Im w > -c t}");
  chain->add_option("--basepoint", c.basepoint, "Basepoint re,im");
  chain->add_option("--grid", c.grid, "Time grid t0:t1:n");
  chain->add_option("--order", c.order, "Exponent d of the admissibility proxy (inf allowed)");
  chain->add_option("--report", c.report, "Report JSON path");

  auto* demo = app.add_subcommand("demo", "Reproducible demo scenarios");
  add_out(demo);
  demo->add_option("name", c.demo, "Scenario name (spiral)")->required();
  demo->add_option("--tau-max", c.tau_max, "Largest curve parameter");
  demo->add_option("--n", c.n, "Number of rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }
  for (auto* s : app.get_subcommands()) c.command = s->get_name();
  return run(c, out, err);
}

}  // namespace loewner::cli
