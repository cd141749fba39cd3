#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>

#include "fundsol/parallel.hpp"
#include "fundsol/verification.hpp"

namespace fundsol::cli {

using nlohmann::ordered_json;

void RunConfig::validate() const {
  params.validate();
  constants.validate();
  series.validate();
  fd.validate();
  for (int i = 0; i < 3; ++i) {
    if (!(pole[i] > 0.0) || !std::isfinite(pole[i])) throw domain_error("pole must lie in the open positive octant");
  }
}

void GridSpec::validate() const {
  for (const auto& a : axes) {
    if (!(a.min > 0.0)) throw domain_error("grid: axis minimum must be > 0");
    if (!(a.min <= a.max)) throw domain_error("grid: axis minimum exceeds maximum");
    if (a.count < 1) throw domain_error("grid: axis count must be >= 1");
  }
  if (!(exclusion >= 0.0)) throw domain_error("grid: exclusion radius must be >= 0");
}

bool grid_point_excluded(const GridSpec& g, const Pole& pole, const std::array<int, 3>& idx) {
  double d2 = 0.0;
  bool in_cell = true;
  for (int i = 0; i < 3; ++i) {
    const auto& a = g.axes[i];
    double x = a.at(idx[i]);
    d2 += (x - pole[i]) * (x - pole[i]);
    double step = a.step();
    in_cell = in_cell && (step > 0.0 ? (pole[i] >= x && pole[i] < x + step) : pole[i] == x);
  }
  return in_cell || std::sqrt(d2) <= g.exclusion;
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& text) {
  std::string t = trim(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw domain_error("not a number: '" + t + "'");
  }
  if (used != t.size()) throw domain_error("not a number: '" + t + "'");
  return v;
}

}  // namespace

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(item));
  if (out.empty()) throw domain_error("empty list");
  return out;
}

std::array<double, 3> parse_triple(const std::string& text) {
  auto v = parse_list(text);
  if (v.size() != 3) throw domain_error("expected three comma-separated values, got '" + text + "'");
  return {v[0], v[1], v[2]};
}

GridAxis parse_axis(const std::string& text) {
  auto v = parse_list(text);
  if (v.size() != 3 || v[2] != std::floor(v[2])) throw domain_error("grid axis must be min,max,count: '" + text + "'");
  return {v[0], v[1], static_cast<int>(v[2])};
}

namespace {

void set_key(RunConfig& cfg, std::string key, const std::string& value) {
  std::replace(key.begin(), key.end(), '-', '_');
  auto num = [&] { return parse_number(value); };
  if (key == "alpha") {
    cfg.params.alpha = num();
  } else if (key == "beta") {
    cfg.params.beta = num();
  } else if (key == "gamma") {
    cfg.params.gamma = num();
  } else if (key == "pole") {
    auto p = parse_triple(value);
    cfg.pole = {p[0], p[1], p[2]};
  } else if (key.size() == 2 && key[0] == 'k' && key[1] >= '1' && key[1] <= '8') {
    cfg.constants.k[key[1] - '1'] = num();
  } else if (key == "abs_tol") {
    cfg.series.abs_tol = num();
    cfg.series_set = true;
  } else if (key == "rel_tol") {
    cfg.series.rel_tol = num();
    cfg.series_set = true;
  } else if (key == "max_terms") {
    double v = num();
    if (v != std::floor(v) || v < 1 || v > 1e9) throw domain_error("max_terms must be a positive integer");
    cfg.series.max_terms = static_cast<int>(v);
    cfg.series_set = true;
  } else if (key == "format") {
    std::string f = trim(value);
    if (f == "csv") {
      cfg.format = OutputFormat::csv;
    } else if (f == "json") {
      cfg.format = OutputFormat::json;
    } else {
      throw domain_error("format must be csv or json");
    }
  } else if (key == "fd_h") {
    cfg.fd.h = num();
  } else if (key == "seed") {
    double v = num();
    if (v < 0 || v != std::floor(v)) throw domain_error("seed must be a nonnegative integer");
    cfg.seed = static_cast<std::uint64_t>(v);
  } else if (key == "workers") {
    double v = num();
    if (v < 0 || v != std::floor(v)) throw domain_error("workers must be a nonnegative integer");
    cfg.workers = static_cast<unsigned>(v);
  } else if (key == "no_timestamp") {
    std::string f = trim(value);
    if (f != "true" && f != "false") throw domain_error("no_timestamp must be true or false");
    cfg.timestamp = f == "false";
  } else {
    throw domain_error("unknown config key '" + key + "'");
  }
}

}  // namespace

void apply_config_text(const std::string& text, RunConfig& cfg) {
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw domain_error("config line " + std::to_string(lineno) + ": expected key = value");
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    set_key(cfg, trim(line.substr(0, eq)), value);
  }
}

void apply_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  apply_config_text(ss.str(), cfg);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

namespace {

std::string utc_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ordered_json triple_json(double a, double b, double c) { return ordered_json::array({a, b, c}); }

ordered_json params_json(const SingularParams& sp) {
  return {{"alpha", sp.alpha}, {"beta", sp.beta}, {"gamma", sp.gamma}};
}

void finish_json(ordered_json& doc, const RunConfig& cfg, std::ostream& out) {
  if (cfg.timestamp) doc["timestamp"] = utc_timestamp();
  out << doc.dump(2) << '\n';
}

// Values of the command-line flags; unset optionals leave the config alone.
struct Flags {
  std::optional<std::string> config;
  std::map<std::string, std::optional<std::string>> keyed;
  bool no_timestamp = false;

  std::string kind = "q1";
  std::string point;
  std::array<std::string, 3> grid_axes;
  std::optional<std::string> grid_all;
  double exclusion = 0.0;
  std::string out_path;
  std::string suites;
  std::string direction = "1,1,1";
  std::string radii = "1e-1,1e-2,1e-3,1e-4";
};

const std::vector<std::pair<std::string, std::string>>& keyed_flags() {
  static const std::vector<std::pair<std::string, std::string>> list = [] {
    std::vector<std::pair<std::string, std::string>> v = {
        {"alpha", "first singular coefficient parameter, 0 < 2 alpha < 1"},
        {"beta", "second singular coefficient parameter"},
        {"gamma", "third singular coefficient parameter"},
        {"pole", "pole coordinates x0,y0,z0"},
        {"abs-tol", "absolute series tolerance"},
        {"rel-tol", "relative series tolerance"},
        {"max-terms", "series term budget per index"},
        {"format", "output format: csv or json"},
        {"fd-h", "relative finite-difference step"},
        {"seed", "seed for sampled verification points"},
        {"workers", "worker threads (0 = hardware)"},
    };
    for (int k = 1; k <= 8; ++k) v.push_back({"k" + std::to_string(k), "normalization constant of q" + std::to_string(k)});
    return v;
  }();
  return list;
}

RunConfig resolve(const Flags& f) {
  RunConfig cfg;
  if (f.config) apply_config_file(*f.config, cfg);
  for (const auto& [key, value] : f.keyed) {
    if (value) set_key(cfg, key, *value);
  }
  if (f.no_timestamp) cfg.timestamp = false;
  cfg.validate();
  return cfg;
}

SolutionKind kind_of(const std::string& s) {
  auto k = parse_kind(s);
  if (!k) throw domain_error("unknown kind '" + s + "' (expected q1..q8)");
  return *k;
}

int cmd_eval(const Flags& f, std::ostream& out, std::ostream& err) {
  RunConfig cfg = resolve(f);
  auto kind = kind_of(f.kind);
  if (f.point.empty()) throw domain_error("eval requires --point x,y,z");
  auto p = parse_triple(f.point);
  FieldPoint pt{p[0], p[1], p[2]};
  EvalResult r;
  int code = 0;
  try {
    r = evaluate(kind, cfg.params, pt, cfg.pole, cfg.constants[kind], cfg.series);
  } catch (const non_convergent& e) {
    err << "error: " << e.what() << '\n';
    r = e.partial();
    code = static_cast<int>(ExitCode::non_convergent);
  }
  if (cfg.format.value_or(OutputFormat::json) == OutputFormat::csv) {
    out << "kind,x,y,z,x0,y0,z0,value,error_estimate,route,terms_used,converged\n";
    out << to_string(kind) << ',' << format_double(pt.x) << ',' << format_double(pt.y) << ',' << format_double(pt.z)
        << ',' << format_double(cfg.pole.x0) << ',' << format_double(cfg.pole.y0) << ','
        << format_double(cfg.pole.z0) << ',' << format_double(r.value) << ',' << format_double(r.error_estimate)
        << ',' << to_string(r.route) << ',' << r.terms_used << ',' << (r.converged ? "true" : "false") << '\n';
  } else {
    ordered_json doc = {{"kind", to_string(kind)},
                        {"point", triple_json(pt.x, pt.y, pt.z)},
                        {"pole", triple_json(cfg.pole.x0, cfg.pole.y0, cfg.pole.z0)},
                        {"value", r.value},
                        {"error_estimate", r.error_estimate},
                        {"route", std::string(to_string(r.route))},
                        {"terms_used", r.terms_used},
                        {"converged", r.converged}};
    finish_json(doc, cfg, out);
  }
  return code;
}

struct GridRow {
  double x, y, z;
  bool excluded = false;
  EvalResult r;
};

int cmd_grid(const Flags& f, std::ostream& out) {
  RunConfig cfg = resolve(f);
  auto kind = kind_of(f.kind);
  GridSpec g;
  for (int i = 0; i < 3; ++i) {
    if (!f.grid_axes[i].empty()) {
      g.axes[i] = parse_axis(f.grid_axes[i]);
    } else if (f.grid_all) {
      g.axes[i] = parse_axis(*f.grid_all);
    }
  }
  g.exclusion = f.exclusion;
  g.validate();

  const int nx = g.axes[0].count, ny = g.axes[1].count, nz = g.axes[2].count;
  std::vector<GridRow> rows(static_cast<std::size_t>(nx) * ny * nz);
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      for (int k = 0; k < nz; ++k) {
        auto& row = rows[(static_cast<std::size_t>(i) * ny + j) * nz + k];
        row.x = g.axes[0].at(i);
        row.y = g.axes[1].at(j);
        row.z = g.axes[2].at(k);
        row.excluded = grid_point_excluded(g, cfg.pole, {i, j, k});
      }
    }
  }
  double kconst = cfg.constants[kind];
  parallel_for(
      rows.size(),
      [&](std::size_t n) {
        auto& row = rows[n];
        if (!row.excluded) row.r = evaluate(kind, cfg.params, {row.x, row.y, row.z}, cfg.pole, kconst, cfg.series);
      },
      cfg.workers);

  std::unique_ptr<std::ofstream> file;
  std::ostream* sink = &out;
  if (!f.out_path.empty()) {
    file = std::make_unique<std::ofstream>(f.out_path, std::ios::binary);
    if (!*file) throw domain_error("cannot write '" + f.out_path + "'");
    sink = file.get();
  }
  if (cfg.format.value_or(OutputFormat::csv) == OutputFormat::csv) {
    *sink << "x,y,z,value,error_estimate,route\n";
    for (const auto& row : rows) {
      *sink << format_double(row.x) << ',' << format_double(row.y) << ',' << format_double(row.z) << ',';
      if (row.excluded) {
        *sink << "excluded,,excluded\n";
      } else {
        *sink << format_double(row.r.value) << ',' << format_double(row.r.error_estimate) << ','
              << to_string(row.r.route) << '\n';
      }
    }
  } else {
    ordered_json pts = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json p = {{"x", row.x}, {"y", row.y}, {"z", row.z}};
      if (row.excluded) {
        p["value"] = "excluded";
        p["error_estimate"] = nullptr;
        p["route"] = "excluded";
      } else {
        p["value"] = row.r.value;
        p["error_estimate"] = row.r.error_estimate;
        p["route"] = std::string(to_string(row.r.route));
      }
      pts.push_back(std::move(p));
    }
    ordered_json doc = {{"kind", to_string(kind)},
                        {"params", params_json(cfg.params)},
                        {"pole", triple_json(cfg.pole.x0, cfg.pole.y0, cfg.pole.z0)},
                        {"points", std::move(pts)}};
    finish_json(doc, cfg, *sink);
  }
  sink->flush();
  if (!*sink) throw domain_error("write failed for '" + f.out_path + "'");
  return 0;
}

int cmd_verify(const Flags& f, std::ostream& out) {
  RunConfig cfg = resolve(f);
  VerifyConfig vc;
  vc.params = cfg.params;
  vc.pole = cfg.pole;
  if (cfg.series_set) vc.series = cfg.series;
  vc.fd = cfg.fd;
  vc.seed = cfg.seed;
  vc.workers = cfg.workers;

  std::vector<std::string> suites;
  if (f.suites.empty()) {
    suites = suite_names();
  } else {
    std::stringstream ss(f.suites);
    std::string s;
    while (std::getline(ss, s, ',')) {
      s = trim(s);
      const auto& known = suite_names();
      if (std::find(known.begin(), known.end(), s) == known.end()) throw domain_error("unknown suite '" + s + "'");
      if (std::find(suites.begin(), suites.end(), s) == suites.end()) suites.push_back(s);
    }
  }
  std::vector<CheckRecord> records;
  for (const auto& s : suites) {
    auto r = run_suite(s, vc);
    records.insert(records.end(), r.begin(), r.end());
  }
  bool all = std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; });
  if (cfg.format.value_or(OutputFormat::json) == OutputFormat::csv) {
    out << "suite,case,measured,tolerance,pass\n";
    for (const auto& r : records) {
      out << r.suite << ',' << csv_field(r.name) << ',' << format_double(r.measured) << ','
          << format_double(r.tolerance) << ',' << (r.pass ? "true" : "false") << '\n';
    }
  } else {
    ordered_json list = ordered_json::array();
    for (const auto& r : records) {
      list.push_back({{"suite", r.suite},
                      {"case", r.name},
                      {"measured", r.measured},
                      {"tolerance", r.tolerance},
                      {"pass", r.pass}});
    }
    ordered_json doc = {{"pass", all}, {"results", std::move(list)}};
    finish_json(doc, cfg, out);
  }
  return all ? 0 : static_cast<int>(ExitCode::verification_failed);
}

int cmd_scan(const Flags& f, std::ostream& out) {
  RunConfig cfg = resolve(f);
  auto dir = parse_triple(f.direction);
  if (dir[0] == 0.0 && dir[1] == 0.0 && dir[2] == 0.0) throw domain_error("scan direction must be nonzero");
  auto radii = parse_list(f.radii);
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0)) throw domain_error("scan radii must be positive");
    if (i > 0 && !(radii[i] < radii[i - 1])) throw domain_error("scan radii must be decreasing");
  }
  double limit = singular_limit_constant(cfg.params);
  double k1 = cfg.constants[SolutionKind::q1];
  struct Row {
    double r, q, comp, gap;
  };
  std::vector<Row> rows;
  for (double r : radii) {
    auto pt = along_ray(cfg.pole, dir, r);
    double q = evaluate(SolutionKind::q1, cfg.params, pt, cfg.pole, k1, cfg.series).value;
    double comp = compensated_q1(cfg.params, pt, cfg.pole, cfg.series);
    rows.push_back({r, q, comp, std::abs(comp / limit - 1.0)});
  }
  if (cfg.format.value_or(OutputFormat::csv) == OutputFormat::csv) {
    out << "r,q1,compensated,limit,relative_gap\n";
    for (const auto& row : rows) {
      out << format_double(row.r) << ',' << format_double(row.q) << ',' << format_double(row.comp) << ','
          << format_double(limit) << ',' << format_double(row.gap) << '\n';
    }
  } else {
    ordered_json list = ordered_json::array();
    for (const auto& row : rows) {
      list.push_back(
          {{"r", row.r}, {"q1", row.q}, {"compensated", row.comp}, {"limit", limit}, {"relative_gap", row.gap}});
    }
    ordered_json doc = {{"params", params_json(cfg.params)},
                        {"pole", triple_json(cfg.pole.x0, cfg.pole.y0, cfg.pole.z0)},
                        {"direction", triple_json(dir[0], dir[1], dir[2])},
                        {"rows", std::move(list)}};
    finish_json(doc, cfg, out);
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fundamental solutions of a three-dimensional elliptic operator with singular coefficients"};
  app.require_subcommand(1);
  Flags f;
  app.add_option("--config", f.config, "flat key = value config file");
  app.add_flag("--no-timestamp", f.no_timestamp, "omit the timestamp field from JSON output");
  for (const auto& [name, help] : keyed_flags()) {
    app.add_option("--" + name, f.keyed[name], help);
  }

  auto* eval = app.add_subcommand("eval", "evaluate one solution at one point")->fallthrough();
  eval->add_option("--kind", f.kind, "solution kind q1..q8")->capture_default_str();
  eval->add_option("--point", f.point, "field point x,y,z")->required();

  auto* grid = app.add_subcommand("grid", "evaluate one solution on a rectangular grid")->fallthrough();
  grid->add_option("--kind", f.kind, "solution kind q1..q8")->capture_default_str();
  grid->add_option("--grid", f.grid_all, "min,max,count for every axis (default 0.5,2,11)");
  grid->add_option("--x", f.grid_axes[0], "min,max,count along x");
  grid->add_option("--y", f.grid_axes[1], "min,max,count along y");
  grid->add_option("--z", f.grid_axes[2], "min,max,count along z");
  grid->add_option("--exclusion", f.exclusion, "pole exclusion radius")->capture_default_str();
  grid->add_option("--out", f.out_path, "output file (default: standard output)");

  auto* verify = app.add_subcommand("verify", "run verification suites")->fallthrough();
  verify->add_option("--suites", f.suites, "comma-separated subset of gamma,gauss,lauricella,solutions,identities,boundary");

  auto* scan = app.add_subcommand("scan", "approach the pole along a ray")->fallthrough();
  scan->add_option("--direction", f.direction, "ray direction dx,dy,dz")->capture_default_str();
  scan->add_option("--radii", f.radii, "decreasing radii")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ExitCode::usage);
  }

  try {
    if (*eval) return cmd_eval(f, out, err);
    if (*grid) return cmd_grid(f, out);
    if (*verify) return cmd_verify(f, out);
    if (*scan) return cmd_scan(f, out);
  } catch (const non_convergent& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::non_convergent);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::usage);
  }
  return static_cast<int>(ExitCode::usage);
}

}  // namespace fundsol::cli
