#include "gpiverify/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gpiverify/gausshyp.hpp"
#include "gpiverify/inequality.hpp"
#include "gpiverify/moments.hpp"
#include "gpiverify/parallel.hpp"
#include "gpiverify/report.hpp"
#include "gpiverify/soscert.hpp"

namespace gpiv::cli {

namespace {

// Thrown for bad parameter values detected after option parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when data files cannot be read or the report cannot be written.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class T>
void put_optional(nlohmann::json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

}  // namespace

nlohmann::json to_json(const RunConfig& c) {
  nlohmann::json j = {{"command", c.command},
                      {"m2", c.m2},
                      {"m3", c.m3},
                      {"y2", c.y2},
                      {"y3", c.y3},
                      {"grid", c.grid},
                      {"width", c.width},
                      {"refine_max", c.refine_max},
                      {"seed", c.seed},
                      {"n", c.n},
                      {"all", c.all},
                      {"find_violation", c.find_violation},
                      {"compare_appendix", c.compare_appendix},
                      {"data_dir", c.data_dir}};
  if (!c.predicate.empty()) j["predicate"] = c.predicate;
  put_optional(j, "a", c.a);
  put_optional(j, "x", c.x);
  put_optional(j, "z", c.z);
  put_optional(j, "z_lo", c.z_lo);
  put_optional(j, "z_hi", c.z_hi);
  return j;
}

void apply_json(RunConfig& c, const nlohmann::json& j) {
  if (!j.is_object()) throw UsageError("config must be a JSON object");
  auto get = [&j](const char* key, auto& field) {
    if (j.contains(key)) j.at(key).get_to(field);
  };
  auto get_opt = [&j](const char* key, std::optional<std::string>& field) {
    if (j.contains(key)) field = j.at(key).is_string() ? j.at(key).get<std::string>() : j.at(key).dump();
  };
  get("m2", c.m2);
  get("m3", c.m3);
  get("y2", c.y2);
  get("y3", c.y3);
  get("grid", c.grid);
  get("width", c.width);
  get("refine_max", c.refine_max);
  get("seed", c.seed);
  get("n", c.n);
  get("jobs", c.jobs);
  get("all", c.all);
  get("find_violation", c.find_violation);
  get("compare_appendix", c.compare_appendix);
  get("timing", c.timing);
  get("data_dir", c.data_dir);
  get("out", c.out);
  get_opt("a", c.a);
  get_opt("x", c.x);
  get_opt("z", c.z);
  get_opt("z_lo", c.z_lo);
  get_opt("z_hi", c.z_hi);
}

namespace {

BigRational parse_rational(const std::string& what, const std::string& text) {
  try {
    return BigRational::parse(text);
  } catch (const std::exception& e) {
    throw UsageError("--" + what + ": " + e.what());
  }
}

double parse_real(const std::string& what, const std::string& text) { return parse_rational(what, text).to_double(); }

GpiParams params_of(const RunConfig& c) {
  try {
    return make_params(c.m2, c.m3);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::filesystem::path data_dir_of(const RunConfig& c) {
  const std::filesystem::path dir = c.data_dir.empty() ? default_data_dir() : std::filesystem::path(c.data_dir);
  if (!std::filesystem::is_directory(dir)) throw IoError("data directory not found: " + dir.string());
  return dir;
}

std::vector<BigRational> a_grid() {
  std::vector<BigRational> out;
  for (int k = -3; k <= 3; ++k) out.emplace_back(BigRational(k, 4));
  return out;
}

std::vector<BigRational> x_grid() {
  std::vector<BigRational> out;
  for (int k = -10; k <= 10; ++k) out.emplace_back(BigRational(k, 10));
  return out;
}

// Twenty-five correlations: the tenths in [-1, 1] and +-1/3, +-1/7.
std::vector<BigRational> oracle_correlations() {
  std::vector<BigRational> out = x_grid();
  for (long d : {3L, 7L}) {
    out.emplace_back(BigRational(1, d));
    out.emplace_back(BigRational(-1, d));
  }
  return out;
}

using Checks = std::vector<CheckReport>;

Checks cmd_sos_verify(const RunConfig& c) {
  const auto dir = data_dir_of(c);
  std::vector<long> which;
  if (c.all) {
    for (long m = 1; m <= 7; ++m) which.push_back(m);
  } else {
    if (c.m2 < 1 || c.m2 > 7) throw UsageError("--m2 must be in 1..7 for sos verify");
    which.push_back(c.m2);
  }
  return parallel_map(which.size(), c.jobs, [&](std::size_t i) { return verify_bracket_positivity(which[i], dir); });
}

Checks cmd_expand(const RunConfig& c, const std::string& what) {
  Checks out;
  if (what == "h") {
    const auto dir = data_dir_of(c);
    std::vector<long> which;
    if (c.all) {
      for (long m = 1; m <= 7; ++m) which.push_back(m);
    } else {
      if (c.m2 < 1 || c.m2 > 7) throw UsageError("--m2 must be in 1..7 for expand h");
      which.push_back(c.m2);
    }
    for (long m : which) {
      CheckReport r = verify_h_expansion(m, dir);
      const MultiPoly h = h_poly(m);
      r.details["constant"] = h.constant_term().str();
      r.details["polynomial"] = poly_serialize(h);
      out.push_back(std::move(r));
    }
  } else if (what == "g") {
    if (c.compare_appendix) {
      out.push_back(verify_g_against_appendix(data_dir_of(c)));
    } else {
      const MultiPoly g = g_poly();
      CheckReport r = verify_nonneg_coeffs(g);
      r.name = "g_nonneg_coeffs";
      r.details["degrees"] = {g.degree("a"), g.degree("b"), g.degree("c")};
      r.details["constant"] = g.constant_term().str();
      out.push_back(std::move(r));
    }
  } else if (what == "s") {
    const GpiParams p = params_of(c);
    const MultiPoly s = S_poly(p);
    CheckReport r;
    r.name = "S_poly";
    r.status = Status::verified;
    r.details = {{"m2", p.m2}, {"m3", p.m3}, {"degree", s.degree("z")}, {"polynomial", poly_serialize(s)}};
    out.push_back(std::move(r));
  } else {
    throw UsageError("expand needs one of h, g, s");
  }
  return out;
}

Checks cmd_check_gpi(const RunConfig& c) {
  const GpiParams p = params_of(c);
  const auto as = c.a ? std::vector<BigRational>{parse_rational("a", *c.a)} : a_grid();
  const auto xs = c.x ? std::vector<BigRational>{parse_rational("x", *c.x)} : x_grid();
  for (const auto& x : xs)
    if (abs(x) > BigRational(1)) throw UsageError("--x must satisfy |x| <= 1");
  std::vector<std::pair<BigRational, BigRational>> pts;
  for (const auto& a : as)
    for (const auto& x : xs) pts.emplace_back(a, x);
  return parallel_map(pts.size(), c.jobs, [&](std::size_t i) { return check_gpi(p, pts[i].first, pts[i].second); });
}

Checks cmd_check_mri(const RunConfig& c) {
  const GpiParams p = params_of(c);
  const BigRational width = parse_rational("width", c.width);
  if (c.find_violation) return {find_mri_violation(p, c.grid, width)};
  const auto xs = c.x ? std::vector<BigRational>{parse_rational("x", *c.x)} : x_grid();
  for (const auto& x : xs)
    if (abs(x) > BigRational(1)) throw UsageError("--x must satisfy |x| <= 1");
  return parallel_map(xs.size(), c.jobs,
                      [&](std::size_t i) { return check_mri(p, GaussianPair::unit(xs[i]), width); });
}

Checks cmd_check_hfri(const RunConfig& c) {
  const GpiParams p = params_of(c);
  if (!c.z) {
    ScanOptions o;
    o.grid_n = c.grid;
    o.jobs = c.jobs;
    return {scan(Predicate::hfri, p, o)};
  }
  try {
    return {hfri_check(p, parse_rational("z", *c.z))};
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
}

RealGpiParams real_params_of(const RunConfig& c) {
  try {
    return make_real_params(c.y2, c.y3);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// The x grid of the exact checks with +-1 pulled in to the float cap.
std::vector<double> real_x_grid() {
  std::vector<double> out;
  for (const auto& x : x_grid()) out.push_back(std::clamp(x.to_double(), -kMaxRealCorrelation, kMaxRealCorrelation));
  return out;
}

Checks cmd_check_gpi_real(const RunConfig& c) {
  const RealGpiParams rp = real_params_of(c);
  std::vector<double> as, xs;
  if (c.a) {
    as.push_back(parse_real("a", *c.a));
  } else {
    for (const auto& a : a_grid()) as.push_back(a.to_double());
  }
  xs = c.x ? std::vector<double>{parse_real("x", *c.x)} : real_x_grid();
  Checks out;
  try {
    for (double a : as)
      for (double x : xs) out.push_back(check_gpi_real(rp, a, x));
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  return out;
}

Checks cmd_check_mri_real(const RunConfig& c) {
  const RealGpiParams rp = real_params_of(c);
  if (c.find_violation) return {find_mri_real_violation(rp, c.grid)};
  const std::vector<double> xs = c.x ? std::vector<double>{parse_real("x", *c.x)} : real_x_grid();
  Checks out;
  try {
    for (double x : xs) out.push_back(check_mri_real(rp, x));
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  return out;
}

Checks cmd_scan(const RunConfig& c) {
  Predicate pred;
  try {
    pred = predicate_from_string(c.predicate);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const GpiParams p = params_of(c);
  ScanOptions o;
  o.grid_n = c.grid;
  o.width = parse_rational("width", c.width);
  o.refine_max = c.refine_max;
  o.jobs = c.jobs;
  if (o.grid_n < 2) throw UsageError("--grid must be >= 2");
  if (o.width.sign() <= 0) throw UsageError("--width must be positive");
  if (c.z_lo || c.z_hi) {
    ZRange r = default_range(pred, p);
    if (c.z_lo) r.lo = parse_rational("z-lo", *c.z_lo);
    if (c.z_hi) r.hi = parse_rational("z-hi", *c.z_hi);
    o.range = r;
  }
  try {
    return {scan(pred, p, o)};
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

struct McConfig {
  MixedKind kind;
  double y2, y3, x;
};

const std::vector<McConfig>& mc_configs() {
  static const std::vector<McConfig> configs = {
      {MixedKind::plain, 1.0, 1.0, 0.5},        {MixedKind::odd_signed, 1.0, 1.0, 0.5},
      {MixedKind::even_shift2, 1.0, 1.0, 0.5},  {MixedKind::plain, 2.5, 1.5, -0.3},
      {MixedKind::odd_signed, 2.5, 1.5, -0.3},  {MixedKind::even_shift2, 0.5, 2.0, 0.7},
      {MixedKind::plain, 3.0, 4.0, 0.9},        {MixedKind::odd_signed, 0.7, 1.3, 0.8},
      {MixedKind::even_shift2, 1.5, 0.5, -0.6}, {MixedKind::odd_signed, 4.0, 4.3, 0.46},
  };
  return configs;
}

McExponents mc_exponents(const McConfig& m) {
  switch (m.kind) {
    case MixedKind::plain: return {m.y2, m.y3, false, false};
    case MixedKind::even_shift2: return {m.y2, m.y3 + 2, false, false};
    case MixedKind::odd_signed: return {m.y2 + 1, m.y3 + 1, true, true};
  }
  return {};
}

Checks cmd_oracle_compare(const RunConfig& c) {
  Checks out;
  const long max_m = std::max(c.m2, c.m3);
  const auto xs = oracle_correlations();
  const auto rows = parallel_map(static_cast<std::size_t>(max_m + 1), c.jobs, [&](std::size_t i) {
    const long m2 = static_cast<long>(i);
    nlohmann::json mismatches = nlohmann::json::array();
    int compared = 0;
    for (long m3 = 0; m3 <= max_m; ++m3) {
      for (const auto& x : xs) {
        const GaussianPair pair = GaussianPair::unit(x);
        compared += 2;
        if (even_moment(m2, m3, pair) != wick_moment(2 * m2, 2 * m3, pair))
          mismatches.push_back({{"kind", "even"}, {"m2", m2}, {"m3", m3}, {"x", x.str()}});
        if (odd_moment(m2, m3, pair) != wick_moment(2 * m2 + 1, 2 * m3 + 1, pair))
          mismatches.push_back({{"kind", "odd"}, {"m2", m2}, {"m3", m3}, {"x", x.str()}});
      }
    }
    return std::make_pair(compared, mismatches);
  });
  CheckReport exact;
  exact.name = "oracle.moments_vs_wick";
  int compared = 0;
  nlohmann::json mismatches = nlohmann::json::array();
  for (const auto& [n, m] : rows) {
    compared += n;
    for (const auto& e : m) mismatches.push_back(e);
  }
  exact.status = mismatches.empty() ? Status::verified : Status::residual_nonzero;
  exact.details = {{"max_m", max_m}, {"correlations", xs.size()}, {"comparisons", compared}, {"mismatches", mismatches}};
  out.push_back(std::move(exact));

  if (c.n > 0) {
    const auto& configs = mc_configs();
    auto mc = parallel_map(configs.size(), c.jobs, [&](std::size_t i) {
      const McConfig& m = configs[i];
      const double exact_v = mixed_abs_moment_real(m.kind, m.y2, m.y3, m.x);
      const McResult r = mc_moment(mc_exponents(m), 1.0, 1.0, m.x, c.n, c.seed + i);
      const double z = std::abs(r.mean - exact_v) / r.stderr_;
      CheckReport rep;
      rep.name = "oracle.monte_carlo." + std::string(to_string(m.kind));
      rep.status = z <= 4 ? Status::verified : Status::fails;
      rep.margin_float = exact_v - r.mean;
      rep.details = {{"y2", m.y2},          {"y3", m.y3},          {"x", m.x},          {"series", exact_v},
                     {"mc_mean", r.mean},   {"mc_stderr", r.stderr_}, {"z_score", z},  {"n", r.n},
                     {"seed", c.seed + i},  {"generator", std::string(kMcGenerator)}};
      return rep;
    });
    for (auto& r : mc) out.push_back(std::move(r));
  }
  return out;
}

Checks cmd_params_show(const RunConfig& c) {
  const GpiParams p = params_of(c);
  CheckReport r;
  r.name = "params";
  r.status = Status::verified;
  r.details = {{"m2", p.m2},
               {"m3", p.m3},
               {"r", p.r.str()},
               {"t", p.t.str()},
               {"in_S", p.in_S},
               {"one_over_r", (BigRational(1) / p.r).str()},
               {"one_over_r_squared", (BigRational(1) / (p.r * p.r)).str()},
               {"B", p.B().str()},
               {"H_at_one", H_at_one(p).str()},
               {"G_at_one", G_at_one(p).str()}};
  return {r};
}

Checks dispatch(const RunConfig& c) {
  const std::string& cmd = c.command;
  if (cmd == "sos verify") return cmd_sos_verify(c);
  if (cmd == "expand h") return cmd_expand(c, "h");
  if (cmd == "expand g") return cmd_expand(c, "g");
  if (cmd == "expand s") return cmd_expand(c, "s");
  if (cmd == "check gpi") return cmd_check_gpi(c);
  if (cmd == "check mri") return cmd_check_mri(c);
  if (cmd == "check hfri") return cmd_check_hfri(c);
  if (cmd == "check gpi-real") return cmd_check_gpi_real(c);
  if (cmd == "check mri-real") return cmd_check_mri_real(c);
  if (cmd == "scan") return cmd_scan(c);
  if (cmd == "oracle compare") return cmd_oracle_compare(c);
  if (cmd == "params show") return cmd_params_show(c);
  throw UsageError("unknown command '" + cmd + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of the three-dimensional Gaussian product inequality objects", kToolName};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  RunConfig cfg;
  std::string config_path;
  // Options are parsed into these temporaries so that the config file can
  // sit underneath the command line.
  RunConfig cli_cfg;
  std::string a, x, z, z_lo, z_hi;
  app.add_option("--config", config_path, "JSON file with RunConfig keys");
  auto* o_m2 = app.add_option("--m2", cli_cfg.m2, "exponent index m2");
  auto* o_m3 = app.add_option("--m3", cli_cfg.m3, "exponent index m3");
  auto* o_y2 = app.add_option("--y2", cli_cfg.y2, "real exponent y2");
  auto* o_y3 = app.add_option("--y3", cli_cfg.y3, "real exponent y3");
  auto* o_a = app.add_option("--a", a, "coefficient a in X1 = X2 + a X3 (rational)");
  auto* o_x = app.add_option("--x", x, "correlation (rational)");
  auto* o_z = app.add_option("--z", z, "evaluation point (rational)");
  auto* o_zlo = app.add_option("--z-lo", z_lo, "scan interval start (rational)");
  auto* o_zhi = app.add_option("--z-hi", z_hi, "scan interval end (rational)");
  auto* o_grid = app.add_option("--grid", cli_cfg.grid, "grid size");
  auto* o_width = app.add_option("--width", cli_cfg.width, "initial enclosure width (rational)");
  auto* o_refine = app.add_option("--refine-max", cli_cfg.refine_max, "maximum width halvings");
  auto* o_seed = app.add_option("--seed", cli_cfg.seed, "Monte Carlo seed");
  auto* o_n = app.add_option("--n", cli_cfg.n, "Monte Carlo draws (0 skips sampling)");
  auto* o_jobs = app.add_option("--jobs", cli_cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  auto* o_all = app.add_flag("--all", cli_cfg.all, "run for every bundled m2");
  auto* o_fv = app.add_flag("--find-violation", cli_cfg.find_violation, "search for a violation witness");
  auto* o_ca = app.add_flag("--compare-appendix", cli_cfg.compare_appendix, "compare g with the bundled expansion");
  auto* o_timing = app.add_flag("--timing", cli_cfg.timing, "record wall-clock time in the report");
  auto* o_data = app.add_option("--data-dir", cli_cfg.data_dir, "directory with bundled data");
  auto* o_out = app.add_option("--out", cli_cfg.out, "report path (default: standard output)");

  auto* sos = app.add_subcommand("sos", "sum-of-squares certificates")->require_subcommand(1);
  sos->add_subcommand("verify", "verify bundled certificates");
  auto* expand = app.add_subcommand("expand", "build polynomials")->require_subcommand(1);
  for (const char* w : {"h", "g", "s"}) expand->add_subcommand(w, std::string("expand ") + w);
  auto* check = app.add_subcommand("check", "pointwise checks")->require_subcommand(1);
  for (const char* w : {"gpi", "mri", "hfri", "gpi-real", "mri-real"}) check->add_subcommand(w, std::string("check ") + w);
  auto* scan_cmd = app.add_subcommand("scan", "grid scan of a predicate");
  std::string predicate;
  scan_cmd->add_option("predicate", predicate, "hfri | g_negative | aug13v | rrrr | h_half | h_seventh")->required();
  auto* oracle = app.add_subcommand("oracle", "independent oracles")->require_subcommand(1);
  oracle->add_subcommand("compare", "moment formulas against the Wick recursion and Monte Carlo");
  auto* params = app.add_subcommand("params", "parameter values")->require_subcommand(1);
  params->add_subcommand("show", "show r, t, H(1), G(1)");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw IoError("cannot open config " + config_path);
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("malformed config: ") + e.what());
      }
      try {
        apply_json(cfg, j);
      } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("bad config value: ") + e.what());
      }
    }
    auto take = [](CLI::Option* o, auto& dst, const auto& src) {
      if (o->count() > 0) dst = src;
    };
    take(o_m2, cfg.m2, cli_cfg.m2);
    take(o_m3, cfg.m3, cli_cfg.m3);
    take(o_y2, cfg.y2, cli_cfg.y2);
    take(o_y3, cfg.y3, cli_cfg.y3);
    take(o_grid, cfg.grid, cli_cfg.grid);
    take(o_width, cfg.width, cli_cfg.width);
    take(o_refine, cfg.refine_max, cli_cfg.refine_max);
    take(o_seed, cfg.seed, cli_cfg.seed);
    take(o_n, cfg.n, cli_cfg.n);
    take(o_jobs, cfg.jobs, cli_cfg.jobs);
    take(o_all, cfg.all, cli_cfg.all);
    take(o_fv, cfg.find_violation, cli_cfg.find_violation);
    take(o_ca, cfg.compare_appendix, cli_cfg.compare_appendix);
    take(o_timing, cfg.timing, cli_cfg.timing);
    take(o_data, cfg.data_dir, cli_cfg.data_dir);
    take(o_out, cfg.out, cli_cfg.out);
    if (o_a->count() > 0) cfg.a = a;
    if (o_x->count() > 0) cfg.x = x;
    if (o_z->count() > 0) cfg.z = z;
    if (o_zlo->count() > 0) cfg.z_lo = z_lo;
    if (o_zhi->count() > 0) cfg.z_hi = z_hi;
    if (cfg.jobs < 1) throw UsageError("--jobs must be >= 1");
    if (cfg.grid < 1) throw UsageError("--grid must be >= 1");
    if (cfg.refine_max < 0) throw UsageError("--refine-max must be >= 0");

    for (auto* sub : app.get_subcommands()) {
      cfg.command = sub->get_name();
      for (auto* leaf : sub->get_subcommands()) cfg.command += " " + leaf->get_name();
    }
    if (cfg.command == "scan") cfg.predicate = predicate;

    const auto t0 = std::chrono::steady_clock::now();
    const Checks checks = dispatch(cfg);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const Summary s = summarize(checks);
    nlohmann::json report;
    report["schema"] = 1;
    report["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    report["run"] = to_json(cfg);
    auto& arr = report["checks"] = nlohmann::json::array();
    for (const auto& c : checks) arr.push_back(gpiv::to_json(c));
    report["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"indeterminate", s.indeterminate}};
    report["timing"] = cfg.timing ? nlohmann::json{{"recorded", true}, {"seconds", seconds}}
                                  : nlohmann::json{{"recorded", false}};
    const std::string text = report.dump(2) + "\n";
    if (cfg.out.empty()) {
      out << text;
      out.flush();
      if (!out) throw IoError("failed to write the report");
    } else {
      std::ofstream f(cfg.out);
      if (!f) throw IoError("cannot open " + cfg.out + " for writing");
      f << text;
      f.close();
      if (!f) throw IoError("failed to write " + cfg.out);
    }
    return exit_code_for(s);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::runtime_error& e) {
    // File access inside the verification routines.
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
}

}  // namespace gpiv::cli
