#include "ilwlab/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <future>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "ilwlab/diagnostics.hpp"
#include "ilwlab/serialize.hpp"

namespace ilw {

using nlohmann::json;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find_if(allowed.begin(), allowed.end(),
                     [&](const char* a) { return key == a; }) == allowed.end())
      throw ValidationError("config: unknown key '" + key + "' in " + where);
  }
}

double parse_delta_value(const json& v, const std::string& where) {
  if (v.is_string()) {
    if (v.get<std::string>() == "inf") return kInf;
    throw ValidationError("config: " + where + " must be a number or \"inf\"");
  }
  if (!v.is_number()) throw ValidationError("config: " + where + " must be a number");
  return v.get<double>();
}

MultiplierSpec parse_symbols_spec(const json& obj) {
  const std::string kind = obj.at("kind").get<std::string>();
  const double delta = obj.contains("delta") ? parse_delta_value(obj["delta"], "symbols.delta") : 1.0;
  const double param = obj.value("param", 0.0);
  if (kind == "hilbert") return MultiplierSpec::hilbert();
  if (kind == "tilbert") return MultiplierSpec::tilbert(delta);
  if (kind == "g_delta") return MultiplierSpec::g_delta(delta);
  if (kind == "q_delta") return MultiplierSpec::q_delta(delta);
  if (kind == "dx") return MultiplierSpec::dx();
  if (kind == "dx_inv") return MultiplierSpec::dx_inv();
  if (kind == "bessel") return MultiplierSpec::bessel(param);
  if (kind == "riesz") return MultiplierSpec::riesz(param);
  if (kind == "bo_propagator") return MultiplierSpec::bo_propagator(param);
  throw ValidationError("config: unknown symbols.kind '" + kind + "'");
}

std::filesystem::path out_path(const ExperimentConfig& c, const std::string& name) {
  std::filesystem::create_directories(c.out_dir);
  return std::filesystem::path(c.out_dir) / name;
}

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream f(p);
  if (!f) throw ValidationError("cannot open output file " + p.string());
  return f;
}

int effective_threads(const ExperimentConfig& c) { return std::max(1, c.threads); }

const char* mode_name(DeepwaterMode m) {
  return m == DeepwaterMode::original ? "original" : "renormalized";
}

}  // namespace

SpectralField InitialDataSpec::build(const TorusGrid& grid) const {
  SpectralField f(grid, /*real_valued=*/true);
  auto set_pair = [&](int n, cdouble c) {
    if (n == 0) {
      f.set_coeff(0, cdouble(c.real(), 0.0));
      return;
    }
    if (std::abs(n) > grid.max_mode())
      throw ValidationError("initial_data: mode outside grid band");
    f.set_coeff(n, c);
    f.set_coeff(-n, std::conj(c));
  };
  switch (profile) {
    case Profile::default_profile:
      // a cos(x/lambda) + b sin(2 x/lambda) with (a, b) = (0.1, 0.05)
      set_pair(1, cdouble(0.05, 0.0));
      set_pair(2, cdouble(0.0, -0.025));
      break;
    case Profile::cosine:
      if (mode < 1) throw ValidationError("initial_data: cosine mode must be >= 1");
      set_pair(mode, cdouble(0.5 * amplitude, 0.0));
      break;
    case Profile::coeff_list:
      for (const auto& [n, re, im] : coeffs) set_pair(n, cdouble(re, im));
      break;
  }
  return f;
}

ExperimentConfig ExperimentConfig::parse_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("config: top level must be an object");
  reject_unknown_keys(doc,
                      {"experiment", "equation", "grid", "solver", "initial_data",
                       "sobolev_s_list", "deepwater", "scaling", "gauge", "symbols",
                       "output", "threads"},
                      "top level");

  ExperimentConfig c;
  c.experiment = doc.at("experiment").get<std::string>();
  static const std::vector<std::string> kKnown = {
      "solve", "conserve", "symbols", "deepwater", "gauge_check", "scaling_check",
      "galilean_check"};
  if (std::find(kKnown.begin(), kKnown.end(), c.experiment) == kKnown.end())
    throw ValidationError("config: unknown experiment '" + c.experiment + "'");

  if (doc.contains("equation")) {
    const auto& eq = doc["equation"];
    reject_unknown_keys(eq, {"variant", "delta", "delta_list"}, "equation");
    if (eq.contains("variant")) c.variant = variant_from_name(eq["variant"].get<std::string>());
    if (eq.contains("delta")) c.delta = parse_delta_value(eq["delta"], "equation.delta");
    if (eq.contains("delta_list")) {
      for (const auto& v : eq["delta_list"])
        c.delta_list.push_back(parse_delta_value(v, "equation.delta_list"));
    }
  }
  if (doc.contains("grid")) {
    const auto& g = doc["grid"];
    reject_unknown_keys(g, {"lambda", "n_points"}, "grid");
    c.lambda = g.value("lambda", 1.0);
    c.n_points = g.value("n_points", 256);
  }
  if (doc.contains("solver")) {
    const auto& s = doc["solver"];
    reject_unknown_keys(s, {"dt", "t_final", "snapshot_stride", "dealias", "blowup_threshold"},
                        "solver");
    c.solver.dt = s.value("dt", c.solver.dt);
    c.solver.t_final = s.value("t_final", c.solver.t_final);
    c.solver.snapshot_stride = s.value("snapshot_stride", c.solver.snapshot_stride);
    c.solver.dealias = s.value("dealias", c.solver.dealias);
    c.solver.blowup_threshold = s.value("blowup_threshold", c.solver.blowup_threshold);
  }
  if (doc.contains("initial_data")) {
    const auto& d = doc["initial_data"];
    reject_unknown_keys(d, {"profile", "amplitude", "mode", "coeffs"}, "initial_data");
    const std::string profile = d.value("profile", "default");
    if (profile == "default") {
      c.initial_data.profile = InitialDataSpec::Profile::default_profile;
    } else if (profile == "cos") {
      c.initial_data.profile = InitialDataSpec::Profile::cosine;
      c.initial_data.amplitude = d.value("amplitude", 0.1);
      c.initial_data.mode = d.value("mode", 1);
    } else if (profile == "coeffs") {
      c.initial_data.profile = InitialDataSpec::Profile::coeff_list;
      if (!d.contains("coeffs") || !d["coeffs"].is_array())
        throw ValidationError("config: initial_data.coeffs must be an array of [n, re, im]");
      for (const auto& entry : d["coeffs"]) {
        if (!entry.is_array() || entry.size() != 3)
          throw ValidationError("config: initial_data.coeffs entries must be [n, re, im]");
        c.initial_data.coeffs.emplace_back(entry[0].get<int>(), entry[1].get<double>(),
                                           entry[2].get<double>());
      }
    } else {
      throw ValidationError("config: unknown initial_data.profile '" + profile + "'");
    }
  }
  if (doc.contains("sobolev_s_list")) {
    c.sobolev_s_list = doc["sobolev_s_list"].get<std::vector<double>>();
    if (c.sobolev_s_list.empty())
      throw ValidationError("config: sobolev_s_list must be nonempty");
  }
  if (doc.contains("deepwater")) {
    const auto& d = doc["deepwater"];
    reject_unknown_keys(d, {"mode", "delta_min_fit"}, "deepwater");
    const std::string mode = d.value("mode", "original");
    if (mode == "original") c.deepwater_mode = DeepwaterMode::original;
    else if (mode == "renormalized") c.deepwater_mode = DeepwaterMode::renormalized;
    else throw ValidationError("config: deepwater.mode must be original or renormalized");
    if (d.contains("delta_min_fit")) c.delta_min_fit = d["delta_min_fit"].get<double>();
  }
  if (doc.contains("scaling")) {
    const auto& s = doc["scaling"];
    reject_unknown_keys(s, {"lambda_scale", "n_points_target"}, "scaling");
    c.scaling_lambda = s.value("lambda_scale", 2.0);
    c.scaling_n_points_target = s.value("n_points_target", 0);
  }
  if (doc.contains("gauge")) {
    const auto& g = doc["gauge"];
    reject_unknown_keys(g, {"refinement_levels"}, "gauge");
    c.gauge_refinement_levels = g.value("refinement_levels", 3);
    if (c.gauge_refinement_levels < 2)
      throw ValidationError("config: gauge.refinement_levels must be >= 2");
  }
  if (doc.contains("symbols")) {
    const auto& s = doc["symbols"];
    reject_unknown_keys(s, {"kind", "delta", "param", "xi_min", "xi_max", "count", "spacing"},
                        "symbols");
    c.symbols_spec = parse_symbols_spec(s);
    c.symbols_xi_min = s.value("xi_min", c.symbols_xi_min);
    c.symbols_xi_max = s.value("xi_max", c.symbols_xi_max);
    c.symbols_count = s.value("count", c.symbols_count);
    const std::string spacing = s.value("spacing", "linear");
    if (spacing == "log") c.symbols_log_spacing = true;
    else if (spacing != "linear")
      throw ValidationError("config: symbols.spacing must be linear or log");
    if (c.symbols_count < 2) throw ValidationError("config: symbols.count must be >= 2");
  }
  if (doc.contains("output")) {
    const auto& o = doc["output"];
    reject_unknown_keys(o, {"dir"}, "output");
    c.out_dir = o.value("dir", c.out_dir);
  }
  if (doc.contains("threads")) {
    c.threads = doc["threads"].get<int>();
    if (c.threads < 1) throw ValidationError("config: threads must be >= 1");
  }
  return c;
}

FitResult fit_loglog(const std::vector<std::pair<double, double>>& pairs) {
  if (pairs.size() < 3) throw ValidationError("fit_loglog: need at least 3 points");
  FitResult res;
  for (const auto& [d, e] : pairs) {
    if (!(d > 0.0)) throw ValidationError("fit_loglog: deltas must be positive");
    if (!(e > 0.0)) {
      res.degenerate = true;
      return res;
    }
  }
  const double n = static_cast<double>(pairs.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& [d, e] : pairs) {
    const double x = std::log(d), y = std::log(e);
    sx += x; sy += y; sxx += x * x; sxy += x * y; syy += y * y;
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw ValidationError("fit_loglog: degenerate abscissae");
  res.slope = (n * sxy - sx * sy) / denom;
  res.intercept = (sy - res.slope * sx) / n;
  const double ss_tot = syy - sy * sy / n;
  double ss_res = 0.0;
  for (const auto& [d, e] : pairs) {
    const double r = std::log(e) - (res.intercept + res.slope * std::log(d));
    ss_res += r * r;
  }
  res.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return res;
}

double ConvergenceReport::error_at(double delta, double s) const {
  for (const auto& row : rows)
    if (row.delta == delta && row.s == s) return row.sup_error;
  throw ValidationError("ConvergenceReport: no row for requested (delta, s)");
}

ConvergenceReport run_deepwater(const ExperimentConfig& config) {
  if (config.delta_list.size() < 4)
    throw ValidationError("deepwater: delta_list needs at least 4 entries");
  for (size_t i = 0; i + 1 < config.delta_list.size(); ++i)
    if (!(config.delta_list[i] < config.delta_list[i + 1]))
      throw ValidationError("deepwater: delta_list must be strictly increasing");
  for (double d : config.delta_list)
    if (!(d > 0.0) || d == kInf)
      throw ValidationError("deepwater: deltas must be finite and positive");

  const TorusGrid grid = make_grid(config.lambda, config.n_points);
  const SpectralField u0 = config.initial_data.build(grid);
  const bool renormalized = config.deepwater_mode == DeepwaterMode::renormalized;
  if (renormalized && std::abs(u0.coeff(0)) > 1e-12)
    throw ValidationError("deepwater renormalized mode: initial data must be mean-zero");

  const Trajectory reference = solve(EquationSpec::bo(), u0, config.solver);

  struct Member {
    std::vector<double> errors;  // per s
    double runtime = 0.0;
  };
  auto run_member = [&](double delta) {
    const auto start = std::chrono::steady_clock::now();
    const EquationSpec eq =
        renormalized ? EquationSpec::renorm_ilw(delta) : EquationSpec::ilw(delta);
    const Trajectory traj = solve(eq, u0, config.solver);
    Member m;
    for (double s : config.sobolev_s_list) m.errors.push_back(hs_error(traj, reference, s));
    m.runtime = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return m;
  };

  std::vector<Member> members(config.delta_list.size());
  const size_t threads = static_cast<size_t>(effective_threads(config));
  if (threads == 1) {
    for (size_t i = 0; i < config.delta_list.size(); ++i)
      members[i] = run_member(config.delta_list[i]);
  } else {
    // batches of at most `threads` members in flight; results identical to the
    // serial path, only the wall time changes
    for (size_t start = 0; start < config.delta_list.size(); start += threads) {
      const size_t end = std::min(start + threads, config.delta_list.size());
      std::vector<std::future<Member>> batch;
      for (size_t i = start; i < end; ++i)
        batch.push_back(std::async(std::launch::async, run_member, config.delta_list[i]));
      for (size_t i = start; i < end; ++i) members[i] = batch[i - start].get();
    }
  }

  ConvergenceReport report;
  report.mode = config.deepwater_mode;
  for (size_t i = 0; i < config.delta_list.size(); ++i)
    for (size_t j = 0; j < config.sobolev_s_list.size(); ++j)
      report.rows.push_back({config.delta_list[i], config.sobolev_s_list[j],
                             members[i].errors[j], members[i].runtime});

  const double noise_floor =
      1e3 * std::numeric_limits<double>::epsilon() * l2_coeff_norm(u0);
  const double delta_min = config.delta_min_fit.value_or(config.delta_list.front());
  for (double s : config.sobolev_s_list) {
    std::vector<std::pair<double, double>> pairs;
    bool saw_zero = false;
    for (const auto& row : report.rows) {
      if (row.s != s || row.delta < delta_min) continue;
      if (row.sup_error <= noise_floor) {
        saw_zero = saw_zero || row.sup_error <= 0.0;
        continue;  // below the fit window
      }
      pairs.emplace_back(row.delta, row.sup_error);
    }
    ConvergenceReport::SlopeFit fit;
    fit.s = s;
    if (pairs.size() < 3) {
      fit.fit.degenerate = true;
    } else {
      fit.fit = fit_loglog(pairs);
    }
    (void)saw_zero;
    report.fits.push_back(fit);
  }
  return report;
}

ScalingReport run_scaling_check(const ExperimentConfig& config) {
  const double lam = config.scaling_lambda;
  if (!(lam >= 1.0)) throw ValidationError("scaling_check: lambda_scale must be >= 1");
  if (!(config.delta > 0.0) || config.delta == kInf)
    throw ValidationError("scaling_check: delta must be finite and positive");
  const int n_target =
      config.scaling_n_points_target > 0 ? config.scaling_n_points_target : config.n_points;

  const TorusGrid source_grid = make_grid(config.lambda, config.n_points);
  SpectralField u0 = config.initial_data.build(source_grid);
  u0.set_coeff(0, 0.0);  // renormalized ILW is posed mean-zero

  SolveConfig source_solver = config.solver;
  source_solver.dt = config.solver.dt / (lam * lam);
  source_solver.t_final = config.solver.t_final / (lam * lam);

  const Trajectory source = solve(EquationSpec::renorm_ilw(config.delta), u0, source_solver);
  const Trajectory mapped = scale_transform(source, lam, n_target);

  const SpectralField u0_scaled = scale_field(u0, lam, n_target);
  const Trajectory target =
      solve(EquationSpec::renorm_ilw(lam * config.delta), u0_scaled, config.solver);

  ScalingReport rep;
  rep.lambda = lam;
  rep.delta = config.delta;
  rep.discrepancy = hs_error(mapped, target, 0.0);
  const double lhs = std::sqrt(mass(u0_scaled));
  const double rhs = std::pow(lam, -0.5) * std::sqrt(mass(u0));
  rep.l2_identity_error = std::abs(lhs - rhs);
  return rep;
}

GalileanReport run_galilean_check(const ExperimentConfig& config) {
  if (!(config.delta > 0.0) || config.delta == kInf)
    throw ValidationError("galilean_check: delta must be finite and positive");
  const TorusGrid grid = make_grid(config.lambda, config.n_points);
  const SpectralField u0 = config.initial_data.build(grid);
  const double mu = mean(u0);

  const Trajectory direct = solve(EquationSpec::ilw(config.delta), u0, config.solver);

  SpectralField u0_centered = u0;
  u0_centered.set_coeff(0, 0.0);
  const Trajectory reduced =
      solve(EquationSpec::renorm_ilw(config.delta), u0_centered, config.solver);

  // undo: u(t, x) = v(t, x + (2 mu - 1/delta) t) + mu
  Trajectory rebuilt = galilean_tau(reduced, 2.0 * mu - 1.0 / config.delta);
  for (auto& f : rebuilt.fields) f.set_coeff(0, f.coeff(0) + mu);

  GalileanReport rep;
  rep.delta = config.delta;
  rep.initial_mean = mu;
  rep.discrepancy = hs_error(direct, rebuilt, 0.0);
  return rep;
}

GaugeCheckReport run_gauge_check(const ExperimentConfig& config) {
  if (!(config.delta > 0.0)) throw ValidationError("gauge_check: delta must be positive");
  const TorusGrid grid = make_grid(config.lambda, config.n_points);
  SpectralField u0 = config.initial_data.build(grid);
  u0.set_coeff(0, 0.0);

  GaugeCheckReport report;
  for (int level = 0; level < config.gauge_refinement_levels; ++level) {
    SolveConfig solver = config.solver;
    const double factor = std::pow(2.0, level);
    solver.dt = config.solver.dt / factor;
    const Trajectory traj = solve(EquationSpec::renorm_ilw(config.delta), u0, solver);

    GaugeCheckReport::Level lv;
    lv.dt = solver.dt;
    lv.residual_F = gauged_residual(traj, config.delta, GaugedEquation::F_equation);
    lv.residual_w = gauged_residual(traj, config.delta, GaugedEquation::w_equation);
    for (size_t i = 0; i < traj.size(); ++i) {
      const SpectralField w = gauge_w(traj.fields[i]);
      lv.max_reconstruct = std::max(lv.max_reconstruct, reconstruct_check(w, traj.fields[i]));
    }
    report.levels.push_back(std::move(lv));
  }
  for (size_t l = 0; l + 1 < report.levels.size(); ++l) {
    report.ratios_F.push_back(report.levels[l].residual_F.max_value() /
                              report.levels[l + 1].residual_F.max_value());
    report.ratios_w.push_back(report.levels[l].residual_w.max_value() /
                              report.levels[l + 1].residual_w.max_value());
  }
  return report;
}

namespace {

void write_deepwater_outputs(const ExperimentConfig& config, const ConvergenceReport& report) {
  auto csv = open_out(out_path(config, "deepwater.csv"));
  csv << "delta,s,sup_error,runtime_seconds\n";
  for (const auto& row : report.rows)
    csv << format_double(row.delta) << "," << format_double(row.s) << ","
        << format_double(row.sup_error) << "," << format_double(row.runtime_seconds) << "\n";

  json summary;
  summary["mode"] = mode_name(report.mode);
  summary["slopes"] = json::array();
  for (const auto& f : report.fits) {
    json item;
    item["s"] = f.s;
    item["degenerate"] = f.fit.degenerate;
    if (!f.fit.degenerate) {
      item["slope"] = f.fit.slope;
      item["intercept"] = f.fit.intercept;
      item["r_squared"] = f.fit.r_squared;
    }
    summary["slopes"].push_back(item);
  }
  open_out(out_path(config, "deepwater_summary.json")) << summary.dump(2) << "\n";
}

void write_conservation_outputs(const ExperimentConfig& config, const ConservationReport& rep) {
  auto csv = open_out(out_path(config, "conservation.csv"));
  csv << "time,mean,mass,hamiltonian\n";
  for (size_t i = 0; i < rep.times.size(); ++i)
    csv << format_double(rep.times[i]) << "," << format_double(rep.means[i]) << ","
        << format_double(rep.masses[i]) << "," << format_double(rep.hamiltonians[i]) << "\n";
  json summary;
  summary["max_drift_mass"] = rep.max_mass_drift;
  summary["max_drift_energy"] = rep.max_energy_drift;
  summary["max_drift_mean"] = rep.max_mean_drift;
  open_out(out_path(config, "conservation_summary.json")) << summary.dump(2) << "\n";
}

void write_gauge_outputs(const ExperimentConfig& config, const GaugeCheckReport& report) {
  for (size_t l = 0; l < report.levels.size(); ++l) {
    const auto& lv = report.levels[l];
    for (const auto* which : {"F", "w"}) {
      const ResidualSeries& series =
          (*which == 'F') ? lv.residual_F : lv.residual_w;
      auto csv = open_out(out_path(config, "gauge_residual_" + std::string(which) + "_level" +
                                               std::to_string(l) + ".csv"));
      csv << "t,residual_L2\n";
      for (size_t i = 0; i < series.times.size(); ++i)
        csv << format_double(series.times[i]) << "," << format_double(series.values[i]) << "\n";
    }
  }
  json summary;
  summary["dt"] = json::array();
  summary["max_residual_F"] = json::array();
  summary["max_residual_w"] = json::array();
  summary["max_reconstruct"] = json::array();
  for (const auto& lv : report.levels) {
    summary["dt"].push_back(lv.dt);
    summary["max_residual_F"].push_back(lv.residual_F.max_value());
    summary["max_residual_w"].push_back(lv.residual_w.max_value());
    summary["max_reconstruct"].push_back(lv.max_reconstruct);
  }
  summary["ratios_F"] = report.ratios_F;
  summary["ratios_w"] = report.ratios_w;
  open_out(out_path(config, "gauge_summary.json")) << summary.dump(2) << "\n";
}

}  // namespace

void run_experiment(const ExperimentConfig& config) {
  if (config.experiment == "solve" || config.experiment == "conserve") {
    const TorusGrid grid = make_grid(config.lambda, config.n_points);
    const SpectralField u0 = config.initial_data.build(grid);
    EquationSpec eq;
    switch (config.variant) {
      case Variant::ilw: eq = EquationSpec::ilw(config.delta); break;
      case Variant::renorm_ilw: eq = EquationSpec::renorm_ilw(config.delta); break;
      case Variant::bo: eq = EquationSpec::bo(); break;
      case Variant::scaled_ilw: eq = EquationSpec::scaled_ilw(config.delta); break;
    }
    const Trajectory traj = solve(eq, u0, config.solver);
    if (config.experiment == "solve") {
      save_trajectory(traj, std::filesystem::path(config.out_dir) / "trajectory");
    } else {
      write_conservation_outputs(config, conservation_report(traj));
    }
    return;
  }
  if (config.experiment == "symbols") {
    auto csv = open_out(out_path(config, "symbols.csv"));
    csv << "xi,re,im\n";
    for (int i = 0; i < config.symbols_count; ++i) {
      const double t = static_cast<double>(i) / (config.symbols_count - 1);
      double xi;
      if (config.symbols_log_spacing) {
        if (!(config.symbols_xi_min > 0.0))
          throw ValidationError("symbols: log spacing needs xi_min > 0");
        xi = config.symbols_xi_min *
             std::pow(config.symbols_xi_max / config.symbols_xi_min, t);
      } else {
        xi = config.symbols_xi_min + t * (config.symbols_xi_max - config.symbols_xi_min);
      }
      const cdouble v = symbol(config.symbols_spec, xi);
      csv << format_double(xi) << "," << format_double(v.real()) << ","
          << format_double(v.imag()) << "\n";
    }
    return;
  }
  if (config.experiment == "deepwater") {
    write_deepwater_outputs(config, run_deepwater(config));
    return;
  }
  if (config.experiment == "gauge_check") {
    write_gauge_outputs(config, run_gauge_check(config));
    return;
  }
  if (config.experiment == "scaling_check") {
    const ScalingReport rep = run_scaling_check(config);
    json summary;
    summary["lambda"] = rep.lambda;
    summary["delta"] = rep.delta;
    summary["discrepancy"] = rep.discrepancy;
    summary["l2_identity_error"] = rep.l2_identity_error;
    open_out(out_path(config, "scaling_summary.json")) << summary.dump(2) << "\n";
    return;
  }
  if (config.experiment == "galilean_check") {
    const GalileanReport rep = run_galilean_check(config);
    json summary;
    summary["delta"] = rep.delta;
    summary["initial_mean"] = rep.initial_mean;
    summary["discrepancy"] = rep.discrepancy;
    open_out(out_path(config, "galilean_summary.json")) << summary.dump(2) << "\n";
    return;
  }
  throw ValidationError("unknown experiment '" + config.experiment + "'");
}

}  // namespace ilw
