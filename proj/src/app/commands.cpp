#include "vlab/app/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include "vlab/dynamics/evolve.hpp"
#include "vlab/dynamics/picard.hpp"
#include "vlab/oracles/oracles.hpp"
#include "vlab/setup/conditions.hpp"
#include "vlab/spectral/snapshot.hpp"
#include "vlab/virial/functional.hpp"

namespace vlab::app {

namespace fs = std::filesystem;

namespace {

std::ofstream open_output(const fs::path& path) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int status_exit(dynamics::RunStatus status) {
  switch (status) {
    case dynamics::RunStatus::kCompleted: return exit_code::kOk;
    case dynamics::RunStatus::kBlowupDetected: return exit_code::kBlowup;
    case dynamics::RunStatus::kDtUnderflow: return exit_code::kDtUnderflow;
    case dynamics::RunStatus::kDiverged: return exit_code::kInternal;
  }
  return exit_code::kInternal;
}

std::vector<double> column(const std::vector<SeriesRow>& rows, double dynamics::TrajectoryRecord::*field) {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.record.*field);
  return out;
}

void write_run_plots(const fs::path& dir, const std::vector<SeriesRow>& rows) {
  fs::create_directories(dir);
  const auto t = column(rows, &dynamics::TrajectoryRecord::t);
  write_svg_plot(dir / "I.svg", {"virial functional I(t)", "t", "I", false},
                 {{"I", t, column(rows, &dynamics::TrajectoryRecord::I)}});
  write_svg_plot(dir / "hs_norm.svg", {"Sobolev norm", "t", "log10 ||u||_{H^s}", true},
                 {{"||u||_{H^s}", t, column(rows, &dynamics::TrajectoryRecord::hs_norm)}});
  write_svg_plot(dir / "dt.svg", {"step size", "t", "log10 dt", true},
                 {{"dt", t, column(rows, &dynamics::TrajectoryRecord::dt)}});
}

struct Extremes {
  double max_I = -std::numeric_limits<double>::infinity();
  double max_hs = 0.0;
  double max_tail = 0.0;
};

Extremes extremes(const dynamics::RunResult& r) {
  Extremes e;
  for (const auto& s : r.samples) {
    e.max_I = std::max(e.max_I, s.I);
    e.max_hs = std::max(e.max_hs, s.hs_norm);
    e.max_tail = std::max(e.max_tail, s.tail_mass);
  }
  return e;
}

RunConfig with_value(const RunConfig& base, SweepSpec::Parameter p, double v) {
  RunConfig c = base;
  switch (p) {
    case SweepSpec::Parameter::kAmplitude: c.initial.amplitude = v; break;
    case SweepSpec::Parameter::kKappa: c.kappa = v; break;
    case SweepSpec::Parameter::kCoefficientAmplitude: c.coefficient_a = v; break;
    case SweepSpec::Parameter::kNone: break;
  }
  return c;
}

}  // namespace

Simulation simulate(const RunConfig& config) {
  const auto grid = config.grid();
  const auto spec = config.coefficient();
  const auto b = setup::build_coefficient(spec, grid);
  const auto u0 = setup::build_initial_data(config.initial, grid);
  std::optional<virial::VirialContext> ctx;
  try {
    ctx.emplace(grid, spec, config.weight(), config.solver.dealias);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("grid.N", e.what());
  }

  Simulation sim;
  dynamics::EvolveHooks hooks;
  hooks.virial = [&](const spectral::VectorField& v) { return ctx->I(v); };
  hooks.on_record = [&](const dynamics::TrajectoryRecord& rec, const dynamics::StepView& view) {
    sim.rows.push_back({rec, ctx->breakdown(view.v)});
  };
  sim.result = dynamics::evolve(u0, b, config.solver, hooks);

  const auto& samples = sim.result.samples;
  sim.riccati.c1 = virial::riccati_c1(grid.dimension(), config.kappa);
  sim.riccati.I0 = samples.front().I;
  if (samples.size() >= 3 && std::isfinite(samples.front().I)) {
    sim.riccati.c2 = virial::fit_c2_hat(samples, sim.riccati.c1);
    sim.comparison = virial::comparison_check(samples, sim.riccati);
  }
  return sim;
}

int cmd_run(const RunConfig& config, std::ostream& out) {
  const Simulation sim = simulate(config);
  const auto& r = sim.result;
  const fs::path dir = config.output_dir;

  {
    auto csv = open_output(dir / "series.csv");
    write_series_csv(csv, sim.rows);
  }
  write_run_plots(dir / "plots", sim.rows);
  if (config.snapshot_stride > 0) {
    fs::create_directories(dir / "snapshots");
    for (std::size_t k = 0; k < r.snapshots.size(); k += config.snapshot_stride) {
      char name[32];
      std::snprintf(name, sizeof name, "u_%05zu.bin", k);
      spectral::write_snapshot(dir / "snapshots" / name, r.snapshots[k]);
    }
  }

  const Extremes e = extremes(r);
  std::ostringstream s;
  s << "status: " << dynamics::to_string(r.status) << '\n';
  s << "detection: " << dynamics::to_string(r.detection) << '\n';
  s << "t_final: " << format_number(r.t_final) << '\n';
  if (r.status == dynamics::RunStatus::kBlowupDetected) s << "t_detect: " << format_number(r.t_final) << '\n';
  s << "steps: " << (r.samples.size() - 1) << '\n';
  s << "dt_next: " << format_number(r.dt_next) << '\n';
  s << "I0: " << format_number(sim.riccati.I0) << '\n';
  s << "max_I: " << format_number(e.max_I) << '\n';
  s << "max_hs_norm: " << format_number(e.max_hs) << '\n';
  s << "max_tail_mass: " << format_number(e.max_tail) << '\n';
  s << "riccati_c1: " << format_number(sim.riccati.c1) << '\n';
  s << "riccati_c2_hat: " << format_number(sim.riccati.c2) << '\n';
  s << "riccati_margin: " << format_number(sim.riccati.margin()) << '\n';
  if (sim.comparison) {
    const auto& v = *sim.comparison;
    s << "riccati_t_star: " << (v.t_star ? format_number(*v.t_star) : "none") << '\n';
    s << "comparison_checked: " << v.checked << '\n';
    s << "comparison_violations: " << v.violations << '\n';
    if (v.first_violation) s << "comparison_first_violation_t: " << format_number(r.samples[*v.first_violation].t) << '\n';
  }
  if (!sim.rows.empty()) {
    const auto& last = sim.rows.back().terms;
    for (std::size_t i = 0; i < last.per_axis_I1.size(); ++i) {
      s << "final_I1_axis_" << (i + 1) << ": " << format_number(last.per_axis_I1[i]) << '\n';
    }
  }
  s << "seed: " << config.seed << '\n';
  {
    auto summary = open_output(dir / "summary.txt");
    summary << s.str();
  }
  out << s.str();
  return status_exit(r.status);
}

int cmd_check(const RunConfig& config, std::ostream& out) {
  const auto grid = config.grid();
  const auto b = setup::build_coefficient(config.coefficient(), grid);
  const auto u0 = setup::build_initial_data(config.initial, grid);
  setup::ConditionsReport rep;
  try {
    rep = setup::check_blowup_conditions(u0, b, config.weight(), config.solver.s, config.frakC, config.m_star);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("grid.N", e.what());
  }
  out << "I0: " << format_number(rep.I0) << '\n';
  out << "u0_sobolev: " << format_number(rep.u0_sobolev) << " (s = " << format_number(rep.s) << ")\n";
  out << "frakC: " << format_number(rep.frakC) << '\n';
  out << "m_star: " << format_number(rep.m_star) << '\n';
  out << "c1: " << format_number(rep.c1) << '\n';
  out << "c2: " << format_number(rep.c2) << '\n';
  out << "cond1 (I0 > 0): " << yes_no(rep.cond1_holds) << '\n';
  out << "cond2 (I0^2 >= c2): " << yes_no(rep.cond2_holds) << '\n';
  out << "positivity (I0 sqrt(c1) > sqrt(c2)): " << yes_no(rep.positivity_holds) << '\n';
  return rep.all_hold() ? exit_code::kOk : exit_code::kConditions;
}

int cmd_riccati(double c1, double c2, double I0, const std::vector<double>& times, std::ostream& out,
                std::ostream& err) {
  const virial::RiccatiParams p{c1, c2, I0};
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kConfig;
  }
  double t_star = 0.0;
  try {
    t_star = virial::blowup_time(p);
  } catch (const virial::PositivityError& e) {
    err << e.what() << '\n';
    return exit_code::kPositivity;
  }
  out << "t_star: " << format_number(t_star) << (p.c2 < virial::kTinyC2 ? " (c2 -> 0 limit)" : "") << '\n';
  for (double t : times) {
    out << "J(" << format_number(t) << "): ";
    try {
      out << format_number(virial::riccati_J(p, t)) << '\n';
    } catch (const std::domain_error& e) {
      out << "undefined (" << e.what() << ")\n";
    }
  }
  return exit_code::kOk;
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto& sweep = config.sweep;
  if (sweep.parameter == SweepSpec::Parameter::kNone) throw ConfigError("sweep.parameter", "missing");
  if (sweep.values.empty()) throw ConfigError("sweep.values", "missing values (or sweep.min/max/count)");
  std::vector<RunConfig> configs;
  for (double v : sweep.values) {
    try {
      configs.push_back(with_value(config, sweep.parameter, v));
      if (sweep.parameter == SweepSpec::Parameter::kCoefficientAmplitude) {
        setup::axis_factors(configs.back().coefficient(), configs.back().grid());
      }
    } catch (const std::invalid_argument& e) {
      throw ConfigError("sweep.values", e.what());
    }
  }

  struct Outcome {
    dynamics::RunStatus status = dynamics::RunStatus::kCompleted;
    double t_final = 0.0;
    Extremes e;
    std::string error;
    bool failed = false;
  };
  std::vector<Outcome> outcomes(configs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < configs.size(); k = next++) {
      try {
        const Simulation sim = simulate(configs[k]);
        outcomes[k].status = sim.result.status;
        outcomes[k].t_final = sim.result.t_final;
        outcomes[k].e = extremes(sim.result);
      } catch (const std::exception& ex) {
        outcomes[k].failed = true;
        outcomes[k].error = ex.what();
      }
    }
  };
  const int n_workers = std::min<int>(sweep.workers, static_cast<int>(configs.size()));
  std::vector<std::thread> pool;
  for (int w = 0; w < n_workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    if (outcomes[k].failed) {
      err << "sweep value " << format_number(sweep.values[k]) << " failed: " << outcomes[k].error << '\n';
      return exit_code::kInternal;
    }
  }

  const fs::path dir = config.output_dir;
  std::vector<double> xs, codes, max_hs;
  {
    auto csv = open_output(dir / "sweep.csv");
    csv << "value,status,t_detect,max_I,max_hs_norm\n";
    for (std::size_t k = 0; k < outcomes.size(); ++k) {
      const auto& o = outcomes[k];
      const bool blowup = o.status == dynamics::RunStatus::kBlowupDetected;
      csv << format_number(sweep.values[k]) << ',' << dynamics::to_string(o.status) << ','
          << (blowup ? format_number(o.t_final) : "nan") << ',' << format_number(o.e.max_I) << ','
          << format_number(o.e.max_hs) << '\n';
      xs.push_back(sweep.values[k]);
      codes.push_back(static_cast<double>(o.status));
      max_hs.push_back(o.e.max_hs);
    }
  }
  fs::create_directories(dir / "plots");
  write_svg_plot(dir / "plots" / "regime.svg",
                 {"regime (0 completed, 1 blowup_detected, 2 dt_underflow, 3 diverged)", to_string(sweep.parameter),
                  "status", false},
                 {{"status", xs, codes, true}});
  write_svg_plot(dir / "plots" / "max_hs_norm.svg", {"peak Sobolev norm", to_string(sweep.parameter), "log10 max ||u||_{H^s}", true},
                 {{"max ||u||_{H^s}", xs, max_hs, true}});

  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    out << to_string(sweep.parameter) << " = " << format_number(sweep.values[k]) << ": "
        << dynamics::to_string(outcomes[k].status) << '\n';
  }
  return exit_code::kOk;
}

int cmd_picard(const RunConfig& config, std::ostream& out) {
  const auto grid = config.grid();
  const auto b = setup::build_coefficient(config.coefficient(), grid);
  const auto u0 = setup::build_initial_data(config.initial, grid);
  const auto rep = dynamics::picard_iterate(u0, b, config.picard);
  const fs::path dir = config.output_dir;

  out << "T: " << format_number(rep.T) << '\n';
  out << "u0_norm: " << format_number(rep.u0_norm) << '\n';
  out << "C1_hat: " << format_number(rep.C1_hat) << '\n';
  out << "CB_hat: " << format_number(rep.CB_hat) << '\n';
  out << "smallness: " << format_number(rep.smallness) << '\n';
  out << "contraction_factor: " << format_number(rep.contraction_factor) << '\n';
  out << "diverged: " << yes_no(rep.diverged) << '\n';
  out << "iterate  sup_difference  ratio\n";
  {
    auto csv = open_output(dir / "picard.csv");
    csv << "iterate,sup_difference\n";
    for (std::size_t k = 0; k < rep.sup_differences.size(); ++k) {
      const double d = rep.sup_differences[k];
      csv << (k + 1) << ',' << format_number(d) << '\n';
      out << (k + 1) << "  " << format_number(d);
      if (k > 0 && rep.sup_differences[k - 1] > 0.0) out << "  " << format_number(d / rep.sup_differences[k - 1]);
      out << '\n';
    }
  }

  if (!config.picard_horizons.empty()) {
    std::vector<double> cb;
    auto csv = open_output(dir / "picard_shape.csv");
    csv << "T,CB_hat,smallness\n";
    for (double T : config.picard_horizons) {
      auto opt = config.picard;
      opt.T = T;
      const auto r = dynamics::picard_iterate(u0, b, opt);
      cb.push_back(r.CB_hat);
      csv << format_number(T) << ',' << format_number(r.CB_hat) << ',' << format_number(r.smallness) << '\n';
    }
    if (cb.size() >= 2) {
      const auto fit = dynamics::fit_time_shape(config.picard_horizons, cb);
      out << "shape fit CB_hat ~ alpha T + beta sqrt(T): alpha = " << format_number(fit.alpha)
          << ", beta = " << format_number(fit.beta) << ", R^2 = " << format_number(fit.r_squared) << '\n';
    }
  }

  if (!(rep.smallness < 1.0)) {
    out << "warning: smallness >= 1, contraction is not expected and is not asserted\n";
    return exit_code::kOk;
  }
  bool ok = !rep.diverged;
  const double floor = 1e-12 * std::max(rep.u0_norm, 1e-300);
  for (std::size_t k = 2; k < rep.sup_differences.size(); ++k) {
    const double prev = rep.sup_differences[k - 1];
    if (prev > floor && !(rep.sup_differences[k] < prev)) ok = false;
  }
  out << "contraction: " << (ok ? "pass" : "FAIL") << '\n';
  return ok ? exit_code::kOk : exit_code::kProperty;
}

int cmd_oracle(const RunConfig& config, std::ostream& out) {
  using Kind = oracles::OracleCase::Kind;
  const Kind kind = config.oracle_kind == RunConfig::OracleKind::kColeHopf ? Kind::kColeHopf : Kind::kHeatMode;
  const auto grid = config.grid();
  const auto spec = config.coefficient();
  const auto u0 = setup::build_initial_data(config.initial, grid);
  std::optional<oracles::OracleCase> oracle;
  try {
    oracle.emplace(kind, spec, u0, config.solver.t_end);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("oracle.kind", e.what());
  }

  RunConfig run = config;
  if (!(run.solver.sample_interval > 0.0)) run.solver.sample_interval = run.solver.t_end / 10.0;
  const Simulation sim = simulate(run);
  const auto err = oracles::oracle_error(*oracle, sim.result, config.solver.s);

  std::vector<SeriesRow> rows;
  std::vector<std::vector<double>> extra;
  for (std::size_t k = 0; k < err.times.size(); ++k) {
    const auto it = std::find_if(sim.rows.begin(), sim.rows.end(),
                                 [&](const SeriesRow& r) { return r.record.t == err.times[k]; });
    if (it == sim.rows.end()) continue;
    rows.push_back(*it);
    extra.push_back({err.linf[k], err.hs[k]});
  }
  {
    auto csv = open_output(fs::path(config.output_dir) / "oracle.csv");
    write_series_csv(csv, rows, {"linf_error", "hs_error"}, extra);
  }

  const bool completed = sim.result.status == dynamics::RunStatus::kCompleted;
  const bool ok = completed && err.max_linf <= config.oracle_tolerance;
  out << "oracle: " << (kind == Kind::kColeHopf ? "cole_hopf" : "heat_mode") << '\n';
  out << "status: " << dynamics::to_string(sim.result.status) << '\n';
  out << "samples: " << err.times.size() << '\n';
  out << "max_linf_error: " << format_number(err.max_linf) << '\n';
  out << "max_hs_error: " << format_number(err.max_hs) << '\n';
  out << "tolerance: " << format_number(config.oracle_tolerance) << '\n';
  out << "verdict: " << (ok ? "pass" : "FAIL") << '\n';
  return ok ? exit_code::kOk : exit_code::kProperty;
}

}  // namespace vlab::app
