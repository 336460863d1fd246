#include "vlab/app/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace vlab::app {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) throw ConfigError(key, "expected a finite number, got '" + text + "'");
  return v;
}

long long parse_integer(const std::string& key, const std::string& text) {
  long long v = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ConfigError(key, "expected an integer, got '" + text + "'");
  return v;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "yes" || text == "1") return true;
  if (text == "false" || text == "no" || text == "0") return false;
  throw ConfigError(key, "expected true or false, got '" + text + "'");
}

std::vector<double> parse_list(const std::string& key, const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(key, trim(item)));
  if (out.empty()) throw ConfigError(key, "expected a comma-separated list of numbers");
  return out;
}

struct SweepRange {
  bool has_min = false, has_max = false, has_count = false;
  double min = 0.0, max = 0.0;
  long long count = 0;
};

using Setter = std::function<void(RunConfig&, SweepRange&, const std::string&, const std::string&)>;

const std::vector<std::pair<std::string, Setter>>& registry() {
  static const std::vector<std::pair<std::string, Setter>> table = [] {
    std::vector<std::pair<std::string, Setter>> t;
    auto add = [&t](std::string key, Setter s) { t.emplace_back(std::move(key), std::move(s)); };
    using K = std::string;
    add("grid.n", [](RunConfig& c, SweepRange&, const K& k, const K& v) { c.dimension = static_cast<int>(parse_integer(k, v)); });
    add("grid.N", [](RunConfig& c, SweepRange&, const K& k, const K& v) { c.points = static_cast<int>(parse_integer(k, v)); });
    add("grid.L", [](RunConfig& c, SweepRange&, const K& k, const K& v) { c.half_length = parse_double(k, v); });
    add("coefficient.kind", [](RunConfig& c, SweepRange&, const K& k, const K& v) {
      if (v == "quadratic_gaussian") c.coefficient_kind = RunConfig::CoefficientKind::kQuadraticGaussian;
      else if (v == "zero") c.coefficient_kind = RunConfig::CoefficientKind::kZero;
      else if (v == "one") c.coefficient_kind = RunConfig::CoefficientKind::kOne;
      else throw ConfigError(k, "unknown coefficient family '" + v + "' (quadratic_gaussian, zero, one)");
    });
    add("coefficient.a", [](RunConfig& c, SweepRange&, const K& k, const K& v) { c.coefficient_a = parse_double(k, v); });
    add("coefficient.sigma", [](RunConfig& c, SweepRange&, const K& k, const K& v) { c.coefficient_sigma = parse_double(k, v); });
    add("initial.kind", [](RunConfig& c, SweepRange&, const K& k, const K& v) {
      if (v == "gaussian_sum") c.initial.kind = setup::InitialDataSpec::Kind::kGaussianSum;
      else if (v == "cosine") c.initial.kind = setup::InitialDataSpec::Kind::kCosine;
      else throw ConfigError(k, "unknown initial-data family '" + v + "' (gaussian_sum, cosine)");
    });
    add("initial.amplitude", [](RunConfig& c, SweepRange&, const K& k, const K& v) { c.initial.amplitude = parse_double(k, v); });
    add("initial.frequency", [](RunConfig& c, SweepRange&, const K& k, const K& v) { c.initial.frequency = parse_double(k, v); });
    add("weight.kappa", [](RunConfig& c, SweepRange&, const K& k, const K& v) { c.kappa = parse_double(k, v); });
    add("solver.dt0", [](RunConfig& c, SweepRange&, const K& k, const K& v) { c.solver.dt0 = parse_double(k, v); });
    add("solver.t_end", [](RunConfig& c, SweepRange&, const K& k, const K& v) { c.solver.t_end = parse_double(k, v); });
    add("solver.integrator", [](RunConfig& c, SweepRange&, const K& k, const K& v) {
      if (v == "ifrk4") c.solver.integrator = dynamics::Integrator::kIFRK4;
      else if (v == "etd2") c.solver.integrator = dynamics::Integrator::kETD2;
      else throw ConfigError(k, "unknown integrator '" + v + "' (ifrk4, etd2)");
    });
    add("solver.dealias", [](RunConfig& c, SweepRange&, const K& k, const K& v) { c.solver.dealias = parse_bool(k, v); });
    add("solver.adapt", [](RunConfig& c, SweepRange&, const K& k, const K& v) { c.solver.adapt.enabled = parse_bool(k, v); });
    add("solver.safety", [](RunConfig& c, SweepRange&, const K& k, const K& v) { c.solver.adapt.safety = parse_double(k, v); });
    add("solver.growth_cap", [](RunConfig& c, SweepRange&, const K& k, const K& v) { c.solver.adapt.growth_cap = parse_double(k, v); });
    add("solver.dt_min", [](RunConfig& c, SweepRange&, const K& k, const K& v) { c.solver.adapt.dt_min = parse_double(k, v); });
    add("solver.delta_target", [](RunConfig& c, SweepRange&, const K& k, const K& v) { c.solver.adapt.delta_target = parse_double(k, v); });
    add("solver.norm_blowup", [](RunConfig& c, SweepRange&, const K& k, const K& v) { c.solver.thresholds.norm_blowup = parse_double(k, v); });
    add("solver.gradient_blowup", [](RunConfig& c, SweepRange&, const K& k, const K& v) { c.solver.thresholds.gradient_blowup = parse_double(k, v); });
    add("solver.sample_interval", [](RunConfig& c, SweepRange&, const K& k, const K& v) { c.solver.sample_interval = parse_double(k, v); });
    add("solver.max_steps", [](RunConfig& c, SweepRange&, const K& k, const K& v) {
      const long long n = parse_integer(k, v);
      if (n <= 0) throw ConfigError(k, "must be > 0");
      c.solver.max_steps = static_cast<std::size_t>(n);
    });
    add("diagnostics.s", [](RunConfig& c, SweepRange&, const K& k, const K& v) { c.solver.s = parse_double(k, v); });
    add("diagnostics.snapshot_stride", [](RunConfig& c, SweepRange&, const K& k, const K& v) { c.snapshot_stride = static_cast<int>(parse_integer(k, v)); });
    add("conditions.frakC", [](RunConfig& c, SweepRange&, const K& k, const K& v) { c.frakC = parse_double(k, v); });
    add("conditions.m_star", [](RunConfig& c, SweepRange&, const K& k, const K& v) { c.m_star = parse_double(k, v); });
    add("picard.T", [](RunConfig& c, SweepRange&, const K& k, const K& v) { c.picard.T = parse_double(k, v); });
    add("picard.slices", [](RunConfig& c, SweepRange&, const K& k, const K& v) { c.picard.slices = static_cast<int>(parse_integer(k, v)); });
    add("picard.iterations", [](RunConfig& c, SweepRange&, const K& k, const K& v) { c.picard.iterations = static_cast<int>(parse_integer(k, v)); });
    add("picard.horizons", [](RunConfig& c, SweepRange&, const K& k, const K& v) { c.picard_horizons = parse_list(k, v); });
    add("oracle.kind", [](RunConfig& c, SweepRange&, const K& k, const K& v) {
      if (v == "cole_hopf") c.oracle_kind = RunConfig::OracleKind::kColeHopf;
      else if (v == "heat_mode") c.oracle_kind = RunConfig::OracleKind::kHeatMode;
      else throw ConfigError(k, "unknown oracle '" + v + "' (cole_hopf, heat_mode)");
    });
    add("oracle.tolerance", [](RunConfig& c, SweepRange&, const K& k, const K& v) { c.oracle_tolerance = parse_double(k, v); });
    add("output.dir", [](RunConfig& c, SweepRange&, const K&, const K& v) { c.output_dir = v; });
    add("seed", [](RunConfig& c, SweepRange&, const K& k, const K& v) {
      std::uint64_t s = 0;
      const char* end = v.data() + v.size();
      const auto [ptr, ec] = std::from_chars(v.data(), end, s);
      if (ec != std::errc() || ptr != end) throw ConfigError(k, "expected an unsigned 64-bit integer");
      c.seed = s;
    });
    add("sweep.parameter", [](RunConfig& c, SweepRange&, const K& k, const K& v) {
      if (v == "A") c.sweep.parameter = SweepSpec::Parameter::kAmplitude;
      else if (v == "kappa") c.sweep.parameter = SweepSpec::Parameter::kKappa;
      else if (v == "a") c.sweep.parameter = SweepSpec::Parameter::kCoefficientAmplitude;
      else throw ConfigError(k, "unknown sweep parameter '" + v + "' (A, kappa, a)");
    });
    add("sweep.values", [](RunConfig& c, SweepRange&, const K& k, const K& v) { c.sweep.values = parse_list(k, v); });
    add("sweep.min", [](RunConfig&, SweepRange& r, const K& k, const K& v) { r.min = parse_double(k, v); r.has_min = true; });
    add("sweep.max", [](RunConfig&, SweepRange& r, const K& k, const K& v) { r.max = parse_double(k, v); r.has_max = true; });
    add("sweep.count", [](RunConfig&, SweepRange& r, const K& k, const K& v) { r.count = parse_integer(k, v); r.has_count = true; });
    add("sweep.workers", [](RunConfig& c, SweepRange&, const K& k, const K& v) { c.sweep.workers = static_cast<int>(parse_integer(k, v)); });
    return t;
  }();
  return table;
}

void validate(const RunConfig& c) {
  auto require = [](bool ok, const char* key, const std::string& msg) {
    if (!ok) throw ConfigError(key, msg);
  };
  require(c.dimension >= 1 && c.dimension <= 3, "grid.n", "dimension must be 1, 2 or 3");
  require(c.points >= 8 && c.points % 2 == 0, "grid.N", "points per axis must be even and >= 8");
  require(c.half_length > 0.0, "grid.L", "half length must be > 0");
  require(c.kappa > 0.0 && c.kappa < 1.0, "weight.kappa", "kappa must lie in (0,1)");
  if (c.coefficient_kind == RunConfig::CoefficientKind::kQuadraticGaussian) {
    require(c.coefficient_a > 0.0, "coefficient.a", "amplitude must be > 0");
    require(c.coefficient_sigma > 0.0, "coefficient.sigma", "width must be > 0");
    try {
      setup::axis_factors(c.coefficient(), c.grid());
    } catch (const std::invalid_argument& e) {
      throw ConfigError("coefficient.sigma", e.what());
    }
  }
  if (c.initial.kind == setup::InitialDataSpec::Kind::kCosine) {
    try {
      setup::build_initial_data(c.initial, c.grid());
    } catch (const std::invalid_argument& e) {
      throw ConfigError("initial.frequency", e.what());
    }
  }
  try {
    c.solver.validate(c.dimension);
  } catch (const std::invalid_argument& e) {
    const std::string what = e.what();
    throw ConfigError(what.substr(0, what.find(' ')), what);
  }
  require(c.snapshot_stride >= 0, "diagnostics.snapshot_stride", "stride must be >= 0");
  require(c.frakC > 0.0, "conditions.frakC", "frakC must be > 0");
  require(c.m_star > 0.0, "conditions.m_star", "m_star must be > 0");
  require(c.picard.T > 0.0, "picard.T", "horizon must be > 0");
  require(c.picard.slices >= 8, "picard.slices", "need at least 8 slices");
  require(c.picard.iterations >= 3, "picard.iterations", "need at least 3 iterations");
  for (double T : c.picard_horizons) require(T > 0.0, "picard.horizons", "horizons must be > 0");
  require(c.oracle_tolerance > 0.0, "oracle.tolerance", "tolerance must be > 0");
  require(!c.output_dir.empty(), "output.dir", "output directory must not be empty");
  require(c.sweep.workers >= 1, "sweep.workers", "need at least one worker");
  for (double v : c.sweep.values) {
    switch (c.sweep.parameter) {
      case SweepSpec::Parameter::kKappa: require(v > 0.0 && v < 1.0, "sweep.values", "kappa values must lie in (0,1)"); break;
      case SweepSpec::Parameter::kCoefficientAmplitude: require(v > 0.0, "sweep.values", "coefficient amplitudes must be > 0"); break;
      default: break;
    }
  }
}

}  // namespace

ConfigError::ConfigError(std::string key, const std::string& message)
    : std::runtime_error(key + ": " + message), key_(std::move(key)) {}

spectral::GridSpec RunConfig::grid() const { return spectral::GridSpec(dimension, points, half_length); }

setup::CoefficientSpec RunConfig::coefficient() const {
  switch (coefficient_kind) {
    case CoefficientKind::kZero: return setup::CoefficientSpec::zero();
    case CoefficientKind::kOne: return setup::CoefficientSpec::one();
    case CoefficientKind::kQuadraticGaussian: break;
  }
  return setup::CoefficientSpec::builtin(dimension, coefficient_a, coefficient_sigma);
}

setup::WeightSpec RunConfig::weight() const { return setup::WeightSpec(kappa); }

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& [key, setter] : registry()) k.push_back(key);
    return k;
  }();
  return keys;
}

std::string to_string(SweepSpec::Parameter parameter) {
  switch (parameter) {
    case SweepSpec::Parameter::kAmplitude: return "A";
    case SweepSpec::Parameter::kKappa: return "kappa";
    case SweepSpec::Parameter::kCoefficientAmplitude: return "a";
    case SweepSpec::Parameter::kNone: break;
  }
  return "none";
}

RunConfig parse_config(std::istream& in) {
  std::map<std::string, const Setter*> setters;
  for (const auto& [key, setter] : registry()) setters[key] = &setter;

  RunConfig config;
  SweepRange range;
  std::set<std::string> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no), "expected 'key = value', got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto it = setters.find(key);
    if (it == setters.end()) throw ConfigError(key, "unknown key");
    if (!seen.insert(key).second) throw ConfigError(key, "key given twice");
    if (value.empty()) throw ConfigError(key, "missing value");
    (*it->second)(config, range, key, value);
  }

  if (range.has_min || range.has_max || range.has_count) {
    if (!config.sweep.values.empty()) throw ConfigError("sweep.values", "give either a value list or min/max/count");
    if (!(range.has_min && range.has_max && range.has_count)) {
      throw ConfigError("sweep.count", "sweep range needs sweep.min, sweep.max and sweep.count");
    }
    if (range.count < 1) throw ConfigError("sweep.count", "count must be >= 1");
    if (!(range.max >= range.min)) throw ConfigError("sweep.max", "max must be >= min");
    for (long long i = 0; i < range.count; ++i) {
      const double f = range.count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(range.count - 1);
      config.sweep.values.push_back(range.min + f * (range.max - range.min));
    }
  }
  config.picard.s = config.solver.s;
  config.picard.dealias = config.solver.dealias;
  validate(config);
  return config;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("--config", "cannot read '" + path.string() + "'");
  return parse_config(in);
}

}  // namespace vlab::app
