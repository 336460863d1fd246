#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "vlab/dynamics/picard.hpp"
#include "vlab/dynamics/types.hpp"
#include "vlab/setup/coefficient.hpp"
#include "vlab/setup/initial_data.hpp"
#include "vlab/setup/weight.hpp"
#include "vlab/spectral/grid.hpp"

namespace vlab::app {

/// Bad configuration; `key` names the offending entry.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message);
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

struct SweepSpec {
  enum class Parameter { kNone, kAmplitude, kKappa, kCoefficientAmplitude };

  Parameter parameter = Parameter::kNone;
  std::vector<double> values;  ///< explicit list, or filled from min/max/count
  int workers = 1;
};

/// Everything a subcommand needs, parsed from the flat key = value format.
struct RunConfig {
  int dimension = 1;
  int points = 256;
  double half_length = 6.283185307179586;

  enum class CoefficientKind { kQuadraticGaussian, kZero, kOne };
  CoefficientKind coefficient_kind = CoefficientKind::kQuadraticGaussian;
  double coefficient_a = 1.0;
  double coefficient_sigma = 1.0;

  setup::InitialDataSpec initial{setup::InitialDataSpec::Kind::kGaussianSum, 1.0, 1.0};
  double kappa = 0.5;

  dynamics::SolverConfig solver;
  int snapshot_stride = 0;

  double frakC = 1e-4;
  double m_star = 1.0;

  dynamics::PicardOptions picard;
  std::vector<double> picard_horizons;

  enum class OracleKind { kColeHopf, kHeatMode };
  OracleKind oracle_kind = OracleKind::kColeHopf;
  double oracle_tolerance = 1e-4;

  std::filesystem::path output_dir = "out";
  std::uint64_t seed = 0;

  SweepSpec sweep;

  spectral::GridSpec grid() const;
  setup::CoefficientSpec coefficient() const;
  setup::WeightSpec weight() const;
};

/// Parses `key = value` lines; '#' starts a comment. Unknown keys, repeated
/// keys, malformed values and out-of-domain values raise ConfigError before
/// anything is computed.
RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::filesystem::path& path);

/// Every key the parser accepts, in documentation order.
const std::vector<std::string>& config_keys();

std::string to_string(SweepSpec::Parameter parameter);

}  // namespace vlab::app
