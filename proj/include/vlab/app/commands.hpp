#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "vlab/app/config.hpp"
#include "vlab/app/report.hpp"
#include "vlab/dynamics/types.hpp"
#include "vlab/virial/riccati.hpp"

namespace vlab::app {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kInternal = 1;
inline constexpr int kConfig = 2;
inline constexpr int kBlowup = 10;
inline constexpr int kDtUnderflow = 11;
inline constexpr int kPositivity = 12;
inline constexpr int kConditions = 13;
inline constexpr int kProperty = 14;
}  // namespace exit_code

/// A finished trajectory with its virial diagnostics and Riccati comparison.
struct Simulation {
  dynamics::RunResult result;
  std::vector<SeriesRow> rows;
  virial::RiccatiParams riccati;  ///< c1, fitted c2_hat, I(0)
  std::optional<virial::ComparisonVerdict> comparison;
};

/// Runs evolve with the virial breakdown recorded at every accepted step.
/// Throws ConfigError when the grid cannot carry the virial quadrature.
Simulation simulate(const RunConfig& config);

int cmd_run(const RunConfig& config, std::ostream& out);
int cmd_check(const RunConfig& config, std::ostream& out);
int cmd_riccati(double c1, double c2, double I0, const std::vector<double>& times, std::ostream& out,
                std::ostream& err);
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_picard(const RunConfig& config, std::ostream& out);
int cmd_oracle(const RunConfig& config, std::ostream& out);

}  // namespace vlab::app
