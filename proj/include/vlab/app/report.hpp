#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "vlab/dynamics/types.hpp"
#include "vlab/virial/functional.hpp"

namespace vlab::app {

/// Header of every series CSV.
inline constexpr const char* kSeriesHeader = "t,I,hs_norm,grad_sup,dt,tail_mass,A,B,I2,I3";

/// One CSV row: the trajectory record plus its virial breakdown.
struct SeriesRow {
  dynamics::TrajectoryRecord record;
  virial::VirialBreakdown terms;
};

/// Numbers are printed with 17 significant digits ("%.17g").
std::string format_number(double x);

void write_series_csv(std::ostream& out, const std::vector<SeriesRow>& rows,
                      const std::vector<std::string>& extra_columns = {},
                      const std::vector<std::vector<double>>& extra_values = {});

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  bool markers = false;  ///< draw points instead of a polyline
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_y = false;  ///< nonpositive values are dropped on a log axis
};

/// Minimal static SVG line plot with axes, ticks and a legend.
void write_svg_plot(std::ostream& out, const PlotSpec& spec, const std::vector<PlotSeries>& series);
void write_svg_plot(const std::filesystem::path& path, const PlotSpec& spec, const std::vector<PlotSeries>& series);

}  // namespace vlab::app
