#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fundsol/finite_difference.hpp"
#include "fundsol/fundamental_solutions.hpp"
#include "fundsol/series.hpp"

namespace fundsol::cli {

enum class ExitCode : int { ok = 0, usage = 1, non_convergent = 2, verification_failed = 3 };

enum class OutputFormat { csv, json };

struct RunConfig {
  SingularParams params{0.25, 0.25, 0.25};
  Pole pole{1.0, 1.0, 1.0};
  NormalizationConstants constants;
  SeriesControl series;
  bool series_set = false;  // any of the tolerance keys was given
  FDConfig fd;
  std::optional<OutputFormat> format;
  bool timestamp = true;
  std::uint64_t seed = 20240611;
  unsigned workers = 0;

  void validate() const;
};

struct GridAxis {
  double min = 0.5;
  double max = 2.0;
  int count = 11;

  double step() const { return count > 1 ? (max - min) / (count - 1) : 0.0; }
  double at(int i) const { return count > 1 ? min + i * step() : min; }
};

struct GridSpec {
  std::array<GridAxis, 3> axes;
  double exclusion = 0.0;

  void validate() const;
};

/// A grid point is excluded when it lies within the exclusion radius of the
/// pole, or when the pole falls in its cell [x_i, x_i + step) on every axis.
bool grid_point_excluded(const GridSpec& g, const Pole& pole, const std::array<int, 3>& idx);

std::array<double, 3> parse_triple(const std::string& text);
std::vector<double> parse_list(const std::string& text);
GridAxis parse_axis(const std::string& text);

/// Applies `key = value` lines to cfg. Blank lines and '#' comments are skipped;
/// unknown keys throw domain_error.
void apply_config_text(const std::string& text, RunConfig& cfg);
void apply_config_file(const std::string& path, RunConfig& cfg);

std::string format_double(double v);
std::string csv_field(const std::string& s);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fundsol::cli
