#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "insdel/types.hpp"

namespace insdel {

/// One bound evaluated on a rectangular (gamma, delta) grid.
///
/// values is row-major with delta as the outer index:
/// values[i * gamma_axis.size() + j] belongs to (gamma_axis[j], delta_axis[i]).
struct SurfaceGrid {
  AlphabetSize q{2};
  BoundSource source = BoundSource::CombinedOuter;
  std::vector<double> gamma_axis;
  std::vector<double> delta_axis;
  std::vector<BoundValue> values;

  const BoundValue& at(std::size_t delta_index, std::size_t gamma_index) const {
    return values.at(delta_index * gamma_axis.size() + gamma_index);
  }
};

enum class SurfaceFormat { Csv, Json };

SurfaceFormat parse_surface_format(std::string_view name);
std::string_view to_string(SurfaceFormat format);

inline constexpr int kDefaultResolution = 200;

/// `resolution` evenly spaced samples with both endpoints.
std::vector<double> linspace(double lo, double hi, int resolution);

/// Grid over gamma in [0, q-1] and delta in [0, 1 - 1/q]; `threads` = 0 picks
/// the hardware concurrency. The result does not depend on the thread count.
SurfaceGrid evaluate_surface(AlphabetSize q, BoundSource source, int resolution, unsigned threads = 0);

/// Header `gamma,delta,rate,feasible,source`; numbers with 12 significant digits.
void write_csv(std::ostream& out, const SurfaceGrid& grid);
/// {q, bound, gamma_axis, delta_axis, values: [{gamma, delta, rate, feasible, source}]}
void write_json(std::ostream& out, const SurfaceGrid& grid);

/// Inverse of write_csv. The axes are recovered from the row order; the
/// per-row source column names the bound that won each cell, so the grid's
/// own source is passed in.
SurfaceGrid read_csv(std::istream& in, AlphabetSize q, BoundSource source);
SurfaceGrid read_json(std::istream& in);

/// evaluate_surface, then writes the grid to `path` ("-" for stdout).
SurfaceGrid emit_surface(AlphabetSize q, BoundSource source, int resolution, SurfaceFormat format,
                         const std::filesystem::path& path);

/// Rounds to the 12 significant digits used in the text formats.
double round_to_print_precision(double x);

}  // namespace insdel
