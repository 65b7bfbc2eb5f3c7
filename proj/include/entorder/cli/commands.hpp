#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "entorder/sampler.hpp"
#include "entorder/states.hpp"

namespace entorder::cli {

// An inclusive parameter interval; a pinned parameter has lo == hi.
struct Range {
  double lo;
  double hi;
};

struct ScanOptions {
  Family family;
  std::optional<Range> p;
  std::optional<Range> q;
  int steps = 101;
};

struct FigureOptions {
  std::string which;  // "1", "2", "3a", "3b", or "3c"
  int resolution = 101;
  std::optional<double> nprime;  // figure 3a: single target negativity
  std::optional<double> cref;    // figure 3c: reference concurrence
  std::optional<double> nref;    // figure 3c: reference negativity
};

// Each command writes its full output to `out` and returns the process exit
// code.  Errors surface as exceptions; the main dispatcher maps them to the
// documented codes.
int cmd_measure(const DensityMatrix& state, std::ostream& out);
int cmd_compare(const DensityMatrix& a, const DensityMatrix& b,
                std::ostream& out);
int cmd_scan(const ScanOptions& options, std::ostream& out);
int cmd_figure(const FigureOptions& options, std::ostream& out);
int cmd_extremal(int grid_steps, std::ostream& out);
int cmd_sample(const SamplerConfig& config, std::ostream& out);

}  // namespace entorder::cli
