#include "entorder/cli/commands.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "entorder/cli/format.hpp"
#include "entorder/errors.hpp"
#include "entorder/measures.hpp"
#include "entorder/ordering.hpp"

namespace entorder::cli {

namespace {

using nlohmann::ordered_json;

// i-th of n grid points on [lo, hi], with exact endpoints.
double grid_point(double lo, double hi, int n, int i) {
  if (i == 0) return lo;
  if (i == n - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / (n - 1);
}

void emit_measure_columns(std::ostream& out, const MeasureSet& ms) {
  out << format_real(ms.concurrence) << ',' << format_real(ms.negativity)
      << ',' << format_real(ms.eof) << ',' << format_real(ms.log_negativity);
}

ordered_json measure_json(const MeasureSet& ms) {
  ordered_json j;
  j["concurrence"] = ms.concurrence;
  j["negativity"] = ms.negativity;
  j["log_negativity"] = ms.log_negativity;
  j["eof"] = ms.eof;
  return j;
}

// Resolved sweep axis: a parameter name with its grid.
struct Axis {
  std::string name;
  std::vector<double> points;
};

Axis resolve_axis(const ParamRange& declared, const std::optional<Range>& user,
                  int steps) {
  Range r{declared.lo, declared.hi};
  if (user) {
    r = *user;
    if (!(r.lo <= r.hi)) {
      throw ParamOutOfRange("range for " + declared.name +
                            " has lo greater than hi");
    }
    if (r.lo < declared.lo - 1e-12 || r.hi > declared.hi + 1e-12) {
      std::ostringstream os;
      os << declared.name << " range [" << r.lo << ", " << r.hi
         << "] exceeds the documented bounds [" << declared.lo << ", "
         << declared.hi << "]";
      throw ParamOutOfRange(os.str());
    }
  }
  Axis axis{declared.name, {}};
  if (r.lo == r.hi) {
    axis.points.push_back(r.lo);
    return axis;
  }
  for (int i = 0; i < steps; ++i) {
    axis.points.push_back(grid_point(r.lo, r.hi, steps, i));
  }
  return axis;
}

const std::optional<Range>& option_for(const ScanOptions& options,
                                       const std::string& name) {
  static const std::optional<Range> none;
  if (name == "p") return options.p;
  if (name == "q") return options.q;
  return none;
}

void require_resolution(int resolution) {
  if (resolution < 2) {
    throw ParamOutOfRange("resolution must be at least 2");
  }
}

void emit_figure_sweep_header(std::ostream& out, const char* params) {
  out << params << ",concurrence,negativity,eof,log_negativity\n";
}

}  // namespace

int cmd_measure(const DensityMatrix& state, std::ostream& out) {
  out << measure_json(measure_all(state)).dump(2) << "\n";
  return 0;
}

int cmd_compare(const DensityMatrix& a, const DensityMatrix& b,
                std::ostream& out) {
  const PairComparison pc = compare(a, b);
  ordered_json j;
  j["delta_c"] = pc.delta_c;
  j["delta_n"] = pc.delta_n;
  j["delta"] = pc.delta;
  j["verdict"] = std::string(verdict_name(pc.verdict));
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_scan(const ScanOptions& options, std::ostream& out) {
  if (options.steps < 2) {
    throw ParamOutOfRange("steps must be at least 2");
  }
  const std::vector<ParamRange> declared = family_params(options.family);
  if (declared.size() < 2 && options.q && declared[0].name != "q") {
    throw ParamOutOfRange("family " + std::string(family_name(options.family)) +
                          " has no parameter 'q'");
  }
  if (declared[0].name == "q" && options.p) {
    throw ParamOutOfRange("family " + std::string(family_name(options.family)) +
                          " has no parameter 'p'");
  }

  std::vector<Axis> axes;
  for (const ParamRange& pr : declared) {
    axes.push_back(resolve_axis(pr, option_for(options, pr.name), options.steps));
  }

  for (size_t i = 0; i < axes.size(); ++i) {
    out << axes[i].name << (i + 1 < axes.size() ? "," : "");
  }
  out << ",concurrence,negativity,eof,log_negativity\n";

  std::vector<size_t> index(axes.size(), 0);
  bool done = false;
  while (!done) {
    FamilySpec spec{options.family, {}};
    for (size_t a = 0; a < axes.size(); ++a) {
      spec.params[axes[a].name] = axes[a].points[index[a]];
    }
    const MeasureSet ms = measure_all(make_state(spec));
    for (size_t a = 0; a < axes.size(); ++a) {
      out << format_real(axes[a].points[index[a]]) << ',';
    }
    emit_measure_columns(out, ms);
    out << "\n";

    done = true;  // odometer, last parameter fastest
    for (size_t a = axes.size(); a-- > 0;) {
      if (++index[a] < axes[a].points.size()) {
        done = false;
        break;
      }
      index[a] = 0;
    }
  }
  return 0;
}

namespace {

void figure_band(int resolution, std::ostream& out) {
  out << "series,c,n\n";
  for (int i = 0; i < resolution; ++i) {
    const double c = grid_point(0.0, 1.0, resolution, i);
    out << "maxneg_boundary," << format_real(c) << ',' << format_real(c)
        << "\n";
  }
  for (int i = 0; i < resolution; ++i) {
    const double c = grid_point(0.0, 1.0, resolution, i);
    out << "minneg_boundary," << format_real(c) << ','
        << format_real(lower_bound_negativity(c)) << "\n";
  }
  const double sqrt2 = std::sqrt(2.0);
  const struct {
    const char* label;
    DensityMatrix state;
  } points[] = {
      {"X", horodecki(0.5)},
      {"Y", werner(sqrt2 / 3.0)},
      {"Z", werner(2.0 / 3.0)},
      {"V", werner(1.0 / 3.0 + sqrt2 / 6.0)},
      {"origin", werner(0.0)},
      {"unit", werner(1.0)},
  };
  for (const auto& pt : points) {
    const MeasureSet ms = measure_all(pt.state);
    out << pt.label << ',' << format_real(ms.concurrence) << ','
        << format_real(ms.negativity) << "\n";
  }
}

void figure_delta(int resolution, std::ostream& out) {
  const auto grid = delta_grid(resolution, resolution);
  out << "c1,c2,delta\n";
  for (int i = 0; i < resolution; ++i) {
    const double c1 = grid_point(0.0, 1.0, resolution, i);
    for (int j = 0; j < resolution; ++j) {
      const double c2 = grid_point(0.0, 1.0, resolution, j);
      out << format_real(c1) << ',' << format_real(c2) << ','
          << format_real(grid[i][j]) << "\n";
    }
  }
}

void figure_const_negativity(const FigureOptions& options, std::ostream& out) {
  std::vector<double> targets;
  if (options.nprime) {
    if (!(*options.nprime > 0.0 && *options.nprime < 1.0)) {
      throw ParamOutOfRange("nprime must lie strictly inside (0, 1)");
    }
    targets.push_back(*options.nprime);
  } else {
    for (int i = 1; i <= 9; ++i) targets.push_back(i / 10.0);
  }
  emit_figure_sweep_header(out, "nprime,p");
  for (const double n : targets) {
    const double hi = std::sqrt(2.0 * n * (n + 1.0)) - n;
    for (int i = 0; i < options.resolution; ++i) {
      const double p = grid_point(n, hi, options.resolution, i);
      const MeasureSet ms = measure_all(mixture(p, q_prime(n, p)));
      out << format_real(n) << ',' << format_real(p) << ',';
      emit_measure_columns(out, ms);
      out << "\n";
    }
  }
}

void figure_const_concurrence(const FigureOptions& options, std::ostream& out) {
  emit_figure_sweep_header(out, "p,q");
  for (int k = 1; k <= 9; ++k) {
    const double p = k / 10.0;
    for (int i = 0; i < options.resolution; ++i) {
      const double q = grid_point(0.0, 1.0, options.resolution, i);
      const MeasureSet ms = measure_all(mixture(p, q));
      out << format_real(p) << ',' << format_real(q) << ',';
      emit_measure_columns(out, ms);
      out << "\n";
    }
  }
}

void figure_const_sum(const FigureOptions& options, std::ostream& out) {
  std::vector<std::pair<double, double>> refs;  // (cref, nref)
  if (options.cref) {
    const double c = *options.cref;
    if (!(c > 0.0 && c < 1.0)) {
      throw ParamOutOfRange("cref must lie strictly inside (0, 1)");
    }
    const double n = options.nref ? *options.nref : lower_bound_negativity(c);
    if (n < lower_bound_negativity(c) - 1e-9 || n > c + 1e-9) {
      throw ParamOutOfRange("reference point lies outside the negativity band");
    }
    refs.emplace_back(c, n);
  } else {
    if (options.nref) {
      throw ParamOutOfRange("nref requires cref");
    }
    for (int i = 1; i <= 9; ++i) {
      const double c = i / 10.0;
      refs.emplace_back(c, lower_bound_negativity(c));
    }
  }
  emit_figure_sweep_header(out, "cref,nref,p");
  for (const auto& [c, n] : refs) {
    const double lo = 0.5 * (c + n);
    for (int i = 0; i < options.resolution; ++i) {
      const double p = grid_point(lo, c, options.resolution, i);
      const MeasureSet ms = measure_all(mixture(p, q_triple_prime(n, c, p)));
      out << format_real(c) << ',' << format_real(n) << ',' << format_real(p)
          << ',';
      emit_measure_columns(out, ms);
      out << "\n";
    }
  }
}

}  // namespace

int cmd_figure(const FigureOptions& options, std::ostream& out) {
  require_resolution(options.resolution);
  if (options.which == "1") {
    figure_band(options.resolution, out);
  } else if (options.which == "2") {
    figure_delta(options.resolution, out);
  } else if (options.which == "3a") {
    figure_const_negativity(options, out);
  } else if (options.which == "3b") {
    figure_const_concurrence(options, out);
  } else if (options.which == "3c") {
    figure_const_sum(options, out);
  } else {
    throw ParamOutOfRange("unknown figure selector: " + options.which +
                          " (expected 1, 2, 3a, 3b, or 3c)");
  }
  return 0;
}

int cmd_extremal(int grid_steps, std::ostream& out) {
  const ExtremalGaps gaps = extremal_gaps();
  const BoundarySearch search = numeric_extremal_search(grid_steps);

  const PairComparison dc =
      compare(gaps.dc_witness.state_1, gaps.dc_witness.state_2);
  const PairComparison dn =
      compare(gaps.dn_witness.state_1, gaps.dn_witness.state_2);
  const PairComparison dd =
      compare(gaps.delta_witness.state_1, gaps.delta_witness.state_2);
  const double witness_dc = std::abs(dc.delta_c);
  const double witness_dn = std::abs(dn.delta_n);
  const double witness_delta = dd.delta;

  const bool witness_ok = std::abs(witness_dc - gaps.max_dc) <= 1e-9 &&
                          std::abs(witness_dn - gaps.max_dn) <= 1e-9 &&
                          std::abs(witness_delta - gaps.max_delta) <= 1e-9;
  const bool numeric_ok =
      std::abs(search.max_dc.value - gaps.max_dc) <= 1e-6 &&
      std::abs(search.max_dn.value - gaps.max_dn) <= 1e-6 &&
      std::abs(search.max_delta.value - gaps.max_delta) <= 1e-6;
  const bool pass = witness_ok && numeric_ok;

  ordered_json j;
  j["closed_form"] = {{"max_dc", gaps.max_dc},
                      {"max_dn", gaps.max_dn},
                      {"max_delta", gaps.max_delta}};
  j["witness"] = {
      {"max_dc",
       {{"pair", {gaps.dc_witness.label_1, gaps.dc_witness.label_2}},
        {"value", witness_dc}}},
      {"max_dn",
       {{"pair", {gaps.dn_witness.label_1, gaps.dn_witness.label_2}},
        {"value", witness_dn}}},
      {"max_delta",
       {{"pair", {gaps.delta_witness.label_1, gaps.delta_witness.label_2}},
        {"value", witness_delta}}},
  };
  j["numeric"] = {
      {"max_dc",
       {{"value", search.max_dc.value},
        {"c1", search.max_dc.c1},
        {"c2", search.max_dc.c2}}},
      {"max_dn",
       {{"value", search.max_dn.value},
        {"c1", search.max_dn.c1},
        {"c2", search.max_dn.c2}}},
      {"max_delta",
       {{"value", search.max_delta.value},
        {"c1", search.max_delta.c1},
        {"c2", search.max_delta.c2}}},
  };
  j["pass"] = pass;
  out << j.dump(2) << "\n";
  return pass ? 0 : 5;
}

int cmd_sample(const SamplerConfig& config, std::ostream& out) {
  const SampleReport report = sample_pairs(config);
  ordered_json j;
  j["seed"] = config.seed;
  j["rank"] = config.rank;
  j["pair_count"] = config.pair_count;
  j["ensemble"] = "ginibre";
  j["pairs_tested"] = report.pairs_tested;
  j["violation_fraction"] = report.violation_fraction;
  j["max_delta_observed"] = report.max_delta_observed;
  j["band_violations"] = report.band_violations;
  out << j.dump(2) << "\n";
  return report.band_violations == 0 ? 0 : 5;
}

}  // namespace entorder::cli
