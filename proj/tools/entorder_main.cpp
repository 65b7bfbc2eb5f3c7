#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "entorder/cli/commands.hpp"
#include "entorder/cli/document.hpp"
#include "entorder/errors.hpp"

namespace {

using entorder::cli::Range;

// "LO:HI" or a single pinned value.
Range parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    size_t used = 0;
    if (colon == std::string::npos) {
      const double v = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string lo_text = text.substr(0, colon);
    const std::string hi_text = text.substr(colon + 1);
    const double lo = std::stod(lo_text, &used);
    if (used != lo_text.size()) throw std::invalid_argument(text);
    const double hi = std::stod(hi_text, &used);
    if (used != hi_text.size()) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::exception&) {
    throw entorder::ParamOutOfRange("cannot parse range '" + text +
                                    "' (expected VALUE or LO:HI)");
  }
}

entorder::DensityMatrix resolve_state(const std::optional<std::string>& path,
                                      const std::optional<std::string>& family,
                                      const std::optional<double>& p,
                                      const std::optional<double>& q) {
  if (path.has_value() == family.has_value()) {
    throw entorder::ParamOutOfRange(
        "provide exactly one of --state or --family");
  }
  if (path) {
    if (p || q) {
      throw entorder::ParamOutOfRange(
          "--p/--q are only valid together with --family");
    }
    return entorder::cli::load_state_file(*path);
  }
  entorder::FamilySpec spec{entorder::family_from_name(*family), {}};
  if (p) spec.params["p"] = *p;
  if (q) spec.params["q"] = *q;
  return entorder::make_state(spec);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit entanglement measures and ordering analysis"};
  app.require_subcommand(1);

  // measure
  auto* measure = app.add_subcommand(
      "measure", "Print the four entanglement measures of one state as JSON");
  std::optional<std::string> measure_state, measure_family;
  std::optional<double> measure_p, measure_q;
  measure->add_option("--state", measure_state,
                      "State-document file ('-' reads standard input)");
  measure->add_option("--family", measure_family, "Named state family");
  measure->add_option("--p", measure_p, "Family parameter p");
  measure->add_option("--q", measure_q, "Family parameter q");

  // compare
  auto* compare = app.add_subcommand(
      "compare", "Compare two states by concurrence and negativity");
  std::string compare_a, compare_b;
  compare->add_option("a", compare_a, "First state-document file")->required();
  compare->add_option("b", compare_b, "Second state-document file")->required();

  // scan
  auto* scan = app.add_subcommand(
      "scan", "Sweep a family's parameters and print measures as CSV");
  std::string scan_family;
  std::optional<std::string> scan_p, scan_q;
  int scan_steps = 101;
  scan->add_option("--family", scan_family, "Named state family")->required();
  scan->add_option("--p", scan_p, "p range as LO:HI, or a single value");
  scan->add_option("--q", scan_q, "q range as LO:HI, or a single value");
  scan->add_option("--steps", scan_steps,
                   "Grid points per swept parameter, endpoints included");

  // figure
  auto* figure = app.add_subcommand(
      "figure", "Print plot-ready CSV data for one of the figures");
  entorder::cli::FigureOptions figure_options;
  figure->add_option("which", figure_options.which,
                     "Figure selector: 1, 2, 3a, 3b, or 3c")
      ->required();
  figure->add_option("--resolution", figure_options.resolution,
                     "Points per curve or grid axis");
  figure->add_option("--nprime", figure_options.nprime,
                     "Figure 3a: sweep only this target negativity");
  figure->add_option("--cref", figure_options.cref,
                     "Figure 3c: reference concurrence");
  figure->add_option("--nref", figure_options.nref,
                     "Figure 3c: reference negativity (default: band minimum)");

  // extremal
  auto* extremal = app.add_subcommand(
      "extremal",
      "Verify the maximal measure gaps three independent ways (JSON report)");
  int extremal_steps = 1000;
  extremal->add_option("--steps", extremal_steps,
                       "Grid resolution of the numeric boundary search");

  // sample
  auto* sample = app.add_subcommand(
      "sample", "Monte Carlo pair sampling for ordering violations (JSON)");
  entorder::SamplerConfig sampler_config;
  std::uint64_t sample_seed = 0;
  int sample_rank = 4;
  int sample_pairs = 0;
  sample->add_option("--seed", sample_seed, "Random seed");
  sample->add_option("--rank", sample_rank, "Ginibre factor rank, 1 to 4");
  sample->add_option("--pairs", sample_pairs, "Number of state pairs")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 4;
  }

  try {
    if (measure->parsed()) {
      return entorder::cli::cmd_measure(
          resolve_state(measure_state, measure_family, measure_p, measure_q),
          std::cout);
    }
    if (compare->parsed()) {
      return entorder::cli::cmd_compare(entorder::cli::load_state_file(compare_a),
                                        entorder::cli::load_state_file(compare_b),
                                        std::cout);
    }
    if (scan->parsed()) {
      entorder::cli::ScanOptions options;
      options.family = entorder::family_from_name(scan_family);
      if (scan_p) options.p = parse_range(*scan_p);
      if (scan_q) options.q = parse_range(*scan_q);
      options.steps = scan_steps;
      return entorder::cli::cmd_scan(options, std::cout);
    }
    if (figure->parsed()) {
      return entorder::cli::cmd_figure(figure_options, std::cout);
    }
    if (extremal->parsed()) {
      return entorder::cli::cmd_extremal(extremal_steps, std::cout);
    }
    if (sample->parsed()) {
      sampler_config.seed = sample_seed;
      sampler_config.rank = sample_rank;
      sampler_config.pair_count = sample_pairs;
      return entorder::cli::cmd_sample(sampler_config, std::cout);
    }
  } catch (const entorder::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const entorder::ValidationError& e) {
    std::cerr << "error: invalid state (" << e.invariant() << "): " << e.what()
              << "\n";
    return 3;
  } catch (const entorder::ParamOutOfRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const entorder::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
