#include "entorder/sampler.hpp"

#include <algorithm>
#include <sstream>

#include "entorder/errors.hpp"
#include "entorder/measures.hpp"
#include "entorder/ordering.hpp"

namespace entorder {

namespace {

constexpr double kBandTolerance = 1e-9;
constexpr double kEntangledThreshold = 1e-9;

bool inside_band(const MeasureSet& ms) {
  return ms.negativity >= lower_bound_negativity(ms.concurrence) - kBandTolerance &&
         ms.negativity <= ms.concurrence + kBandTolerance;
}

}  // namespace

PureState random_pure(Xoshiro256pp& rng) {
  CVec4 c;
  for (Complex& a : c) a = rng.standard_complex_normal();
  return PureState::from_amplitudes(c);
}

DensityMatrix random_density(Xoshiro256pp& rng, int rank) {
  if (rank < 1 || rank > 4) {
    std::ostringstream os;
    os << "rank must lie in [1, 4], got " << rank;
    throw ParamOutOfRange(os.str());
  }
  Complex g[4][4] = {};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < rank; ++c) g[r][c] = rng.standard_complex_normal();
  }
  // Upper triangle plus mirror keeps the result exactly Hermitian.
  CMat4 m;
  for (int r = 0; r < 4; ++r) {
    for (int c = r; c < 4; ++c) {
      Complex sum = 0.0;
      for (int k = 0; k < rank; ++k) sum += g[r][k] * std::conj(g[c][k]);
      if (c == r) {
        m(r, r) = sum.real();
      } else {
        m(r, c) = sum;
        m(c, r) = std::conj(sum);
      }
    }
  }
  const double tr = trace(m).real();
  return DensityMatrix((1.0 / tr) * m);
}

SampleReport sample_pairs(const SamplerConfig& config) {
  if (config.pair_count <= 0) {
    throw ParamOutOfRange("pair_count must be positive");
  }
  Xoshiro256pp rng(config.seed);
  SampleReport report{};
  int violations = 0;
  for (int i = 0; i < config.pair_count; ++i) {
    const DensityMatrix rho1 = random_density(rng, config.rank);
    const DensityMatrix rho2 = random_density(rng, config.rank);
    const MeasureSet m1 = measure_all(rho1);
    const MeasureSet m2 = measure_all(rho2);
    if (!inside_band(m1)) ++report.band_violations;
    if (!inside_band(m2)) ++report.band_violations;
    if (m1.concurrence > kEntangledThreshold &&
        m2.concurrence > kEntangledThreshold) {
      ++report.pairs_tested;
      const PairComparison pc = compare_measures(
          m1.concurrence, m1.negativity, m2.concurrence, m2.negativity);
      if (pc.verdict == Verdict::order_violation) ++violations;
      report.max_delta_observed = std::max(report.max_delta_observed, pc.delta);
    }
  }
  report.violation_fraction =
      report.pairs_tested > 0
          ? static_cast<double>(violations) / report.pairs_tested
          : 0.0;
  return report;
}

}  // namespace entorder
