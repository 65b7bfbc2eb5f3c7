#pragma once

#include <cstdint>

#include "entorder/rng.hpp"
#include "entorder/states.hpp"

namespace entorder {

struct SamplerConfig {
  std::uint64_t seed = 0;
  int rank = 4;  // columns of the Gaussian factor, 1 through 4
  int pair_count = 0;
};

struct SampleReport {
  int pairs_tested = 0;  // pairs where both states are entangled
  double violation_fraction = 0.0;
  double max_delta_observed = 0.0;
  int band_violations = 0;  // states outside the negativity band (none expected)
};

// Haar-distributed pure state: a normalized complex Gaussian 4-vector.
PureState random_pure(Xoshiro256pp& rng);

// G G^dagger / tr(G G^dagger) with G a 4 x rank complex Gaussian matrix,
// drawn row by row.  Rank 4 gives the Hilbert-Schmidt ensemble; lower ranks
// concentrate on rank-deficient states.
DensityMatrix random_density(Xoshiro256pp& rng, int rank);

// Draws pair_count independent state pairs from one sequential stream, keeps
// the pairs where both members are entangled (concurrence > 1e-9), and
// tallies ordering violations among them.  Every generated state is checked
// against the negativity band at 1e-9.
SampleReport sample_pairs(const SamplerConfig& config);

}  // namespace entorder
