#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "entorder/measures.hpp"

namespace entorder {

// Outcome of comparing two states by concurrence and negativity together.
enum class Verdict {
  same_order,       // both measures agree on which state is more entangled
  order_violation,  // the measures rank the pair oppositely
  equal_c_diff_n,   // same concurrence, different negativity
  equal_n_diff_c,   // same negativity, different concurrence
  equal_both,
};

std::string_view verdict_name(Verdict v);

struct PairComparison {
  double delta_c;  // c1 - c2
  double delta_n;  // n1 - n2
  double delta;    // -min(0, delta_c * delta_n), the violation magnitude
  Verdict verdict;
};

// Verdict and gaps from already-computed measures.  Equality tolerance is
// 1e-9 per measure (checked first); a violation requires the product to drop
// below -1e-12.
PairComparison compare_measures(double c1, double n1, double c2, double n2);

PairComparison compare(const DensityMatrix& rho1, const DensityMatrix& rho2);

// Minimum negativity attainable at concurrence c:
// sqrt((1-c)^2 + c^2) - (1-c).
double lower_bound_negativity(double c);

// A point of the negativity-versus-concurrence plane.
struct CNPoint {
  double c;
  double n;
};

// Verdict from plane coordinates alone.  Throws BandViolation when either
// point leaves lower_bound_negativity(c) - 1e-9 <= n <= c + 1e-9.
Verdict classify_region(const CNPoint& reference, const CNPoint& other);

// A named pair of states realizing an extremal gap.
struct WitnessPair {
  std::string label_1;
  std::string label_2;
  DensityMatrix state_1;
  DensityMatrix state_2;
};

// Closed-form maximal gaps between the two measures, with explicit witness
// pairs: max |delta_c| and max |delta_n| are both 1 - sqrt(2)/2, and the
// violation magnitude delta peaks at ((sqrt(2)-1)/2)^2 / 2.
struct ExtremalGaps {
  double max_dc;
  double max_dn;
  double max_delta;
  WitnessPair dc_witness;
  WitnessPair dn_witness;
  WitnessPair delta_witness;
};

ExtremalGaps extremal_gaps();

// One optimum of the boundary search with its argument pair: the first
// state has concurrence c1, the second c2, each taken on the boundary that
// makes the target quantity largest.
struct BoundaryOptimum {
  double value;
  double c1;
  double c2;
};

struct BoundarySearch {
  BoundaryOptimum max_dc;     // equal negativity, concurrences apart
  BoundaryOptimum max_dn;     // equal concurrence, negativities apart
  BoundaryOptimum max_delta;  // largest violation product
};

// Grid scan over boundary states followed by golden-section refinement.
// grid_steps >= 100 (throws ParamOutOfRange below that); with 1000 steps the
// optima agree with the closed forms to well under 1e-6.
BoundarySearch numeric_extremal_search(int grid_steps);

// delta for the pair (upper-boundary state at c1, lower-boundary state at
// c2) over an n1 x n2 grid of [0,1] x [0,1]; entry [i][j] sits at
// c1 = i/(n1-1), c2 = j/(n2-1).  Requires n1, n2 >= 2.
std::vector<std::vector<double>> delta_grid(int n1, int n2);

}  // namespace entorder
