#pragma once

#include <array>

#include "entorder/states.hpp"

namespace entorder {

// The four entanglement measures of one state.
struct MeasureSet {
  double concurrence;
  double negativity;
  double log_negativity;
  double eof;
};

// Square roots of the eigenvalues of rho * spin_flip(rho), descending.
// Evaluated on the Hermitian similarity sqrt(rho) * spin_flip(rho) * sqrt(rho)
// so a symmetric eigensolver suffices.
std::array<double, 4> concurrence_lambdas(const DensityMatrix& rho);

// max{0, l1 - l2 - l3 - l4} over the descending lambdas.
double concurrence(const DensityMatrix& rho);

// max{0, -2 min_eig} of the partial transpose.
double negativity(const DensityMatrix& rho);

// log2(negativity + 1).
double log_negativity(const DensityMatrix& rho);

// -x log2 x - (1-x) log2(1-x), with 0 log 0 = 0 at the endpoints.
double binary_entropy(double x);

// binary_entropy((1 + sqrt(1 - c^2)) / 2).
double eof_from_concurrence(double c);
double eof(const DensityMatrix& rho);

// 2 |c00 c11 - c01 c10|; for a pure state this equals both the concurrence
// and the negativity of its projector.
double pure_measures(const PureState& psi);

// All four measures at once, with the negativity <= concurrence cross-check.
MeasureSet measure_all(const DensityMatrix& rho);

}  // namespace entorder
