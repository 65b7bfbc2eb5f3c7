#include "entorder/measures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "entorder/errors.hpp"

namespace entorder {

namespace {

constexpr double kMeasureTolerance = 1e-9;
constexpr double kEigenvalueFloor = 1e-13;

// Measures are confined to [0, 1]; drift beyond tolerance means the input
// was corrupt rather than merely noisy.
double clamp_unit_measure(const char* what, double value) {
  if (value < -kMeasureTolerance || value > 1.0 + kMeasureTolerance) {
    std::ostringstream os;
    os << what << " = " << value << " is outside [0, 1] beyond tolerance";
    throw ConsistencyError(os.str());
  }
  return std::clamp(value, 0.0, 1.0);
}

}  // namespace

std::array<double, 4> concurrence_lambdas(const DensityMatrix& rho) {
  const CMat4 root = herm_sqrt(rho.matrix());
  const CMat4 similar = root * spin_flip(rho.matrix()) * root;
  const HermEigen eig = herm_eigen(similar);
  std::array<double, 4> lambdas{};
  for (int i = 0; i < 4; ++i) {
    const double v = eig.values[3 - i];
    if (v < -kMeasureTolerance) {
      std::ostringstream os;
      os << "spin-flip similarity matrix has eigenvalue " << v;
      throw ConsistencyError(os.str());
    }
    // Rank-deficient states give exact-zero eigenvalues that come back as
    // roundoff noise near 1e-16; square-rooting that noise would inject
    // spurious 1e-8 terms into the lambda sum, so anything below the floor
    // counts as zero.
    lambdas[i] = v > kEigenvalueFloor ? std::sqrt(v) : 0.0;
  }
  return lambdas;
}

double concurrence(const DensityMatrix& rho) {
  const std::array<double, 4> l = concurrence_lambdas(rho);
  const double c = std::max(0.0, l[0] - l[1] - l[2] - l[3]);
  return clamp_unit_measure("concurrence", c);
}

double negativity(const DensityMatrix& rho) {
  const HermEigen eig = herm_eigen(partial_transpose_b(rho.matrix()));
  const double n = std::max(0.0, -2.0 * eig.values[0]);
  return clamp_unit_measure("negativity", n);
}

double log_negativity(const DensityMatrix& rho) {
  return std::log2(negativity(rho) + 1.0);
}

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream os;
    os << "binary entropy argument must lie in [0, 1], got " << x;
    throw ParamOutOfRange(os.str());
  }
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double eof_from_concurrence(double c) {
  if (!(c >= 0.0 && c <= 1.0)) {
    std::ostringstream os;
    os << "concurrence must lie in [0, 1], got " << c;
    throw ParamOutOfRange(os.str());
  }
  const double x = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c)));
  return binary_entropy(std::min(x, 1.0));
}

double eof(const DensityMatrix& rho) {
  return eof_from_concurrence(concurrence(rho));
}

double pure_measures(const PureState& psi) {
  const CVec4& c = psi.amplitudes();
  return clamp_unit_measure("pure-state concurrence",
                            2.0 * std::abs(c[0] * c[3] - c[1] * c[2]));
}

MeasureSet measure_all(const DensityMatrix& rho) {
  MeasureSet ms{};
  ms.concurrence = concurrence(rho);
  ms.negativity = negativity(rho);
  ms.log_negativity = std::log2(ms.negativity + 1.0);
  ms.eof = eof_from_concurrence(ms.concurrence);
  if (ms.negativity > ms.concurrence + kMeasureTolerance) {
    std::ostringstream os;
    os << "negativity " << ms.negativity << " exceeds concurrence "
       << ms.concurrence << " beyond tolerance";
    throw ConsistencyError(os.str());
  }
  return ms;
}

}  // namespace entorder
