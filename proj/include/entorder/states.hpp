#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "entorder/cmat.hpp"

namespace entorder {

// Normalized two-qubit state vector with amplitudes (c00, c01, c10, c11).
class PureState {
 public:
  // Normalizes the input; throws ZeroVector when its norm is below 1e-6.
  static PureState from_amplitudes(const CVec4& amplitudes);

  const CVec4& amplitudes() const { return c_; }
  CMat4 projector() const { return outer(c_); }

 private:
  explicit PureState(const CVec4& c) : c_(c) {}
  CVec4 c_;
};

// Validated 4x4 density operator: finite entries, Hermitian within 1e-9,
// unit trace within 1e-9, smallest eigenvalue >= -1e-9.
class DensityMatrix {
 public:
  explicit DensityMatrix(const CMat4& m);
  static DensityMatrix from_pure(const PureState& psi);

  const CMat4& matrix() const { return m_; }

 private:
  CMat4 m_;
};

// The Bell state (|01> - |10>)/sqrt(2), the entangled component of every
// family below.
const PureState& bell_singlet();

// p |Bell><Bell| + (1-p)/4 * I.
DensityMatrix werner(double p);

// p |Bell><Bell| + (1-p) |00><00|.
DensityMatrix horodecki(double p);

// p |Bell><Bell| + (1-p) |phi_q><phi_q| with
// |phi_q> = sqrt(1-q) |00> + sqrt(q) |01>.
DensityMatrix mixture(double p, double q);

// sqrt(p) |01> + sqrt(1-p) |10>, maximally entangled at p = 1/2.
PureState pure_theta(double p);

// Mixing weight q giving mixture(p, q) negativity n_target.  Admissible when
// n_target <= p <= sqrt(2 n_target (n_target + 1)) - n_target; the result
// must land in [0, 1] within 1e-9.
double q_prime(double n_target, double p);

// One-parameter slice of constant negativity (sqrt(2)-1)/2, defined for
// p in [(sqrt(2)-1)/2, 1/2].
DensityMatrix family_xy(double p);

// One-parameter slice of constant concurrence 1/2: mixture(1/2, q).
DensityMatrix family_xz(double q);

// Mixing weight q giving mixture(p, q) the same concurrence-plus-negativity
// sum as a reference state with concurrence c_ref and negativity n_ref.
// Admissible when (c_ref + n_ref)/2 <= p <= c_ref < 1; the result must land
// in [0, 1] within 1e-9.
double q_triple_prime(double n_ref, double c_ref, double p);

// One-parameter slice of constant concurrence-plus-negativity sqrt(2)/2,
// defined for p in [sqrt(2)/4, 1/2].
DensityMatrix family_xv(double p);

// p |Bell><Bell| + (1-p) |s><s| for a separable |s> orthogonal to the Bell
// state; these states sit exactly on the lower negativity boundary.  Throws
// NotOrthogonal or NotSeparable when |s> fails either requirement (1e-9).
DensityMatrix min_neg_state(double p, const PureState& separable);

enum class Family { pure, werner, horodecki, mixture, xy, xz, xv };

Family family_from_name(std::string_view name);  // throws ParamOutOfRange
std::string_view family_name(Family family);

// Declared parameter of a family with its documented closed range.
struct ParamRange {
  std::string name;
  double lo;
  double hi;
};

std::vector<ParamRange> family_params(Family family);

// A family reference plus concrete parameter values, as it appears in state
// documents and on the command line.
struct FamilySpec {
  Family family;
  std::map<std::string, double> params;
};

// Instantiates the family; throws ParamOutOfRange on missing, unknown, or
// out-of-range parameters.
DensityMatrix make_state(const FamilySpec& spec);

}  // namespace entorder
