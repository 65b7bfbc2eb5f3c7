#include "entorder/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "entorder/errors.hpp"

namespace entorder {

namespace {

constexpr double kStateTolerance = 1e-9;

void require_in_range(const char* name, double value, double lo, double hi) {
  if (!(value >= lo && value <= hi)) {
    std::ostringstream os;
    os << name << " must lie in [" << lo << ", " << hi << "], got " << value;
    throw ParamOutOfRange(os.str());
  }
}

void require_unit_interval(const char* name, double value) {
  require_in_range(name, value, 0.0, 1.0);
}

// Snaps a computed weight onto an endpoint of [0, 1] when within `slack` of
// it; beyond that outside the interval the parameters were inadmissible.
// Snapping matters because the component amplitudes go as sqrt(q) and
// sqrt(1-q): a weight off an endpoint by 1e-16 shifts amplitudes by 1e-8.
double snap_weight(const char* name, double q, double slack) {
  if (q < -slack || q > 1.0 + slack) {
    std::ostringstream os;
    os << name << " = " << q << " falls outside [0, 1]";
    throw ParamOutOfRange(os.str());
  }
  if (std::abs(q) <= slack) return 0.0;
  if (std::abs(q - 1.0) <= slack) return 1.0;
  return q;
}

// sqrt(1-q) |00> + sqrt(q) |01>, the separable partner in the mixtures.
PureState separable_component(double q) {
  CVec4 c{};
  c[0] = std::sqrt(1.0 - q);
  c[1] = std::sqrt(q);
  return PureState::from_amplitudes(c);
}

const char* family_names[] = {"pure",    "werner", "horodecki", "mixture",
                              "xy",      "xz",     "xv"};

}  // namespace

PureState PureState::from_amplitudes(const CVec4& amplitudes) {
  double norm_sq = 0.0;
  for (const Complex& a : amplitudes) norm_sq += std::norm(a);
  const double norm = std::sqrt(norm_sq);
  if (norm < 1e-6) throw ZeroVector("state vector norm is below 1e-6");
  CVec4 scaled;
  for (int i = 0; i < 4; ++i) scaled[i] = amplitudes[i] / norm;
  return PureState(scaled);
}

DensityMatrix::DensityMatrix(const CMat4& m) : m_(m) {
  if (!all_finite(m)) {
    throw ValidationError("finite_entries",
                          "density matrix has a non-finite entry");
  }
  const double defect = hermiticity_defect(m);
  if (defect > kStateTolerance) {
    std::ostringstream os;
    os << "density matrix is not Hermitian: max |m - m^dagger| = " << defect;
    throw ValidationError("hermitian", os.str());
  }
  const double trace_error = std::abs(trace(m) - Complex(1.0));
  if (trace_error > kStateTolerance) {
    std::ostringstream os;
    os << "density matrix trace deviates from 1 by " << trace_error;
    throw ValidationError("unit_trace", os.str());
  }
  const HermEigen eig = herm_eigen(m);
  if (eig.values[0] < -kStateTolerance) {
    std::ostringstream os;
    os << "density matrix has eigenvalue " << eig.values[0];
    throw ValidationError("positive_semidefinite", os.str());
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.projector());
}

const PureState& bell_singlet() {
  static const PureState psi = [] {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CVec4 c{};
    c[1] = inv_sqrt2;
    c[2] = -inv_sqrt2;
    return PureState::from_amplitudes(c);
  }();
  return psi;
}

DensityMatrix werner(double p) {
  require_unit_interval("p", p);
  const CMat4 m =
      p * bell_singlet().projector() + ((1.0 - p) / 4.0) * CMat4::identity();
  return DensityMatrix(m);
}

DensityMatrix horodecki(double p) {
  require_unit_interval("p", p);
  return mixture(p, 0.0);
}

DensityMatrix mixture(double p, double q) {
  require_unit_interval("p", p);
  require_unit_interval("q", q);
  const CMat4 m = p * bell_singlet().projector() +
                  (1.0 - p) * separable_component(q).projector();
  return DensityMatrix(m);
}

PureState pure_theta(double p) {
  require_unit_interval("p", p);
  CVec4 c{};
  c[1] = std::sqrt(p);
  c[2] = std::sqrt(1.0 - p);
  return PureState::from_amplitudes(c);
}

double q_prime(double n_target, double p) {
  require_unit_interval("n_target", n_target);
  if (!(p > 0.0 && p < 1.0)) {
    throw ParamOutOfRange("p must lie strictly inside (0, 1)");
  }
  const double hi = std::sqrt(2.0 * n_target * (n_target + 1.0)) - n_target;
  if (p < n_target - 1e-12 || p > hi + 1e-12) {
    std::ostringstream os;
    os << "p = " << p << " is outside the admissible band [" << n_target
       << ", " << hi << "] for target negativity " << n_target;
    throw ParamOutOfRange(os.str());
  }
  const double q =
      (n_target * (n_target + 2.0 * (1.0 - p)) - p * p) / (2.0 * p * (1.0 - p));
  return snap_weight("q'", q, kStateTolerance);
}

DensityMatrix family_xy(double p) {
  const double sqrt2 = std::sqrt(2.0);
  const double lo = (sqrt2 - 1.0) / 2.0;
  const double hi = 0.5;
  if (p < lo - 1e-12 || p > hi + 1e-12) {
    std::ostringstream os;
    os << "p must lie in [(sqrt(2)-1)/2, 1/2], got " << p;
    throw ParamOutOfRange(os.str());
  }
  p = std::clamp(p, lo, hi);
  const double q =
      (1.0 - 2.0 * p) * (2.0 * sqrt2 + 2.0 * p - 1.0) / (8.0 * p * (1.0 - p));
  return mixture(p, snap_weight("q", q, 1e-12));
}

DensityMatrix family_xz(double q) {
  require_unit_interval("q", q);
  return mixture(0.5, q);
}

double q_triple_prime(double n_ref, double c_ref, double p) {
  require_unit_interval("n_ref", n_ref);
  if (!(c_ref >= 0.0 && c_ref < 1.0)) {
    throw ParamOutOfRange("c_ref must lie in [0, 1)");
  }
  if (!(p > 0.0 && p < 1.0)) {
    throw ParamOutOfRange("p must lie strictly inside (0, 1)");
  }
  const double lo = 0.5 * (c_ref + n_ref);
  if (p < lo - 1e-12 || p > c_ref + 1e-12) {
    std::ostringstream os;
    os << "p = " << p << " is outside the admissible band [" << lo << ", "
       << c_ref << "]";
    throw ParamOutOfRange(os.str());
  }
  const double bracket = n_ref + c_ref + 1.0 - 2.0 * p;
  const double q = 1.0 + (bracket * bracket - 1.0) / (2.0 * p * (1.0 - p));
  return snap_weight("q'''", q, kStateTolerance);
}

DensityMatrix family_xv(double p) {
  const double sqrt2 = std::sqrt(2.0);
  const double lo = sqrt2 / 4.0;
  const double hi = 0.5;
  if (p < lo - 1e-12 || p > hi + 1e-12) {
    std::ostringstream os;
    os << "p must lie in [sqrt(2)/4, 1/2], got " << p;
    throw ParamOutOfRange(os.str());
  }
  p = std::clamp(p, lo, hi);
  const double q =
      (1.0 - 2.0 * p) * (2.0 * sqrt2 + 1.0 - 2.0 * p) / (4.0 * p * (1.0 - p));
  return mixture(p, snap_weight("q", q, 1e-12));
}

DensityMatrix min_neg_state(double p, const PureState& separable) {
  require_unit_interval("p", p);
  const CVec4& b = bell_singlet().amplitudes();
  const CVec4& s = separable.amplitudes();
  Complex overlap = 0.0;
  for (int i = 0; i < 4; ++i) overlap += std::conj(b[i]) * s[i];
  if (std::abs(overlap) > kStateTolerance) {
    std::ostringstream os;
    os << "separable component overlaps the Bell state: |<Bell|s>| = "
       << std::abs(overlap);
    throw NotOrthogonal(os.str());
  }
  const double tangle = 2.0 * std::abs(s[0] * s[3] - s[1] * s[2]);
  if (tangle > kStateTolerance) {
    std::ostringstream os;
    os << "component is entangled: pure-state concurrence " << tangle;
    throw NotSeparable(os.str());
  }
  const CMat4 m =
      p * bell_singlet().projector() + (1.0 - p) * separable.projector();
  return DensityMatrix(m);
}

Family family_from_name(std::string_view name) {
  for (int i = 0; i < 7; ++i) {
    if (name == family_names[i]) return static_cast<Family>(i);
  }
  throw ParamOutOfRange("unknown family: " + std::string(name));
}

std::string_view family_name(Family family) {
  return family_names[static_cast<int>(family)];
}

std::vector<ParamRange> family_params(Family family) {
  const double sqrt2 = std::sqrt(2.0);
  switch (family) {
    case Family::pure:
    case Family::werner:
    case Family::horodecki:
      return {{"p", 0.0, 1.0}};
    case Family::mixture:
      return {{"p", 0.0, 1.0}, {"q", 0.0, 1.0}};
    case Family::xy:
      return {{"p", (sqrt2 - 1.0) / 2.0, 0.5}};
    case Family::xz:
      return {{"q", 0.0, 1.0}};
    case Family::xv:
      return {{"p", sqrt2 / 4.0, 0.5}};
  }
  throw ParamOutOfRange("unknown family");
}

DensityMatrix make_state(const FamilySpec& spec) {
  const std::vector<ParamRange> declared = family_params(spec.family);
  for (const auto& [name, value] : spec.params) {
    const bool known = std::any_of(
        declared.begin(), declared.end(),
        [&name = name](const ParamRange& pr) { return pr.name == name; });
    if (!known) {
      std::ostringstream os;
      os << "family " << family_name(spec.family) << " has no parameter '"
         << name << "'";
      throw ParamOutOfRange(os.str());
    }
  }
  std::vector<double> args;
  for (const ParamRange& pr : declared) {
    const auto it = spec.params.find(pr.name);
    if (it == spec.params.end()) {
      std::ostringstream os;
      os << "family " << family_name(spec.family) << " requires parameter '"
         << pr.name << "'";
      throw ParamOutOfRange(os.str());
    }
    args.push_back(it->second);
  }
  switch (spec.family) {
    case Family::pure:
      return DensityMatrix::from_pure(pure_theta(args[0]));
    case Family::werner:
      return werner(args[0]);
    case Family::horodecki:
      return horodecki(args[0]);
    case Family::mixture:
      return mixture(args[0], args[1]);
    case Family::xy:
      return family_xy(args[0]);
    case Family::xz:
      return family_xz(args[0]);
    case Family::xv:
      return family_xv(args[0]);
  }
  throw ParamOutOfRange("unknown family");
}

}  // namespace entorder
