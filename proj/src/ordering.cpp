#include "entorder/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "entorder/errors.hpp"

namespace entorder {

namespace {

constexpr double kEqualTolerance = 1e-9;
constexpr double kViolationTolerance = 1e-12;

void require_in_band(const char* which, const CNPoint& pt) {
  const auto fail = [&](const char* why) {
    std::ostringstream os;
    os << which << " point (c = " << pt.c << ", n = " << pt.n << ") " << why;
    throw BandViolation(os.str());
  };
  if (!(pt.c >= -kEqualTolerance && pt.c <= 1.0 + kEqualTolerance)) {
    fail("has concurrence outside [0, 1]");
  }
  const double lb = lower_bound_negativity(std::clamp(pt.c, 0.0, 1.0));
  if (!(pt.n >= lb - kEqualTolerance)) fail("lies below the negativity bound");
  if (!(pt.n <= pt.c + kEqualTolerance)) fail("has negativity above concurrence");
}

// delta for (upper-boundary state at c1, lower-boundary state at c2).
double boundary_delta(double c1, double c2) {
  const double product = (c1 - c2) * (c1 - lower_bound_negativity(c2));
  return product < 0.0 ? -product : 0.0;
}

// Scan a grid over [lo, hi] and return the argmax.
template <typename F>
double grid_argmax(F f, double lo, double hi, int steps) {
  double best_x = lo;
  double best_v = f(lo);
  for (int i = 1; i < steps; ++i) {
    const double x =
        i == steps - 1 ? hi : lo + (hi - lo) * static_cast<double>(i) / (steps - 1);
    const double v = f(x);
    if (v > best_v) {
      best_v = v;
      best_x = x;
    }
  }
  return best_x;
}

// Golden-section maximization on [lo, hi], run to interval width 1e-12.
template <typename F>
double golden_argmax(F f, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > 1e-12) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::same_order:
      return "same_order";
    case Verdict::order_violation:
      return "order_violation";
    case Verdict::equal_c_diff_n:
      return "equal_c_diff_n";
    case Verdict::equal_n_diff_c:
      return "equal_n_diff_c";
    case Verdict::equal_both:
      return "equal_both";
  }
  return "unknown";
}

PairComparison compare_measures(double c1, double n1, double c2, double n2) {
  PairComparison pc{};
  pc.delta_c = c1 - c2;
  pc.delta_n = n1 - n2;
  const double product = pc.delta_c * pc.delta_n;
  pc.delta = product < 0.0 ? -product : 0.0;

  const bool c_equal = std::abs(pc.delta_c) <= kEqualTolerance;
  const bool n_equal = std::abs(pc.delta_n) <= kEqualTolerance;
  if (c_equal && n_equal) {
    pc.verdict = Verdict::equal_both;
  } else if (c_equal) {
    pc.verdict = Verdict::equal_c_diff_n;
  } else if (n_equal) {
    pc.verdict = Verdict::equal_n_diff_c;
  } else if (product < -kViolationTolerance) {
    pc.verdict = Verdict::order_violation;
  } else {
    pc.verdict = Verdict::same_order;
  }
  return pc;
}

PairComparison compare(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  const MeasureSet m1 = measure_all(rho1);
  const MeasureSet m2 = measure_all(rho2);
  return compare_measures(m1.concurrence, m1.negativity, m2.concurrence,
                          m2.negativity);
}

double lower_bound_negativity(double c) {
  if (!(c >= 0.0 && c <= 1.0)) {
    std::ostringstream os;
    os << "concurrence must lie in [0, 1], got " << c;
    throw ParamOutOfRange(os.str());
  }
  const double r = 1.0 - c;
  return std::sqrt(r * r + c * c) - r;
}

Verdict classify_region(const CNPoint& reference, const CNPoint& other) {
  require_in_band("reference", reference);
  require_in_band("other", other);
  return compare_measures(reference.c, reference.n, other.c, other.n).verdict;
}

ExtremalGaps extremal_gaps() {
  const double sqrt2 = std::sqrt(2.0);
  const double kappa = (sqrt2 - 1.0) / 2.0;
  return ExtremalGaps{
      1.0 - sqrt2 / 2.0,
      1.0 - sqrt2 / 2.0,
      kappa * kappa / 2.0,
      WitnessPair{"werner(sqrt(2)/3)", "horodecki(1/2)", werner(sqrt2 / 3.0),
                  horodecki(0.5)},
      WitnessPair{"werner(2/3)", "horodecki(1/2)", werner(2.0 / 3.0),
                  horodecki(0.5)},
      WitnessPair{"werner(1/3 + sqrt(2)/6)", "horodecki(1/2)",
                  werner(1.0 / 3.0 + sqrt2 / 6.0), horodecki(0.5)},
  };
}

BoundarySearch numeric_extremal_search(int grid_steps) {
  if (grid_steps < 100) {
    throw ParamOutOfRange("grid_steps must be at least 100");
  }

  // Both single-measure gaps reduce to maximizing c - lower_bound(c): hold
  // one measure fixed and push the states onto opposite boundaries.
  const auto band_gap = [](double c) { return c - lower_bound_negativity(c); };
  double c_star = grid_argmax(band_gap, 0.0, 1.0, grid_steps);
  {
    const double h = 1.0 / (grid_steps - 1);
    c_star = golden_argmax(band_gap, std::max(0.0, c_star - 2.0 * h),
                           std::min(1.0, c_star + 2.0 * h));
  }

  BoundarySearch out{};
  // Equal negativity: lower-boundary state at c_star versus upper-boundary
  // state at the matching concurrence lower_bound(c_star).
  out.max_dc = {band_gap(c_star), c_star, lower_bound_negativity(c_star)};
  // Equal concurrence: the two boundary states at c_star itself.
  out.max_dn = {band_gap(c_star), c_star, c_star};

  // The violation magnitude needs both concurrences free.
  const double h = 1.0 / (grid_steps - 1);
  double best_v = -1.0, best_c1 = 0.0, best_c2 = 0.0;
  for (int i = 0; i < grid_steps; ++i) {
    const double c1 = i == grid_steps - 1
                          ? 1.0
                          : static_cast<double>(i) / (grid_steps - 1);
    for (int j = 0; j < grid_steps; ++j) {
      const double c2 = j == grid_steps - 1
                            ? 1.0
                            : static_cast<double>(j) / (grid_steps - 1);
      const double v = boundary_delta(c1, c2);
      if (v > best_v) {
        best_v = v;
        best_c1 = c1;
        best_c2 = c2;
      }
    }
  }
  // Coordinate-wise golden refinement; the windows track the moving point.
  for (int round = 0; round < 60; ++round) {
    const double prev = best_v;
    best_c1 = golden_argmax(
        [&](double c1) { return boundary_delta(c1, best_c2); },
        std::max(0.0, best_c1 - 2.0 * h), std::min(1.0, best_c1 + 2.0 * h));
    best_c2 = golden_argmax(
        [&](double c2) { return boundary_delta(best_c1, c2); },
        std::max(0.0, best_c2 - 2.0 * h), std::min(1.0, best_c2 + 2.0 * h));
    best_v = boundary_delta(best_c1, best_c2);
    if (best_v - prev < 1e-15) break;
  }
  out.max_delta = {best_v, best_c1, best_c2};
  return out;
}

std::vector<std::vector<double>> delta_grid(int n1, int n2) {
  if (n1 < 2 || n2 < 2) {
    throw ParamOutOfRange("delta_grid needs at least 2 points per axis");
  }
  std::vector<std::vector<double>> grid(n1, std::vector<double>(n2));
  for (int i = 0; i < n1; ++i) {
    const double c1 =
        i == n1 - 1 ? 1.0 : static_cast<double>(i) / (n1 - 1);
    for (int j = 0; j < n2; ++j) {
      const double c2 =
          j == n2 - 1 ? 1.0 : static_cast<double>(j) / (n2 - 1);
      grid[i][j] = boundary_delta(c1, c2);
    }
  }
  return grid;
}

}  // namespace entorder
