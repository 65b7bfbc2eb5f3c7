#include "entorder/cmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "entorder/errors.hpp"

namespace entorder {

namespace {

constexpr double kHermTolerance = 1e-9;
constexpr double kJacobiOffTolerance = 1e-12;
constexpr int kJacobiMaxSweeps = 100;
constexpr double kEigenClamp = -1e-9;
constexpr double kRootResidualTolerance = 1e-7;

double off_diagonal_norm(const CMat4& a) {
  double sum = 0.0;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (r != c) sum += std::norm(a(r, c));
    }
  }
  return std::sqrt(sum);
}

// One two-sided rotation A <- U^H A U zeroing the (p, q) entry, with the
// same U accumulated into V.  Standard complex Jacobi pivot: for pivot
// value b = A(p,q), tau = (A(q,q) - A(p,p)) / (2|b|), the rotation uses the
// smaller root t of t^2 + 2 tau t - 1 = 0 and the phase of b.
void jacobi_rotate(CMat4& a, CMat4& v, int p, int q) {
  const Complex b = a(p, q);
  const double ab = std::abs(b);
  if (ab < 1e-300) {
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    return;
  }
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * ab);
  const double sign = tau >= 0.0 ? 1.0 : -1.0;
  const double t = sign / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const Complex s = (t * c) * (b / ab);
  const Complex sc = std::conj(s);

  // Columns, M <- M U with U(p,p)=c, U(p,q)=s, U(q,p)=-conj(s), U(q,q)=c.
  for (int r = 0; r < 4; ++r) {
    const Complex mp = a(r, p);
    const Complex mq = a(r, q);
    a(r, p) = c * mp - sc * mq;
    a(r, q) = s * mp + c * mq;
  }
  // Rows, M <- U^H M.
  for (int col = 0; col < 4; ++col) {
    const Complex mp = a(p, col);
    const Complex mq = a(q, col);
    a(p, col) = c * mp - s * mq;
    a(q, col) = sc * mp + c * mq;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (int r = 0; r < 4; ++r) {
    const Complex mp = v(r, p);
    const Complex mq = v(r, q);
    v(r, p) = c * mp - sc * mq;
    v(r, q) = s * mp + c * mq;
  }
}

}  // namespace

CMat2 CMat2::identity() {
  CMat2 m;
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  return m;
}

CMat4 CMat4::identity() {
  CMat4 m;
  for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
  return m;
}

CMat4 operator+(const CMat4& a, const CMat4& b) {
  CMat4 r;
  for (int i = 0; i < 16; ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

CMat4 operator-(const CMat4& a, const CMat4& b) {
  CMat4 r;
  for (int i = 0; i < 16; ++i) r.e[i] = a.e[i] - b.e[i];
  return r;
}

CMat4 operator*(const CMat4& a, const CMat4& b) {
  CMat4 r;
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) {
      const Complex aik = a(i, k);
      for (int j = 0; j < 4; ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

CMat4 operator*(double s, const CMat4& m) {
  CMat4 r;
  for (int i = 0; i < 16; ++i) r.e[i] = s * m.e[i];
  return r;
}

CMat4 operator*(const Complex& s, const CMat4& m) {
  CMat4 r;
  for (int i = 0; i < 16; ++i) r.e[i] = s * m.e[i];
  return r;
}

Complex trace(const CMat4& m) { return m(0, 0) + m(1, 1) + m(2, 2) + m(3, 3); }

CMat4 conjugate(const CMat4& m) {
  CMat4 r;
  for (int i = 0; i < 16; ++i) r.e[i] = std::conj(m.e[i]);
  return r;
}

CMat4 transpose(const CMat4& m) {
  CMat4 r;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) r(i, j) = m(j, i);
  }
  return r;
}

CMat4 dagger(const CMat4& m) {
  CMat4 r;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) r(i, j) = std::conj(m(j, i));
  }
  return r;
}

double max_abs(const CMat4& m) {
  double best = 0.0;
  for (const Complex& z : m.e) best = std::max(best, std::abs(z));
  return best;
}

double max_abs_diff(const CMat4& a, const CMat4& b) {
  double best = 0.0;
  for (int i = 0; i < 16; ++i) best = std::max(best, std::abs(a.e[i] - b.e[i]));
  return best;
}

bool all_finite(const CMat4& m) {
  for (const Complex& z : m.e) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

double hermiticity_defect(const CMat4& m) {
  double best = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      best = std::max(best, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return best;
}

CMat4 outer(const CVec4& v) {
  CMat4 r;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) r(i, j) = v[i] * std::conj(v[j]);
  }
  return r;
}

CMat4 tensor(const CMat2& a, const CMat2& b) {
  CMat4 r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          r(2 * i + j, 2 * k + l) = a(i, k) * b(j, l);
        }
      }
    }
  }
  return r;
}

CMat4 partial_transpose_b(const CMat4& m) {
  CMat4 r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          r(2 * i + l, 2 * k + j) = m(2 * i + j, 2 * k + l);
        }
      }
    }
  }
  return r;
}

const CMat2& pauli_y() {
  static const CMat2 y = [] {
    CMat2 m;
    m(0, 1) = Complex(0.0, -1.0);
    m(1, 0) = Complex(0.0, 1.0);
    return m;
  }();
  return y;
}

const CMat4& spin_flip_kernel() {
  static const CMat4 k = tensor(pauli_y(), pauli_y());
  return k;
}

CMat4 spin_flip(const CMat4& rho) {
  const CMat4& k = spin_flip_kernel();
  return k * conjugate(rho) * k;
}

HermEigen herm_eigen(const CMat4& m) {
  const double defect = hermiticity_defect(m);
  if (defect > kHermTolerance) {
    std::ostringstream os;
    os << "matrix is not Hermitian: max |m - m^dagger| = " << defect;
    throw NonHermitianInput(os.str());
  }

  // Symmetrize so roundoff asymmetry cannot bias the rotations.
  CMat4 a;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    }
  }

  CMat4 v = CMat4::identity();
  bool converged = false;
  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) < kJacobiOffTolerance) {
      converged = true;
      break;
    }
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 4; ++q) jacobi_rotate(a, v, p, q);
    }
  }
  if (!converged && off_diagonal_norm(a) >= kJacobiOffTolerance) {
    throw NoConvergence("Jacobi eigensolver did not reach tolerance in 100 sweeps");
  }

  std::array<int, 4> order{0, 1, 2, 3};
  std::array<double, 4> diag{a(0, 0).real(), a(1, 1).real(), a(2, 2).real(),
                             a(3, 3).real()};
  std::stable_sort(order.begin(), order.end(),
                   [&diag](int x, int y) { return diag[x] < diag[y]; });

  HermEigen out;
  for (int i = 0; i < 4; ++i) {
    out.values[i] = diag[order[i]];
    for (int r = 0; r < 4; ++r) out.vectors(r, i) = v(r, order[i]);
  }
  return out;
}

CMat4 herm_sqrt(const CMat4& m) {
  const HermEigen eig = herm_eigen(m);
  std::array<double, 4> roots{};
  for (int i = 0; i < 4; ++i) {
    const double lambda = eig.values[i];
    if (lambda < kEigenClamp) {
      std::ostringstream os;
      os << "matrix is not positive semidefinite: eigenvalue " << lambda;
      throw NegativeEigenvalue(os.str());
    }
    roots[i] = lambda > 0.0 ? std::sqrt(lambda) : 0.0;
  }
  CMat4 r;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Complex sum = 0.0;
      for (int k = 0; k < 4; ++k) {
        sum += roots[k] * eig.vectors(i, k) * std::conj(eig.vectors(j, k));
      }
      r(i, j) = sum;
    }
  }
  return r;
}

Complex det(const CMat4& m) {
  CMat4 a = m;
  Complex d = 1.0;
  for (int k = 0; k < 4; ++k) {
    int pivot = k;
    for (int r = k + 1; r < 4; ++r) {
      if (std::abs(a(r, k)) > std::abs(a(pivot, k))) pivot = r;
    }
    if (std::abs(a(pivot, k)) == 0.0) return 0.0;
    if (pivot != k) {
      for (int c = 0; c < 4; ++c) std::swap(a(k, c), a(pivot, c));
      d = -d;
    }
    d *= a(k, k);
    for (int r = k + 1; r < 4; ++r) {
      const Complex f = a(r, k) / a(k, k);
      for (int c = k; c < 4; ++c) a(r, c) -= f * a(k, c);
    }
  }
  return d;
}

std::array<Complex, 4> quartic_eigenvalues_oracle(const CMat4& m) {
  // Characteristic polynomial lambda^4 + b3 l^3 + b2 l^2 + b1 l + b0 via
  // the Faddeev-LeVerrier recursion.
  const CMat4 eye = CMat4::identity();
  CMat4 n = m;
  const Complex b3 = -trace(n);
  n = m * (n + b3 * eye);
  const Complex b2 = -trace(n) / 2.0;
  n = m * (n + b2 * eye);
  const Complex b1 = -trace(n) / 3.0;
  n = m * (n + b1 * eye);
  const Complex b0 = -trace(n) / 4.0;

  const auto poly = [&](const Complex& x) {
    return (((x + b3) * x + b2) * x + b1) * x + b0;
  };

  // Durand-Kerner from the usual staggered start.
  std::array<Complex, 4> z;
  const Complex g(0.4, 0.9);
  z[0] = 1.0;
  for (int k = 1; k < 4; ++k) z[k] = z[k - 1] * g;

  for (int iter = 0; iter < 1000; ++iter) {
    double step = 0.0;
    double scale = 0.0;
    for (int k = 0; k < 4; ++k) {
      Complex denom = 1.0;
      for (int j = 0; j < 4; ++j) {
        if (j != k) denom *= z[k] - z[j];
      }
      if (denom == Complex(0.0)) {
        z[k] += 1e-12 * (1.0 + std::abs(z[k])) * Complex(0.6, 0.8);
        continue;
      }
      const Complex dz = poly(z[k]) / denom;
      z[k] -= dz;
      step = std::max(step, std::abs(dz));
    }
    for (const Complex& r : z) scale = std::max(scale, std::abs(r));
    if (step < 1e-13 * (1.0 + scale)) break;
  }

  for (const Complex& root : z) {
    CMat4 shifted = m;
    for (int i = 0; i < 4; ++i) shifted(i, i) -= root;
    const double residual = std::abs(det(shifted));
    if (!(residual <= kRootResidualTolerance)) {
      std::ostringstream os;
      os << "characteristic root residual " << residual << " exceeds "
         << kRootResidualTolerance;
      throw RootFindingFailure(os.str());
    }
  }

  std::sort(z.begin(), z.end(), [](const Complex& x, const Complex& y) {
    if (x.real() != y.real()) return x.real() > y.real();
    return x.imag() > y.imag();
  });
  return z;
}

}  // namespace entorder
