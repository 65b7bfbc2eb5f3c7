#pragma once

#include <array>
#include <complex>

namespace entorder {

using Complex = std::complex<double>;
using CVec4 = std::array<Complex, 4>;

// 2x2 complex matrix, row-major.
struct CMat2 {
  std::array<Complex, 4> e{};

  Complex& operator()(int r, int c) { return e[2 * r + c]; }
  const Complex& operator()(int r, int c) const { return e[2 * r + c]; }

  static CMat2 identity();
};

// 4x4 complex matrix, row-major.  The basis is (|00>, |01>, |10>, |11>)
// with the first qubit as the left tensor factor throughout.
struct CMat4 {
  std::array<Complex, 16> e{};

  Complex& operator()(int r, int c) { return e[4 * r + c]; }
  const Complex& operator()(int r, int c) const { return e[4 * r + c]; }

  static CMat4 identity();
};

CMat4 operator+(const CMat4& a, const CMat4& b);
CMat4 operator-(const CMat4& a, const CMat4& b);
CMat4 operator*(const CMat4& a, const CMat4& b);
CMat4 operator*(double s, const CMat4& m);
CMat4 operator*(const Complex& s, const CMat4& m);

Complex trace(const CMat4& m);
CMat4 conjugate(const CMat4& m);
CMat4 transpose(const CMat4& m);
CMat4 dagger(const CMat4& m);

// Largest entrywise magnitude, and largest entrywise |a - b|.
double max_abs(const CMat4& m);
double max_abs_diff(const CMat4& a, const CMat4& b);
bool all_finite(const CMat4& m);

// max |m - dagger(m)| over entries.
double hermiticity_defect(const CMat4& m);

// Rank-one projector |v><v|.
CMat4 outer(const CVec4& v);

// Kronecker product; `a` acts on the first qubit.
CMat4 tensor(const CMat2& a, const CMat2& b);

// Transpose on the second-qubit indices: out(i,l; k,j) = in(i,j; k,l).
CMat4 partial_transpose_b(const CMat4& m);

// (sigma_y x sigma_y) conj(rho) (sigma_y x sigma_y).
CMat4 spin_flip(const CMat4& rho);

const CMat2& pauli_y();
const CMat4& spin_flip_kernel();  // sigma_y x sigma_y

// Eigendecomposition of a Hermitian 4x4 matrix.  Eigenvalues ascending;
// eigenvectors are the matching columns of `vectors`.
struct HermEigen {
  std::array<double, 4> values{};
  CMat4 vectors;
};

// Cyclic complex Jacobi.  Converged when the off-diagonal Frobenius norm
// falls below 1e-12; capped at 100 sweeps.  Throws NonHermitianInput when
// max |m - dagger(m)| > 1e-9 and NoConvergence at the cap.
HermEigen herm_eigen(const CMat4& m);

// Hermitian PSD square root via the eigendecomposition.  Eigenvalues in
// [-1e-9, 0) clamp to zero; anything lower throws NegativeEigenvalue.
CMat4 herm_sqrt(const CMat4& m);

// Determinant by partial-pivot Gaussian elimination.
Complex det(const CMat4& m);

// Eigenvalues of a general 4x4 matrix through the characteristic polynomial:
// Faddeev-LeVerrier coefficients, then Durand-Kerner iteration.  Kept as an
// independent cross-check for the Hermitian paths above.  Each root must
// satisfy |det(m - root*I)| <= 1e-7 or RootFindingFailure is thrown.
// Roots are returned sorted by descending real part, then descending
// imaginary part.
std::array<Complex, 4> quartic_eigenvalues_oracle(const CMat4& m);

}  // namespace entorder
