#pragma once

#include <Eigen/Dense>
#include <complex>

#include "ybcorr/errors.hpp"

namespace ybcorr {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr std::complex<double> kImag{0.0, 1.0};

/// Max-norm ||m||_max, the residual metric used throughout.
double max_abs(const Matrix& m);

bool is_finite(const Matrix& m);

/// Kronecker (tensor) product.
Matrix kron(const Matrix& a, const Matrix& b);

/// Conjugate transpose.
Matrix dagger(const Matrix& a);

/// Eigendecomposition of a Hermitian matrix, eigenvalues descending.
struct HermitianSpectrum {
    Eigen::VectorXd eigenvalues;  // descending
    Matrix eigenvectors;          // unitary, columns match eigenvalues
};

/// Throws NonHermitianError if ||a - a^dag||_max > 1e-10.
HermitianSpectrum herm_eig(const Matrix& a);

/// U = exp(-i t H) via eigendecomposition (hbar = 1). Unitary by construction.
Matrix propagator(const Matrix& h, double t);

enum class Subsystem { A, B };

/// Reduced 2x2 state of one qubit of a two-qubit density matrix.
Matrix partial_trace(const Matrix& rho, Subsystem keep);

/// Hermitian PSD square root, eigenvalues in [-1e-10, 0) clamped to 0.
Matrix matrix_sqrt_psd(const Matrix& rho);

/// Von Neumann entropy in bits, with 0*log 0 := 0.
/// Requires a Hermitian, PSD (to -1e-10), unit-trace (to 1e-10) input.
double von_neumann_entropy(const Matrix& rho);

/// h(x) = -x log2 x - (1-x) log2(1-x); accepts x in [0,1] with 1e-12 slack.
double binary_entropy(double x);

}  // namespace ybcorr
