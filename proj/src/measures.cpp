#include "ybcorr/measures.hpp"

#include <algorithm>
#include <cmath>
#include "ybcorr/detail/strfmt.hpp"

namespace ybcorr {

namespace {

constexpr double kXTol = 1e-10;
constexpr double kDegenerateGap = 1e-8;

/// sigma_y ⊗ sigma_y, the two-qubit spin-flip conjugator.
const Matrix& spin_flip_yy() {
    static const Matrix yy = [] {
        Matrix sy(2, 2);
        sy << 0.0, -kImag, kImag, 0.0;
        return kron(sy, sy);
    }();
    return yy;
}

Matrix diagonal_part(const Matrix& m) {
    return m.diagonal().asDiagonal();
}

void require_x_state(const DensityMatrix& rho, const char* what) {
    if (!is_x_state(rho, kXTol))
        throw NotXStateError(detail::strf("%s requires an X state", what));
}

/// Columns of the measurement basis for one marginal: its eigenbasis, or the
/// computational basis when the spectrum is degenerate within 1e-8.
Matrix marginal_basis(const Matrix& reduced) {
    const HermitianSpectrum s = herm_eig(reduced);
    if (s.eigenvalues(0) - s.eigenvalues(1) < kDegenerateGap)
        return Matrix::Identity(2, 2);
    return s.eigenvectors;
}

}  // namespace

double concurrence_general(const DensityMatrix& rho) {
    const Matrix& yy = spin_flip_yy();
    const Matrix root = matrix_sqrt_psd(rho.matrix());
    // Wootters lambdas = singular values of sqrt(rho) YY conj(sqrt(rho));
    // their squares are the eigenvalues of sqrt(rho) rho~ sqrt(rho).
    const Matrix w = root * yy * root.conjugate();
    Eigen::JacobiSVD<Matrix> svd(w);
    const auto& lam = svd.singularValues();
    const double c = lam(0) - lam(1) - lam(2) - lam(3);
    return std::clamp(c, 0.0, 1.0);
}

double concurrence_x(const DensityMatrix& rho) {
    require_x_state(rho, "concurrence_x");
    const Matrix& m = rho.matrix();
    const double inner = std::abs(m(1, 2)) - std::sqrt(std::abs(m(0, 0) * m(3, 3)));
    const double outer = std::abs(m(0, 3)) - std::sqrt(std::abs(m(1, 1) * m(2, 2)));
    return 2.0 * std::max({0.0, inner, outer});
}

double concurrence_pure(const Vector& psi) {
    const double norm_dev = std::abs(psi.norm() - 1.0);
    if (norm_dev > 1e-10)
        throw NotNormalizedError(
            detail::strf("state vector norm differs from 1 by %.3e", norm_dev));
    return std::abs(psi.dot(spin_flip_yy() * psi.conjugate()));
}

double eof(double concurrence) {
    constexpr double slack = 1e-12;
    if (concurrence < -slack || concurrence > 1.0 + slack)
        throw DomainError(detail::strf("concurrence %g outside [0, 1]", concurrence));
    const double c = std::clamp(concurrence, 0.0, 1.0);
    return binary_entropy((1.0 + std::sqrt(1.0 - c * c)) / 2.0);
}

double l1_coherence(const DensityMatrix& rho) {
    const Matrix& m = rho.matrix();
    double sum = 0.0;
    for (Eigen::Index i = 0; i < 4; ++i)
        for (Eigen::Index j = 0; j < 4; ++j)
            if (i != j) sum += std::abs(m(i, j));
    return sum;
}

double rel_entropy_coherence(const DensityMatrix& rho) {
    const double c_r = von_neumann_entropy(diagonal_part(rho.matrix()))
                       - von_neumann_entropy(rho.matrix());
    return std::max(c_r, 0.0);
}

double mutual_information(const DensityMatrix& rho) {
    return von_neumann_entropy(rho.reduced(Subsystem::A))
           + von_neumann_entropy(rho.reduced(Subsystem::B))
           - von_neumann_entropy(rho.matrix());
}

double mid_general(const DensityMatrix& rho) {
    const Matrix basis_a = marginal_basis(rho.reduced(Subsystem::A));
    const Matrix basis_b = marginal_basis(rho.reduced(Subsystem::B));

    Matrix measured = Matrix::Zero(4, 4);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const Matrix pa = basis_a.col(i) * basis_a.col(i).adjoint();
            const Matrix pb = basis_b.col(j) * basis_b.col(j).adjoint();
            const Matrix pij = kron(pa, pb);
            measured += pij * rho.matrix() * pij;
        }
    }

    const double mid = mutual_information(rho)
                       - mutual_information(DensityMatrix::validated(measured));
    return std::max(mid, 0.0);
}

double mid_x(const DensityMatrix& rho) {
    require_x_state(rho, "mid_x");
    const double mid = von_neumann_entropy(diagonal_part(rho.matrix()))
                       - von_neumann_entropy(rho.matrix());
    return std::max(mid, 0.0);
}

MeasureSet measure_all(const DensityMatrix& rho) {
    const bool x_form = is_x_state(rho, kXTol);
    MeasureSet m;
    m.concurrence = x_form ? concurrence_x(rho) : concurrence_general(rho);
    m.eof = eof(m.concurrence);
    m.c_l1 = l1_coherence(rho);
    m.c_r = rel_entropy_coherence(rho);
    m.mid = x_form ? mid_x(rho) : mid_general(rho);
    return m;
}

}  // namespace ybcorr
