#include "ybcorr/linalg.hpp"

#include <cmath>
#include "ybcorr/detail/strfmt.hpp"

namespace ybcorr {

namespace {

constexpr double kHermTol = 1e-10;
constexpr double kPsdTol = 1e-10;
constexpr double kTraceTol = 1e-10;

double xlog2x(double x) {
    return x > 0.0 ? x * std::log2(x) : 0.0;
}

}  // namespace

double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_finite(const Matrix& m) {
    return m.allFinite();
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Matrix dagger(const Matrix& a) {
    return a.adjoint();
}

HermitianSpectrum herm_eig(const Matrix& a) {
    const double dev = max_abs(a - a.adjoint());
    if (dev > kHermTol)
        throw NonHermitianError(
            detail::strf("input is not Hermitian: ||a - a^dag||_max = %.3e", dev));

    Eigen::SelfAdjointEigenSolver<Matrix> solver(a);
    if (solver.info() != Eigen::Success)
        throw Error("Hermitian eigensolver failed to converge");

    // Eigen returns ascending order; flip to descending.
    const Eigen::Index n = a.rows();
    HermitianSpectrum s;
    s.eigenvalues = solver.eigenvalues().reverse();
    s.eigenvectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k)
        s.eigenvectors.col(k) = solver.eigenvectors().col(n - 1 - k);
    return s;
}

Matrix propagator(const Matrix& h, double t) {
    const HermitianSpectrum s = herm_eig(h);
    Vector phases(s.eigenvalues.size());
    for (Eigen::Index k = 0; k < phases.size(); ++k)
        phases(k) = std::exp(-kImag * t * s.eigenvalues(k));
    return s.eigenvectors * phases.asDiagonal() * s.eigenvectors.adjoint();
}

Matrix partial_trace(const Matrix& rho, Subsystem keep) {
    Matrix out = Matrix::Zero(2, 2);
    for (Eigen::Index i = 0; i < 2; ++i)
        for (Eigen::Index j = 0; j < 2; ++j)
            for (Eigen::Index k = 0; k < 2; ++k)
                out(i, j) += keep == Subsystem::A ? rho(2 * i + k, 2 * j + k)
                                                  : rho(2 * k + i, 2 * k + j);
    return out;
}

Matrix matrix_sqrt_psd(const Matrix& rho) {
    const HermitianSpectrum s = herm_eig(rho);
    Vector roots(s.eigenvalues.size());
    for (Eigen::Index k = 0; k < roots.size(); ++k) {
        double ev = s.eigenvalues(k);
        if (ev < 0.0 && ev >= -kPsdTol) ev = 0.0;
        if (ev < 0.0)
            throw NotPsdError(detail::strf("matrix is not PSD: eigenvalue %.3e", ev));
        roots(k) = std::sqrt(ev);
    }
    return s.eigenvectors * roots.asDiagonal() * s.eigenvectors.adjoint();
}

double von_neumann_entropy(const Matrix& rho) {
    const double herm_dev = max_abs(rho - rho.adjoint());
    if (herm_dev > kHermTol)
        throw InvalidDensityError(
            detail::strf("density input not Hermitian: deviation %.3e", herm_dev));
    const double trace_dev = std::abs(rho.trace() - Complex{1.0, 0.0});
    if (trace_dev > kTraceTol)
        throw InvalidDensityError(
            detail::strf("density input trace differs from 1 by %.3e", trace_dev));

    const HermitianSpectrum s = herm_eig(rho);
    double entropy = 0.0;
    for (Eigen::Index k = 0; k < s.eigenvalues.size(); ++k) {
        double ev = s.eigenvalues(k);
        if (ev < 0.0 && ev >= -kPsdTol) ev = 0.0;
        if (ev < 0.0)
            throw InvalidDensityError(
                detail::strf("density input not PSD: eigenvalue %.3e", ev));
        entropy -= xlog2x(ev);
    }
    return entropy;
}

double binary_entropy(double x) {
    constexpr double slack = 1e-12;
    if (x < -slack || x > 1.0 + slack)
        throw DomainError(detail::strf("binary_entropy argument %g outside [0, 1]", x));
    x = std::clamp(x, 0.0, 1.0);
    return -xlog2x(x) - xlog2x(1.0 - x);
}

}  // namespace ybcorr
