#include "ybcorr/states.hpp"

#include <cmath>
#include "ybcorr/detail/strfmt.hpp"
#include <numbers>

namespace ybcorr {

namespace {

constexpr double kTol = 1e-10;

void require_unit_interval(double p, const char* what) {
    if (p < 0.0 || p > 1.0)
        throw DomainError(detail::strf("%s requires p in [0, 1], got %g", what, p));
}

}  // namespace

DensityMatrix DensityMatrix::validated(const Matrix& m) {
    if (m.rows() != 4 || m.cols() != 4)
        throw InvalidDensityError("density matrix must be 4x4");
    if (!is_finite(m))
        throw InvalidDensityError("density matrix has non-finite entries");

    const double herm_dev = max_abs(m - m.adjoint());
    if (herm_dev > kTol)
        throw NonHermitianError(
            detail::strf("not Hermitian: ||m - m^dag||_max = %.3e", herm_dev));

    const double trace_dev = std::abs(m.trace() - Complex{1.0, 0.0});
    if (trace_dev > kTol)
        throw TraceNotOneError(detail::strf("trace differs from 1 by %.3e", trace_dev));

    const double min_ev = herm_eig(m).eigenvalues.minCoeff();
    if (min_ev < -kTol)
        throw NotPsdError(detail::strf("negative eigenvalue %.3e", min_ev));

    return DensityMatrix(m);
}

Vector bell_state(BellLabel l) {
    if ((l.x != 0 && l.x != 1) || (l.y != 0 && l.y != 1))
        throw DomainError(detail::strf("Bell label bits must be 0/1, got x=%d y=%d", l.x, l.y));
    Vector v = Vector::Zero(4);
    v(l.y) = 1.0 / std::numbers::sqrt2;                       // |0, y>
    v(2 + (1 - l.y)) = (l.x == 0 ? 1.0 : -1.0) / std::numbers::sqrt2;  // |1, ~y>
    return v;
}

DensityMatrix werner_state(double p) {
    require_unit_interval(p, "werner_state");
    const Vector b00 = bell_state({0, 0});
    const Matrix m = (1.0 - p) * Matrix::Identity(4, 4) / 4.0
                     + p * (b00 * b00.adjoint());
    return DensityMatrix::validated(m);
}

DensityMatrix xlike_state(double p) {
    require_unit_interval(p, "xlike_state");
    const Vector b11 = bell_state({1, 1});
    const Vector b01 = bell_state({0, 1});
    const Vector b00 = bell_state({0, 0});
    const Matrix m = p * (b11 * b11.adjoint())
                     + 0.5 * (1.0 - p) * (b01 * b01.adjoint() + b00 * b00.adjoint());
    return DensityMatrix::validated(m);
}

DensityMatrix validate_density(const Matrix& m) {
    return DensityMatrix::validated(m);
}

bool is_x_state(const DensityMatrix& rho, double tol) {
    const Matrix& m = rho.matrix();
    for (Eigen::Index i = 0; i < 4; ++i)
        for (Eigen::Index j = 0; j < 4; ++j)
            if (i != j && i + j != 3 && std::abs(m(i, j)) >= tol) return false;
    return true;
}

}  // namespace ybcorr
