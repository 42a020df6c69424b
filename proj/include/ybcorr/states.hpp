#pragma once

#include "ybcorr/linalg.hpp"

namespace ybcorr {

/// A validated two-qubit density matrix: Hermitian to 1e-10, unit trace to
/// 1e-10, eigenvalues >= -1e-10. Construct through validated() or the state
/// factories below.
class DensityMatrix {
public:
    static DensityMatrix validated(const Matrix& m);

    const Matrix& matrix() const { return m_; }
    Complex operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

    /// Reduced state of subsystem A or B.
    Matrix reduced(Subsystem keep) const { return partial_trace(m_, keep); }

private:
    explicit DensityMatrix(Matrix m) : m_(std::move(m)) {}
    Matrix m_;
};

/// Bell-state label: |beta_xy> = (|0,y> + (-1)^x |1,~y>)/sqrt(2).
struct BellLabel {
    int x = 0;
    int y = 0;
};

/// Unit-norm Bell state vector in the computational basis.
Vector bell_state(BellLabel l);

/// (1-p) I/4 + p |beta00><beta00|, p in [0,1].
DensityMatrix werner_state(double p);

/// p |beta11><beta11| + (1-p)/2 (|beta01><beta01| + |beta00><beta00|).
DensityMatrix xlike_state(double p);

/// Free-function form of DensityMatrix::validated.
DensityMatrix validate_density(const Matrix& m);

/// True iff all entries off the diagonal and anti-diagonal have |.| < tol.
bool is_x_state(const DensityMatrix& rho, double tol);

}  // namespace ybcorr
