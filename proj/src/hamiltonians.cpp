#include "ybcorr/hamiltonians.hpp"

#include <cmath>

namespace ybcorr {

const SpinOperatorSet& spin_ops() {
    static const SpinOperatorSet ops = [] {
        Matrix sz(2, 2), sp(2, 2), sm(2, 2), id2 = Matrix::Identity(2, 2);
        sz << 0.5, 0.0, 0.0, -0.5;
        sp << 0.0, 1.0, 0.0, 0.0;
        sm << 0.0, 0.0, 1.0, 0.0;
        SpinOperatorSet s;
        s.sz1 = kron(sz, id2);
        s.sz2 = kron(id2, sz);
        s.sp1 = kron(sp, id2);
        s.sp2 = kron(id2, sp);
        s.sm1 = kron(sm, id2);
        s.sm2 = kron(id2, sm);
        s.id = Matrix::Identity(4, 4);
        return s;
    }();
    return ops;
}

Matrix build_h0(const ModelParams& p) {
    const SpinOperatorSet& s = spin_ops();
    return p.mu1() * s.sz1 + p.mu2() * s.sz2 + p.g * (s.sz1 * s.sz2);
}

Matrix build_h(Model model, const ModelParams& p) {
    const SpinOperatorSet& s = spin_ops();
    const double ct = std::cos(p.theta);
    const double st = std::sin(p.theta);
    const Complex eip = std::exp(kImag * p.phi);
    const Complex eim = std::conj(eip);
    const Matrix zz = s.sz1 * s.sz2;

    switch (model) {
        case Model::H1:
            return p.B * ct * (s.sz1 + s.sz2) + p.J * (s.sz1 - s.sz2) + p.g * zz
                   + kImag * p.B * st * (eip * s.sp1 * s.sp2 - eim * s.sm1 * s.sm2);
        case Model::H2:
            return p.B * (s.sz1 + s.sz2) + p.J * ct * (s.sz1 - s.sz2) + p.g * zz
                   + kImag * p.J * st * (eip * s.sp1 * s.sm2 - eim * s.sm1 * s.sp2);
        case Model::H3:
            return p.B * ct * (s.sz1 + s.sz2)
                   - kImag * p.B * st * (eip * s.sp1 * s.sp2 - eim * s.sm1 * s.sm2)
                   + p.g * zz + p.J * ct * (s.sz1 - s.sz2)
                   + static_cast<double>(p.epsilon) * p.J * st
                         * (s.sp1 * s.sm2 + s.sm1 * s.sp2);
    }
    throw DomainError("unknown model");
}

Matrix conjugate_h0(RFamily family, const ModelParams& p) {
    const Matrix r = build_R({family, p.theta, p.phi, p.epsilon});
    return r * build_h0(p) * r.adjoint();
}

Eigen::VectorXd spectrum_of(const Matrix& h) {
    return herm_eig(h).eigenvalues;
}

}  // namespace ybcorr
