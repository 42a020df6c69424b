#include "ybcorr/yang_baxter.hpp"

#include <cmath>
#include "ybcorr/detail/strfmt.hpp"
#include <numbers>

#include "ybcorr/hamiltonians.hpp"

namespace ybcorr {

namespace {

Matrix identity(Eigen::Index n) {
    return Matrix::Identity(n, n);
}

/// Generator acting on sites (site, site+1) of a chain, 1-based indexing.
Matrix embed_pair(const Matrix& u, int site, int sites) {
    Matrix out = identity(1);
    int pos = 1;
    while (pos <= sites) {
        if (pos == site) {
            out = kron(out, u);
            pos += 2;
        } else {
            out = kron(out, identity(2));
            pos += 1;
        }
    }
    return out;
}

}  // namespace

double loop_d(TlaFamily family) {
    return family == TlaFamily::U3 ? std::numbers::sqrt2 : 2.0;
}

Matrix build_U(const TlaGenerator& spec) {
    const Complex eip = std::exp(kImag * spec.phi);
    Matrix u = Matrix::Zero(4, 4);
    switch (spec.family) {
        case TlaFamily::U1:
            u(0, 0) = u(3, 3) = 1.0;
            u(0, 3) = eip;
            u(3, 0) = std::conj(eip);
            break;
        case TlaFamily::U2:
            u(1, 1) = u(2, 2) = 1.0;
            u(1, 2) = eip;
            u(2, 1) = std::conj(eip);
            break;
        case TlaFamily::U3:
            u.setIdentity();
            u(0, 3) = eip;
            u(3, 0) = std::conj(eip);
            u(1, 2) = kImag * static_cast<double>(spec.epsilon);
            u(2, 1) = -kImag * static_cast<double>(spec.epsilon);
            u /= std::numbers::sqrt2;
            break;
    }
    return u;
}

double TlaReport::max_residual() const {
    double r = std::max(projector_residual, idempotent_residual);
    if (far_commutator_residual) r = std::max(r, *far_commutator_residual);
    return r;
}

TlaReport check_tla(TlaFamily family, double phi, int epsilon, int sites) {
    if (sites != 3 && sites != 4)
        throw DomainError(detail::strf("check_tla supports 3 or 4 sites, got %d", sites));

    const Matrix u = build_U({family, phi, epsilon});
    const double d = loop_d(family);

    std::vector<Matrix> gen;
    for (int i = 1; i <= sites - 1; ++i) gen.push_back(embed_pair(u, i, sites));

    TlaReport report{0.0, 0.0, std::nullopt};
    for (size_t i = 0; i + 1 < gen.size(); ++i) {
        report.projector_residual =
            std::max({report.projector_residual,
                      max_abs(gen[i] * gen[i + 1] * gen[i] - gen[i]),
                      max_abs(gen[i + 1] * gen[i] * gen[i + 1] - gen[i + 1])});
    }
    for (const Matrix& gi : gen)
        report.idempotent_residual =
            std::max(report.idempotent_residual, max_abs(gi * gi - d * gi));
    if (sites == 4)
        report.far_commutator_residual = max_abs(gen[0] * gen[2] - gen[2] * gen[0]);
    return report;
}

Matrix build_R(const RMatrixSpec& spec) {
    const SpinOperatorSet& s = spin_ops();
    const double c = std::cos(spec.theta / 2);
    const double sn = std::sin(spec.theta / 2);
    const Complex eip = std::exp(kImag * spec.phi);
    const Complex eim = std::conj(eip);

    switch (spec.family) {
        case RFamily::R1:
            return (c + 0.5 * kImag * sn) * s.id - 2.0 * kImag * sn * (s.sz1 * s.sz2)
                   - kImag * sn * (eip * s.sp1 * s.sp2 + eim * s.sm1 * s.sm2);
        case RFamily::R2:
            return (c + 0.5 * kImag * sn) * s.id + 2.0 * kImag * sn * (s.sz1 * s.sz2)
                   - kImag * sn * (eip * s.sp1 * s.sm2 + eim * s.sm1 * s.sp2);
        case RFamily::R3:
            return -c * s.id - kImag * sn * (eip * s.sp1 * s.sp2 + eim * s.sm1 * s.sm2)
                   + static_cast<double>(spec.epsilon) * sn * (s.sp1 * s.sm2 - s.sm1 * s.sp2);
    }
    throw DomainError("unknown R family");
}

double check_constant_ybe(const Matrix& r) {
    if (r.rows() != 4 || r.cols() != 4)
        throw DomainError("check_constant_ybe expects a 4x4 matrix");
    const Matrix a = kron(r, identity(2));
    const Matrix b = kron(identity(2), r);
    return max_abs(a * b * a - b * a * b);
}

double theta_of_mu(RFamily family, double mu) {
    const double cosine = family == RFamily::R3
                              ? 1.0 / std::cosh(mu)
                              : (1.0 - mu * mu) / (1.0 + mu * mu);
    return std::acos(std::clamp(cosine, -1.0, 1.0));
}

double check_spectral_ybe(RFamily family, const SpectralParams& params,
                          CompositionRule rule, double phi, int epsilon) {
    double middle = params.mu + params.nu;
    if (rule == CompositionRule::Rational) {
        const double denom = 1.0 + params.beta_squared * params.mu * params.nu;
        if (std::abs(denom) < 1e-12)
            throw SingularCompositionError(
                detail::strf("1 + beta^2 mu nu = %.3e is singular", denom));
        middle /= denom;
    }

    auto r_at = [&](double mu) {
        return build_R({family, theta_of_mu(family, mu), phi, epsilon});
    };
    const Matrix ra = kron(r_at(params.mu), identity(2));
    const Matrix rm = kron(identity(2), r_at(middle));
    const Matrix rb = kron(r_at(params.nu), identity(2));
    const Matrix sa = kron(identity(2), r_at(params.nu));
    const Matrix sm = kron(r_at(middle), identity(2));
    const Matrix sb = kron(identity(2), r_at(params.mu));
    return max_abs(ra * rm * rb - sa * sm * sb);
}

Decomposition decompose_R(const Matrix& r, const Matrix& u) {
    if (r.rows() != 4 || r.cols() != 4 || u.rows() != 4 || u.cols() != 4)
        throw DomainError("decompose_R expects 4x4 matrices");

    const Matrix id = identity(4);
    const Complex mean = u.trace() / 4.0;
    if (max_abs(u - mean * id) < 1e-12)
        throw DegenerateBasisError("u is a scalar multiple of the identity");

    // Normal equations of the Frobenius least-squares fit onto span{I, u}.
    const Complex gII{4.0, 0.0};
    const Complex gIU = u.trace();
    const Complex gUU = (u.adjoint() * u).trace();
    const Complex rI = r.trace();
    const Complex rU = (u.adjoint() * r).trace();
    const Complex det = gII * gUU - gIU * std::conj(gIU);

    Decomposition out;
    out.a = (gUU * rI - gIU * rU) / det;
    out.b = (gII * rU - std::conj(gIU) * rI) / det;
    out.residual = max_abs(r - out.a * id - out.b * u);
    return out;
}

}  // namespace ybcorr
