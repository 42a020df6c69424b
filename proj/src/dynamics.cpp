#include "ybcorr/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include "ybcorr/detail/strfmt.hpp"
#include <numbers>

namespace ybcorr {

namespace {

double xlog2x(double v) {
    return v > 0.0 ? v * std::log2(v) : 0.0;
}

double clamp01(double v) {
    return std::clamp(v, 0.0, 1.0);
}

void require_p(double p) {
    if (p < 0.0 || p > 1.0)
        throw DomainError(detail::strf("oracle requires p in [0, 1], got %g", p));
}

OracleMeasures with_eof(double concurrence, double c_l1, double mid) {
    return {concurrence, eof(concurrence), c_l1, std::max(mid, 0.0)};
}

}  // namespace

DensityMatrix evolve(const DensityMatrix& rho, const Matrix& h, double t) {
    const Matrix u = propagator(h, t);
    return DensityMatrix::validated(u * rho.matrix() * u.adjoint());
}

OracleMeasures analytic_h1_werner(double p, double phi, double bt) {
    require_p(p);
    const double osc = std::cos(phi) * std::sin(2.0 * bt);
    const double c_l1 = std::abs(p * std::sqrt(1.0 - osc * osc));
    const double conc = clamp01(c_l1 - std::abs(1.0 - p) / 2.0);
    const double xp = 1.0 + p + 2.0 * p * osc;
    const double xm = 1.0 + p - 2.0 * p * osc;
    const double mid = 0.25 * (xlog2x(1.0 - p) + xlog2x(1.0 + 3.0 * p)
                               - xlog2x(xp) - xlog2x(xm));
    return with_eof(conc, c_l1, mid);
}

OracleMeasures analytic_h1_xlike(double p, double phi, double bt) {
    require_p(p);
    const double osc = std::cos(phi) * std::sin(2.0 * bt);
    const double damp = std::sqrt(1.0 - osc * osc);
    const double c_l1 = 0.5 * (std::abs((1.0 - p) * damp) + std::abs(1.0 - 3.0 * p));
    const double conc = clamp01(0.5 * (std::abs(1.0 - 3.0 * p) - (1.0 - p) * damp));
    // MID = S(diag) - S(rho) with the closed-form diagonal
    // (y+/4, (1+p)/4, (1+p)/4, y-/4) and spectrum {p, (1-p)/2, (1-p)/2, 0}.
    const double yp = (1.0 - p) * (1.0 + osc);
    const double ym = (1.0 - p) * (1.0 - osc);
    const double s_diag = -(xlog2x(yp / 4.0) + xlog2x(ym / 4.0)
                            + 2.0 * xlog2x((1.0 + p) / 4.0));
    const double s_rho = -xlog2x(p) - xlog2x(1.0 - p) + (1.0 - p);
    return with_eof(conc, c_l1, s_diag - s_rho);
}

OracleMeasures analytic_h2_werner(double p) {
    require_p(p);
    const double conc = clamp01((3.0 * p - 1.0) / 2.0);
    const double mid = 0.25 * (xlog2x(1.0 - p) + xlog2x(1.0 + 3.0 * p)
                               - 2.0 * xlog2x(1.0 + p));
    return with_eof(conc, p, mid);
}

OracleMeasures analytic_h2_xlike(double p, double phi, double jt) {
    require_p(p);
    const double osc = std::cos(phi) * std::sin(2.0 * jt);
    const double damp = std::sqrt(1.0 - osc * osc);
    const double c_l1 = 0.5 * (std::abs(1.0 - p) + std::abs((1.0 - 3.0 * p) * damp));
    // Both Wootters X-state branches: the anti-diagonal corner |rho14| = (1-p)/4
    // against sqrt(z+ z-) takes over from the inner-block branch at small p.
    const double inner = std::abs(1.0 - 3.0 * p) * damp - (1.0 - p);
    const double geo = std::sqrt(std::max(
        0.0, (1.0 + p) * (1.0 + p) - (1.0 - 3.0 * p) * (1.0 - 3.0 * p) * osc * osc));
    const double outer = (1.0 - p) - geo;
    const double conc = clamp01(0.5 * std::max({0.0, inner, outer}));
    const double zp = (1.0 + p + (1.0 - 3.0 * p) * osc) / 4.0;
    const double zm = (1.0 + p - (1.0 - 3.0 * p) * osc) / 4.0;
    const double mid = xlog2x(p) + 0.5 * xlog2x(1.0 - p) - xlog2x(zp) - xlog2x(zm);
    return with_eof(conc, c_l1, mid);
}

bool has_oracle(Model model, double theta) {
    return model != Model::H3 && std::abs(theta - std::numbers::pi / 2) <= 1e-12;
}

OracleMeasures analytic_measures(Model model, StateFamily state, double p,
                                 double phi, double theta, double scaled_time) {
    if (!has_oracle(model, theta))
        throw NoOracleError("no closed form for this (model, theta) pair");
    if (model == Model::H1)
        return state == StateFamily::Werner ? analytic_h1_werner(p, phi, scaled_time)
                                            : analytic_h1_xlike(p, phi, scaled_time);
    return state == StateFamily::Werner ? analytic_h2_werner(p)
                                        : analytic_h2_xlike(p, phi, scaled_time);
}

}  // namespace ybcorr
