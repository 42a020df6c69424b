#pragma once

#include <optional>

#include "ybcorr/linalg.hpp"

namespace ybcorr {

// Temperley-Lieb generators U1, U2 (loop value d=2) and U3 (d=sqrt 2).
enum class TlaFamily { U1, U2, U3 };

struct TlaGenerator {
    TlaFamily family = TlaFamily::U1;
    double phi = 0.0;
    int epsilon = +1;  // only U3 uses it
};

/// Loop value d of the family: 2 for U1/U2, sqrt(2) for U3.
double loop_d(TlaFamily family);

/// The 4x4 Hermitian generator matrix.
Matrix build_U(const TlaGenerator& spec);

struct TlaReport {
    double projector_residual;    // max_i ||U_i U_{i+-1} U_i - U_i||_max
    double idempotent_residual;   // max_i ||U_i^2 - d U_i||_max
    std::optional<double> far_commutator_residual;  // ||[U_1, U_3]||_max, sites=4 only
    double max_residual() const;
};

/// Checks the Temperley-Lieb relations on a chain of 3 or 4 qubit sites,
/// generators embedded on adjacent pairs with identities elsewhere.
TlaReport check_tla(TlaFamily family, double phi, int epsilon, int sites);

// Unitary R-matrices obtained from U1/U2/U3 by Yang-Baxterization.
enum class RFamily { R1, R2, R3 };

struct RMatrixSpec {
    RFamily family = RFamily::R1;
    double theta = 0.0;
    double phi = 0.0;
    int epsilon = +1;  // only R3 uses it; +1 matches the dynamics sections
};

/// The 4x4 unitary R(theta, phi). R1/R2 reduce to I at theta=0, R3 to -I.
Matrix build_R(const RMatrixSpec& spec);

/// Braid-relation residual ||(R(x)I)(IxR)(RxI) - (IxR)(RxI)(IxR)||_max on 8 dims.
double check_constant_ybe(const Matrix& r);

/// Spectral parameter map: cos(theta) = (1-mu^2)/(1+mu^2) for R1/R2,
/// cos(theta) = 1/cosh(mu) for R3. Range [0, pi].
double theta_of_mu(RFamily family, double mu);

enum class CompositionRule { Additive, Rational };

struct SpectralParams {
    double mu = 0.0;
    double nu = 0.0;
    double beta_squared = 0.0;  // rational rule only
};

/// Residual of R_i(mu) R_{i+1}(mu∘nu) R_i(nu) = R_{i+1}(nu) R_i(mu∘nu) R_{i+1}(mu)
/// with mu∘nu = mu+nu (additive) or (mu+nu)/(1+beta^2 mu nu) (rational).
double check_spectral_ybe(RFamily family, const SpectralParams& params,
                          CompositionRule rule, double phi = 0.0, int epsilon = +1);

struct Decomposition {
    Complex a;
    Complex b;
    double residual;  // ||r - a I - b U||_max
};

/// Least-squares fit of r onto span{I, u}.
Decomposition decompose_R(const Matrix& r, const Matrix& u);

}  // namespace ybcorr
