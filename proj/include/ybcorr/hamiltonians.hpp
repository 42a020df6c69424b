#pragma once

#include <numbers>

#include "ybcorr/yang_baxter.hpp"

namespace ybcorr {

/// Physical parameters shared by the R-matrices and the Hamiltonians.
/// B and J are stored; the field strengths mu1 = B+J and mu2 = B-J are
/// derived, so the pair relations hold exactly by construction.
struct ModelParams {
    double B = 1.0;
    double J = 1.0;
    double g = 0.0;
    double theta = std::numbers::pi / 2;
    double phi = 0.0;
    int epsilon = +1;

    double mu1() const { return B + J; }
    double mu2() const { return B - J; }

    static ModelParams from_fields(double mu1, double mu2, double g = 0.0,
                                   double theta = std::numbers::pi / 2,
                                   double phi = 0.0, int epsilon = +1) {
        return ModelParams{(mu1 + mu2) / 2, (mu1 - mu2) / 2, g, theta, phi, epsilon};
    }
};

/// Two-site embeddings of the spin-1/2 operators, basis (|00>,|01>,|10>,|11>),
/// |0> = spin up. S^z = diag(1/2,-1/2), S^+ = [[0,1],[0,0]] per site.
struct SpinOperatorSet {
    Matrix sz1, sz2, sp1, sp2, sm1, sm2, id;
};

const SpinOperatorSet& spin_ops();

enum class Model { H1, H2, H3 };

/// H0 = mu1 S1^z + mu2 S2^z + g S1^z S2^z, diagonal in the product basis.
Matrix build_h0(const ModelParams& p);

/// The Yang-Baxterized Hamiltonians H1/H2/H3 at general theta (closed forms).
Matrix build_h(Model model, const ModelParams& p);

/// R(theta,phi) H0 R(theta,phi)^dag for the matching R family.
Matrix conjugate_h0(RFamily family, const ModelParams& p);

/// Descending eigenvalues of a Hermitian matrix.
Eigen::VectorXd spectrum_of(const Matrix& h);

}  // namespace ybcorr
