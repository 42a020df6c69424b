#pragma once

#include "ybcorr/states.hpp"

namespace ybcorr {

/// One evaluation of all five correlation quantifiers. All entropic values
/// are in bits (base-2 logarithms throughout).
struct MeasureSet {
    double concurrence;
    double eof;
    double c_l1;
    double c_r;
    double mid;
};

/// Wootters concurrence, max{0, l1-l2-l3-l4}, where the l_i are the singular
/// values of sqrt(rho) (sy⊗sy) conj(sqrt(rho)) in descending order (equal to
/// the square roots of the eigenvalues of rho·rho~).
double concurrence_general(const DensityMatrix& rho);

/// X-state closed form 2 max{0, |rho23| - sqrt(rho11 rho44),
/// |rho14| - sqrt(rho22 rho33)}. Throws NotXStateError.
double concurrence_x(const DensityMatrix& rho);

/// |<psi|(sy⊗sy)|psi*>| for a unit-norm pure state.
double concurrence_pure(const Vector& psi);

/// Entanglement of formation from the concurrence, E(C) = h((1+sqrt(1-C^2))/2).
double eof(double concurrence);

/// l1-norm of coherence, sum of |rho_ij| over i != j (computational basis).
double l1_coherence(const DensityMatrix& rho);

/// Relative entropy of coherence, S(rho_diag) - S(rho), >= 0.
double rel_entropy_coherence(const DensityMatrix& rho);

/// Quantum mutual information S(rho_A) + S(rho_B) - S(rho).
double mutual_information(const DensityMatrix& rho);

/// Measurement-induced disturbance I(rho) - I(Pi(rho)), with local projectors
/// from the marginal eigenbases. A marginal degenerate within 1e-8 falls back
/// to the computational basis for that subsystem, so that for all X states the
/// measured state is diag(rho) — MID values are contingent on this basis rule.
double mid_general(const DensityMatrix& rho);

/// X-state form S(diag(rho)) - S(rho). Throws NotXStateError.
double mid_x(const DensityMatrix& rho);

/// All five quantifiers; X fast paths are used when is_x_state(rho, 1e-10).
MeasureSet measure_all(const DensityMatrix& rho);

}  // namespace ybcorr
