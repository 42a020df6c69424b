#pragma once

#include "ybcorr/hamiltonians.hpp"
#include "ybcorr/measures.hpp"

namespace ybcorr {

/// sigma = exp(-itH) rho exp(itH), hbar = 1.
DensityMatrix evolve(const DensityMatrix& rho, const Matrix& h, double t);

enum class StateFamily { Werner, Xlike };

/// Closed-form measures, defined for the four (H1/H2 x werner/xlike)
/// scenarios at theta = pi/2. Concurrences are clamped at 0 before the EoF.
struct OracleMeasures {
    double concurrence;
    double eof;
    double c_l1;
    double mid;
};

/// Werner input under H1: C_l1 = |p sqrt(1 - cos^2 phi sin^2 2Bt)|,
/// C = C_l1 - (1-p)/2, MID from x± = 1+p ± 2p cos(phi) sin(2Bt).
OracleMeasures analytic_h1_werner(double p, double phi, double bt);

/// X-like input under H1, with y± = (1-p)(1 ± cos(phi) sin(2Bt)).
OracleMeasures analytic_h1_xlike(double p, double phi, double bt);

/// Werner input under H2: time independent.
OracleMeasures analytic_h2_werner(double p);

/// X-like input under H2, with z± = (1+p ± (1-3p) cos(phi) sin(2Jt))/4.
OracleMeasures analytic_h2_xlike(double p, double phi, double jt);

/// True iff a closed-form oracle exists (H1/H2, theta = pi/2).
bool has_oracle(Model model, double theta);

/// Dispatch to the scenario oracle; scaled_time is Bt (H1) or Jt (H2).
/// Throws NoOracleError for H3 or theta != pi/2.
OracleMeasures analytic_measures(Model model, StateFamily state, double p,
                                 double phi, double theta, double scaled_time);

}  // namespace ybcorr
