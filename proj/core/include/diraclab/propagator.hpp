#pragma once

#include <Eigen/Dense>
#include <complex>

#include "diraclab/clifford.hpp"

namespace diraclab {

/** The evolution dp/dt = -alpha p + e_0 p - sum_mu e_mu d_mu p. */
struct EvolutionParams {
  double alpha = 1.0;
  GeneratorSet g;
};

/** beta^2 = 1 - |k|^2.  Everything downstream depends only on beta^2 through
 *  even functions, so the branch cut of the square root never matters. */
double beta_squared(const Eigen::VectorXd& k);

/** sqrt(1 - |k|^2), continued as i sqrt(|k|^2 - 1) past the light cone. */
std::complex<double> beta(const Eigen::VectorXd& k);

/** cosh(beta t) as a function of beta^2: cosh for beta^2 >= 0, cos otherwise. */
double cosh_beta_t(double beta_sq, double t);

/** beta^{-1} sinh(beta t), entire in beta^2; series t(1 + z/6 + z^2/120),
 *  z = beta^2 t^2, once |beta| t < 1e-4 so the removable singularity at
 *  |k| = 1 costs no accuracy. */
double sinhc_beta_t(double beta_sq, double t);

struct PropagatorMatrix {
  Eigen::VectorXd k;
  double t = 0.0;
  Eigen::MatrixXcd M;
};

/** Closed-form mode matrix
 *  M(k,t) = e^{-alpha t} [ cosh(beta t) I + beta^{-1} sinh(beta t) (e_0 + i sum k_mu e_mu) ].
 *  M(k,0) = I and M(-k,t) = conj(M(k,t)). */
PropagatorMatrix propagator(const EvolutionParams& params, const Eigen::VectorXd& k, double t);

/** Independent route: scaling-and-squaring matrix exponential of
 *  t(-alpha I + e_0 + i sum k_mu e_mu), accurate to ~1e-12 relative.
 *  Kept deliberately separate from propagator() so the two can check
 *  each other. */
PropagatorMatrix expm_oracle(const EvolutionParams& params, const Eigen::VectorXd& k, double t);

/** Real/imaginary block form: acting on (Re phi, Im phi), D00 = D11 carries
 *  cosh + sinhc e_0 and D10 = -D01 = sinhc sum k_mu e_mu. */
struct RealBlockPropagator {
  Eigen::MatrixXd D00, D01, D10, D11;
};

RealBlockPropagator real_blocks(const EvolutionParams& params, const Eigen::VectorXd& k, double t);

/** Column sums and minimum entry of the k = 0 block
 *  e^{-alpha t}(cosh t I + sinh t e_0); right-stochastic exactly when
 *  alpha = 1 and every column of e_0 sums to 1. */
struct ZeroModeReport {
  Eigen::VectorXd column_sums;
  double min_entry = 0.0;
  int min_row = 0;
  int min_col = 0;
};

ZeroModeReport zero_mode_stochasticity(const EvolutionParams& params, double t);

}  // namespace diraclab
