#include "diraclab/propagator.hpp"

#include <cmath>
#include <stdexcept>

namespace diraclab {

namespace {

void check_inputs(const EvolutionParams& params, const Eigen::VectorXd& k, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("propagator: t must be nonnegative");
  if (k.size() != params.g.d) throw std::invalid_argument("propagator: k dimension mismatch");
  if (params.g.e.size() != static_cast<size_t>(params.g.d) + 1)
    throw std::invalid_argument("propagator: malformed generator set");
}

}  // namespace

double beta_squared(const Eigen::VectorXd& k) { return 1.0 - k.squaredNorm(); }

std::complex<double> beta(const Eigen::VectorXd& k) {
  const double b2 = beta_squared(k);
  if (b2 >= 0.0) return {std::sqrt(b2), 0.0};
  return {0.0, std::sqrt(-b2)};
}

double cosh_beta_t(double beta_sq, double t) {
  if (beta_sq >= 0.0) return std::cosh(std::sqrt(beta_sq) * t);
  return std::cos(std::sqrt(-beta_sq) * t);
}

double sinhc_beta_t(double beta_sq, double t) {
  const double z = beta_sq * t * t;  // (beta t)^2, sign carries the branch
  if (std::abs(z) < 1e-8) return t * (1.0 + z / 6.0 + z * z / 120.0);
  if (beta_sq > 0.0) {
    const double b = std::sqrt(beta_sq);
    return std::sinh(b * t) / b;
  }
  const double b = std::sqrt(-beta_sq);
  return std::sin(b * t) / b;
}

PropagatorMatrix propagator(const EvolutionParams& params, const Eigen::VectorXd& k, double t) {
  check_inputs(params, k, t);
  const int S = params.g.S;
  const double b2 = beta_squared(k);
  const double damp = std::exp(-params.alpha * t);
  const double c1 = damp * cosh_beta_t(b2, t);
  const double c2 = damp * sinhc_beta_t(b2, t);

  Eigen::MatrixXd re = c1 * Eigen::MatrixXd::Identity(S, S) + c2 * params.g.e[0];
  Eigen::MatrixXd im = Eigen::MatrixXd::Zero(S, S);
  for (int mu = 0; mu < params.g.d; ++mu) im += (c2 * k(mu)) * params.g.e[mu + 1];

  PropagatorMatrix out;
  out.k = k;
  out.t = t;
  out.M = re.cast<std::complex<double>>() + std::complex<double>(0.0, 1.0) * im.cast<std::complex<double>>();
  return out;
}

PropagatorMatrix expm_oracle(const EvolutionParams& params, const Eigen::VectorXd& k, double t) {
  check_inputs(params, k, t);
  const int S = params.g.S;

  Eigen::MatrixXcd A = (-params.alpha) * Eigen::MatrixXcd::Identity(S, S) +
                       params.g.e[0].cast<std::complex<double>>();
  for (int mu = 0; mu < params.g.d; ++mu)
    A += std::complex<double>(0.0, k(mu)) * params.g.e[mu + 1].cast<std::complex<double>>();
  A *= t;

  // Scale so the Taylor series converges fast, then square back.
  double norm = A.cwiseAbs().rowwise().sum().maxCoeff();  // induced inf-norm
  int s = 0;
  while (norm > 0.5) {
    norm *= 0.5;
    ++s;
  }
  const double scale = std::ldexp(1.0, -s);
  const Eigen::MatrixXcd C = scale * A;

  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Identity(S, S);
  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(S, S);
  for (int n = 1; n <= 40; ++n) {
    term = (term * C) / static_cast<double>(n);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) break;
  }
  for (int i = 0; i < s; ++i) sum = sum * sum;

  PropagatorMatrix out;
  out.k = k;
  out.t = t;
  out.M = std::move(sum);
  return out;
}

RealBlockPropagator real_blocks(const EvolutionParams& params, const Eigen::VectorXd& k, double t) {
  check_inputs(params, k, t);
  const int S = params.g.S;
  const double b2 = beta_squared(k);
  const double damp = std::exp(-params.alpha * t);
  const double c1 = damp * cosh_beta_t(b2, t);
  const double c2 = damp * sinhc_beta_t(b2, t);

  RealBlockPropagator out;
  out.D00 = c1 * Eigen::MatrixXd::Identity(S, S) + c2 * params.g.e[0];
  out.D10 = Eigen::MatrixXd::Zero(S, S);
  for (int mu = 0; mu < params.g.d; ++mu) out.D10 += (c2 * k(mu)) * params.g.e[mu + 1];
  out.D01 = -out.D10;
  out.D11 = out.D00;
  return out;
}

ZeroModeReport zero_mode_stochasticity(const EvolutionParams& params, double t) {
  const Eigen::VectorXd k0 = Eigen::VectorXd::Zero(params.g.d);
  const RealBlockPropagator blocks = real_blocks(params, k0, t);

  ZeroModeReport report;
  report.column_sums = blocks.D00.colwise().sum();
  report.min_entry = blocks.D00.minCoeff(&report.min_row, &report.min_col);
  return report;
}

}  // namespace diraclab
