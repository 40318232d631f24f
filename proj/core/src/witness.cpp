#include "diraclab/witness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "diraclab/exceptions.hpp"
#include "diraclab/propagator.hpp"
#include "diraclab/spectral.hpp"

namespace diraclab {

void KPointSet::validate(int d) const {
  if (points.empty()) throw std::invalid_argument("KPointSet: empty");
  for (const auto& k : points)
    if (k.size() != d) throw std::invalid_argument("KPointSet: dimension mismatch");
  for (size_t a = 0; a < points.size(); ++a)
    for (size_t b = a + 1; b < points.size(); ++b)
      if ((points[a] - points[b]).cwiseAbs().maxCoeff() == 0.0)
        throw std::invalid_argument("KPointSet: points must be pairwise distinct");
}

BochnerResult bochner_matrix_check(
    const KPointSet& kset,
    const std::function<std::optional<std::complex<double>>(const Eigen::VectorXd&)>& phi) {
  if (kset.points.empty()) throw std::invalid_argument("bochner_matrix_check: empty point set");
  const int d = static_cast<int>(kset.points.front().size());
  kset.validate(d);

  const int N = static_cast<int>(kset.points.size());
  Eigen::MatrixXcd F(N, N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      const auto value = phi(kset.points[a] - kset.points[b]);
      if (!value) {
        std::ostringstream os;
        os << "bochner_matrix_check: missing value at difference (" << a << "," << b << ")";
        throw std::invalid_argument(os.str());
      }
      F(a, b) = *value;
    }

  const Eigen::MatrixXcd H = 0.5 * (F + F.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(H);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("bochner_matrix_check: eigen solve failed");

  BochnerResult out;
  out.min_eigenvalue = solver.eigenvalues()(0);
  out.is_psd = out.min_eigenvalue >= -1e-10;
  return out;
}

std::vector<bool> ineq_necessary_check(const Eigen::VectorXd& varphi0,
                                       const Eigen::VectorXd& varphik) {
  if (varphi0.size() != varphik.size())
    throw std::invalid_argument("ineq_necessary_check: size mismatch");
  std::vector<bool> pass(varphi0.size());
  for (int i = 0; i < varphi0.size(); ++i) pass[i] = (varphi0(i) + varphik(i) >= -1e-10);
  return pass;
}

EntryConstraintReport e0_entry_constraints(const Eigen::MatrixXd& e0, double alpha) {
  const int S = static_cast<int>(e0.rows());
  if (e0.cols() != S) throw std::invalid_argument("e0_entry_constraints: matrix must be square");
  if ((e0 - e0.transpose()).cwiseAbs().maxCoeff() != 0.0)
    throw std::invalid_argument("e0_entry_constraints: matrix must be symmetric");

  EntryConstraintReport report;
  using Kind = EntryConstraintViolation::Kind;
  for (int p = 0; p < S; ++p) {
    if (e0(p, p) < -1.0)
      report.violations.push_back({Kind::DiagonalBelowMinusOne, p, p, e0(p, p), 0.0});
    for (int q = 0; q < S; ++q)
      if (p != q && e0(p, q) < 0.0)
        report.violations.push_back({Kind::NegativeOffDiagonal, p, q, e0(p, q), 0.0});
  }

  // Stochasticity of the zero mode pins every column sum through
  // cosh t + sinh t * colsum = e^{alpha t}; three t values over-determine it.
  for (double t : {0.1, 1.0, 10.0}) {
    const double target = std::exp(alpha * t);
    for (int q = 0; q < S; ++q) {
      const double lhs = std::cosh(t) + std::sinh(t) * e0.col(q).sum();
      if (std::abs(lhs - target) > 1e-12 * std::max(std::abs(target), std::cosh(t)))
        report.violations.push_back({Kind::ColumnSumIdentity, -1, q, lhs - target, t});
    }
  }
  return report;
}

double cauchy_transform(const Eigen::VectorXd& k) {
  double sum = 0.0;
  for (int mu = 0; mu < k.size(); ++mu) sum += std::abs(k(mu));
  return std::exp(-sum);
}

WitnessAmplitudes witness_amplitudes(double g_of_k, double K, double a, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("witness_amplitudes: t must be nonnegative");
  const double sc = sinhc_beta_t(1.0 - K * K, t);
  return {g_of_k * std::cos(K * a) * sc, -g_of_k * std::sin(K * a) * sc};
}

std::optional<Witness> analytic_witness(const GeneratorSet& g, const std::vector<int>& perm,
                                        int p, int q, int nu, double K, double t) {
  if (g.e.size() != static_cast<size_t>(g.d) + 1)
    throw std::invalid_argument("analytic_witness: malformed generator set");
  if (perm.size() != static_cast<size_t>(g.S))
    throw std::invalid_argument("analytic_witness: permutation length mismatch");
  if (p == q || p < 0 || q < 0 || p >= g.S || q >= g.S)
    throw std::invalid_argument("analytic_witness: need distinct p, q in range");
  if (nu < 0 || nu >= g.d) throw std::invalid_argument("analytic_witness: nu out of range");
  if (!(t > 0.0)) throw std::invalid_argument("analytic_witness: t must be positive");
  if (!std::isfinite(K)) throw std::invalid_argument("analytic_witness: K must be finite");

  if (g.e[0](perm[p], perm[q]) != 0.0)
    throw std::invalid_argument("analytic_witness: requires (e0)_pq = 0 after permutation");

  const double enu_pq = g.e[nu + 1](perm[p], perm[q]);
  if (enu_pq == 0.0 || K == 0.0) return std::nullopt;

  const auto rhs = [&](double kk) {
    Eigen::VectorXd kvec = Eigen::VectorXd::Zero(g.d);
    kvec(nu) = kk;
    return -cauchy_transform(kvec) * sinhc_beta_t(1.0 - kk * kk, t) * kk * enu_pq;
  };

  const double v_pos = rhs(K);
  const double v_neg = rhs(-K);
  const double value = std::min(v_pos, v_neg);
  if (!(value < -1e-12)) return std::nullopt;

  Witness w;
  w.kind = WitnessKind::Analytic;
  w.p = p;
  w.q = q;
  w.nu = nu;
  w.K = (v_pos <= v_neg) ? K : -K;
  w.a = Eigen::VectorXd::Zero(g.d);
  w.a(nu) = M_PI / (2.0 * w.K);
  w.t = t;
  w.value = value;
  return w;
}

Witness find_counterexample(const GeneratorSet& g, double alpha, const GridSpec& grid) {
  grid.validate();
  if (grid.d != g.d) throw std::invalid_argument("find_counterexample: grid/generator dimension mismatch");

  const TheoremVerdict verdict = theorem_check(g, alpha);
  if (verdict.preserves)
    throw std::invalid_argument("find_counterexample: the system preserves positivity");
  const bool structural =
      std::any_of(verdict.failed_conditions.begin(), verdict.failed_conditions.end(),
                  [](TheoremCondition c) { return c != TheoremCondition::Alpha; });
  if (!structural)
    throw std::invalid_argument(
        "find_counterexample: only alpha fails; the Cauchy-shift construction needs a structural failure");

  const BlockStructure bs = detect_reducibility(g.e[0]);
  std::vector<int> block_of(g.S);
  for (size_t b = 0; b < bs.blocks.size(); ++b)
    for (int idx : bs.blocks[b]) block_of[idx] = static_cast<int>(b);

  // Snap the probe wavenumber to the grid so Fourier-side checks of the
  // violating run can read the same mode directly.
  const int m = std::max(1, static_cast<int>(std::lround(0.5 * grid.L / M_PI)));
  const double K = M_PI * m / grid.L;
  if (!(K < 1.0))
    throw std::invalid_argument("find_counterexample: grid too small to place K inside (0, 1)");

  std::optional<Witness> best;
  for (int p = 0; p < g.S; ++p)
    for (int q = 0; q < g.S; ++q) {
      if (p == q || block_of[bs.permutation[p]] == block_of[bs.permutation[q]]) continue;
      for (int nu = 0; nu < g.d; ++nu) {
        const auto w = analytic_witness(g, bs.permutation, p, q, nu, K, 1.0);
        if (w && (!best || w->value < best->value)) best = w;
      }
    }
  if (!best)
    throw internal_inconsistency_error(
        "find_counterexample: no analytic witness among off-block pairs; "
        "structural failure should always produce one");

  const DensityField p0 = cauchy_initial(grid, g.S, best->q, best->a, bs.permutation);
  const PositivityReport scan =
      positivity_scan({alpha, g}, p0, {0.25, 0.5, 1.0, 2.0});

  Witness out = *best;
  out.kind = WitnessKind::GridViolation;
  out.value = 0.0;
  for (const auto& sample : scan.samples) {
    if (sample.min_value < out.value) {
      out.value = sample.min_value;
      out.t = sample.t;
    }
  }
  if (!(out.value < 0.0))
    throw internal_inconsistency_error(
        "find_counterexample: analytic witness exists but the grid run stayed nonnegative");
  return out;
}

}  // namespace diraclab
