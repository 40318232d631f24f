#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "diraclab/clifford.hpp"
#include "diraclab/field.hpp"

namespace diraclab {

/** Finitely many pairwise distinct wavevectors. */
struct KPointSet {
  std::vector<Eigen::VectorXd> points;
  void validate(int d) const;  // throws std::invalid_argument
};

struct BochnerResult {
  double min_eigenvalue = 0.0;
  bool is_psd = false;  // min_eigenvalue >= -1e-10
};

/** Assembles F_ab = phi(k_a - k_b) and reports the smallest eigenvalue of
 *  its Hermitian part.  For phi the transform of a nonnegative density F is
 *  a Gram matrix, so a clearly negative eigenvalue certifies signed data.
 *  phi returning nullopt for a needed difference is an error. */
BochnerResult bochner_matrix_check(
    const KPointSet& kset,
    const std::function<std::optional<std::complex<double>>(const Eigen::VectorXd&)>& phi);

/** Componentwise test of 0 <= varphi(0) + varphi(k) (tolerance -1e-10),
 *  the first consequence of positivity in Fourier variables. */
std::vector<bool> ineq_necessary_check(const Eigen::VectorXd& varphi0,
                                       const Eigen::VectorXd& varphik);

/** Entry ranges forced on e_0 by positivity of the zero mode: diagonal
 *  >= -1, off-diagonal >= 0, and for each column q the identity
 *  cosh t + sinh t * colsum_q = e^{alpha t}, tested at t in {0.1, 1, 10}. */
struct EntryConstraintViolation {
  enum class Kind { DiagonalBelowMinusOne, NegativeOffDiagonal, ColumnSumIdentity };
  Kind kind;
  int p = -1;
  int q = -1;
  double value = 0.0;
  double t = 0.0;  // only for ColumnSumIdentity
};

struct EntryConstraintReport {
  std::vector<EntryConstraintViolation> violations;
  bool ok() const { return violations.empty(); }
};

EntryConstraintReport e0_entry_constraints(const Eigen::MatrixXd& e0, double alpha);

/** exp(-sum_mu |k_mu|): transform of the product Cauchy density. */
double cauchy_transform(const Eigen::VectorXd& k);

/** The two shift-dependent amplitudes that multiply (e0)_pq and
 *  k (e_nu)_pq in the Fourier positivity inequality for Cauchy data
 *  f(x - a e_nu):
 *    cos_part = g beta^{-1} cos(K a) sinh(beta t)
 *    sin_part = -g beta^{-1} sin(K a) sinh(beta t)
 *  with beta^2 = 1 - K^2 and g the transform value at K e_nu. */
struct WitnessAmplitudes {
  double cos_part = 0.0;
  double sin_part = 0.0;
};

WitnessAmplitudes witness_amplitudes(double g_of_k, double K, double a, double t);

enum class WitnessKind { Analytic, GridViolation };

/** A certified positivity failure.  Indices are 0-based; `a` is the Cauchy
 *  shift vector (pi/2K along axis nu); `value` is the negative quantity:
 *  the analytic inequality value, or the most negative grid entry. */
struct Witness {
  WitnessKind kind = WitnessKind::Analytic;
  int p = 0;
  int q = 0;
  int nu = 0;
  double K = 0.0;
  Eigen::VectorXd a;
  double t = 0.0;
  double value = 0.0;
};

/** Closed-form check: with (e0hat)_pq = 0 (required; p, q in different
 *  blocks) and Cauchy data shifted so cos(K a) = 0, positivity demands
 *  0 <= -g(K e_nu) sinhc(1-K^2, t) K (e_nu_hat)_pq at both +-K.  The right
 *  side is odd in K, so any nonzero (e_nu_hat)_pq yields a witness; the
 *  returned K carries the failing sign. */
std::optional<Witness> analytic_witness(const GeneratorSet& g, const std::vector<int>& perm,
                                        int p, int q, int nu, double K, double t);

/** End-to-end counterexample for a structurally non-preserving set: sweep
 *  analytic_witness over off-block pairs and axes (K snapped to a grid
 *  wavenumber near 0.5), build the corresponding Cauchy field, scan
 *  positivity at t in {0.25, 0.5, 1, 2} and return the most negative grid
 *  entry as a GridViolation witness.  Throws internal_inconsistency_error
 *  if no analytic witness exists or the grid shows no negativity. */
Witness find_counterexample(const GeneratorSet& g, double alpha, const GridSpec& grid);

}  // namespace diraclab
