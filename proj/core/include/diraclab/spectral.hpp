#pragma once

#include <complex>
#include <vector>

#include "diraclab/field.hpp"
#include "diraclab/propagator.hpp"
#include "diraclab/trotter.hpp"

namespace diraclab {

/** One-shot evolution to time t: DFT each component, multiply every mode by
 *  the closed-form matrix M(k, t), transform back.  No time stepping, so
 *  there is no accumulation of step error.  The inverse transform must come
 *  out real; a max imaginary residue above 1e-8 aborts with
 *  internal_inconsistency_error (it indicates a broken mode matrix, not a
 *  data problem). */
DensityField evolve(const EvolutionParams& params, const DensityField& p0, double t);

struct PositivitySample {
  double t = 0.0;
  double mass = 0.0;
  double min_value = 0.0;
  int component = 0;
  std::int64_t site = 0;
};

struct PositivityReport {
  std::vector<PositivitySample> samples;
};

/** Evolves p0 once per sample time (sorted, nonnegative) and records mass
 *  and the most negative entry with its location. */
PositivityReport positivity_scan(const EvolutionParams& params, const DensityField& p0,
                                 const std::vector<double>& t_samples);

/** Discrete analogue of int u(x) e^{+i k.x} dx at the grid wavenumbers:
 *  dx^d sum_j u_j e^{+i k.x_j}.  Mode coefficients are periodic in each
 *  index with period n, so differences of grid wavenumbers wrap exactly. */
struct FieldTransform {
  GridSpec grid;
  int S = 0;
  std::vector<std::complex<double>> modes;  // component-major, FFT index order

  /** signed per-axis mode integers, wrapped mod n */
  std::complex<double> at(int comp, const std::vector<int>& m) const;
  Eigen::VectorXd wavevector(const std::vector<int>& m) const;
};

FieldTransform spectral_transform(const DensityField& field);

/** Aggregates a two-component 1d density into n_bins equal bins (n_bins must
 *  divide the grid size): the returned density at bin j is the field's
 *  trapezoid-quadrature mass over [x_j - dx/2, x_j + dx/2] divided by the
 *  bin width.  A position histogram estimates exactly these bin masses, so
 *  Monte Carlo histograms are compared against the rebinned high-resolution
 *  solution rather than against point samples (which differ from bin masses
 *  by O(dx) wherever the density has a jump or an atom). */
LatticeField rebin(const DensityField& field, int n_bins);

}  // namespace diraclab
