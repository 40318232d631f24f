#pragma once

#include <vector>

#include "diraclab/field.hpp"

namespace diraclab {

/** Two-component density (p+, p-) on a periodic 1d lattice of n sites with
 *  spacing dx.  Site j sits at x_j = -n/2 dx + j dx, matching GridSpec
 *  sites when n dx = 2L. */
struct LatticeField {
  int n = 0;
  double dx = 0.0;
  std::vector<double> plus;
  std::vector<double> minus;

  double mass() const;
  double min_value() const;
};

LatticeField zero_lattice(int n, double dx);

/** Sitewise mixing by the row-stochastic matrix
 *  V(tau) = 1/2 [[1+e^{-2 tau}, 1-e^{-2 tau}], [1-e^{-2 tau}, 1+e^{-2 tau}]].
 *  Entries of V are nonnegative in exact floating point, so nonnegative
 *  fields stay exactly nonnegative. */
LatticeField mix_step(const LatticeField& f, double tau);

/** Transport by whole sites: p+ moves right, p- moves left, periodically.
 *  A pure index permutation, no arithmetic. */
LatticeField shift_step(const LatticeField& f, int steps);

/** N alternating substeps, mix_step(t/N) then shift_step(1), with the
 *  CFL-exact coupling t/N = dx enforced to 1e-12.  First-order accurate in
 *  1/N and exactly positivity preserving. */
LatticeField trotter_evolve(const LatticeField& p0, double t, int N);

enum class GaugeDirection { ToPsi, ToP };

/** Multiplies by e^{+lambda t} (ToPsi) or e^{-lambda t} (ToP): the map
 *  between the mass-conserving pair and the damped pair of equations. */
LatticeField gauge_transform(const LatticeField& f, double lambda, double t, GaugeDirection dir);
DensityField gauge_transform(const DensityField& f, double lambda, double t, GaugeDirection dir);

}  // namespace diraclab
