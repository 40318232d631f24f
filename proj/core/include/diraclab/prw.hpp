#pragma once

#include <cstdint>
#include <vector>

#include "diraclab/trotter.hpp"

namespace diraclab {

/** Persistent random walk: flip the velocity sign with rate lambda, move
 *  with speed c.  Discretized with step dt; the per-step flip probability
 *  lambda*dt must stay below 1. */
struct PrwConfig {
  double lambda = 1.0;
  double c = 1.0;
  std::int64_t n_walkers = 0;
  std::uint64_t seed = 0;
  double dt = 1e-3;
};

struct WalkerEnsemble {
  std::vector<double> positions;
  std::vector<std::int8_t> states;  // +1 or -1
};

/** ceil(t/dt) steps; each step flips with probability lambda*dt, then moves
 *  by state * c * dt.  Walker w draws from its own Philox substream
 *  (key = seed, counter = (w, step)), so results are reproducible and
 *  independent of evaluation order.  All walkers start at the origin in the
 *  + state unless an initial ensemble is supplied. */
WalkerEnsemble prw_simulate(const PrwConfig& cfg, double t);
WalkerEnsemble prw_simulate(const PrwConfig& cfg, double t, const WalkerEnsemble& initial);

/** Histogram on lattice bins [x_j - dx/2, x_j + dx/2), periodic, normalized
 *  so that mass() == 1; values are densities (bin mass / dx). */
LatticeField bin_ensemble(const WalkerEnsemble& ensemble, int n, double dx);

/** sum_j (|d plus_j| + |d minus_j|) dx, i.e. total variation of bin masses. */
double l1_distance(const LatticeField& a, const LatticeField& b);

}  // namespace diraclab
