#include "diraclab/prw.hpp"

#include <cmath>
#include <stdexcept>

#include "diraclab/rng.hpp"

namespace diraclab {

namespace {

void check_config(const PrwConfig& cfg) {
  if (!(cfg.lambda >= 0.0)) throw std::invalid_argument("prw_simulate: lambda must be nonnegative");
  if (!(cfg.c > 0.0)) throw std::invalid_argument("prw_simulate: c must be positive");
  if (cfg.n_walkers < 1) throw std::invalid_argument("prw_simulate: need at least one walker");
  if (!(cfg.dt > 0.0)) throw std::invalid_argument("prw_simulate: dt must be positive");
  if (!(cfg.lambda * cfg.dt < 1.0))
    throw std::invalid_argument("prw_simulate: lambda*dt must be < 1");
}

}  // namespace

WalkerEnsemble prw_simulate(const PrwConfig& cfg, double t, const WalkerEnsemble& initial) {
  check_config(cfg);
  if (!(t >= 0.0)) throw std::invalid_argument("prw_simulate: t must be nonnegative");
  if (initial.positions.size() != static_cast<size_t>(cfg.n_walkers) ||
      initial.states.size() != static_cast<size_t>(cfg.n_walkers))
    throw std::invalid_argument("prw_simulate: initial ensemble size mismatch");

  const std::int64_t steps = static_cast<std::int64_t>(std::ceil(t / cfg.dt - 1e-12));
  const double pflip = cfg.lambda * cfg.dt;
  const double move = cfg.c * cfg.dt;

  WalkerEnsemble out = initial;
  for (std::int64_t w = 0; w < cfg.n_walkers; ++w) {
    double pos = out.positions[w];
    int st = out.states[w];
    for (std::int64_t step = 0; step < steps; ++step) {
      const auto words = rng::Philox2x64::block(cfg.seed, static_cast<std::uint64_t>(w),
                                                static_cast<std::uint64_t>(step));
      if (rng::uniform01(words[0]) < pflip) st = -st;
      pos += st * move;
    }
    out.positions[w] = pos;
    out.states[w] = static_cast<std::int8_t>(st);
  }
  return out;
}

WalkerEnsemble prw_simulate(const PrwConfig& cfg, double t) {
  check_config(cfg);
  WalkerEnsemble initial;
  initial.positions.assign(cfg.n_walkers, 0.0);
  initial.states.assign(cfg.n_walkers, 1);
  return prw_simulate(cfg, t, initial);
}

LatticeField bin_ensemble(const WalkerEnsemble& ensemble, int n, double dx) {
  if (ensemble.positions.size() != ensemble.states.size())
    throw std::invalid_argument("bin_ensemble: ensemble size mismatch");
  if (ensemble.positions.empty()) throw std::invalid_argument("bin_ensemble: empty ensemble");

  LatticeField f = zero_lattice(n, dx);
  const double weight = 1.0 / (static_cast<double>(ensemble.positions.size()) * dx);
  const double origin = -0.5 * n * dx;
  for (size_t w = 0; w < ensemble.positions.size(); ++w) {
    // site j covers [x_j - dx/2, x_j + dx/2)
    long j = std::lround((ensemble.positions[w] - origin) / dx);
    j = ((j % n) + n) % n;
    if (ensemble.states[w] > 0)
      f.plus[j] += weight;
    else
      f.minus[j] += weight;
  }
  return f;
}

double l1_distance(const LatticeField& a, const LatticeField& b) {
  if (a.n != b.n || a.dx != b.dx)
    throw std::invalid_argument("l1_distance: lattices must share n and dx");
  double sum = 0.0;
  for (int j = 0; j < a.n; ++j)
    sum += std::abs(a.plus[j] - b.plus[j]) + std::abs(a.minus[j] - b.minus[j]);
  return sum * a.dx;
}

}  // namespace diraclab
