#include "diraclab/trotter.hpp"

#include <cmath>
#include <stdexcept>

namespace diraclab {

namespace {

void check_lattice(const LatticeField& f) {
  if (f.n < 1) throw std::invalid_argument("LatticeField: n must be >= 1");
  if (!(f.dx > 0.0)) throw std::invalid_argument("LatticeField: dx must be positive");
  if (f.plus.size() != static_cast<size_t>(f.n) || f.minus.size() != static_cast<size_t>(f.n))
    throw std::invalid_argument("LatticeField: component size mismatch");
}

}  // namespace

double LatticeField::mass() const {
  double sum = 0.0;
  for (double v : plus) sum += v;
  for (double v : minus) sum += v;
  return sum * dx;
}

double LatticeField::min_value() const {
  double m = plus.empty() ? 0.0 : plus[0];
  for (double v : plus) m = std::min(m, v);
  for (double v : minus) m = std::min(m, v);
  return m;
}

LatticeField zero_lattice(int n, double dx) {
  LatticeField f;
  f.n = n;
  f.dx = dx;
  f.plus.assign(n, 0.0);
  f.minus.assign(n, 0.0);
  check_lattice(f);
  return f;
}

LatticeField mix_step(const LatticeField& f, double tau) {
  check_lattice(f);
  if (!(tau > 0.0)) throw std::invalid_argument("mix_step: tau must be positive");
  const double e = std::exp(-2.0 * tau);
  const double stay = 0.5 * (1.0 + e);
  const double swap = 0.5 * (1.0 - e);  // >= 0 exactly since e <= 1

  LatticeField out = f;
  for (int j = 0; j < f.n; ++j) {
    const double a = f.plus[j];
    const double b = f.minus[j];
    out.plus[j] = stay * a + swap * b;
    out.minus[j] = swap * a + stay * b;
  }
  return out;
}

LatticeField shift_step(const LatticeField& f, int steps) {
  check_lattice(f);
  const int n = f.n;
  const int s = ((steps % n) + n) % n;

  LatticeField out = zero_lattice(n, f.dx);
  for (int j = 0; j < n; ++j) {
    out.plus[(j + s) % n] = f.plus[j];
    out.minus[j] = f.minus[(j + s) % n];
  }
  return out;
}

LatticeField trotter_evolve(const LatticeField& p0, double t, int N) {
  check_lattice(p0);
  if (!(t > 0.0)) throw std::invalid_argument("trotter_evolve: t must be positive");
  if (N < 1) throw std::invalid_argument("trotter_evolve: N must be >= 1");
  const double tau = t / N;
  if (std::abs(tau - p0.dx) > 1e-12)
    throw std::invalid_argument("trotter_evolve: requires t/N == dx (transport by whole sites)");

  LatticeField f = p0;
  for (int step = 0; step < N; ++step) f = shift_step(mix_step(f, tau), 1);
  return f;
}

LatticeField gauge_transform(const LatticeField& f, double lambda, double t, GaugeDirection dir) {
  check_lattice(f);
  const double factor = std::exp((dir == GaugeDirection::ToPsi ? lambda : -lambda) * t);
  LatticeField out = f;
  for (double& v : out.plus) v *= factor;
  for (double& v : out.minus) v *= factor;
  return out;
}

DensityField gauge_transform(const DensityField& f, double lambda, double t, GaugeDirection dir) {
  const double factor = std::exp((dir == GaugeDirection::ToPsi ? lambda : -lambda) * t);
  DensityField out = f;
  for (double& v : out.values) v *= factor;
  return out;
}

}  // namespace diraclab
