#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <vector>

namespace diraclab {

/** Periodic box [-L, L)^d sampled on n points per axis, n a power of two.
 *  Sites x_j = -L + j dx with dx = 2L/n; wavenumbers k_m = pi m / L with
 *  m in [-n/2, n/2). */
struct GridSpec {
  int d = 1;
  int n = 1024;
  double L = 40.0;

  double dx() const { return 2.0 * L / n; }
  std::int64_t site_count() const;
  double coordinate(int j) const { return -L + j * dx(); }
  /** signed wavenumber for unsigned FFT index u in [0, n) */
  double wavenumber(int u) const {
    const int m = (u < n / 2) ? u : u - n;
    return M_PI * m / L;
  }
  void validate() const;  // throws std::invalid_argument
};

/** S nonconserved density components sampled on the grid; storage is
 *  component-major with sites in lexicographic order of (x1, .., xd). */
struct DensityField {
  GridSpec grid;
  int S = 0;
  std::vector<double> values;

  double& at(int comp, std::int64_t site) { return values[comp * grid.site_count() + site]; }
  double at(int comp, std::int64_t site) const { return values[comp * grid.site_count() + site]; }

  /** dx^d * sum over all components and sites */
  double mass() const;

  struct MinEntry {
    double value = 0.0;
    int component = 0;
    std::int64_t site = 0;
  };
  MinEntry min_entry() const;
};

DensityField zero_field(const GridSpec& grid, int S);

/** Decode a flat site index to per-axis indices (axis 0 slowest). */
std::vector<int> site_multi_index(const GridSpec& grid, std::int64_t site);

/** Product Cauchy density f(x - a) = prod_mu pi^{-1} (1 + (x_mu - a_mu)^2)^{-1},
 *  represented on the torus by its periodization (wrapped Cauchy, closed form),
 *  so the grid transform matches exp(-sum |k_mu|) e^{ik.a} to machine
 *  precision.  Placed in the component that the block permutation `perm`
 *  (new -> original index) maps to position q; empty perm means identity.
 *  Renormalized to unit discrete mass. */
DensityField cauchy_initial(const GridSpec& grid, int S, int q, const Eigen::VectorXd& a,
                            const std::vector<int>& perm = {});

/** Indicator of the box prod_mu |x_mu - c_mu| <= halfwidth, unit mass. */
DensityField box_initial(const GridSpec& grid, int S, int component, const Eigen::VectorXd& center,
                         double halfwidth);

/** Isotropic Gaussian exp(-|x - c|^2 / (2 sigma^2)), unit mass. */
DensityField gaussian_initial(const GridSpec& grid, int S, int component,
                              const Eigen::VectorXd& center, double sigma);

/** Unit mass concentrated on the site nearest to `position`. */
DensityField delta_initial(const GridSpec& grid, int S, int component,
                           const Eigen::VectorXd& position);

}  // namespace diraclab
