#include "diraclab/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "diraclab/exceptions.hpp"

namespace diraclab {

namespace {

// FFTW's planner mutates global state; execution on distinct buffers is safe.
std::mutex fftw_planner_mutex;

class FftWorkspace {
 public:
  FftWorkspace(const GridSpec& grid) : total_(grid.site_count()) {
    buf_ = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * total_));
    if (!buf_) throw std::bad_alloc();
    std::vector<int> dims(grid.d, grid.n);
    std::lock_guard<std::mutex> lock(fftw_planner_mutex);
    // FFTW_BACKWARD carries e^{+i k x}, matching the transform convention.
    fwd_ = fftw_plan_dft(grid.d, dims.data(), buf_, buf_, FFTW_BACKWARD, FFTW_ESTIMATE);
    inv_ = fftw_plan_dft(grid.d, dims.data(), buf_, buf_, FFTW_FORWARD, FFTW_ESTIMATE);
    if (!fwd_ || !inv_) throw std::runtime_error("evolve: FFTW planning failed");
  }

  ~FftWorkspace() {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex);
    fftw_destroy_plan(fwd_);
    fftw_destroy_plan(inv_);
    fftw_free(buf_);
  }

  FftWorkspace(const FftWorkspace&) = delete;
  FftWorkspace& operator=(const FftWorkspace&) = delete;

  std::complex<double>* data() { return reinterpret_cast<std::complex<double>*>(buf_); }
  void forward() { fftw_execute(fwd_); }
  void inverse() { fftw_execute(inv_); }
  std::int64_t size() const { return total_; }

 private:
  std::int64_t total_;
  fftw_complex* buf_;
  fftw_plan fwd_;
  fftw_plan inv_;
};

void forward_all(const DensityField& field, FftWorkspace& ws,
                 std::vector<std::complex<double>>& modes) {
  const std::int64_t total = ws.size();
  modes.resize(static_cast<size_t>(field.S) * total);
  for (int s = 0; s < field.S; ++s) {
    std::complex<double>* buf = ws.data();
    const double* src = field.values.data() + static_cast<std::int64_t>(s) * total;
    for (std::int64_t i = 0; i < total; ++i) buf[i] = src[i];
    ws.forward();
    std::copy(buf, buf + total, modes.begin() + static_cast<std::int64_t>(s) * total);
  }
}

}  // namespace

DensityField evolve(const EvolutionParams& params, const DensityField& p0, double t) {
  p0.grid.validate();
  if (!(t >= 0.0)) throw std::invalid_argument("evolve: t must be nonnegative");
  if (params.g.d != p0.grid.d) throw std::invalid_argument("evolve: generator/grid dimension mismatch");
  if (params.g.S != p0.S) throw std::invalid_argument("evolve: component count mismatch");
  for (double v : p0.values)
    if (!std::isfinite(v)) throw std::invalid_argument("evolve: initial field has non-finite entries");

  const GridSpec& grid = p0.grid;
  const int d = grid.d;
  const int n = grid.n;
  const int S = p0.S;
  const std::int64_t total = grid.site_count();

  FftWorkspace ws(grid);
  std::vector<std::complex<double>> modes;
  forward_all(p0, ws, modes);

  // Per-axis wavenumbers in FFT index order.
  std::vector<double> kax(n);
  for (int u = 0; u < n; ++u) kax[u] = grid.wavenumber(u);

  const double damp = std::exp(-params.alpha * t);
  const double* e0 = params.g.e[0].data();  // Eigen default column-major; generators symmetric
  std::vector<const double*> emu(d);
  for (int mu = 0; mu < d; ++mu) emu[mu] = params.g.e[mu + 1].data();

  std::vector<std::complex<double>> x(S), y(S);
  std::vector<int> idx(d, 0);
  std::vector<double> kvec(d, 0.0);
  for (std::int64_t site = 0; site < total; ++site) {
    double ksq = 0.0;
    for (int mu = 0; mu < d; ++mu) {
      kvec[mu] = kax[idx[mu]];
      ksq += kvec[mu] * kvec[mu];
      // A Nyquist index is its own conjugate partner: its grid content is the
      // cosine pair (+k, -k), whose evolutions average to a vanishing odd
      // (imaginary) coupling.  |k|^2 above still counts the full wavenumber.
      if (idx[mu] == n / 2) kvec[mu] = 0.0;
    }
    const double b2 = 1.0 - ksq;
    const double c1 = damp * cosh_beta_t(b2, t);
    const double c2 = damp * sinhc_beta_t(b2, t);

    for (int s = 0; s < S; ++s) x[s] = modes[s * total + site];
    for (int r = 0; r < S; ++r) {
      std::complex<double> acc = c1 * x[r];
      double re_row = 0.0, im_row = 0.0;
      for (int s = 0; s < S; ++s) {
        double coeff_re = e0[s * S + r];  // (r, s) entry, column-major
        double coeff_im = 0.0;
        for (int mu = 0; mu < d; ++mu) coeff_im += kvec[mu] * emu[mu][s * S + r];
        re_row += coeff_re * x[s].real() - coeff_im * x[s].imag();
        im_row += coeff_re * x[s].imag() + coeff_im * x[s].real();
      }
      acc += c2 * std::complex<double>(re_row, im_row);
      y[r] = acc;
    }
    for (int s = 0; s < S; ++s) modes[s * total + site] = y[s];

    for (int mu = d - 1; mu >= 0; --mu) {
      if (++idx[mu] < n) break;
      idx[mu] = 0;
    }
  }

  DensityField out = zero_field(grid, S);
  out.S = S;
  const double inv_total = 1.0 / static_cast<double>(total);
  double max_imag = 0.0;
  for (int s = 0; s < S; ++s) {
    std::complex<double>* buf = ws.data();
    std::copy(modes.begin() + static_cast<std::int64_t>(s) * total,
              modes.begin() + static_cast<std::int64_t>(s + 1) * total, buf);
    ws.inverse();
    double* dst = out.values.data() + static_cast<std::int64_t>(s) * total;
    for (std::int64_t i = 0; i < total; ++i) {
      const std::complex<double> v = buf[i] * inv_total;
      max_imag = std::max(max_imag, std::abs(v.imag()));
      dst[i] = v.real();
    }
  }
  if (max_imag >= 1e-8) {
    std::ostringstream os;
    os << "evolve: imaginary residue " << max_imag << " exceeds 1e-8; mode matrix is inconsistent";
    throw internal_inconsistency_error(os.str());
  }
  return out;
}

PositivityReport positivity_scan(const EvolutionParams& params, const DensityField& p0,
                                 const std::vector<double>& t_samples) {
  if (!std::is_sorted(t_samples.begin(), t_samples.end()))
    throw std::invalid_argument("positivity_scan: sample times must be sorted");
  for (double t : t_samples)
    if (!(t >= 0.0)) throw std::invalid_argument("positivity_scan: sample times must be nonnegative");

  PositivityReport report;
  report.samples.reserve(t_samples.size());
  for (double t : t_samples) {
    DensityField pt = evolve(params, p0, t);
    const DensityField::MinEntry m = pt.min_entry();
    report.samples.push_back({t, pt.mass(), m.value, m.component, m.site});
  }
  return report;
}

std::complex<double> FieldTransform::at(int comp, const std::vector<int>& m) const {
  if (comp < 0 || comp >= S) throw std::invalid_argument("FieldTransform::at: component out of range");
  if (m.size() != static_cast<size_t>(grid.d))
    throw std::invalid_argument("FieldTransform::at: mode index dimension mismatch");
  std::int64_t site = 0;
  for (int mu = 0; mu < grid.d; ++mu) {
    const int u = ((m[mu] % grid.n) + grid.n) % grid.n;
    site = site * grid.n + u;
  }
  return modes[static_cast<std::int64_t>(comp) * grid.site_count() + site];
}

Eigen::VectorXd FieldTransform::wavevector(const std::vector<int>& m) const {
  if (m.size() != static_cast<size_t>(grid.d))
    throw std::invalid_argument("FieldTransform::wavevector: mode index dimension mismatch");
  Eigen::VectorXd k(grid.d);
  for (int mu = 0; mu < grid.d; ++mu)
    k(mu) = grid.wavenumber(((m[mu] % grid.n) + grid.n) % grid.n);
  return k;
}

FieldTransform spectral_transform(const DensityField& field) {
  field.grid.validate();
  const GridSpec& grid = field.grid;
  const std::int64_t total = grid.site_count();

  FieldTransform out;
  out.grid = grid;
  out.S = field.S;

  FftWorkspace ws(grid);
  forward_all(field, ws, out.modes);

  // dx^d and the phase of the x = -L grid origin: e^{i k_m x_j} =
  // (-1)^m e^{2 pi i m j / n} per axis, and (-1)^m = (-1)^u for even n.
  const double scale = std::pow(grid.dx(), grid.d);
  std::vector<int> idx(grid.d, 0);
  for (std::int64_t site = 0; site < total; ++site) {
    int parity = 0;
    for (int mu = 0; mu < grid.d; ++mu) parity += idx[mu];
    const double factor = (parity % 2 == 0) ? scale : -scale;
    for (int s = 0; s < field.S; ++s) out.modes[s * total + site] *= factor;
    for (int mu = grid.d - 1; mu >= 0; --mu) {
      if (++idx[mu] < grid.n) break;
      idx[mu] = 0;
    }
  }
  return out;
}

LatticeField rebin(const DensityField& field, int n_bins) {
  field.grid.validate();
  if (field.grid.d != 1)
    throw std::invalid_argument("rebin: only 1d fields have lattice bins");
  if (field.S != 2) throw std::invalid_argument("rebin: exactly two components required");
  if (n_bins < 1 || field.grid.n % n_bins != 0)
    throw std::invalid_argument("rebin: n_bins must be positive and divide the grid size");

  const int n = field.grid.n;
  const int R = n / n_bins;
  const double dxf = field.grid.dx();
  const double dx = dxf * R;

  // Bin j is centered on fine site R*j.  For even R the bin boundaries land
  // on fine sites, which contribute half of their cell to each neighbor; for
  // odd R (including R = 1) the boundaries fall between fine sites.
  const int reach = R / 2;
  const bool halves = (R % 2 == 0);
  LatticeField out = zero_lattice(n_bins, dx);
  for (int j = 0; j < n_bins; ++j) {
    double mp = 0.0, mm = 0.0;
    for (int r = -reach; r <= reach; ++r) {
      const double w = (halves && (r == -reach || r == reach)) ? 0.5 : 1.0;
      const int idx = ((R * j + r) % n + n) % n;
      mp += w * field.at(0, idx);
      mm += w * field.at(1, idx);
    }
    out.plus[j] = mp * dxf / dx;
    out.minus[j] = mm * dxf / dx;
  }
  return out;
}

}  // namespace diraclab
