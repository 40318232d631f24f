#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include <json.hpp>

#include "diraclab/clifford.hpp"
#include "diraclab/field.hpp"
#include "diraclab/io.hpp"
#include "diraclab/spectral.hpp"
#include "diraclab/witness.hpp"

using namespace diraclab;

namespace {

Eigen::VectorXd kvec1(double x) {
  Eigen::VectorXd v(1);
  v << x;
  return v;
}

Eigen::VectorXd kvec2(double x, double y) {
  Eigen::VectorXd v(2);
  v << x, y;
  return v;
}

// sinh(beta t) / beta with beta = sqrt(b2), continued through b2 < 0 via the
// complex square root.  Independent of the production evaluation path, which
// branches on the sign of b2 and never touches complex arithmetic.
double sinhc_oracle(double b2, double t) {
  const std::complex<double> z = std::sqrt(std::complex<double>(b2, 0.0));
  if (std::abs(z) == 0.0) return t;
  return (std::sinh(z * t) / z).real();
}

Eigen::MatrixXd sigma1() {
  Eigen::MatrixXd m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Eigen::MatrixXd sigma3() {
  Eigen::MatrixXd m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

// Reads the transform of one component at exact grid modes; non-grid
// wavevectors come back empty.  Mode spacing is pi / L on the [-L, L) box.
std::function<std::optional<std::complex<double>>(const Eigen::VectorXd&)> grid_mode_reader(
    const FieldTransform& ft, int comp) {
  return [&ft, comp](const Eigen::VectorXd& k) -> std::optional<std::complex<double>> {
    const double step = M_PI / ft.grid.L;
    std::vector<int> modes(ft.grid.d);
    for (int axis = 0; axis < ft.grid.d; ++axis) {
      const double real_mode = k(axis) / step;
      modes[axis] = static_cast<int>(std::lround(real_mode));
      if (std::abs(real_mode - modes[axis]) > 1e-9) return std::nullopt;
    }
    return ft.at(comp, modes);
  };
}

}  // namespace

TEST_CASE("wavevector point sets reject empty, mismatched, and duplicate inputs") {
  KPointSet empty;
  CHECK_THROWS_AS(empty.validate(1), std::invalid_argument);

  KPointSet mixed;
  mixed.points = {kvec1(0.0), kvec2(1.0, 2.0)};
  CHECK_THROWS_AS(mixed.validate(1), std::invalid_argument);

  KPointSet dup;
  dup.points = {kvec1(0.5), kvec1(1.5), kvec1(0.5)};
  CHECK_THROWS_AS(dup.validate(1), std::invalid_argument);

  KPointSet good;
  good.points = {kvec1(0.0), kvec1(0.5)};
  CHECK_NOTHROW(good.validate(1));

  // The matrix check runs the same validation before assembling anything.
  const auto unit = [](const Eigen::VectorXd&) -> std::optional<std::complex<double>> {
    return std::complex<double>(1.0, 0.0);
  };
  CHECK_THROWS_AS(bochner_matrix_check(empty, unit), std::invalid_argument);
  CHECK_THROWS_AS(bochner_matrix_check(dup, unit), std::invalid_argument);
}

TEST_CASE("gram matrices of gaussian characteristic functions are positive semidefinite") {
  std::mt19937 rng(123);
  std::uniform_real_distribution<double> upt(-3.0, 3.0);
  std::uniform_real_distribution<double> usig(0.3, 2.0);
  std::uniform_real_distribution<double> ush(-2.0, 2.0);

  for (int rep = 0; rep < 20; ++rep) {
    const double sigma = usig(rng);
    const Eigen::Vector2d shift(ush(rng), ush(rng));
    KPointSet kset;
    for (int i = 0; i < 4; ++i) kset.points.push_back(kvec2(upt(rng), upt(rng)));

    // Transform of a shifted gaussian density: a complex phase times a
    // gaussian envelope.  Any nonnegative density makes this matrix a Gram
    // matrix, so the smallest eigenvalue can only dip below zero by solver
    // roundoff.
    const auto phi = [&](const Eigen::VectorXd& k) -> std::optional<std::complex<double>> {
      const double phase = k.dot(shift);
      const double mag = std::exp(-0.5 * sigma * sigma * k.squaredNorm());
      return std::complex<double>(mag * std::cos(phase), mag * std::sin(phase));
    };
    const BochnerResult res = bochner_matrix_check(kset, phi);
    CHECK(res.is_psd);
    CHECK(res.min_eigenvalue >= -1e-10);
  }
}

TEST_CASE("transforms of atomic measures classify by the sign of their weights") {
  const double v = 1.3;

  // cos(k v) is the transform of the even atom pair at +-v, all weights
  // positive.
  KPointSet four;
  four.points = {kvec1(0.0), kvec1(0.5), kvec1(1.1), kvec1(2.6)};
  const auto even_pair = [&](const Eigen::VectorXd& k) -> std::optional<std::complex<double>> {
    return std::complex<double>(std::cos(k(0) * v), 0.0);
  };
  CHECK(bochner_matrix_check(four, even_pair).is_psd);

  // 2 cos(k v) - 0.8 adds a negative atom at the origin.  At {0, pi/v} the
  // matrix is [[1.2, -2.8], [-2.8, 1.2]] with eigenvalues 1.2 -+ 2.8, so the
  // smallest is exactly -1.6.
  KPointSet two;
  two.points = {kvec1(0.0), kvec1(M_PI / v)};
  const auto signed_measure = [&](const Eigen::VectorXd& k) -> std::optional<std::complex<double>> {
    return std::complex<double>(2.0 * std::cos(k(0) * v) - 0.8, 0.0);
  };
  const BochnerResult res = bochner_matrix_check(two, signed_measure);
  CHECK_FALSE(res.is_psd);
  CHECK(res.min_eigenvalue == doctest::Approx(-1.6).epsilon(1e-12));

  // A phi that cannot supply a needed difference is a caller error.
  const auto partial = [](const Eigen::VectorXd& k) -> std::optional<std::complex<double>> {
    if (std::abs(k(0)) > 1.0) return std::nullopt;
    return std::complex<double>(1.0, 0.0);
  };
  KPointSet wide;
  wide.points = {kvec1(0.0), kvec1(2.0)};
  CHECK_THROWS_AS(bochner_matrix_check(wide, partial), std::invalid_argument);
}

TEST_CASE("componentwise zero-plus-k inequality flags exactly the violators") {
  Eigen::VectorXd phi0(3), phik(3);
  phi0 << 1.0, 0.0, 0.3;
  phik << -1.2, 0.0, -0.3;
  const std::vector<bool> pass = ineq_necessary_check(phi0, phik);
  REQUIRE(pass.size() == 3);
  CHECK_FALSE(pass[0]);  // 1.0 - 1.2 < 0
  CHECK(pass[1]);        // exact zero sum
  CHECK(pass[2]);        // cancellation to zero stays inside the band

  Eigen::VectorXd shorter(2);
  shorter << 0.0, 0.0;
  CHECK_THROWS_AS(ineq_necessary_check(phi0, shorter), std::invalid_argument);
}

TEST_CASE("zero-mode entry constraints localize every failure mode") {
  // The exchange matrix passes all constraints at the unit rate, and so do
  // its block-diagonal copies.
  CHECK(e0_entry_constraints(sigma1(), 1.0).ok());
  CHECK(e0_entry_constraints(canonical_1d(3).e[0], 1.0).ok());
  // Entry constraints alone cannot reject the two dimensional set: its e_0
  // columns also sum to one.  Ruling it out takes the shifted-data witness.
  CHECK(e0_entry_constraints(build_generators(2).e[0], 1.0).ok());

  // diag(1, -1): column 0 sums to +1 and passes, column 1 sums to -1 and
  // breaks the column identity at each of the three probe times.
  {
    const EntryConstraintReport rep = e0_entry_constraints(sigma3(), 1.0);
    REQUIRE(rep.violations.size() == 3);
    for (const auto& viol : rep.violations) {
      CHECK(viol.kind == EntryConstraintViolation::Kind::ColumnSumIdentity);
      CHECK(viol.p == -1);
      CHECK(viol.q == 1);
      CHECK(viol.value < 0.0);  // cosh t - sinh t falls short of e^t
      CHECK(viol.t > 0.0);
    }
  }

  // At rate 1/2 even the +1 column misses the required growth, so both
  // columns are reported at every probe time.
  {
    const EntryConstraintReport rep = e0_entry_constraints(sigma3(), 0.5);
    std::vector<int> qs;
    for (const auto& viol : rep.violations) {
      CHECK(viol.kind == EntryConstraintViolation::Kind::ColumnSumIdentity);
      qs.push_back(viol.q);
    }
    CHECK(std::count(qs.begin(), qs.end(), 0) == 3);
    CHECK(std::count(qs.begin(), qs.end(), 1) == 3);
  }

  // Negative off-diagonal entries are flagged entrywise.
  {
    const EntryConstraintReport rep = e0_entry_constraints(-sigma1(), 1.0);
    std::vector<std::pair<int, int>> offdiag;
    for (const auto& viol : rep.violations)
      if (viol.kind == EntryConstraintViolation::Kind::NegativeOffDiagonal)
        offdiag.push_back({viol.p, viol.q});
    REQUIRE(offdiag.size() == 2);
    CHECK(offdiag[0] == std::pair<int, int>(0, 1));
    CHECK(offdiag[1] == std::pair<int, int>(1, 0));
  }

  // Diagonal entries below -1 are impossible for a nonnegative zero mode.
  {
    Eigen::MatrixXd deep(2, 2);
    deep << -1.5, 0.0, 0.0, 1.0;
    const EntryConstraintReport rep = e0_entry_constraints(deep, 1.0);
    bool found = false;
    for (const auto& viol : rep.violations)
      if (viol.kind == EntryConstraintViolation::Kind::DiagonalBelowMinusOne) {
        found = true;
        CHECK(viol.p == 0);
        CHECK(viol.q == 0);
        CHECK(viol.value == -1.5);
      }
    CHECK(found);
  }

  Eigen::MatrixXd rect(2, 3);
  rect.setZero();
  CHECK_THROWS_AS(e0_entry_constraints(rect, 1.0), std::invalid_argument);
  Eigen::MatrixXd asym(2, 2);
  asym << 0.0, 1.0, 0.0, 0.0;
  CHECK_THROWS_AS(e0_entry_constraints(asym, 1.0), std::invalid_argument);
}

TEST_CASE("shift amplitudes reduce to quadrature phases and match a complex-branch oracle") {
  // K = 0: no oscillation, the sine channel is exactly silent and the cosine
  // channel carries plain sinh.
  {
    const WitnessAmplitudes w = witness_amplitudes(0.7, 0.0, 3.9, 1.25);
    CHECK(w.sin_part == 0.0);
    CHECK(w.cos_part == doctest::Approx(0.7 * std::sinh(1.25)).epsilon(1e-15));
  }

  // Quarter-period shift a = pi / (2K): the cosine channel is silent and the
  // sine channel carries the full (negative) amplitude.
  {
    const double K = 0.7, t = 1.0;
    const double g = cauchy_transform(kvec1(K));
    const double a = M_PI / (2.0 * K);
    const WitnessAmplitudes w = witness_amplitudes(g, K, a, t);
    CHECK(std::abs(w.cos_part) <= 1e-15);
    CHECK(w.sin_part == doctest::Approx(-g * sinhc_oracle(1.0 - K * K, t)).epsilon(1e-12));
    CHECK(w.sin_part < 0.0);
  }

  // Random inputs on both sides of the light cone |K| = 1, against the
  // complex square-root continuation.
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> ulow(0.01, 0.95);
  std::uniform_real_distribution<double> uhigh(1.05, 3.0);
  std::uniform_real_distribution<double> ug(0.05, 1.0);
  std::uniform_real_distribution<double> ua(-5.0, 5.0);
  std::uniform_real_distribution<double> ut(0.0, 4.0);
  for (int rep = 0; rep < 100; ++rep) {
    const double K = (rep % 2 == 0) ? ulow(rng) : uhigh(rng);
    const double g = ug(rng);
    const double a = ua(rng);
    const double t = ut(rng);
    const double sc = sinhc_oracle(1.0 - K * K, t);
    const WitnessAmplitudes w = witness_amplitudes(g, K, a, t);
    CHECK(w.cos_part == doctest::Approx(g * std::cos(K * a) * sc).epsilon(1e-12));
    CHECK(w.sin_part == doctest::Approx(-g * std::sin(K * a) * sc).epsilon(1e-12));
  }

  CHECK_THROWS_AS(witness_amplitudes(0.5, 0.5, 1.0, -0.1), std::invalid_argument);
}

TEST_CASE("analytic witnesses certify sign-forced pairs of the two dimensional set") {
  const GeneratorSet g = build_generators(2);
  REQUIRE(g.S == 4);
  const BlockStructure bs = detect_reducibility(g.e[0]);
  REQUIRE(bs.permutation == std::vector<int>({0, 2, 1, 3}));

  const double K = 0.5, t = 1.0;
  const double expected =
      -std::exp(-0.5) * (std::sinh(std::sqrt(0.75)) / std::sqrt(0.75)) * 0.5;

  // First off-block pair, first axis: the permuted e_1 entry is +1, so the
  // inequality fails at +K with the quarter-period shift pi / (2K).
  {
    const auto w = analytic_witness(g, bs.permutation, 0, 2, 0, K, t);
    REQUIRE(w.has_value());
    CHECK(w->kind == WitnessKind::Analytic);
    CHECK(w->p == 0);
    CHECK(w->q == 2);
    CHECK(w->nu == 0);
    CHECK(w->K == K);
    REQUIRE(w->a.size() == 2);
    CHECK(w->a(0) == doctest::Approx(M_PI).epsilon(1e-15));
    CHECK(w->a(1) == 0.0);
    CHECK(w->t == t);
    CHECK(w->value == doctest::Approx(expected).epsilon(1e-12));
    CHECK(w->value < -1e-2);
  }

  // The other off-block pair carries the entry -1: the failing sign flips and
  // the shift points the other way, with the same negative value.
  {
    const auto w = analytic_witness(g, bs.permutation, 1, 3, 0, K, t);
    REQUIRE(w.has_value());
    CHECK(w->K == -K);
    CHECK(w->a(0) == doctest::Approx(-M_PI).epsilon(1e-15));
    CHECK(w->value == doctest::Approx(expected).epsilon(1e-12));
  }

  // The right side is odd in K, so probing with -K lands on the same witness.
  {
    const auto w = analytic_witness(g, bs.permutation, 0, 2, 0, -K, t);
    REQUIRE(w.has_value());
    CHECK(w->K == K);
    CHECK(w->value == doctest::Approx(expected).epsilon(1e-12));
  }

  // The second axis is diagonal in the permuted basis: no witness there.
  CHECK_FALSE(analytic_witness(g, bs.permutation, 0, 2, 1, K, t).has_value());
  CHECK_FALSE(analytic_witness(g, bs.permutation, 1, 3, 1, K, t).has_value());

  // The block-diagonal one dimensional set never yields a witness: every
  // spatial entry between different blocks vanishes.
  {
    const GeneratorSet c = canonical_1d(2);
    const BlockStructure cbs = detect_reducibility(c.e[0]);
    for (int p : {0, 1})
      for (int q : {2, 3}) {
        CHECK_FALSE(analytic_witness(c, cbs.permutation, p, q, 0, K, t).has_value());
        CHECK_FALSE(analytic_witness(c, cbs.permutation, q, p, 0, K, t).has_value());
      }
    // Same-block pairs carry a nonzero zero-mode entry and are rejected.
    CHECK_THROWS_AS(analytic_witness(c, cbs.permutation, 0, 1, 0, K, t),
                    std::invalid_argument);
  }

  // Degenerate probes and malformed arguments.
  CHECK_FALSE(analytic_witness(g, bs.permutation, 0, 2, 0, 0.0, t).has_value());
  CHECK_THROWS_AS(analytic_witness(g, bs.permutation, 0, 2, 0, K, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(analytic_witness(g, bs.permutation, 2, 2, 0, K, t), std::invalid_argument);
  CHECK_THROWS_AS(analytic_witness(g, bs.permutation, 0, 2, 2, K, t), std::invalid_argument);
  CHECK_THROWS_AS(analytic_witness(g, std::vector<int>({0, 1, 2}), 0, 2, 0, K, t),
                  std::invalid_argument);
}

TEST_CASE("the rank-one reflection forces the unit decay rate") {
  // e_0 = 2 u u^T - I with u the normalized all-ones vector is exactly the
  // exchange matrix, and its zero-mode column identity
  //   e^{-t} + (e^t - e^{-t}) u_q sum(u) = e^t
  // holds for every column and every time, which is what singles out the
  // unit decay rate.
  const Eigen::Vector2d u = Eigen::Vector2d::Ones() / std::sqrt(2.0);
  const Eigen::MatrixXd e0 = 2.0 * u * u.transpose() - Eigen::Matrix2d::Identity();
  CHECK((e0 - sigma1()).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK(e0_entry_constraints(e0, 1.0).ok());

  for (double t = 0.0; t <= 10.0; t += 0.5) {
    for (int q = 0; q < 2; ++q) {
      const double lhs = std::exp(-t) + (std::exp(t) - std::exp(-t)) * u(q) * u.sum();
      CHECK(std::abs(lhs - std::exp(t)) <= 1e-12 * std::exp(t));
    }
  }
}

TEST_CASE("counterexample search certifies a reproducible grid violation in two dimensions") {
  const GeneratorSet g = build_generators(2);
  const GridSpec grid{2, 256, 20.0};
  const Witness w = find_counterexample(g, 1.0, grid);

  CHECK(w.kind == WitnessKind::GridViolation);
  CHECK(w.value < -1e-4);
  CHECK((w.t == 0.25 || w.t == 0.5 || w.t == 1.0 || w.t == 2.0));
  // The sweep settles on the first off-block pair along the first axis, with
  // the probe wavenumber snapped near 1/2 onto an exact grid mode.
  CHECK(w.p == 0);
  CHECK(w.q == 2);
  CHECK(w.nu == 0);
  CHECK(w.K == doctest::Approx(3.0 * M_PI / 20.0).epsilon(1e-15));
  REQUIRE(w.a.size() == 2);
  CHECK(w.a(0) == doctest::Approx(M_PI / (2.0 * w.K)).epsilon(1e-15));
  CHECK(w.a(1) == 0.0);

  // Rebuild the certified run from the witness record alone and reproduce
  // the reported violation with an independent scan.
  const BlockStructure bs = detect_reducibility(g.e[0]);
  const DensityField p0 = cauchy_initial(grid, g.S, w.q, w.a, bs.permutation);
  const EvolutionParams params{1.0, g};
  const PositivityReport scan = positivity_scan(params, p0, {w.t});
  REQUIRE(scan.samples.size() == 1);
  CHECK(scan.samples[0].mass == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(scan.samples[0].min_value == doctest::Approx(w.value).epsilon(1e-12));
  CHECK(scan.samples[0].min_value < -1e-4);

  // Fourier side of the same run.  The violating component receives nothing
  // through the zero mode (its zero-mode entry vanishes across blocks), yet
  // carries weight at nonzero modes along the witness axis, so the matrix
  // over the first few grid modes cannot be positive semidefinite.
  const DensityField pT = evolve(params, p0, w.t);
  CHECK(pT.min_entry().value == doctest::Approx(w.value).epsilon(1e-12));
  const int comp = bs.permutation[w.p];
  const FieldTransform ft = spectral_transform(pT);
  const double step = M_PI / grid.L;

  CHECK(std::abs(ft.at(comp, {0, 0})) < 1e-12);

  KPointSet kset;
  for (int j = 0; j < 4; ++j) kset.points.push_back(kvec2(j * step, 0.0));
  const BochnerResult bres = bochner_matrix_check(kset, grid_mode_reader(ft, comp));
  CHECK_FALSE(bres.is_psd);
  CHECK(bres.min_eigenvalue < -1e-3);

  // The zero-plus-k inequality fails for that component right at the witness
  // mode, where the quarter-period shift turns the full amplitude negative.
  Eigen::VectorXd v0(1), vk(1);
  v0 << ft.at(comp, {0, 0}).real();
  vk << ft.at(comp, {3, 0}).real();
  CHECK_FALSE(ineq_necessary_check(v0, vk)[0]);

  // Halving the resolution moves the certified value by well under 25%.
  const Witness coarse = find_counterexample(g, 1.0, GridSpec{2, 128, 20.0});
  CHECK(coarse.K == w.K);
  CHECK(std::abs(w.value - coarse.value) < 0.25 * std::abs(coarse.value));
}

TEST_CASE("counterexample search rejects preserving and rate-only failures") {
  const GridSpec grid{1, 256, 20.0};
  // A preserving system has nothing to certify.
  CHECK_THROWS_AS(find_counterexample(canonical_1d(1), 1.0, grid), std::invalid_argument);
  // A pure rate failure leaves the generators block-exchange shaped; the
  // shifted-data construction has no sign-forced pair to work with.
  CHECK_THROWS_AS(find_counterexample(canonical_1d(1), 2.0, grid), std::invalid_argument);
  // Grid and generator dimensions must agree.
  CHECK_THROWS_AS(find_counterexample(build_generators(2), 1.0, grid), std::invalid_argument);
  // A box shorter than pi cannot hold a probe wavenumber inside (0, 1).
  CHECK_THROWS_AS(find_counterexample(build_generators(2), 1.0, GridSpec{2, 8, 3.0}),
                  std::invalid_argument);
}

TEST_CASE("counterexample search certifies a grid violation in three dimensions") {
  const GeneratorSet g = build_generators(3);
  REQUIRE(g.S == 8);
  const Witness w = find_counterexample(g, 1.0, GridSpec{3, 64, 16.0});
  CHECK(w.kind == WitnessKind::GridViolation);
  CHECK(w.value < -1e-4);
  CHECK(std::abs(w.K) == doctest::Approx(3.0 * M_PI / 16.0).epsilon(1e-15));
  CHECK((w.t == 0.25 || w.t == 0.5 || w.t == 1.0 || w.t == 2.0));
}

TEST_CASE("a preserving run stays of positive type in fourier variables") {
  const GridSpec grid{1, 256, 40.0};
  Eigen::VectorXd a(1);
  a << 3.0;
  const DensityField p0 = cauchy_initial(grid, 2, 0, a);
  const EvolutionParams params{1.0, canonical_1d(1)};
  const DensityField pT = evolve(params, p0, 1.0);
  CHECK(pT.min_entry().value >= -1e-10);

  const FieldTransform ft = spectral_transform(pT);
  const double step = M_PI / grid.L;
  for (int comp = 0; comp < 2; ++comp) {
    KPointSet kset;
    for (int j = 0; j < 6; ++j) kset.points.push_back(kvec1(j * step));
    const BochnerResult res = bochner_matrix_check(kset, grid_mode_reader(ft, comp));
    CHECK(res.is_psd);
    CHECK(res.min_eigenvalue >= -1e-10);

    // The first-consequence inequality holds at every probed mode.
    const double phi0 = ft.at(comp, {0}).real();
    CHECK(phi0 > 0.0);
    for (int m = 1; m <= 10; ++m) {
      Eigen::VectorXd v0(1), vk(1);
      v0 << phi0;
      vk << ft.at(comp, {m}).real();
      CHECK(ineq_necessary_check(v0, vk)[0]);
    }
  }
}

TEST_CASE("witness, verdict, and positivity records serialize deterministically") {
  using nlohmann::json;
  const GeneratorSet g = build_generators(2);
  const BlockStructure bs = detect_reducibility(g.e[0]);
  const GridSpec grid{2, 256, 20.0};

  const auto w = analytic_witness(g, bs.permutation, 0, 2, 0, 0.5, 1.0);
  REQUIRE(w.has_value());
  const std::string text = witness_json(*w, grid);
  CHECK(witness_json(*w, grid) == text);  // byte-identical on repeat
  const json jw = json::parse(text);
  CHECK(jw["kind"] == "analytic");
  CHECK(jw["p"] == 1);  // serialized indices are 1-based
  CHECK(jw["q"] == 3);
  CHECK(jw["nu"] == 1);
  CHECK(jw["K"].get<double>() == 0.5);
  REQUIRE(jw["a"].size() == 2);
  CHECK(jw["a"][0].get<double>() == w->a(0));
  CHECK(jw["a"][1].get<double>() == 0.0);
  CHECK(jw["t"].get<double>() == 1.0);
  CHECK(jw["value"].get<double>() == w->value);
  CHECK(jw["grid"]["d"] == 2);
  CHECK(jw["grid"]["n"] == 256);
  CHECK(jw["grid"]["L"].get<double>() == 20.0);

  {
    const TheoremVerdict ok = theorem_check(canonical_1d(2), 1.0);
    REQUIRE(ok.preserves);
    const json jv = json::parse(verdict_json(ok));
    CHECK(jv["preserves"] == true);
    CHECK(jv["failed_conditions"].empty());
    CHECK(jv["witness"].is_null());
  }
  {
    const TheoremVerdict bad_rate = theorem_check(canonical_1d(2), 2.0);
    REQUIRE_FALSE(bad_rate.preserves);
    const json jv = json::parse(verdict_json(bad_rate));
    CHECK(jv["preserves"] == false);
    REQUIRE(jv["failed_conditions"].size() == 1);
    CHECK(jv["failed_conditions"][0] == "alpha");
    CHECK(jv["witness"].is_string());
  }
  {
    const TheoremVerdict structural = theorem_check(g, 1.0);
    REQUIRE_FALSE(structural.preserves);
    const json jv = json::parse(verdict_json(structural));
    CHECK(jv["preserves"] == false);
    bool has_dimension = false, has_alpha = false;
    for (const auto& c : jv["failed_conditions"]) {
      if (c == "dimension") has_dimension = true;
      if (c == "alpha") has_alpha = true;
    }
    CHECK(has_dimension);
    CHECK_FALSE(has_alpha);
  }

  {
    const GridSpec g1{1, 64, 16.0};
    Eigen::VectorXd a0(1);
    a0 << 0.0;
    const DensityField p0 = cauchy_initial(g1, 2, 0, a0);
    const PositivityReport rep = positivity_scan({1.0, canonical_1d(1)}, p0, {0.5, 1.0});
    const std::string ptext = positivity_json(rep, g1);
    CHECK(positivity_json(rep, g1) == ptext);
    const json jp = json::parse(ptext);
    CHECK(jp["grid"]["n"] == 64);
    REQUIRE(jp["samples"].size() == 2);
    for (const auto& s : jp["samples"]) {
      CHECK(s["t"].get<double>() > 0.0);
      CHECK(s["mass"].get<double>() == doctest::Approx(1.0).epsilon(1e-10));
      CHECK(s["min_value"].get<double>() >= -1e-10);
      const int comp = s["component"].get<int>();
      CHECK(comp >= 1);
      CHECK(comp <= 2);
      REQUIRE(s["site"].is_array());
      CHECK(s["site"].size() == 1);
      const int site0 = s["site"][0].get<int>();
      CHECK(site0 >= 0);
      CHECK(site0 < 64);
    }
  }
}
