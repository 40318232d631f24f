#include "diraclab/clifford.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace diraclab {

namespace {

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

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

GeneratorSet build_generators(int d) {
  if (d < 1) throw std::invalid_argument("build_generators: d must be >= 1");
  if (d > 6) throw std::invalid_argument("build_generators: S = 2^d exceeds the supported S <= 64");
  GeneratorSet g;
  g.d = 1;
  g.S = 2;
  g.e = {sigma1(), sigma3()};
  for (int dim = 2; dim <= d; ++dim) {
    const int S = g.S;
    std::vector<Eigen::MatrixXd> next;
    next.reserve(static_cast<size_t>(dim) + 1);
    next.push_back(kron(sigma1(), Eigen::MatrixXd::Identity(S, S)));
    for (const auto& m : g.e) next.push_back(kron(sigma3(), m));
    g.e = std::move(next);
    g.S = 2 * S;
    g.d = dim;
  }
  return g;
}

GeneratorSet canonical_1d(int m) {
  if (m < 1) throw std::invalid_argument("canonical_1d: m must be >= 1");
  if (m > 32) throw std::invalid_argument("canonical_1d: S = 2m exceeds the supported S <= 64");
  const int S = 2 * m;
  GeneratorSet g;
  g.d = 1;
  g.S = S;
  Eigen::MatrixXd e0 = Eigen::MatrixXd::Zero(S, S);
  Eigen::MatrixXd e1 = Eigen::MatrixXd::Zero(S, S);
  for (int b = 0; b < m; ++b) {
    e0.block(2 * b, 2 * b, 2, 2) = sigma1();
    e1.block(2 * b, 2 * b, 2, 2) = sigma3();
  }
  g.e = {std::move(e0), std::move(e1)};
  return g;
}

CliffordReport verify_clifford(const GeneratorSet& g) {
  if (g.e.size() != static_cast<size_t>(g.d) + 1)
    throw std::invalid_argument("verify_clifford: expected d+1 generators");
  for (const auto& m : g.e)
    if (m.rows() != g.S || m.cols() != g.S)
      throw std::invalid_argument("verify_clifford: generator dimension mismatch");

  CliffordReport report;
  const int n = g.d + 1;
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(g.S, g.S);
  for (int mu = 0; mu < n; ++mu) {
    double sym = (g.e[mu] - g.e[mu].transpose()).cwiseAbs().maxCoeff();
    if (sym != 0.0) report.violations.push_back({RelationKind::Symmetry, mu, mu, sym});
    double tr = std::abs(g.e[mu].trace());
    if (tr != 0.0) report.violations.push_back({RelationKind::Trace, mu, mu, tr});
    for (int nu = mu; nu < n; ++nu) {
      Eigen::MatrixXd defect = g.e[mu] * g.e[nu] + g.e[nu] * g.e[mu];
      if (mu == nu) defect -= 2.0 * id;
      double dev = defect.cwiseAbs().maxCoeff();
      if (dev != 0.0) report.violations.push_back({RelationKind::Anticommutator, mu, nu, dev});
    }
  }
  return report;
}

BlockStructure detect_reducibility(const Eigen::MatrixXd& e0) {
  if (e0.rows() != e0.cols()) throw std::invalid_argument("detect_reducibility: matrix must be square");
  const int S = static_cast<int>(e0.rows());

  BlockStructure bs;
  std::vector<int> component(S, -1);
  for (int start = 0; start < S; ++start) {
    if (component[start] >= 0) continue;
    std::vector<int> block;
    std::vector<int> stack{start};
    component[start] = static_cast<int>(bs.blocks.size());
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      block.push_back(i);
      for (int j = 0; j < S; ++j) {
        if (j == i || component[j] >= 0) continue;
        if (e0(i, j) != 0.0 || e0(j, i) != 0.0) {
          component[j] = component[start];
          stack.push_back(j);
        }
      }
    }
    std::sort(block.begin(), block.end());
    bs.blocks.push_back(std::move(block));
  }
  for (const auto& b : bs.blocks) bs.permutation.insert(bs.permutation.end(), b.begin(), b.end());
  return bs;
}

Eigen::MatrixXd apply_permutation(const Eigen::MatrixXd& m, const std::vector<int>& perm) {
  const int S = static_cast<int>(m.rows());
  if (m.cols() != S) throw std::invalid_argument("apply_permutation: matrix must be square");
  if (perm.size() != static_cast<size_t>(S))
    throw std::invalid_argument("apply_permutation: permutation length mismatch");
  Eigen::MatrixXd out(S, S);
  for (int i = 0; i < S; ++i)
    for (int j = 0; j < S; ++j) out(i, j) = m(perm[i], perm[j]);
  return out;
}

PerronAnalysis perron_analysis(const Eigen::MatrixXd& block) {
  const int S = static_cast<int>(block.rows());
  if (block.cols() != S) throw std::invalid_argument("perron_analysis: block must be square");
  if ((block - block.transpose()).cwiseAbs().maxCoeff() != 0.0)
    throw std::invalid_argument("perron_analysis: block must be symmetric");

  Eigen::MatrixXd P = 0.5 * (Eigen::MatrixXd::Identity(S, S) + block);
  for (int i = 0; i < S; ++i)
    for (int j = 0; j < S; ++j)
      if (P(i, j) < 0.0) {
        std::ostringstream os;
        os << "perron_analysis: (I+B)/2 has negative entry at (" << i << "," << j << ")";
        throw std::invalid_argument(os.str());
      }

  // Irreducibility = connectivity of the off-diagonal pattern.
  if (S > 1) {
    std::vector<char> seen(S, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < S; ++j) {
        if (j == i || seen[j]) continue;
        if (P(i, j) != 0.0) {
          seen[j] = 1;
          ++reached;
          stack.push_back(j);
        }
      }
    }
    if (reached != S) throw std::invalid_argument("perron_analysis: (I+B)/2 is reducible");
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(P);
  if (solver.info() != Eigen::Success) throw std::runtime_error("perron_analysis: eigen solve failed");
  const Eigen::VectorXd& ev = solver.eigenvalues();  // ascending

  PerronAnalysis out;
  out.spectral_radius = ev(S - 1);
  const bool simple = (S == 1) || (ev(S - 1) - ev(S - 2) > 1e-10);
  if (simple) {
    Eigen::VectorXd u = solver.eigenvectors().col(S - 1);
    if (u.sum() < 0.0) u = -u;
    out.eigenvector = u;
  }

  bool rank_one = std::abs(ev(S - 1) - 1.0) < 1e-12;
  for (int i = 0; i + 1 < S; ++i) rank_one = rank_one && std::abs(ev(i)) < 1e-12;
  if (rank_one && simple) {
    Eigen::MatrixXd residual = P - out.eigenvector * out.eigenvector.transpose();
    rank_one = residual.cwiseAbs().maxCoeff() < 1e-12;
  }
  out.is_rank_one_projection = rank_one;
  return out;
}

const char* to_string(TheoremCondition c) {
  switch (c) {
    case TheoremCondition::Dimension: return "dimension";
    case TheoremCondition::E0Shape: return "e0_shape";
    case TheoremCondition::E1Shape: return "e1_shape";
    case TheoremCondition::Alpha: return "alpha";
  }
  return "?";
}

TheoremVerdict theorem_check(const GeneratorSet& g, double alpha) {
  {
    CliffordReport rep = verify_clifford(g);
    if (!rep.ok()) throw std::invalid_argument("theorem_check: generator set violates the algebra relations");
  }

  TheoremVerdict verdict;
  std::ostringstream witness;
  auto fail = [&](TheoremCondition c) { verdict.failed_conditions.push_back(c); };

  if (g.d != 1) {
    fail(TheoremCondition::Dimension);
    witness << "d=" << g.d << " (need d=1); ";
  } else {
    const BlockStructure bs = detect_reducibility(g.e[0]);
    const Eigen::MatrixXd e0h = apply_permutation(g.e[0], bs.permutation);
    const Eigen::MatrixXd e1h = apply_permutation(g.e[1], bs.permutation);

    bool e0_ok = true;
    for (const auto& block : bs.blocks) {
      if (block.size() != 2) {
        e0_ok = false;
        witness << "e0 block {";
        for (size_t i = 0; i < block.size(); ++i) witness << (i ? "," : "") << block[i];
        witness << "} is not 2x2; ";
      }
    }
    if (e0_ok) {
      for (size_t b = 0; b < bs.blocks.size(); ++b) {
        const int r = static_cast<int>(2 * b);
        if (e0h(r, r) != 0.0 || e0h(r + 1, r + 1) != 0.0 || e0h(r, r + 1) != 1.0) {
          e0_ok = false;
          witness << "e0 block {" << bs.blocks[b][0] << "," << bs.blocks[b][1]
                  << "} differs from sigma1 (off-diagonal " << e0h(r, r + 1) << "); ";
        }
      }
    }
    if (!e0_ok) fail(TheoremCondition::E0Shape);

    bool e1_ok = true;
    // e1 must live inside the e0 blocks...
    std::vector<int> block_of(g.S);
    for (size_t b = 0; b < bs.blocks.size(); ++b)
      for (int idx : bs.blocks[b]) block_of[idx] = static_cast<int>(b);
    for (int i = 0; i < g.S && e1_ok; ++i)
      for (int j = 0; j < g.S; ++j) {
        if (block_of[bs.permutation[i]] != block_of[bs.permutation[j]] && e1h(i, j) != 0.0) {
          e1_ok = false;
          witness << "e1 couples blocks at original entry (" << bs.permutation[i] << ","
                  << bs.permutation[j] << "); ";
          break;
        }
      }
    // ...and restrict to +-sigma3 there (the sign is absorbed by swapping the
    // two indices of the block, which leaves sigma1 invariant).
    if (e1_ok && e0_ok) {
      for (size_t b = 0; b < bs.blocks.size(); ++b) {
        const int r = static_cast<int>(2 * b);
        const double d0 = e1h(r, r);
        if (e1h(r, r + 1) != 0.0 || e1h(r + 1, r) != 0.0 || std::abs(d0) != 1.0 ||
            e1h(r + 1, r + 1) != -d0) {
          e1_ok = false;
          witness << "e1 block {" << bs.blocks[b][0] << "," << bs.blocks[b][1]
                  << "} is not +-sigma3; ";
        }
      }
    }
    if (!e1_ok) fail(TheoremCondition::E1Shape);
  }

  if (alpha != 1.0) {
    fail(TheoremCondition::Alpha);
    witness << "alpha=" << alpha << " (need alpha=1); ";
  }

  verdict.preserves = verdict.failed_conditions.empty();
  verdict.witness = witness.str();
  if (!verdict.witness.empty() && verdict.witness.back() == ' ') {
    verdict.witness.pop_back();
    verdict.witness.pop_back();
  }
  return verdict;
}

}  // namespace diraclab
