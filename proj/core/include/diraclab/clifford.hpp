#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace diraclab {

/** A family e_0, ..., e_d of real symmetric traceless S x S matrices with
 *  e_mu e_nu + e_nu e_mu = 2 delta_{mu,nu} I.  All entries are integers
 *  stored as doubles, so every algebraic check below is exact. */
struct GeneratorSet {
  int d = 0;  // number of spatial generators e_1..e_d
  int S = 0;
  std::vector<Eigen::MatrixXd> e;  // size d+1
};

/** Tensor-string construction over {sigma1, sigma3, I2}: S = 2^d.
 *  d=1 gives {sigma1, sigma3}; each further dimension prepends sigma1 (x) I
 *  as the new e_0 and pushes the old set behind a sigma3 factor. */
GeneratorSet build_generators(int d);

/** Block-diagonal d=1 set e_0 = sigma1 ^ (+m), e_1 = sigma3 ^ (+m), S = 2m. */
GeneratorSet canonical_1d(int m);

enum class RelationKind { Anticommutator, Symmetry, Trace };

struct RelationViolation {
  RelationKind kind;
  int mu = -1;
  int nu = -1;
  double deviation = 0.0;  // max abs entry of the defect, exact for integer inputs
};

struct CliffordReport {
  std::vector<RelationViolation> violations;
  bool ok() const { return violations.empty(); }
};

/** Checks anticommutators, symmetry and tracelessness entry by entry. */
CliffordReport verify_clifford(const GeneratorSet& g);

/** Connected components of the off-diagonal nonzero pattern of a symmetric
 *  matrix.  `permutation` lists original indices block by block, each block
 *  sorted ascending and blocks ordered by smallest member, so that
 *  apply_permutation(m, permutation) is block diagonal. */
struct BlockStructure {
  std::vector<int> permutation;          // new index -> original index
  std::vector<std::vector<int>> blocks;  // original indices per component
};

BlockStructure detect_reducibility(const Eigen::MatrixXd& e0);

/** out(i,j) = m(perm[i], perm[j]) */
Eigen::MatrixXd apply_permutation(const Eigen::MatrixXd& m, const std::vector<int>& perm);

/** Perron-Frobenius data of P = (I + B)/2 for a symmetric block B.
 *  Requires P entrywise nonnegative and irreducible. */
struct PerronAnalysis {
  double spectral_radius = 0.0;
  Eigen::VectorXd eigenvector;  // strictly positive; empty when the radius is not simple
  bool is_rank_one_projection = false;
};

PerronAnalysis perron_analysis(const Eigen::MatrixXd& block);

enum class TheoremCondition { Dimension, E0Shape, E1Shape, Alpha };

const char* to_string(TheoremCondition c);

/** Result of the positivity criterion: the evolution generated by
 *  (-alpha + e_0 - sum e_mu d_mu) preserves nonnegative densities exactly
 *  when d == 1, e_0/e_1 are simultaneously permutation-equivalent to
 *  sigma1/sigma3 blocks, and alpha == 1. */
struct TheoremVerdict {
  bool preserves = false;
  std::vector<TheoremCondition> failed_conditions;
  std::string witness;  // offending indices / values, empty when preserving
};

/** Mechanical check of the three conditions.  `alpha` is compared exactly:
 *  the criterion is an identity, not an approximation. */
TheoremVerdict theorem_check(const GeneratorSet& g, double alpha);

}  // namespace diraclab
