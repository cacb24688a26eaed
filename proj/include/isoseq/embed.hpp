#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "isoseq/config.hpp"

namespace isoseq {

/// Spectral analysis of G = -(I - J/n) D (I - J/n), D the squared-distance
/// matrix. G annihilates the all-ones vector; the space embeds into R^d with
/// d = rank(G) iff G is positive semidefinite.
struct GramAnalysis {
  Eigen::MatrixXd G;
  Eigen::VectorXd eigenvalues;  // ascending
};

GramAnalysis gram(const MetricRealization& real);
GramAnalysis gram_of_squared(const Eigen::MatrixXd& D);

struct EmbedReport {
  bool is_euclidean = false;
  std::optional<int> m_X;  // present iff is_euclidean; = count of eigenvalues > tol
  double negative_mass = 0.0;  // most negative eigenvalue
  Eigen::VectorXd eigenvalues;
};

/// PSD verdict and minimal embedding dimension. `tol` is relative: the
/// absolute cutoff is tol * max(1, largest |eigenvalue|), applied to both the
/// PSD test and the rank count.
EmbedReport embeddability(const MetricRealization& real, double tol = 1e-9);
EmbedReport embeddability_of_squared(const Eigen::MatrixXd& D, double tol = 1e-9);

/// Coordinates recovering the realized distances (m_X columns). Uses the
/// half-scaled centered Gram matrix so recovered distances match the input;
/// the PSD/rank verdict itself never needs the factor. Throws on
/// non-Euclidean input.
PointSet coordinates(const MetricRealization& real, double tol = 1e-9);

/// Literal coordinate constructions for the catalogued families.
struct EmbeddingKind {
  enum Kind {
    simplex_i,         // p = n
    bipartite_iia,     // p, q = part sizes
    oneedge_iib,       // p = n
    matchingcomp_iic,  // p = n, q = matching size
    pentagon_iid,
    example1_iiia,
    crosslike_iiib,    // p = m (2m points into R^{m-1})
    cp_iiic,           // p, q, c
    example4_iiid,     // p = n
    circle_Cm,         // p = m
    half_cube5,
    johnson_J52,
  };
  Kind kind = simplex_i;
  long p = 0;
  long q = 0;
  double c = 0.0;
};

PointSet generate_embedding(const EmbeddingKind& kind);

/// Self-check of a generated embedding: the configuration read back from the
/// points must be isomorphic to the intended one, and the Gram rank must
/// equal the claimed dimension. For cp_iiic the check reports any discrepancy
/// of the printed matrices (measured distances plus the shift that would
/// reconcile them) instead of failing silently.
struct EmbeddingCheck {
  bool config_ok = false;
  bool rank_ok = false;
  int rank = -1;
  int claimed_rank = -1;
  DistanceConfiguration produced;
  DistanceConfiguration intended;
  std::string note;
  bool ok() const { return config_ok && rank_ok; }
};

EmbeddingCheck check_embedding(const EmbeddingKind& kind, double tol = 1e-9);

/// Intended configuration and claimed minimal dimension per kind.
DistanceConfiguration intended_config(const EmbeddingKind& kind);
int claimed_rank(const EmbeddingKind& kind);

/// Lower bound m_A + m_B for the minimal dimension of A u B when all
/// cross distances agree. A, B must partition the points; throws when the
/// constant-cross-distance hypothesis fails.
int ns_bound(const MetricRealization& real, const std::vector<int>& A,
             const std::vector<int>& B, double tol = 1e-9);

/// Grid search for distance values minimizing the embedding dimension.
/// First color fixed at 1; the others range over (0,2] at `grid_resolution`
/// steps (injective assignments only). PSD/non-PSD sign changes along grid
/// lines are refined by bisection (40 iterations) to catch rank drops on the
/// boundary. Deterministic: lexicographically least optimal assignment wins.
struct MinDimResult {
  bool found = false;
  std::vector<double> values;  // by color index
  EmbedReport report;
  long psd_points = 0;
  long boundary_candidates = 0;
};

MinDimResult search_min_dim(const DistanceConfiguration& config,
                            int grid_resolution, double tol = 1e-9);

/// Lower-bound witness for the maximum size of a point set in R^m with
/// a_3 = t. Witness is validated: size equals the table value, brute-force
/// a_3 equals t, Gram rank <= m.
struct FTableEntry {
  int m = 0;
  int k = 3;
  int t = 0;
  long value = 0;
  PointSet witness;
  int witness_rank = 0;
};

FTableEntry f_table(int m, int t);

}  // namespace isoseq
