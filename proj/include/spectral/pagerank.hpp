#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "spectral/graph.hpp"
#include "spectral/solver.hpp"

namespace spectral {

struct PageRankConfig {
  double alpha = 0.85;
  /// Teleportation distribution; uniform when unset.
  std::optional<std::vector<double>> personalization;
  /// Distribution used for the rows of dangling nodes; defaults to the
  /// personalization vector.
  std::optional<std::vector<double>> dangling;
  /// Starting iterate; defaults to the personalization vector.
  std::optional<std::vector<double>> start;
  SolverConfig solver;
};

/// Personalization, dangling and start vectors resolved against a graph.
struct PageRankVectors {
  std::vector<double> personalization;
  std::vector<double> dangling;
};

/// Validates `cfg` for a graph of `n` nodes and fills in the defaults.
/// Throws ConfigError on alpha outside [0, 1), negative entries, or
/// vectors that do not sum to one within 1e-12.
PageRankVectors resolve_vectors(std::size_t n, const PageRankConfig& cfg);

/// PageRank by power iteration on the sparse link matrix.
///
/// Each step computes alpha * (x H + (x . d) w) + (1 - alpha) * sum(x) * v,
/// where H is the row-normalized link matrix, d the dangling indicator, w
/// the dangling vector and v the personalization vector. The Google matrix
/// is never formed.
Solution pagerank(const SparseGraph& g, const PageRankConfig& cfg = {});

/// Splits a PageRank vector into alpha * pi S (endogenous, link-driven)
/// and (1 - alpha) * v (exogenous, teleportation).
std::pair<ScoreVector, ScoreVector> endogenous_exogenous_split(const SparseGraph& g, const PageRankConfig& cfg,
                                                               const ScoreVector& pi);

/// pi G applied implicitly.
std::vector<double> apply_google(const SparseGraph& g, const PageRankConfig& cfg, std::span<const double> pi);

/// Row sums of the dangling-patched stochastic matrix S = H + d w^T.
std::vector<double> stochastic_row_sums(const SparseGraph& g, const PageRankConfig& cfg);

/// Dense Google matrix alpha S + (1 - alpha) e v^T, for oracles on small graphs.
Eigen::MatrixXd dense_google_matrix(const SparseGraph& g, const PageRankConfig& cfg);

}  // namespace spectral
