#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectral/graph.hpp"
#include "spectral/solver.hpp"

namespace spectral {

struct InfluenceResult {
  ScoreVector per_reference;  // sum-to-one
  ScoreVector total;          // per_reference[j] * out_strength[j]
  SolveReport report;
  bool strongly_connected = false;
  bool has_self_loop = false;
  std::vector<std::string> warnings;
};

/// Journal influence weights: the dominant left eigenvector of
/// H = dest_outstrength_normalize(citations), h_ij = c_ij / c_j.
///
/// Auto solves directly up to dense_limit nodes when the fixed point is
/// unique. Otherwise it iterates x <- (x + x H) / 2, which shares the fixed
/// points of H and does not oscillate on periodic citation graphs. Input
/// that is not strongly connected produces a warning rather than an error.
InfluenceResult influence_scores(const SparseGraph& citations, const SolverConfig& cfg = {},
                                 SolveMethod method = SolveMethod::Auto);

struct LeontiefResult {
  ScoreVector prices;
  std::vector<double> costs;
  std::vector<double> revenues;
  SolveReport report;
  /// Closed model: false when the economy is reducible and the price
  /// vector may not be unique.
  bool unique = true;
  std::vector<std::string> warnings;
};

/// Closed input-output model: prices with pi = pi A, a_ij = q_ij / q_j,
/// scaled to sum to one. cost_j = sum_i pi_i q_ij, revenue_j = pi_j q_j.
/// Shares its eigenvector computation with influence_scores.
LeontiefResult leontief_closed(const SparseGraph& economy, const SolverConfig& cfg = {},
                               SolveMethod method = SolveMethod::Auto);

struct OpenModelOptions {
  /// Gross output q_j per sector. When set, a_ij = q_ij / q_j and the edge
  /// weights are quantities; when unset the edge weights are the technical
  /// coefficients a_ij themselves (unit production, q_j = 1).
  std::optional<std::vector<double>> gross_output;
  /// Auto picks Direct for n <= dense_limit, Iterative (the Neumann series)
  /// otherwise.
  SolveMethod method = SolveMethod::Auto;
};

/// Open input-output model pi = pi A + v with profit vector v; prices are
/// absolute (not normalized). revenue_j - cost_j = v_j q_j.
/// Throws NumericalError when rho(A) >= 1 on the series path or when
/// I - A is singular on the direct path.
LeontiefResult leontief_open(const SparseGraph& economy, const ScoreVector& profit, const SolverConfig& cfg = {},
                             const OpenModelOptions& options = {});

}  // namespace spectral
