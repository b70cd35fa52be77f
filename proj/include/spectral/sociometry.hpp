#pragma once

#include <string>
#include <vector>

#include "spectral/graph.hpp"
#include "spectral/solver.hpp"

namespace spectral {

/// Popularity from sociometric choices: the left fixed point of the
/// row-stochastic choice matrix, pi = pi R, scaled to sum to one. Each
/// chooser spreads one unit of endorsement over its choices in proportion
/// to their strength. Throws NumericalError when a child makes no choice.
Solution seeley(const SparseGraph& choices, const SolverConfig& cfg = {}, SolveMethod method = SolveMethod::Auto);

struct KatzConfig {
  double attenuation = 0.1;
  SolverConfig solver;
};

/// Attenuated path counts: pi = e * sum_{k >= 1} (a L)^k on the 0/1
/// adjacency L, i.e. the number of paths reaching each node weighted by a
/// per hop. Raw counts, not normalized. Throws NumericalError when
/// a >= 1 / rho(L), quoting both numbers. report.eigenvalue_estimate holds
/// rho(L).
Solution katz(const SparseGraph& g, const KatzConfig& cfg);

/// Status with exogenous input: pi = pi W + v, weights of any sign.
///
/// Direct solve up to dense_limit nodes (warns when rho(|W|) >= 1, since
/// the series reading no longer applies); otherwise the Neumann series,
/// which requires rho(|W|) < 1. report.eigenvalue_estimate holds rho(|W|).
Solution hubbell(const SparseGraph& w, const ScoreVector& exogenous, const SolverConfig& cfg = {},
                 SolveMethod method = SolveMethod::Auto);

/// One game: `outcome` is the score credited to team_j against team_i
/// (1 win, 0.5 draw, 0 loss); team_i receives 1 - outcome.
struct Match {
  std::string team_i;
  std::string team_j;
  double outcome = 0.0;
};

using MatchList = std::vector<Match>;

/// a_ij accumulated over all games, with a_ij the score of j against i.
/// Teams are indexed by first appearance. Throws InputError on outcomes
/// outside {0, 0.5, 1}.
SparseGraph match_matrix(const MatchList& matches);

struct SportConfig {
  SolverConfig solver;
  /// Weight xi of the uniform term in (1 - xi) A / c + xi ee^T / n.
  double perturbation = 0.01;
};

/// Team strengths: the dominant left eigenvector of the match matrix (a
/// team is strong when it beats strong teams), sum-to-one, by damped power
/// iteration. Indices follow match_matrix(matches).labels().
Solution sport_rank(const MatchList& matches, const SportConfig& cfg = {});

}  // namespace spectral
