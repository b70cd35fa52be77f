#pragma once

#include <vector>

#include "spectral/graph.hpp"
#include "spectral/solver.hpp"

namespace spectral {

struct HitsConfig {
  SolverConfig solver;
  /// Weight xi of the uniform rank-one term in (1 - xi) A / c + xi ee^T / n,
  /// where c is the largest row sum of A. Zero leaves A untouched.
  double perturbation = 0.0;
};

struct HitsResult {
  ScoreVector authority;  // max-component normalized
  ScoreVector hub;        // max-component normalized
  double eigenvalue = 0.0;
  SolveReport report;
  /// True when the dominant eigenvector is unique: exactly one co-citation
  /// component attains the dominant eigenvalue, or xi > 0.
  bool unique = false;
};

/// HITS authority and hub scores on the 0/1 adjacency of `g`.
///
/// Authority is the dominant eigenvector of A = L^T L found by power
/// iteration with signed-max normalization; A is applied as L then L^T.
/// Without perturbation the start vector is e restricted to the co-citation
/// components whose own dominant eigenvalue is the global one, so nodes in
/// the other components score exactly zero. Hub = L * authority, max-normalized. The eigenvalue is the final
/// normalization constant (without perturbation) or the Rayleigh quotient
/// of A (with). Throws NumericalError on an edgeless graph.
HitsResult hits(const SparseGraph& g, const HitsConfig& cfg = {});

/// Nodes with no neighbour other than themselves in the graph whose
/// adjacency matrix is A = L^T L (self-loops A_ii are ignored).
std::vector<bool> authority_isolated(const SparseGraph& g);

/// Same for the hub matrix H = L L^T.
std::vector<bool> hub_isolated(const SparseGraph& g);

}  // namespace spectral
