#pragma once

// Test-only graph builders and dense oracles. The oracles go through Eigen
// and never call the library's iterative or direct solvers.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include <Eigen/Dense>

#include "spectral/graph.hpp"

namespace fixtures {

using spectral::EdgeRecord;
using spectral::SparseGraph;

inline SparseGraph graph(std::vector<std::tuple<std::string, std::string, double>> edges,
                         std::vector<std::string> isolated = {}) {
  std::vector<EdgeRecord> records;
  for (const auto& l : isolated) records.push_back({l, std::nullopt, std::nullopt, 0});
  for (auto& [s, t, w] : edges) records.push_back({s, t, w, 0});
  return spectral::build_graph(records);
}

inline SparseGraph unweighted(std::vector<std::pair<std::string, std::string>> edges) {
  std::vector<EdgeRecord> records;
  for (auto& [s, t] : edges) records.push_back({s, t, std::nullopt, 0});
  return spectral::build_graph(records);
}

/// n nodes "n0".."n{n-1}"; each ordered pair (including self-loops when
/// `loops`) is an edge with probability p; weights uniform integers 1..max_weight.
inline SparseGraph random_graph(std::mt19937_64& rng, std::size_t n, double p, bool loops, int max_weight = 1) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("n" + std::to_string(i));
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<int> weight(1, max_weight);
  std::vector<spectral::Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j && !loops) continue;
      if (coin(rng)) edges.push_back({i, j, static_cast<double>(weight(rng))});
    }
  }
  return SparseGraph(labels, edges);
}

/// Random graph plus a Hamiltonian cycle, hence strongly connected.
inline SparseGraph random_strong(std::mt19937_64& rng, std::size_t n, double p, bool loops, int max_weight = 1) {
  SparseGraph g = random_graph(rng, n, p, loops, max_weight);
  std::vector<spectral::Edge> edges = g.edges();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (std::size_t k = 0; k < n; ++k) edges.push_back({perm[k], perm[(k + 1) % n], 1.0});
  return g.with_edges(edges);
}

/// Random DAG: edges only from lower to higher index.
inline SparseGraph random_dag(std::mt19937_64& rng, std::size_t n, double p) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("d" + std::to_string(i));
  std::bernoulli_distribution coin(p);
  std::vector<spectral::Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.push_back({i, j, 1.0});
    }
  }
  return SparseGraph(labels, edges);
}

inline Eigen::MatrixXd dense(const SparseGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  g.for_each_edge([&](std::size_t i, std::size_t j, double w) {
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) += w;
  });
  return m;
}

inline Eigen::MatrixXd dense_binary(const SparseGraph& g) {
  Eigen::MatrixXd m = dense(g);
  return (m.array() > 0.0).cast<double>().matrix();
}

/// Dominant eigenpair of a symmetric matrix, vector scaled by its signed
/// max component. Second entry of the pair is the gap to the next eigenvalue.
struct SymmetricEigen {
  double value = 0.0;
  double gap = 0.0;
  Eigen::VectorXd vector;
};

inline SymmetricEigen dominant_symmetric(const Eigen::MatrixXd& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  const Eigen::Index n = a.rows();
  SymmetricEigen out;
  out.value = es.eigenvalues()(n - 1);
  out.gap = n > 1 ? out.value - es.eigenvalues()(n - 2) : out.value;
  out.vector = es.eigenvectors().col(n - 1);
  Eigen::Index k;
  out.vector.cwiseAbs().maxCoeff(&k);
  out.vector /= out.vector(k);
  return out;
}

/// Dominant left eigenvector (largest real eigenvalue) of a general matrix,
/// scaled to sum to one.
inline std::pair<double, Eigen::VectorXd> dominant_left(const Eigen::MatrixXd& m) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(m.transpose());
  Eigen::Index best = 0;
  for (Eigen::Index k = 1; k < m.rows(); ++k) {
    if (es.eigenvalues()(k).real() > es.eigenvalues()(best).real()) best = k;
  }
  Eigen::VectorXd v = es.eigenvectors().col(best).real();
  v /= v.sum();
  return {es.eigenvalues()(best).real(), v};
}

inline double max_abs_diff(const std::vector<double>& a, const Eigen::VectorXd& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b(static_cast<Eigen::Index>(i))));
  return d;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

inline Eigen::VectorXd to_eigen(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

}  // namespace fixtures
