#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace spectral {

/// How the values of a ScoreVector have been scaled.
enum class Normalization { SumToOne, MaxComponent, None };

/// Per-node scores, index-aligned with the labels of the graph they refer to.
struct ScoreVector {
  std::vector<double> values;
  Normalization normalization = Normalization::None;

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
  double sum() const;
};

/// Rescales `v` in place so that its components sum to one.
/// Throws NumericalError when the sum is zero or not finite.
void normalize_sum(ScoreVector& v);

/// Rescales `v` in place by its signed component of maximal magnitude.
void normalize_max(ScoreVector& v);

/// Index-based weighted edge used to assemble a SparseGraph.
struct Edge {
  std::size_t source = 0;
  std::size_t target = 0;
  double weight = 1.0;
};

/// Outgoing edge as stored in a row of the compressed layout.
struct Arc {
  std::size_t target = 0;
  double weight = 0.0;
};

/// One record of an edge list: `source` alone declares an isolated node.
struct EdgeRecord {
  std::string source;
  std::optional<std::string> target;
  std::optional<double> weight;
  std::size_t line = 0;  // 1-based source line, 0 when not read from a file
};

/// Immutable weighted directed graph in row-compressed form.
///
/// Rows are sorted by target index; parallel edges are merged by summing
/// their weights, so every (source, target) pair appears at most once.
/// Self-loops and negative weights are kept as given.
class SparseGraph {
 public:
  SparseGraph() = default;

  /// Builds from labels and index-based edges. Throws InputError on
  /// duplicate labels, out-of-range indices or non-finite weights.
  SparseGraph(std::vector<std::string> labels, std::span<const Edge> edges);

  std::size_t size() const { return labels_.size(); }
  std::size_t edge_count() const { return arcs_.size(); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  /// Outgoing arcs of node `i`, sorted by target.
  std::span<const Arc> row(std::size_t i) const {
    return {arcs_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  std::size_t out_degree(std::size_t i) const { return offsets_[i + 1] - offsets_[i]; }

  /// Flat list of all edges in row order.
  std::vector<Edge> edges() const;

  bool has_self_loop() const;
  bool has_negative_weight() const;
  double total_weight() const;

  /// Applies `f(source, target, weight)` to every edge in row order.
  template <typename F>
  void for_each_edge(F&& f) const {
    for (std::size_t i = 0; i < size(); ++i) {
      for (const Arc& a : row(i)) f(i, a.target, a.weight);
    }
  }

  /// Same labels, edges replaced.
  SparseGraph with_edges(std::span<const Edge> edges) const;

  friend bool operator==(const SparseGraph& a, const SparseGraph& b);

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::size_t> offsets_ = {0};
  std::vector<Arc> arcs_;
};

/// Builds a graph from edge records; nodes are numbered in order of first
/// appearance. Non-finite weights are rejected with the offending line.
SparseGraph build_graph(std::span<const EdgeRecord> records);

/// values[i] = sum of outgoing weights of i (zero for dangling nodes).
ScoreVector out_strength(const SparseGraph& g);

/// values[j] = sum of incoming weights of j.
ScoreVector in_strength(const SparseGraph& g);

/// Divides each row by its out-strength. Dangling rows stay empty.
/// Throws NumericalError on negative weights.
SparseGraph row_stochastic(const SparseGraph& g);

/// Entry (i, j) becomes w(i, j) / out_strength(j). Throws NumericalError on
/// negative weights or when an edge enters a node with zero out-strength.
SparseGraph dest_outstrength_normalize(const SparseGraph& g);

SparseGraph transpose(const SparseGraph& g);

/// Every positive weight becomes 1; non-positive entries are dropped.
SparseGraph binarize(const SparseGraph& g);

/// Every weight multiplied by `factor`.
SparseGraph scaled(const SparseGraph& g, double factor);

/// Every weight replaced by its magnitude.
SparseGraph absolute(const SparseGraph& g);

/// y = x * W, treating x as a row vector (y_j = sum_i x_i w_ij).
void multiply_left(const SparseGraph& g, std::span<const double> x, std::span<double> y);

/// y = W * x, treating x as a column vector (y_i = sum_j w_ij x_j).
void multiply_right(const SparseGraph& g, std::span<const double> x, std::span<double> y);

struct Components {
  std::vector<std::size_t> id;  // component of each node
  std::size_t count = 0;
};

/// Strongly connected components (Tarjan). Ids follow reverse topological
/// order of the condensation: sink components get the smallest ids.
Components strongly_connected_components(const SparseGraph& g);

bool is_strongly_connected(const SparseGraph& g);

}  // namespace spectral
