#include "spectral/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "spectral/error.hpp"

namespace spectral {

double ScoreVector::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

void normalize_sum(ScoreVector& v) {
  const double s = v.sum();
  if (s == 0.0 || !std::isfinite(s)) throw NumericalError("cannot normalize a vector whose sum is zero or not finite");
  for (double& x : v.values) x /= s;
  v.normalization = Normalization::SumToOne;
}

void normalize_max(ScoreVector& v) {
  double m = 0.0;
  for (double x : v.values) {
    if (std::abs(x) > std::abs(m)) m = x;
  }
  if (m == 0.0 || !std::isfinite(m)) throw NumericalError("cannot normalize the zero vector");
  for (double& x : v.values) x /= m;
  v.normalization = Normalization::MaxComponent;
}

SparseGraph::SparseGraph(std::vector<std::string> labels, std::span<const Edge> edges)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (labels_[i].empty()) throw InputError("empty node label");
    if (!index_.emplace(labels_[i], i).second) throw InputError("duplicate node label '" + labels_[i] + "'");
  }

  std::vector<Edge> sorted(edges.begin(), edges.end());
  for (const Edge& e : sorted) {
    if (e.source >= n || e.target >= n) throw InputError("edge endpoint out of range");
    if (!std::isfinite(e.weight)) throw InputError("non-finite edge weight");
  }
  std::stable_sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
    return a.source != b.source ? a.source < b.source : a.target < b.target;
  });

  offsets_.assign(n + 1, 0);
  arcs_.reserve(sorted.size());
  for (std::size_t k = 0; k < sorted.size();) {
    const Edge& e = sorted[k];
    double w = 0.0;
    for (; k < sorted.size() && sorted[k].source == e.source && sorted[k].target == e.target; ++k) {
      w += sorted[k].weight;
    }
    arcs_.push_back({e.target, w});
    ++offsets_[e.source + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
}

std::optional<std::size_t> SparseGraph::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Edge> SparseGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for_each_edge([&](std::size_t i, std::size_t j, double w) { out.push_back({i, j, w}); });
  return out;
}

bool SparseGraph::has_self_loop() const {
  for (std::size_t i = 0; i < size(); ++i) {
    for (const Arc& a : row(i)) {
      if (a.target == i) return true;
    }
  }
  return false;
}

bool SparseGraph::has_negative_weight() const {
  return std::any_of(arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.weight < 0.0; });
}

double SparseGraph::total_weight() const {
  double s = 0.0;
  for (const Arc& a : arcs_) s += a.weight;
  return s;
}

SparseGraph SparseGraph::with_edges(std::span<const Edge> edges) const { return SparseGraph(labels_, edges); }

bool operator==(const SparseGraph& a, const SparseGraph& b) {
  if (a.labels_ != b.labels_ || a.offsets_ != b.offsets_) return false;
  return std::equal(a.arcs_.begin(), a.arcs_.end(), b.arcs_.begin(), b.arcs_.end(),
                    [](const Arc& x, const Arc& y) { return x.target == y.target && x.weight == y.weight; });
}

SparseGraph build_graph(std::span<const EdgeRecord> records) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, std::size_t> index;
  auto intern = [&](const std::string& label, std::size_t line) {
    if (label.empty()) {
      throw InputError("line " + std::to_string(line) + ": empty node label");
    }
    auto [it, inserted] = index.emplace(label, labels.size());
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::vector<Edge> edges;
  edges.reserve(records.size());
  for (const EdgeRecord& r : records) {
    const std::size_t s = intern(r.source, r.line);
    if (!r.target) continue;
    const std::size_t t = intern(*r.target, r.line);
    const double w = r.weight.value_or(1.0);
    if (!std::isfinite(w)) {
      std::ostringstream msg;
      msg << "line " << r.line << ": non-finite weight for edge " << r.source << " -> " << *r.target;
      throw InputError(msg.str());
    }
    edges.push_back({s, t, w});
  }
  return SparseGraph(std::move(labels), edges);
}

ScoreVector out_strength(const SparseGraph& g) {
  ScoreVector out{std::vector<double>(g.size(), 0.0), Normalization::None};
  g.for_each_edge([&](std::size_t i, std::size_t, double w) { out.values[i] += w; });
  return out;
}

ScoreVector in_strength(const SparseGraph& g) {
  ScoreVector out{std::vector<double>(g.size(), 0.0), Normalization::None};
  g.for_each_edge([&](std::size_t, std::size_t j, double w) { out.values[j] += w; });
  return out;
}

namespace {

void require_nonnegative(const SparseGraph& g, const char* what) {
  g.for_each_edge([&](std::size_t i, std::size_t j, double w) {
    if (w < 0.0) {
      throw NumericalError(std::string(what) + ": negative weight on edge " + g.label(i) + " -> " + g.label(j));
    }
  });
}

}  // namespace

SparseGraph row_stochastic(const SparseGraph& g) {
  require_nonnegative(g, "row_stochastic");
  const ScoreVector strength = out_strength(g);
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  g.for_each_edge([&](std::size_t i, std::size_t j, double w) {
    if (strength[i] > 0.0) edges.push_back({i, j, w / strength[i]});
  });
  return g.with_edges(edges);
}

SparseGraph dest_outstrength_normalize(const SparseGraph& g) {
  require_nonnegative(g, "dest_outstrength_normalize");
  const ScoreVector strength = out_strength(g);
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  g.for_each_edge([&](std::size_t i, std::size_t j, double w) {
    if (w == 0.0) return;
    if (strength[j] <= 0.0) {
      throw NumericalError("node '" + g.label(j) + "' receives weight from '" + g.label(i) +
                           "' but has zero out-strength; its normalized score is undefined");
    }
    edges.push_back({i, j, w / strength[j]});
  });
  return g.with_edges(edges);
}

SparseGraph transpose(const SparseGraph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  g.for_each_edge([&](std::size_t i, std::size_t j, double w) { edges.push_back({j, i, w}); });
  return g.with_edges(edges);
}

SparseGraph binarize(const SparseGraph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  g.for_each_edge([&](std::size_t i, std::size_t j, double w) {
    if (w > 0.0) edges.push_back({i, j, 1.0});
  });
  return g.with_edges(edges);
}

SparseGraph scaled(const SparseGraph& g, double factor) {
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) e.weight *= factor;
  return g.with_edges(edges);
}

SparseGraph absolute(const SparseGraph& g) {
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) e.weight = std::abs(e.weight);
  return g.with_edges(edges);
}

void multiply_left(const SparseGraph& g, std::span<const double> x, std::span<double> y) {
  std::fill(y.begin(), y.end(), 0.0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double xi = x[i];
    if (xi == 0.0) continue;
    for (const Arc& a : g.row(i)) y[a.target] += xi * a.weight;
  }
}

void multiply_right(const SparseGraph& g, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    double s = 0.0;
    for (const Arc& a : g.row(i)) s += a.weight * x[a.target];
    y[i] = s;
  }
}

Components strongly_connected_components(const SparseGraph& g) {
  // Iterative Tarjan.
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  const std::size_t n = g.size();
  Components out;
  out.id.assign(n, unvisited);
  std::vector<std::size_t> order(n, unvisited), low(n, 0), stack;
  std::vector<bool> on_stack(n, false);
  struct Frame {
    std::size_t node;
    std::size_t next_arc;
  };
  std::vector<Frame> calls;
  std::size_t counter = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (order[root] != unvisited) continue;
    calls.push_back({root, 0});
    order[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!calls.empty()) {
      Frame& f = calls.back();
      const auto arcs = g.row(f.node);
      if (f.next_arc < arcs.size()) {
        const std::size_t w = arcs[f.next_arc++].target;
        if (order[w] == unvisited) {
          order[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          calls.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.node] = std::min(low[f.node], order[w]);
        }
        continue;
      }
      const std::size_t v = f.node;
      calls.pop_back();
      if (!calls.empty()) low[calls.back().node] = std::min(low[calls.back().node], low[v]);
      if (low[v] == order[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          out.id[w] = out.count;
        } while (w != v);
        ++out.count;
      }
    }
  }
  return out;
}

bool is_strongly_connected(const SparseGraph& g) { return strongly_connected_components(g).count <= 1; }

}  // namespace spectral
