#include "spectral/hits.hpp"

#include <algorithm>
#include <numeric>

#include "spectral/error.hpp"

namespace spectral {

namespace {

// Relative gap below which two block radii count as the same eigenvalue.
constexpr double block_tie_tolerance = 1e-6;

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Connected components of the graph of A = L^T L, restricted to cited
// nodes: two nodes are joined when some hub links to both. Uncited nodes
// get npos.
struct AuthorityBlocks {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> id;
  std::vector<std::vector<std::size_t>> nodes;
  std::vector<std::vector<std::size_t>> hubs;
};

AuthorityBlocks authority_blocks(const SparseGraph& l) {
  const std::size_t n = l.size();
  DisjointSets sets(n);
  std::vector<bool> cited(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    const auto row = l.row(k);
    for (const Arc& a : row) {
      cited[a.target] = true;
      sets.unite(a.target, row.front().target);
    }
  }
  AuthorityBlocks b;
  b.id.assign(n, AuthorityBlocks::npos);
  std::vector<std::size_t> block_of_root(n, AuthorityBlocks::npos);
  for (std::size_t j = 0; j < n; ++j) {
    if (!cited[j]) continue;
    std::size_t& r = block_of_root[sets.find(j)];
    if (r == AuthorityBlocks::npos) {
      r = b.nodes.size();
      b.nodes.emplace_back();
      b.hubs.emplace_back();
    }
    b.id[j] = r;
    b.nodes[r].push_back(j);
  }
  for (std::size_t k = 0; k < n; ++k) {
    const auto row = l.row(k);
    if (!row.empty()) b.hubs[b.id[row.front().target]].push_back(k);
  }
  return b;
}

// Dominant eigenvalue of the diagonal block of A on one component.
double block_radius(const SparseGraph& l, const AuthorityBlocks& b, std::size_t block, const SolverConfig& cfg) {
  const auto& nodes = b.nodes[block];
  const auto& hubs = b.hubs[block];
  if (nodes.size() == 1) return static_cast<double>(hubs.size());  // A_jj = in-degree
  std::vector<std::size_t> local(l.size(), 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) local[nodes[i]] = i;
  const LinearOperator op = [&](std::span<const double> x, std::span<double> y) {
    std::fill(y.begin(), y.end(), 0.0);
    for (std::size_t k : hubs) {
      double s = 0.0;
      for (const Arc& a : l.row(k)) s += x[local[a.target]];
      for (const Arc& a : l.row(k)) y[local[a.target]] += s;
    }
  };
  const std::vector<double> start(nodes.size(), 1.0);
  return power_method(op, start, cfg, PowerNormalization::SignedMax).report.eigenvalue_estimate;
}

}  // namespace

HitsResult hits(const SparseGraph& g, const HitsConfig& cfg) {
  cfg.solver.validate();
  if (!(cfg.perturbation >= 0.0 && cfg.perturbation <= 1.0)) throw ConfigError("perturbation must lie in [0, 1]");
  const SparseGraph l = binarize(g);
  if (l.edge_count() == 0) throw NumericalError("hits: graph has no edges; every authority score would be zero");
  const std::size_t n = l.size();
  const double xi = cfg.perturbation;

  std::vector<double> buffer(n);
  const auto apply_a = [&](std::span<const double> x, std::span<double> y) {
    multiply_right(l, x, buffer);  // L x
    multiply_left(l, buffer, y);   // L^T (L x)
  };

  double row_scale = 1.0;
  if (xi > 0.0) {
    std::vector<double> ones(n, 1.0), sums(n);
    apply_a(ones, sums);
    row_scale = *std::max_element(sums.begin(), sums.end());
  }

  const LinearOperator op = [&](std::span<const double> x, std::span<double> y) {
    apply_a(x, y);
    if (xi == 0.0) return;
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
    for (double& v : y) v = (1.0 - xi) * v / row_scale + xi * mean;
  };

  // A is block diagonal over the co-citation components. Starting only on
  // the blocks that attain the dominant eigenvalue keeps every other score
  // exactly zero instead of letting it decay geometrically.
  std::vector<double> start(n, 1.0);
  std::size_t dominant_blocks = 1;
  if (xi == 0.0) {
    const AuthorityBlocks blocks = authority_blocks(l);
    std::vector<double> radius(blocks.nodes.size());
    for (std::size_t b = 0; b < radius.size(); ++b) radius[b] = block_radius(l, blocks, b, cfg.solver);
    const double top = *std::max_element(radius.begin(), radius.end());
    dominant_blocks = 0;
    std::vector<bool> keep(radius.size());
    for (std::size_t b = 0; b < radius.size(); ++b) {
      keep[b] = radius[b] >= top * (1.0 - block_tie_tolerance);
      if (keep[b]) ++dominant_blocks;
    }
    for (std::size_t j = 0; j < n; ++j) {
      start[j] = blocks.id[j] != AuthorityBlocks::npos && keep[blocks.id[j]] ? 1.0 : 0.0;
    }
  }
  Solution sol = power_method(op, start, cfg.solver, PowerNormalization::SignedMax);

  HitsResult out;
  out.report = sol.report;
  out.authority = std::move(sol.scores);
  if (xi == 0.0) {
    out.eigenvalue = out.report.eigenvalue_estimate;
  } else {
    std::vector<double> ax(n);
    apply_a(out.authority.values, ax);
    const double num = std::inner_product(ax.begin(), ax.end(), out.authority.values.begin(), 0.0);
    const double den = std::inner_product(out.authority.values.begin(), out.authority.values.end(),
                                          out.authority.values.begin(), 0.0);
    out.eigenvalue = num / den;
  }

  out.hub.values.assign(n, 0.0);
  multiply_right(l, out.authority.values, out.hub.values);
  if (std::any_of(out.hub.values.begin(), out.hub.values.end(), [](double v) { return v != 0.0; })) {
    normalize_max(out.hub);
  } else {
    out.hub.normalization = Normalization::MaxComponent;
  }
  out.unique = xi > 0.0 || dominant_blocks == 1;
  return out;
}

std::vector<bool> authority_isolated(const SparseGraph& g) {
  // j has an off-diagonal neighbour iff some in-neighbour of j links to
  // another node as well.
  const SparseGraph l = binarize(g);
  std::vector<bool> isolated(l.size(), true);
  for (std::size_t k = 0; k < l.size(); ++k) {
    const auto row = l.row(k);
    if (row.size() < 2) continue;
    for (const Arc& a : row) isolated[a.target] = false;
  }
  return isolated;
}

std::vector<bool> hub_isolated(const SparseGraph& g) { return authority_isolated(transpose(g)); }

}  // namespace spectral
