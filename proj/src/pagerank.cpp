#include "spectral/pagerank.hpp"

#include <cmath>
#include <numeric>

#include "spectral/error.hpp"

namespace spectral {

namespace {

constexpr double distribution_tolerance = 1e-12;

std::vector<double> checked_distribution(const std::optional<std::vector<double>>& v, std::size_t n,
                                         const char* what) {
  if (!v) return std::vector<double>(n, 1.0 / static_cast<double>(n));
  if (v->size() != n) throw ConfigError(std::string(what) + " vector length does not match the node count");
  double s = 0.0;
  for (double x : *v) {
    if (!(x >= 0.0) || !std::isfinite(x)) throw ConfigError(std::string(what) + " vector has a negative entry");
    s += x;
  }
  if (std::abs(s - 1.0) > distribution_tolerance) throw ConfigError(std::string(what) + " vector must sum to one");
  return *v;
}

std::vector<double> dangling_indicator(const SparseGraph& g) {
  // Zero-weight rows count as dangling: row_stochastic leaves them empty.
  std::vector<double> d = out_strength(g).values;
  for (double& x : d) x = x == 0.0 ? 1.0 : 0.0;
  return d;
}

// y = alpha * (x H + (x . d) w) + (1 - alpha) * sum(x) * v
void google_step(const SparseGraph& h, const std::vector<double>& dangling_mask, const PageRankVectors& vec,
                 double alpha, std::span<const double> x, std::span<double> y) {
  multiply_left(h, x, y);
  double dangling_mass = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    dangling_mass += x[i] * dangling_mask[i];
    total += x[i];
  }
  for (std::size_t j = 0; j < y.size(); ++j) {
    y[j] = alpha * (y[j] + dangling_mass * vec.dangling[j]) + (1.0 - alpha) * total * vec.personalization[j];
  }
}

}  // namespace

PageRankVectors resolve_vectors(std::size_t n, const PageRankConfig& cfg) {
  if (!(cfg.alpha >= 0.0 && cfg.alpha < 1.0)) throw ConfigError("alpha must lie in [0, 1)");
  PageRankVectors out;
  out.personalization = checked_distribution(cfg.personalization, n, "personalization");
  out.dangling = cfg.dangling ? checked_distribution(cfg.dangling, n, "dangling") : out.personalization;
  return out;
}

Solution pagerank(const SparseGraph& g, const PageRankConfig& cfg) {
  cfg.solver.validate();
  const std::size_t n = g.size();
  if (n == 0) throw InputError("pagerank: graph has no nodes");
  const PageRankVectors vec = resolve_vectors(n, cfg);
  const SparseGraph h = row_stochastic(g);
  const std::vector<double> mask = dangling_indicator(g);

  std::vector<double> start = cfg.start.value_or(vec.personalization);
  if (start.size() != n) throw ConfigError("start vector length does not match the node count");
  const LinearOperator op = [&](std::span<const double> x, std::span<double> y) {
    google_step(h, mask, vec, cfg.alpha, x, y);
  };
  return power_method(op, start, cfg.solver, PowerNormalization::SumToOne);
}

std::vector<double> apply_google(const SparseGraph& g, const PageRankConfig& cfg, std::span<const double> pi) {
  const PageRankVectors vec = resolve_vectors(g.size(), cfg);
  std::vector<double> y(g.size());
  google_step(row_stochastic(g), dangling_indicator(g), vec, cfg.alpha, pi, y);
  return y;
}

std::pair<ScoreVector, ScoreVector> endogenous_exogenous_split(const SparseGraph& g, const PageRankConfig& cfg,
                                                               const ScoreVector& pi) {
  const std::size_t n = g.size();
  if (pi.size() != n) throw InputError("endogenous_exogenous_split: vector length does not match the graph");
  const PageRankVectors vec = resolve_vectors(n, cfg);
  const std::vector<double> mask = dangling_indicator(g);

  // pi S = pi H + (pi . d) w
  std::vector<double> endo(n);
  multiply_left(row_stochastic(g), pi.values, endo);
  double dangling_mass = 0.0;
  for (std::size_t i = 0; i < n; ++i) dangling_mass += pi[i] * mask[i];
  std::vector<double> exo(n);
  for (std::size_t j = 0; j < n; ++j) {
    endo[j] = cfg.alpha * (endo[j] + dangling_mass * vec.dangling[j]);
    exo[j] = (1.0 - cfg.alpha) * vec.personalization[j];
  }
  return {ScoreVector{std::move(endo), Normalization::None}, ScoreVector{std::move(exo), Normalization::None}};
}

std::vector<double> stochastic_row_sums(const SparseGraph& g, const PageRankConfig& cfg) {
  const PageRankVectors vec = resolve_vectors(g.size(), cfg);
  const double w_sum = std::accumulate(vec.dangling.begin(), vec.dangling.end(), 0.0);
  ScoreVector sums = out_strength(row_stochastic(g));
  const std::vector<double> mask = dangling_indicator(g);
  for (std::size_t i = 0; i < g.size(); ++i) sums.values[i] += mask[i] * w_sum;
  return sums.values;
}

Eigen::MatrixXd dense_google_matrix(const SparseGraph& g, const PageRankConfig& cfg) {
  const PageRankVectors vec = resolve_vectors(g.size(), cfg);
  Eigen::MatrixXd s = to_dense(row_stochastic(g));
  const std::vector<double> mask = dangling_indicator(g);
  const auto n = static_cast<Eigen::Index>(g.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    const bool dangling = mask[static_cast<std::size_t>(i)] != 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      const double patched = dangling ? vec.dangling[static_cast<std::size_t>(j)] : s(i, j);
      s(i, j) = cfg.alpha * patched + (1.0 - cfg.alpha) * vec.personalization[static_cast<std::size_t>(j)];
    }
  }
  return s;
}

}  // namespace spectral
