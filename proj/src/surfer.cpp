#include "spectral/surfer.hpp"

#include <algorithm>
#include <random>

#include "spectral/error.hpp"
#include "spectral/pagerank.hpp"

namespace spectral {

namespace {

class Sampler {
 public:
  explicit Sampler(std::span<const double> weights) : cumulative_(weights.size()) {
    std::partial_sum(weights.begin(), weights.end(), cumulative_.begin());
  }
  // u in [0, 1)
  std::size_t pick(double u) const {
    const double target = u * cumulative_.back();
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
    return std::min(static_cast<std::size_t>(it - cumulative_.begin()), cumulative_.size() - 1);
  }

 private:
  std::vector<double> cumulative_;
};

}  // namespace

ScoreVector simulate(const SparseGraph& g, const SimConfig& cfg) {
  const std::size_t n = g.size();
  if (n == 0) throw InputError("simulate: graph has no nodes");
  if (cfg.steps < 1) throw ConfigError("steps must be at least 1");
  PageRankConfig pr;
  pr.alpha = cfg.alpha;
  pr.personalization = cfg.personalization;
  pr.dangling = cfg.dangling;
  const PageRankVectors vec = resolve_vectors(n, pr);
  if (g.has_negative_weight()) throw NumericalError("simulate: negative edge weights");

  const Sampler teleport(vec.personalization);
  const Sampler dangling(vec.dangling);
  const ScoreVector strength = out_strength(g);
  std::vector<std::vector<double>> row_cumulative(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& c = row_cumulative[i];
    c.reserve(g.out_degree(i));
    double s = 0.0;
    for (const Arc& a : g.row(i)) c.push_back(s += a.weight);
  }

  std::mt19937_64 rng(cfg.seed);
  const auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  const auto step = [&](std::size_t at) -> std::size_t {
    if (uniform() >= cfg.alpha) return teleport.pick(uniform());
    if (!(strength[at] > 0.0)) return dangling.pick(uniform());
    const auto& c = row_cumulative[at];
    const double target = uniform() * c.back();
    const auto k = std::min(static_cast<std::size_t>(std::upper_bound(c.begin(), c.end(), target) - c.begin()),
                            c.size() - 1);
    return g.row(at)[k].target;
  };

  std::size_t at = teleport.pick(uniform());
  for (std::uint64_t k = 0; k < burn_in_steps; ++k) at = step(at);
  std::vector<std::uint64_t> visits(n, 0);
  for (std::uint64_t k = 0; k < cfg.steps; ++k) {
    at = step(at);
    ++visits[at];
  }

  ScoreVector out{std::vector<double>(n), Normalization::SumToOne};
  const auto total = static_cast<double>(cfg.steps);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = static_cast<double>(visits[i]) / total;
  return out;
}

}  // namespace spectral
