#include "spectral/sociometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "spectral/error.hpp"

namespace spectral {

namespace {

std::vector<double> dense_rows(const SparseGraph& g) {
  const std::size_t n = g.size();
  std::vector<double> m(n * n, 0.0);
  g.for_each_edge([&](std::size_t i, std::size_t j, double w) { m[i * n + j] += w; });
  return m;
}

std::string format_real(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

// x <- (x + x R) / 2 from the uniform vector; R must have spectral radius 1.
Solution damped_fixed_point(const SparseGraph& r, const SolverConfig& cfg) {
  const std::size_t n = r.size();
  const LinearOperator op = [&](std::span<const double> x, std::span<double> y) {
    multiply_left(r, x, y);
    for (std::size_t i = 0; i < n; ++i) y[i] = 0.5 * (y[i] + x[i]);
  };
  const std::vector<double> start(n, 1.0 / static_cast<double>(n));
  Solution sol = power_method(op, start, cfg, PowerNormalization::SumToOne);
  sol.report.eigenvalue_estimate = 2.0 * sol.report.eigenvalue_estimate - 1.0;
  return sol;
}

}  // namespace

Solution seeley(const SparseGraph& choices, const SolverConfig& cfg, SolveMethod method) {
  cfg.validate();
  const std::size_t n = choices.size();
  if (n == 0) throw InputError("seeley: graph has no nodes");
  const ScoreVector strength = out_strength(choices);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(strength[i] > 0.0)) {
      throw NumericalError("seeley: '" + choices.label(i) + "' makes no choice; its endorsement cannot be normalized");
    }
  }
  const SparseGraph r = row_stochastic(choices);

  if (prefers_direct(method, n)) {
    if (auto pi = dense_stationary(dense_rows(r), n)) {
      Solution out;
      std::vector<double> check(n);
      multiply_left(r, *pi, check);
      out.report = {1, distance(check, *pi, cfg.norm), 1.0, true};
      out.scores = {std::move(*pi), Normalization::SumToOne};
      return out;
    }
    if (method == SolveMethod::Direct) throw NumericalError("seeley: the popularity vector is not unique");
  }
  Solution out = damped_fixed_point(r, cfg);
  if (!is_strongly_connected(choices)) {
    out.warnings.push_back("choice graph is not strongly connected; the popularity vector may not be unique");
  }
  return out;
}

Solution katz(const SparseGraph& g, const KatzConfig& cfg) {
  cfg.solver.validate();
  const double a = cfg.attenuation;
  if (!(a > 0.0) || !std::isfinite(a)) throw ConfigError("attenuation must be a positive real");
  const SparseGraph l = binarize(g);
  const double rho = spectral_radius(l, cfg.solver);
  if (rho > 0.0 && a * rho >= 1.0) {
    throw NumericalError("katz: attenuation a = " + format_real(a) + " must be below 1/rho(L) = " +
                         format_real(1.0 / rho) + " for the path series to converge");
  }
  const std::vector<double> ones(l.size(), 1.0);
  Solution out = neumann_series(l, a, ones, false, cfg.solver);
  out.report.eigenvalue_estimate = rho;
  return out;
}

Solution hubbell(const SparseGraph& w, const ScoreVector& exogenous, const SolverConfig& cfg, SolveMethod method) {
  cfg.validate();
  const std::size_t n = w.size();
  if (exogenous.size() != n) throw InputError("hubbell: exogenous vector length does not match the graph");
  const double rho = spectral_radius(w, cfg);  // of |W|

  Solution out;
  if (prefers_direct(method, n)) {
    std::vector<double> m = dense_rows(w);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m[i * n + j] = (i == j ? 1.0 : 0.0) - m[i * n + j];
    }
    std::vector<double> pi = dense_solve_left(std::move(m), n, exogenous.values);
    std::vector<double> check(n);
    multiply_left(w, pi, check);
    for (std::size_t j = 0; j < n; ++j) check[j] += exogenous[j];
    out.report = {1, distance(check, pi, cfg.norm), rho, true};
    out.scores = {std::move(pi), Normalization::None};
    if (rho >= 1.0) {
      out.warnings.push_back("rho(|W|) = " + format_real(rho) +
                             " >= 1; the status series does not converge, the direct solution is reported");
    }
    return out;
  }
  if (rho >= 1.0) {
    throw NumericalError("hubbell: rho(|W|) = " + format_real(rho) + " >= 1; the status series diverges");
  }
  out = neumann_series(w, 1.0, exogenous.values, true, cfg);
  out.report.eigenvalue_estimate = rho;
  return out;
}

SparseGraph match_matrix(const MatchList& matches) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, std::size_t> index;
  auto intern = [&](const std::string& team) {
    auto [it, inserted] = index.emplace(team, labels.size());
    if (inserted) labels.push_back(team);
    return it->second;
  };
  std::vector<Edge> edges;
  edges.reserve(2 * matches.size());
  for (const Match& m : matches) {
    if (m.outcome != 0.0 && m.outcome != 0.5 && m.outcome != 1.0) {
      throw InputError("match " + m.team_i + " vs " + m.team_j + ": outcome must be 0, 0.5 or 1");
    }
    if (m.team_i == m.team_j) throw InputError("match " + m.team_i + " vs itself");
    const std::size_t i = intern(m.team_i);
    const std::size_t j = intern(m.team_j);
    if (m.outcome > 0.0) edges.push_back({i, j, m.outcome});
    if (m.outcome < 1.0) edges.push_back({j, i, 1.0 - m.outcome});
  }
  return SparseGraph(std::move(labels), edges);
}

Solution sport_rank(const MatchList& matches, const SportConfig& cfg) {
  cfg.solver.validate();
  const double xi = cfg.perturbation;
  if (!(xi >= 0.0 && xi <= 1.0)) throw ConfigError("perturbation must lie in [0, 1]");
  const SparseGraph a = match_matrix(matches);
  const std::size_t n = a.size();
  const ScoreVector rows = out_strength(a);
  const double c = n == 0 ? 0.0 : *std::max_element(rows.values.begin(), rows.values.end());
  if (!(c > 0.0)) throw NumericalError("sport_rank: match matrix is all zeros");

  const LinearOperator op = [&](std::span<const double> x, std::span<double> y) {
    multiply_left(a, x, y);
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) y[j] = 0.5 * (x[j] + (1.0 - xi) * y[j] / c + xi * mean);
  };
  const std::vector<double> start(n, 1.0 / static_cast<double>(n));
  Solution out = power_method(op, start, cfg.solver, PowerNormalization::SumToOne);

  // Report the eigenvalue of A itself: sum(x A) / sum(x).
  std::vector<double> xa(n);
  multiply_left(a, out.scores.values, xa);
  out.report.eigenvalue_estimate = std::accumulate(xa.begin(), xa.end(), 0.0) / out.scores.sum();
  if (xi == 0.0 && !is_strongly_connected(a)) {
    out.warnings.push_back("match graph is reducible and no perturbation is applied; strengths may not be unique");
  }
  return out;
}

}  // namespace spectral
