#include "spectral/influence.hpp"

#include <algorithm>
#include <cmath>

#include "spectral/error.hpp"

namespace spectral {

namespace {

struct UnitEigenvector {
  std::vector<double> pi;
  SolveReport report;
  bool unique = false;
};

std::vector<double> dense_rows(const SparseGraph& g) {
  const std::size_t n = g.size();
  std::vector<double> m(n * n, 0.0);
  g.for_each_edge([&](std::size_t i, std::size_t j, double w) { m[i * n + j] += w; });
  return m;
}

// Left eigenvector for eigenvalue 1 of H = Q diag(q)^-1, scaled to sum to one.
UnitEigenvector unit_eigenvector(const SparseGraph& h, const std::vector<double>& strength, const SolverConfig& cfg,
                                 SolveMethod method) {
  cfg.validate();
  const std::size_t n = h.size();
  UnitEigenvector out;
  if (n == 0) throw InputError("graph has no nodes");

  if (prefers_direct(method, n)) {
    const auto replace = static_cast<std::size_t>(
        std::distance(strength.begin(), std::max_element(strength.begin(), strength.end())));
    if (auto pi = dense_stationary(dense_rows(h), n, replace)) {
      std::vector<double> check(n);
      multiply_left(h, *pi, check);
      out.report.iterations = 1;
      out.report.residual = distance(check, *pi, cfg.norm);
      out.report.eigenvalue_estimate = 1.0;
      out.report.converged = out.report.residual <= cfg.tolerance;
      out.pi = std::move(*pi);
      out.unique = true;
      return out;
    }
    if (method == SolveMethod::Direct) throw NumericalError("direct solve failed: the fixed point is not unique");
  }

  // (x + x H) / 2: same fixed points as H, aperiodic.
  const LinearOperator op = [&](std::span<const double> x, std::span<double> y) {
    multiply_left(h, x, y);
    for (std::size_t i = 0; i < n; ++i) y[i] = 0.5 * (y[i] + x[i]);
  };
  const std::vector<double> start(n, 1.0 / static_cast<double>(n));
  Solution sol = power_method(op, start, cfg, PowerNormalization::SumToOne);
  out.report = sol.report;
  out.report.eigenvalue_estimate = 2.0 * sol.report.eigenvalue_estimate - 1.0;
  out.pi = std::move(sol.scores.values);
  return out;
}

std::vector<std::string> diagnostics(const SparseGraph& g, bool strongly_connected, bool self_loop,
                                     const char* subject) {
  std::vector<std::string> w;
  if (!strongly_connected) {
    w.push_back(std::string(subject) + " graph is not strongly connected; the score vector may not be unique");
  }
  if (!self_loop && g.size() > 1) {
    w.push_back(std::string(subject) +
                " graph has no self-loops; plain power iteration may oscillate (damped iteration is used)");
  }
  return w;
}

}  // namespace

InfluenceResult influence_scores(const SparseGraph& citations, const SolverConfig& cfg, SolveMethod method) {
  const SparseGraph h = dest_outstrength_normalize(citations);
  const ScoreVector strength = out_strength(citations);
  UnitEigenvector eig = unit_eigenvector(h, strength.values, cfg, method);

  InfluenceResult out;
  out.per_reference = {std::move(eig.pi), Normalization::SumToOne};
  out.total.values.resize(citations.size());
  for (std::size_t j = 0; j < citations.size(); ++j) out.total.values[j] = out.per_reference[j] * strength[j];
  out.report = eig.report;
  out.strongly_connected = is_strongly_connected(citations);
  out.has_self_loop = citations.has_self_loop();
  out.warnings = diagnostics(citations, out.strongly_connected, out.has_self_loop, "citation");
  return out;
}

LeontiefResult leontief_closed(const SparseGraph& economy, const SolverConfig& cfg, SolveMethod method) {
  const SparseGraph a = dest_outstrength_normalize(economy);
  const ScoreVector q = out_strength(economy);
  UnitEigenvector eig = unit_eigenvector(a, q.values, cfg, method);

  LeontiefResult out;
  out.prices = {std::move(eig.pi), Normalization::SumToOne};
  out.costs.assign(economy.size(), 0.0);
  multiply_left(economy, out.prices.values, out.costs);
  out.revenues.resize(economy.size());
  for (std::size_t j = 0; j < economy.size(); ++j) out.revenues[j] = out.prices[j] * q[j];
  out.report = eig.report;
  const bool connected = is_strongly_connected(economy);
  out.unique = eig.unique || connected;
  if (!connected) out.warnings.push_back("economy is reducible; equilibrium prices may not be unique");
  out.warnings.push_back("prices are normalized to sum to one; any positive multiple is also an equilibrium");
  return out;
}

LeontiefResult leontief_open(const SparseGraph& economy, const ScoreVector& profit, const SolverConfig& cfg,
                             const OpenModelOptions& options) {
  cfg.validate();
  const std::size_t n = economy.size();
  if (profit.size() != n) throw InputError("leontief_open: profit vector length does not match the economy");
  if (economy.has_negative_weight()) throw NumericalError("leontief_open: negative quantities are not allowed");

  std::vector<double> gross(n, 1.0);
  SparseGraph a = economy;
  if (options.gross_output) {
    gross = *options.gross_output;
    if (gross.size() != n) throw InputError("leontief_open: gross output length does not match the economy");
    std::vector<Edge> edges;
    edges.reserve(economy.edge_count());
    economy.for_each_edge([&](std::size_t i, std::size_t j, double w) {
      if (w == 0.0) return;
      if (!(gross[j] > 0.0)) {
        throw NumericalError("leontief_open: sector '" + economy.label(j) + "' has inputs but no positive output");
      }
      edges.push_back({i, j, w / gross[j]});
    });
    a = economy.with_edges(edges);
  }

  LeontiefResult out;
  const double rho = spectral_radius(a, cfg);
  const bool direct = prefers_direct(options.method, n);
  if (direct) {
    std::vector<double> m = dense_rows(a);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m[i * n + j] = (i == j ? 1.0 : 0.0) - m[i * n + j];
    }
    out.prices = {dense_solve_left(std::move(m), n, profit.values), Normalization::None};
    std::vector<double> check(n);
    multiply_left(a, out.prices.values, check);
    for (std::size_t j = 0; j < n; ++j) check[j] += profit[j];
    out.report.iterations = 1;
    out.report.residual = distance(check, out.prices.values, cfg.norm);
    out.report.eigenvalue_estimate = rho;
    out.report.converged = true;
    if (rho >= 1.0) {
      out.warnings.push_back("spectral radius of the coefficient matrix is " + std::to_string(rho) +
                             " >= 1; the economy is not productive and prices may be negative");
    }
  } else {
    if (rho >= 1.0) {
      throw NumericalError("leontief_open: spectral radius of the coefficient matrix is " + std::to_string(rho) +
                           " >= 1; the price series diverges");
    }
    Solution sol = neumann_series(a, 1.0, profit.values, true, cfg);
    out.prices = std::move(sol.scores);
    out.report = sol.report;
  }

  out.costs.assign(n, 0.0);
  multiply_left(a, out.prices.values, out.costs);
  out.revenues.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.costs[j] *= gross[j];
    out.revenues[j] = out.prices[j] * gross[j];
  }
  return out;
}

}  // namespace spectral
