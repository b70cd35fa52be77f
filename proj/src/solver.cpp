#include "spectral/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "spectral/error.hpp"

namespace spectral {

void SolverConfig::validate() const {
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) throw ConfigError("tolerance must be a positive real");
  if (max_iterations < 1) throw ConfigError("max_iterations must be at least 1");
}

bool prefers_direct(SolveMethod method, std::size_t n) {
  if (method == SolveMethod::Direct && n > dense_limit) {
    throw InputError("direct solve requested above the dense size limit of " + std::to_string(dense_limit));
  }
  return method == SolveMethod::Direct || (method == SolveMethod::Auto && n <= dense_limit);
}

double vector_norm(std::span<const double> v, Norm norm) {
  double s = 0.0;
  if (norm == Norm::L1) {
    for (double x : v) s += std::abs(x);
  } else {
    for (double x : v) s = std::max(s, std::abs(x));
  }
  return s;
}

double distance(std::span<const double> a, std::span<const double> b, Norm norm) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = std::abs(a[i] - b[i]);
    s = norm == Norm::L1 ? s + d : std::max(s, d);
  }
  return s;
}

namespace {

double signed_max(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) {
    if (std::abs(x) > std::abs(m)) m = x;
  }
  return m;
}

double scale_factor(std::span<const double> v, PowerNormalization normalization) {
  return normalization == PowerNormalization::SumToOne ? std::accumulate(v.begin(), v.end(), 0.0) : signed_max(v);
}

}  // namespace

Solution power_method(const LinearOperator& apply, std::span<const double> start, const SolverConfig& cfg,
                      PowerNormalization normalization, const IterationObserver& observer) {
  cfg.validate();
  if (std::all_of(start.begin(), start.end(), [](double x) { return x == 0.0; })) {
    throw InputError("power_method: start vector is all zeros");
  }
  std::vector<double> x(start.begin(), start.end());
  const double s0 = scale_factor(x, normalization);
  if (s0 == 0.0 || !std::isfinite(s0)) throw InputError("power_method: start vector cannot be normalized");
  for (double& v : x) v /= s0;

  std::vector<double> y(x.size());
  Solution out;
  SolveReport& report = out.report;
  for (std::size_t k = 1; k <= cfg.max_iterations; ++k) {
    apply(x, y);
    const double m = scale_factor(y, normalization);
    report.iterations = k;
    if (m == 0.0 || !std::isfinite(m)) {
      // Collapsed (or overflowed) iterate: nothing left to normalize.
      report.eigenvalue_estimate = m;
      report.residual = std::numeric_limits<double>::infinity();
      report.converged = false;
      break;
    }
    for (double& v : y) v /= m;
    report.eigenvalue_estimate = m;
    report.residual = distance(x, y, cfg.norm);
    x.swap(y);
    if (observer) observer(k, report.residual);
    if (report.residual <= cfg.tolerance) {
      report.converged = true;
      break;
    }
  }
  out.scores.values = std::move(x);
  out.scores.normalization =
      normalization == PowerNormalization::SumToOne ? Normalization::SumToOne : Normalization::MaxComponent;
  return out;
}

Solution neumann_series(const SparseGraph& g, double scale, std::span<const double> v, bool include_identity,
                        const SolverConfig& cfg) {
  cfg.validate();
  if (v.size() != g.size()) throw InputError("neumann_series: vector length does not match the graph");
  constexpr int divergence_run = 50;

  std::vector<double> term(v.begin(), v.end());
  std::vector<double> next(term.size());
  std::vector<double> sum(term.size(), 0.0);
  if (include_identity) sum = term;

  Solution out;
  SolveReport& report = out.report;
  double previous = vector_norm(term, cfg.norm);
  int growing = 0;
  for (std::size_t k = 1; k <= cfg.max_iterations; ++k) {
    multiply_left(g, term, next);
    for (double& t : next) t *= scale;
    term.swap(next);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += term[i];

    const double norm = vector_norm(term, cfg.norm);
    report.iterations = k;
    report.residual = norm;
    report.eigenvalue_estimate = previous > 0.0 ? norm / previous : 0.0;
    if (!std::isfinite(norm)) {
      throw NumericalError("neumann_series: terms overflowed; the spectral radius of the scaled matrix is >= 1");
    }
    if (norm <= cfg.tolerance) {
      report.converged = true;
      break;
    }
    growing = norm > previous ? growing + 1 : 0;
    if (growing >= divergence_run) {
      throw NumericalError("neumann_series: series diverges (" + std::to_string(divergence_run) +
                           " consecutive growing terms); the spectral radius of the scaled matrix is >= 1");
    }
    previous = norm;
  }
  out.scores = {std::move(sum), Normalization::None};
  return out;
}

Eigen::MatrixXd to_dense(const SparseGraph& g) {
  if (g.size() > dense_limit) throw InputError("graph too large for a dense representation");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(g.size()), static_cast<Eigen::Index>(g.size()));
  g.for_each_edge([&](std::size_t i, std::size_t j, double w) {
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) += w;
  });
  return m;
}

ScoreVector dense_fixpoint_oracle(const Eigen::MatrixXd& m, const std::optional<std::vector<double>>& exogenous) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw InputError("dense_fixpoint_oracle: matrix must be square");
  if (static_cast<std::size_t>(n) > dense_limit) throw InputError("dense_fixpoint_oracle: n exceeds the dense limit");
  const Eigen::MatrixXd system = Eigen::MatrixXd::Identity(n, n) - m.transpose();

  if (exogenous) {
    if (exogenous->size() != static_cast<std::size_t>(n)) throw InputError("dense_fixpoint_oracle: size mismatch");
    const Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(exogenous->data(), n);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(system);
    if (!lu.isInvertible()) throw NumericalError("dense_fixpoint_oracle: singular system");
    const Eigen::VectorXd pi = lu.solve(v);
    return {std::vector<double>(pi.data(), pi.data() + n), Normalization::None};
  }

  // Stack the normalization row under (I - M^T) and solve the consistent
  // overdetermined system by rank-revealing QR.
  Eigen::MatrixXd stacked(n + 1, n);
  stacked.topRows(n) = system;
  stacked.row(n).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n + 1);
  rhs(n) = 1.0;
  const Eigen::VectorXd pi = stacked.colPivHouseholderQr().solve(rhs);
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((stacked * pi - rhs).lpNorm<Eigen::Infinity>() > 1e-8 * scale) {
    throw NumericalError("dense_fixpoint_oracle: matrix has no left fixed point");
  }
  return {std::vector<double>(pi.data(), pi.data() + n), Normalization::SumToOne};
}

std::vector<double> dense_solve_left(std::vector<double> a, std::size_t n, std::vector<double> b) {
  // x A = b  <=>  A^T x^T = b^T; factor A^T in place (row-major).
  std::vector<double> t(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[j * n + i] = a[i * n + j];
  }
  double scale = 0.0;
  for (double v : t) scale = std::max(scale, std::abs(v));
  const double eps = 1e-13 * std::max(scale, 1.0) * static_cast<double>(std::max<std::size_t>(n, 1));

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(t[r * n + col]) > std::abs(t[pivot * n + col])) pivot = r;
    }
    if (std::abs(t[pivot * n + col]) <= eps) throw NumericalError("dense solve: matrix is singular");
    if (pivot != col) {
      std::swap_ranges(t.begin() + static_cast<std::ptrdiff_t>(col * n),
                       t.begin() + static_cast<std::ptrdiff_t>((col + 1) * n),
                       t.begin() + static_cast<std::ptrdiff_t>(pivot * n));
      std::swap(b[col], b[pivot]);
    }
    const double d = t[col * n + col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = t[r * n + col] / d;
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) t[r * n + c] -= f * t[col * n + c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n, 0.0);
  for (std::size_t r = n; r-- > 0;) {
    double s = b[r];
    for (std::size_t c = r + 1; c < n; ++c) s -= t[r * n + c] * x[c];
    x[r] = s / t[r * n + r];
  }
  return x;
}

std::optional<std::vector<double>> dense_stationary(const std::vector<double>& m, std::size_t n,
                                                   std::optional<std::size_t> replace) {
  if (n == 0) return std::vector<double>{};
  const std::size_t r = replace.value_or(n - 1);
  if (r >= n) throw InputError("dense_stationary: replaced column out of range");
  // pi (I - M) = 0 with column r replaced by the normalization sum(pi) = 1.
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = (i == j ? 1.0 : 0.0) - m[i * n + j];
    a[i * n + r] = 1.0;
  }
  std::vector<double> b(n, 0.0);
  b[r] = 1.0;
  try {
    return dense_solve_left(std::move(a), n, std::move(b));
  } catch (const NumericalError&) {
    return std::nullopt;
  }
}

namespace {

struct BlockRadius {
  double lower = 0.0;
  double upper = 0.0;
  std::size_t iterations = 0;
  bool converged = true;
};

// Collatz-Wielandt iteration on one irreducible block, given as local rows.
BlockRadius block_radius(const std::vector<std::vector<Arc>>& rows, const SolverConfig& cfg) {
  const std::size_t n = rows.size();
  std::vector<double> x(n, 1.0), y(n);
  BlockRadius out;
  out.converged = false;
  for (std::size_t k = 1; k <= cfg.max_iterations; ++k) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (const Arc& a : rows[i]) s += a.weight * x[a.target];
      y[i] = s;
      const double q = s / x[i];
      lo = std::min(lo, q);
      hi = std::max(hi, q);
    }
    out.lower = lo;
    out.upper = hi;
    out.iterations = k;
    if (hi - lo <= cfg.tolerance * std::max(hi, std::numeric_limits<double>::min())) {
      out.converged = true;
      break;
    }
    double mx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] += x[i];
      mx = std::max(mx, y[i]);
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / mx;
  }
  return out;
}

}  // namespace

RadiusEstimate estimate_spectral_radius(const SparseGraph& g, const SolverConfig& cfg) {
  cfg.validate();
  const Components comps = strongly_connected_components(g);
  std::vector<std::vector<std::size_t>> members(comps.count);
  for (std::size_t i = 0; i < g.size(); ++i) members[comps.id[i]].push_back(i);
  std::vector<std::size_t> local(g.size());
  for (const auto& m : members) {
    for (std::size_t k = 0; k < m.size(); ++k) local[m[k]] = k;
  }

  RadiusEstimate out;
  out.report.converged = true;
  for (std::size_t c = 0; c < comps.count; ++c) {
    const auto& m = members[c];
    std::vector<std::vector<Arc>> rows(m.size());
    bool any = false;
    for (std::size_t k = 0; k < m.size(); ++k) {
      for (const Arc& a : g.row(m[k])) {
        if (comps.id[a.target] != c || a.weight == 0.0) continue;
        rows[k].push_back({local[a.target], std::abs(a.weight)});
        any = true;
      }
    }
    if (!any) continue;  // acyclic singleton
    const BlockRadius r = block_radius(rows, cfg);
    out.lower = std::max(out.lower, r.lower);
    out.upper = std::max(out.upper, r.upper);
    out.report.iterations = std::max(out.report.iterations, r.iterations);
    out.report.converged = out.report.converged && r.converged;
  }
  out.value = 0.5 * (out.lower + out.upper);
  out.report.residual = out.upper - out.lower;
  out.report.eigenvalue_estimate = out.value;
  return out;
}

double spectral_radius(const SparseGraph& g, const SolverConfig& cfg) { return estimate_spectral_radius(g, cfg).value; }

}  // namespace spectral
