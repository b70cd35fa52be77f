#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spectral/graph.hpp"

namespace spectral {

enum class Norm { L1, LInf };

struct SolverConfig {
  double tolerance = 1e-9;
  std::size_t max_iterations = 100000;
  Norm norm = Norm::L1;

  /// Throws ConfigError unless tolerance > 0 and max_iterations >= 1.
  void validate() const;
};

/// Outcome of an iterative solve. `residual` is the distance between the
/// last two iterates (or the size of the last series term) in the
/// configured norm.
struct SolveReport {
  std::size_t iterations = 0;
  double residual = 0.0;
  double eigenvalue_estimate = 0.0;
  bool converged = false;
};

/// Direct dense solve versus an iterative method. Auto lets the routine
/// choose by problem size.
enum class SolveMethod { Auto, Direct, Iterative };

/// Resolves Auto against the problem size. Throws InputError when Direct is
/// requested above dense_limit.
bool prefers_direct(SolveMethod method, std::size_t n);

/// A vector together with the report of the solve that produced it.
struct Solution {
  ScoreVector scores;
  SolveReport report;
  std::vector<std::string> warnings;
};

/// out = apply(in). Must be linear and preserve the dimension.
using LinearOperator = std::function<void(std::span<const double> in, std::span<double> out)>;

/// Called after each iteration with (iteration, residual).
using IterationObserver = std::function<void(std::size_t, double)>;

enum class PowerNormalization {
  SumToOne,  // divide by the component sum; estimate = sum of the product
  SignedMax  // divide by the signed component of maximal magnitude
};

double vector_norm(std::span<const double> v, Norm norm);
double distance(std::span<const double> a, std::span<const double> b, Norm norm);

/// Power iteration x <- apply(x), renormalized every step.
///
/// Stops when successive normalized iterates are within tolerance. An
/// iterate that collapses to zero ends the run with converged = false.
/// Throws InputError when `start` is the zero vector.
Solution power_method(const LinearOperator& apply, std::span<const double> start, const SolverConfig& cfg,
                      PowerNormalization normalization, const IterationObserver& observer = {});

/// Truncated series v * sum_{k >= k0} (scale * W)^k with k0 = 0 when
/// `include_identity` is set, 1 otherwise. Terminates once a term's norm is
/// within tolerance. Throws NumericalError after 50 consecutive growing
/// terms, which signals a spectral radius of scale * W of at least one.
/// eigenvalue_estimate is the ratio of the last two term norms.
Solution neumann_series(const SparseGraph& g, double scale, std::span<const double> v, bool include_identity,
                        const SolverConfig& cfg);

/// Largest matrix size accepted by the dense routines.
inline constexpr std::size_t dense_limit = 2000;

Eigen::MatrixXd to_dense(const SparseGraph& g);

/// Direct solve used as a test oracle.
///
/// Without `exogenous`: the left fixed point pi = pi M, scaled to sum to one
/// (M must have eigenvalue 1). With `exogenous` v: the exact solution of
/// pi = pi M + v. Throws NumericalError on singular systems or when no fixed
/// point exists, InputError when n exceeds dense_limit.
ScoreVector dense_fixpoint_oracle(const Eigen::MatrixXd& m, const std::optional<std::vector<double>>& exogenous = {});

/// Solves x * A = b for the row vector x by LU with partial pivoting.
/// Throws NumericalError when A is numerically singular.
std::vector<double> dense_solve_left(std::vector<double> a, std::size_t n, std::vector<double> b);

/// Left fixed point pi = pi M scaled to sum to one, by direct solve.
/// Column `replace` of (I - M) is swapped for the normalization equation, so
/// it must take part in the column dependency: any column for row-stochastic
/// M, a column with q_j > 0 for M = Q diag(q)^-1. `m` is row-major.
/// Returns nullopt when the fixed point is not unique.
std::optional<std::vector<double>> dense_stationary(const std::vector<double>& m, std::size_t n,
                                                   std::optional<std::size_t> replace = {});

struct RadiusEstimate {
  double value = 0.0;
  double lower = 0.0;  // Collatz-Wielandt bracket, max over components
  double upper = 0.0;
  SolveReport report;
};

/// Spectral radius of |W|.
///
/// The graph is split into strongly connected components; the radius is the
/// maximum over components. Each irreducible block is iterated as
/// (I + B) x, which is primitive, and the Collatz-Wielandt quotients
/// min_i (Bx)_i / x_i <= rho <= max_i (Bx)_i / x_i bracket the answer until
/// the bracket is within tolerance (relative). Acyclic parts contribute 0.
RadiusEstimate estimate_spectral_radius(const SparseGraph& g, const SolverConfig& cfg = {});

double spectral_radius(const SparseGraph& g, const SolverConfig& cfg = {});

}  // namespace spectral
