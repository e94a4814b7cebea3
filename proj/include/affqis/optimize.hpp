// optimize.hpp
// Small dense optimizers used across the library: BFGS with backtracking line
// search (smooth objectives over softmax-reparameterised simplices),
// Nelder-Mead (measurement-manifold searches), golden-section line search,
// and a deterministic multi-restart driver. Restart r of a run with seed s
// always starts from the same point, and results combine by plain minimum,
// so outcomes are restart-order independent.

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <limits>

#include "affqis/density_matrix.hpp"
#include "affqis/random.hpp"

namespace affqis {

struct OptimOptions {
  int max_iterations = 500;
  double grad_tol = 1e-9;
  double value_tol = 1e-9;  // Nelder-Mead simplex value spread
  int restarts = 20;
  std::uint64_t seed = 0;
  double start_scale = 1.0;  // stddev of random start components
};

struct OptimResult {
  Eigen::VectorXd x;
  double value = std::numeric_limits<double>::infinity();
  int iterations = 0;
  bool converged = false;
};

// Objective with gradient written into *grad when non-null.
using GradFn = std::function<double(const Eigen::VectorXd&, Eigen::VectorXd*)>;
using ScalarFn = std::function<double(const Eigen::VectorXd&)>;

OptimResult bfgs_minimize(const GradFn& fg, const Eigen::VectorXd& x0,
                          const OptimOptions& opts = {});

OptimResult nelder_mead_minimize(const ScalarFn& f, const Eigen::VectorXd& x0,
                                 double scale, const OptimOptions& opts = {});

// Multi-restart driver. Restart 0 starts at zero (identity unitary / uniform
// simplex); the others are Gaussian with deterministic per-index seeds.
// method: wraps either optimizer above behind a common callable.
using LocalSearch =
    std::function<OptimResult(const Eigen::VectorXd& x0)>;

OptimResult multistart_minimize(const LocalSearch& search, int dim,
                                const OptimOptions& opts);

// Golden-section maximisation of a unimodal function on [lo, hi].
// Returns the argmax; *value receives the maximum when non-null.
double golden_section_max(const std::function<double(double)>& f, double lo,
                          double hi, double tol, double* value = nullptr);

// --- unitary parameterisation -------------------------------------------

// Number of parameters of the Givens-product parameterisation: d*(d-1).
int givens_param_count(int d);

// Unitary built as a product of two-level Givens rotations, one (theta, phi)
// pair per index pair i<j. For d=2 this is the Bloch-sphere (theta, phi)
// measurement parameterisation. Column phases are irrelevant for the rank-1
// projectors derived from the columns.
Matrix unitary_from_givens(const Eigen::VectorXd& params, int d);

// Softmax of x; strictly positive entries summing to one.
Eigen::VectorXd softmax(const Eigen::VectorXd& x);

}  // namespace affqis
