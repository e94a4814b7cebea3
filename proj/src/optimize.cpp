#include "affqis/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace affqis {

OptimResult bfgs_minimize(const GradFn& fg, const Eigen::VectorXd& x0,
                          const OptimOptions& opts) {
  const int n = static_cast<int>(x0.size());
  OptimResult res;
  res.x = x0;

  Eigen::MatrixXd h = Eigen::MatrixXd::Identity(n, n);  // inverse Hessian
  Eigen::VectorXd g(n), g_new(n);
  double f = fg(res.x, &g);
  if (!std::isfinite(f)) return res;

  for (int it = 0; it < opts.max_iterations; ++it) {
    res.iterations = it;
    if (g.norm() <= opts.grad_tol) {
      res.converged = true;
      break;
    }
    Eigen::VectorXd d = -h * g;
    double slope = g.dot(d);
    if (slope >= 0.0) {  // reset on loss of descent direction
      h.setIdentity();
      d = -g;
      slope = g.dot(d);
    }

    // backtracking Armijo
    double t = 1.0;
    double f_new = std::numeric_limits<double>::infinity();
    Eigen::VectorXd x_new;
    bool ok = false;
    for (int ls = 0; ls < 50; ++ls) {
      x_new = res.x + t * d;
      f_new = fg(x_new, &g_new);
      if (std::isfinite(f_new) && f_new <= f + 1e-4 * t * slope) {
        ok = true;
        break;
      }
      t *= 0.5;
    }
    if (!ok) {
      res.converged = g.norm() <= 1e-6;  // stalled near a flat region
      break;
    }

    Eigen::VectorXd s = x_new - res.x;
    Eigen::VectorXd y = g_new - g;
    const double sy = s.dot(y);
    if (sy > 1e-12) {
      const double rho_ = 1.0 / sy;
      Eigen::MatrixXd i = Eigen::MatrixXd::Identity(n, n);
      h = (i - rho_ * s * y.transpose()) * h *
              (i - rho_ * y * s.transpose()) +
          rho_ * s * s.transpose();
    }
    res.x = x_new;
    f = f_new;
    g = g_new;
  }
  res.value = f;
  return res;
}

OptimResult nelder_mead_minimize(const ScalarFn& f, const Eigen::VectorXd& x0,
                                 double scale, const OptimOptions& opts) {
  const int n = static_cast<int>(x0.size());
  OptimResult res;
  if (n == 0) {
    res.x = x0;
    res.value = f(x0);
    res.converged = true;
    return res;
  }

  std::vector<Eigen::VectorXd> xs(n + 1, x0);
  std::vector<double> fs(n + 1);
  for (int i = 1; i <= n; ++i) xs[i](i - 1) += scale;
  for (int i = 0; i <= n; ++i) fs[i] = f(xs[i]);

  const int max_iter = std::max(opts.max_iterations, 80 * n);
  std::vector<int> order(n + 1);
  for (int it = 0; it < max_iter; ++it) {
    res.iterations = it;
    for (int i = 0; i <= n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return fs[a] < fs[b]; });
    const int best = order[0], worst = order[n], second = order[n - 1];
    if (fs[worst] - fs[best] <= opts.value_tol) {
      res.converged = true;
      break;
    }

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int i = 0; i <= n; ++i)
      if (i != worst) centroid += xs[i];
    centroid /= n;

    auto accept = [&](const Eigen::VectorXd& x, double fx) {
      xs[worst] = x;
      fs[worst] = fx;
    };

    Eigen::VectorXd xr = centroid + (centroid - xs[worst]);
    double fr = f(xr);
    if (fr < fs[best]) {
      Eigen::VectorXd xe = centroid + 2.0 * (centroid - xs[worst]);
      double fe = f(xe);
      if (fe < fr) accept(xe, fe);
      else accept(xr, fr);
    } else if (fr < fs[second]) {
      accept(xr, fr);
    } else {
      const bool outside = fr < fs[worst];
      Eigen::VectorXd xc = outside ? centroid + 0.5 * (centroid - xs[worst])
                                   : centroid - 0.5 * (centroid - xs[worst]);
      double fc = f(xc);
      if (fc < std::min(fr, fs[worst])) {
        accept(xc, fc);
      } else {  // shrink toward best
        for (int i = 0; i <= n; ++i) {
          if (i == best) continue;
          xs[i] = xs[best] + 0.5 * (xs[i] - xs[best]);
          fs[i] = f(xs[i]);
        }
      }
    }
  }

  int best = 0;
  for (int i = 1; i <= n; ++i)
    if (fs[i] < fs[best]) best = i;
  res.x = xs[best];
  res.value = fs[best];
  return res;
}

OptimResult multistart_minimize(const LocalSearch& search, int dim,
                                const OptimOptions& opts) {
  OptimResult best;
  bool any_finite = false;
  for (int r = 0; r < std::max(1, opts.restarts); ++r) {
    Eigen::VectorXd x0 = Eigen::VectorXd::Zero(dim);
    if (r > 0) {
      // splitmix-style decorrelation of (seed, restart index)
      Rng rng(opts.seed * 0x9E3779B97F4A7C15ull + 0x100000001b3ull * r + 1);
      for (int i = 0; i < dim; ++i) x0(i) = opts.start_scale * rng.gaussian();
    }
    OptimResult res = search(x0);
    if (std::isfinite(res.value)) {
      any_finite = true;
      if (res.value < best.value) best = res;
    }
  }
  require(any_finite, ErrorCode::OptimizationFailed,
          "all restarts produced non-finite objective values");
  return best;
}

double golden_section_max(const std::function<double(double)>& f, double lo,
                          double hi, double tol, double* value) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double x = (a + b) / 2.0;
  if (value) *value = f(x);
  return x;
}

int givens_param_count(int d) { return d * (d - 1); }

Matrix unitary_from_givens(const Eigen::VectorXd& params, int d) {
  require(params.size() == givens_param_count(d), ErrorCode::DimensionMismatch,
          "wrong Givens parameter count");
  Matrix u = Matrix::Identity(d, d);
  int idx = 0;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const double th = params(idx++);
      const double ph = params(idx++);
      const double c = std::cos(th), s = std::sin(th);
      const Complex eip = std::polar(1.0, ph);
      // two-level rotation acting on columns i and j
      for (int r = 0; r < d; ++r) {
        const Complex ui = u(r, i), uj = u(r, j);
        u(r, i) = c * ui + std::conj(eip) * (-s) * uj;
        u(r, j) = eip * s * ui + c * uj;
      }
    }
  }
  return u;
}

Eigen::VectorXd softmax(const Eigen::VectorXd& x) {
  Eigen::VectorXd y = (x.array() - x.maxCoeff()).exp();
  return y / y.sum();
}

}  // namespace affqis
