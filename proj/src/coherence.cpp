#include "affqis/coherence.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace affqis {

namespace {

// real nonnegative diagonal of sqrt(rho)
RealVector sqrt_diagonal(const DensityMatrix& rho) {
  return rho.sqrt().diagonal().real().cwiseMax(0.0);
}

// chain a d(f)/d(delta) gradient through the softmax reparameterisation
Eigen::VectorXd softmax_chain(const Eigen::VectorXd& delta,
                              const Eigen::VectorXd& g_delta) {
  const double mean = delta.dot(g_delta);
  return delta.array() * (g_delta.array() - mean);
}

double multistart_simplex(const GradFn& fg, int dim, int restarts,
                          std::uint64_t seed) {
  OptimOptions opts;
  opts.restarts = restarts;
  opts.seed = seed;
  OptimResult best = multistart_minimize(
      [&](const Eigen::VectorXd& x0) { return bfgs_minimize(fg, x0, opts); },
      dim, opts);
  return best.value;
}

}  // namespace

IncoherentState::IncoherentState(const RealVector& diag, const Tolerances& tol)
    : diagonal(diag) {
  require(diagonal.minCoeff() >= -tol.psd_floor, ErrorCode::NotPSD,
          "incoherent state has a negative weight");
  require(std::abs(diagonal.sum() - 1.0) <= tol.trace_input,
          ErrorCode::TraceNotOne, "incoherent weights do not sum to 1");
  diagonal = diagonal.cwiseMax(0.0);
  diagonal /= diagonal.sum();
}

DensityMatrix IncoherentState::to_density() const {
  Matrix m = Matrix::Zero(diagonal.size(), diagonal.size());
  for (int i = 0; i < diagonal.size(); ++i) m(i, i) = diagonal(i);
  return DensityMatrix(m, {static_cast<int>(diagonal.size())});
}

QuantumChannel::QuantumChannel(std::vector<Matrix> kraus, bool incoherent,
                               const Tolerances& tol)
    : kraus_(std::move(kraus)), incoherent_(incoherent) {
  require(!kraus_.empty(), ErrorCode::IncompleteKraus, "empty Kraus set");
  const auto d = kraus_.front().rows();
  Matrix acc = Matrix::Zero(d, d);
  for (const auto& k : kraus_) {
    require(k.rows() == d && k.cols() == d, ErrorCode::DimensionMismatch,
            "Kraus operators must share one square dimension");
    acc += k.adjoint() * k;
  }
  require(max_abs(acc - Matrix::Identity(d, d)) <= tol.kraus_complete,
          ErrorCode::IncompleteKraus,
          "sum K^dag K deviates from the identity");
  if (incoherent_) {
    for (const auto& k : kraus_) {
      for (int j = 0; j < d; ++j) {
        Matrix img = k.col(j) * k.col(j).adjoint();  // K |j><j| K^dag
        Matrix off = img;
        off.diagonal().setZero();
        require(max_abs(off) <= tol.kraus_complete, ErrorCode::IncompleteKraus,
                "Kraus operator flagged incoherent maps a basis state to a "
                "coherent state");
      }
    }
  }
}

DensityMatrix apply_channel(const DensityMatrix& rho,
                            const QuantumChannel& channel) {
  require(channel.dim() == rho.dim(), ErrorCode::DimensionMismatch,
          "channel dimension does not match the state");
  Matrix out = Matrix::Zero(rho.dim(), rho.dim());
  for (const auto& k : channel.kraus()) out += k * rho.matrix() * k.adjoint();
  return DensityMatrix(out, rho.dims());
}

std::vector<std::pair<double, DensityMatrix>> selective_outcomes(
    const DensityMatrix& rho, const QuantumChannel& channel) {
  require(channel.dim() == rho.dim(), ErrorCode::DimensionMismatch,
          "channel dimension does not match the state");
  std::vector<std::pair<double, DensityMatrix>> out;
  for (const auto& k : channel.kraus()) {
    Matrix m = k * rho.matrix() * k.adjoint();
    const double p = m.trace().real();
    if (p < 1e-12) continue;
    out.emplace_back(p, DensityMatrix(m / p, rho.dims()));
  }
  return out;
}

QuantumChannel identity_channel(int dim) {
  return QuantumChannel({Matrix::Identity(dim, dim)}, true);
}

QuantumChannel dephasing_channel(int dim) {
  std::vector<Matrix> ks;
  for (int i = 0; i < dim; ++i) {
    Matrix k = Matrix::Zero(dim, dim);
    k(i, i) = 1.0;
    ks.push_back(k);
  }
  return QuantumChannel(std::move(ks), true);
}

QuantumChannel random_cptp_channel(int dim, int kraus_count, Rng& rng) {
  Matrix u = random_unitary(dim * kraus_count, rng);
  std::vector<Matrix> ks;
  for (int i = 0; i < kraus_count; ++i)
    ks.push_back(u.block(i * dim, 0, dim, dim));
  return QuantumChannel(std::move(ks), false);
}

QuantumChannel random_incoherent_channel(int dim, int kraus_count, Rng& rng) {
  // K_i = D_i P_i with P_i a permutation; the amplitude vector of each input
  // column across the Kraus index is unit, so sum K^dag K = I exactly.
  std::vector<std::vector<int>> perms;
  for (int i = 0; i < kraus_count; ++i) {
    std::vector<int> p(dim);
    std::iota(p.begin(), p.end(), 0);
    for (int j = dim - 1; j > 0; --j) std::swap(p[j], p[rng.below(j + 1)]);
    perms.push_back(std::move(p));
  }
  std::vector<Matrix> ks(kraus_count, Matrix::Zero(dim, dim));
  for (int c = 0; c < dim; ++c) {
    Vector v(kraus_count);
    for (int i = 0; i < kraus_count; ++i) v(i) = rng.complex_gaussian();
    v /= v.norm();
    for (int i = 0; i < kraus_count; ++i) ks[i](perms[i][c], c) = v(i);
  }
  return QuantumChannel(std::move(ks), true);
}

double coherence_affinity(const DensityMatrix& rho) {
  const RealVector a = sqrt_diagonal(rho);
  return 1.0 - std::sqrt(a.squaredNorm());
}

IncoherentState closest_incoherent_state(const DensityMatrix& rho) {
  const RealVector a = sqrt_diagonal(rho);
  require(a.maxCoeff() >= 1e-14, ErrorCode::DegenerateState,
          "all diagonal entries of sqrt(rho) vanish");
  RealVector w = a.cwiseProduct(a);
  return IncoherentState(w / w.sum());
}

double coherence_affinity_bruteforce(const DensityMatrix& rho, int restarts,
                                     std::uint64_t seed) {
  const RealVector a = sqrt_diagonal(rho);
  // maximise A(delta) = sum_i sqrt(delta_i) a_i; concave in sqrt(delta)
  GradFn fg = [&a](const Eigen::VectorXd& x, Eigen::VectorXd* grad) {
    const Eigen::VectorXd delta = softmax(x);
    const Eigen::VectorXd sq = delta.cwiseSqrt();
    const double value = sq.dot(a);
    if (grad) {
      // d(-value)/dx_j = -1/2 (sqrt(delta_j) a_j - delta_j * value);
      // written via sqrt(delta)*a so it stays finite at the boundary
      grad->resize(delta.size());
      for (int j = 0; j < delta.size(); ++j)
        (*grad)(j) = -0.5 * (sq(j) * a(j) - delta(j) * value);
    }
    return -value;
  };
  const double best = multistart_simplex(fg, rho.dim(), restarts, seed);
  return 1.0 + best;  // 1 - max A
}

double coherence_fidelity(const DensityMatrix& rho, int restarts,
                          std::uint64_t seed) {
  const Matrix& s = rho.sqrt();
  const int d = rho.dim();
  GradFn fg = [&](const Eigen::VectorXd& x, Eigen::VectorXd* grad) {
    const Eigen::VectorXd delta = softmax(x);
    Matrix m = s * delta.asDiagonal() * s;
    Eigen::SelfAdjointEigenSolver<Matrix> es((m + m.adjoint()) / 2.0);
    RealVector w = es.eigenvalues().cwiseMax(0.0);
    const double value = w.cwiseSqrt().sum();
    if (grad) {
      // dF/ddelta_k = 1/2 [ sqrt(rho) M^{-1/2} sqrt(rho) ]_kk, pseudo-inverse
      RealVector wi(w.size());
      for (int i = 0; i < w.size(); ++i)
        wi(i) = w(i) > 1e-14 ? 1.0 / std::sqrt(w(i)) : 0.0;
      Matrix mi = es.eigenvectors() * wi.asDiagonal() *
                  es.eigenvectors().adjoint();
      Matrix core = s * mi * s;
      Eigen::VectorXd g_delta(d);
      for (int k = 0; k < d; ++k) g_delta(k) = -0.5 * core(k, k).real();
      *grad = softmax_chain(delta, g_delta);
    }
    return -value;
  };
  const double best = multistart_simplex(fg, d, restarts, seed);
  return 1.0 + best;
}

double coherence_trace(const DensityMatrix& rho, int restarts,
                       std::uint64_t seed, TraceConvention convention) {
  const int d = rho.dim();
  GradFn fg = [&](const Eigen::VectorXd& x, Eigen::VectorXd* grad) {
    const Eigen::VectorXd delta = softmax(x);
    Matrix m = rho.matrix();
    m.diagonal() -= delta.cast<Complex>();
    Eigen::SelfAdjointEigenSolver<Matrix> es((m + m.adjoint()) / 2.0);
    const double value = es.eigenvalues().cwiseAbs().sum();
    if (grad) {
      // subgradient: d||A||_1 = Tr(sign(A) dA) with dA = -d(delta)
      RealVector sg = es.eigenvalues().unaryExpr(
          [](double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); });
      Matrix sign_m = es.eigenvectors() * sg.asDiagonal() *
                      es.eigenvectors().adjoint();
      Eigen::VectorXd g_delta(d);
      for (int k = 0; k < d; ++k) g_delta(k) = -sign_m(k, k).real();
      *grad = softmax_chain(delta, g_delta);
    }
    return value;
  };
  const double best = multistart_simplex(fg, d, restarts, seed);
  return convention == TraceConvention::raw ? best : best / 2.0;
}

std::pair<double, double> qubit_pure_affinity_coherence_scan(double r_z) {
  require(std::abs(r_z) <= 1.0 + 1e-12, ErrorCode::BlochOutOfBall,
          "|r_z| exceeds 1");
  r_z = std::clamp(r_z, -1.0, 1.0);
  auto a_of = [r_z](double sz) {
    sz = std::clamp(sz, -1.0, 1.0);
    const double num = 1.0 + std::sqrt(std::max(0.0, 1.0 - sz * sz)) + r_z * sz;
    const double den =
        std::sqrt(2.0) * (std::sqrt(1.0 + sz) + std::sqrt(1.0 - sz));
    return num / den;
  };
  // coarse bracket, then golden section inside it
  const int grid = 101;
  int best = 0;
  double best_v = -1.0;
  for (int i = 0; i < grid; ++i) {
    const double sz = -1.0 + 2.0 * i / (grid - 1);
    const double v = a_of(sz);
    if (v > best_v) {
      best_v = v;
      best = i;
    }
  }
  const double h = 2.0 / (grid - 1);
  const double lo = std::max(-1.0, -1.0 + best * h - h);
  const double hi = std::min(1.0, -1.0 + best * h + h);
  double value = 0.0;
  const double sz =
      golden_section_max(a_of, lo, hi, default_tolerances().golden_tol, &value);
  return {sz, 1.0 - value};
}

}  // namespace affqis
