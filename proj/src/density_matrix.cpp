#include "affqis/density_matrix.hpp"

#include <Eigen/Eigenvalues>
#include <numeric>

namespace affqis {

namespace {

int dims_product(const std::vector<int>& dims) {
  int p = 1;
  for (int d : dims) p *= d;
  return p;
}

}  // namespace

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::TraceNotOne: return "TraceNotOne";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BadSubsystemIndex: return "BadSubsystemIndex";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::BadRank: return "BadRank";
    case ErrorCode::BlochOutOfBall: return "BlochOutOfBall";
    case ErrorCode::DegenerateState: return "DegenerateState";
    case ErrorCode::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorCode::NotHermitianObservable: return "NotHermitianObservable";
    case ErrorCode::IncompleteKraus: return "IncompleteKraus";
    case ErrorCode::BadSchmidtSpectrum: return "BadSchmidtSpectrum";
    case ErrorCode::OptimizationFailed: return "OptimizationFailed";
    case ErrorCode::InternalConsistency: return "InternalConsistency";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BadGrid: return "BadGrid";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
  }
  return "UnknownError";
}

double max_abs(const Matrix& a) { return a.cwiseAbs().maxCoeff(); }

DensityMatrix::DensityMatrix(const Matrix& data, std::vector<int> dims,
                             const Tolerances& tol)
    : dims_(std::move(dims)) {
  require(data.rows() == data.cols(), ErrorCode::DimensionMismatch,
          "density matrix must be square");
  require(!dims_.empty() && data.rows() == dims_product(dims_),
          ErrorCode::DimensionMismatch,
          "matrix order does not equal the product of subsystem dimensions");
  for (int d : dims_)
    require(d >= 1, ErrorCode::DimensionMismatch, "subsystem dimension < 1");

  require(max_abs(data - data.adjoint()) <= tol.hermitian,
          ErrorCode::NotHermitian, "max |rho - rho^dag| exceeds tolerance");

  const double tr = data.trace().real();
  require(std::abs(tr - 1.0) <= tol.trace_input, ErrorCode::TraceNotOne,
          "trace is " + std::to_string(tr));

  Eigen::SelfAdjointEigenSolver<Matrix> es((data + data.adjoint()) / 2.0);
  RealVector evals = es.eigenvalues();
  require(evals.minCoeff() >= -tol.psd_floor, ErrorCode::NotPSD,
          "smallest eigenvalue is " + std::to_string(evals.minCoeff()));

  evals = evals.cwiseMax(0.0);
  evals /= evals.sum();  // unit trace exactly

  eigenvalues_ = evals;
  eigenvectors_ = es.eigenvectors();
  matrix_ = eigenvectors_ * eigenvalues_.asDiagonal() * eigenvectors_.adjoint();
  matrix_ = (matrix_ + matrix_.adjoint()) / 2.0;
  sqrt_ = eigenvectors_ * eigenvalues_.cwiseSqrt().asDiagonal() *
          eigenvectors_.adjoint();
  sqrt_ = (sqrt_ + sqrt_.adjoint()) / 2.0;
}

DensityMatrix make_density(const Matrix& matrix, const std::vector<int>& dims,
                           const Tolerances& tol) {
  return DensityMatrix(matrix, dims, tol);
}

Matrix matrix_sqrt(const DensityMatrix& rho) { return rho.sqrt(); }

Matrix psd_sqrt(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es((a + a.adjoint()) / 2.0);
  RealVector w = es.eigenvalues().cwiseMax(0.0);
  Matrix s = es.eigenvectors() * w.cwiseSqrt().asDiagonal() *
             es.eigenvectors().adjoint();
  return (s + s.adjoint()) / 2.0;
}

PureState::PureState(const Vector& amplitudes, std::vector<int> dims,
                     const Tolerances& tol)
    : amplitudes_(amplitudes), dims_(std::move(dims)) {
  require(!dims_.empty() && amplitudes_.size() == dims_product(dims_),
          ErrorCode::DimensionMismatch,
          "vector length does not equal the product of subsystem dimensions");
  const double n2 = amplitudes_.squaredNorm();
  require(std::abs(n2 - 1.0) <= tol.unit_norm_input, ErrorCode::TraceNotOne,
          "squared norm is " + std::to_string(n2));
  amplitudes_ /= std::sqrt(n2);
}

DensityMatrix PureState::to_density() const {
  return DensityMatrix(amplitudes_ * amplitudes_.adjoint(), dims_);
}

DensityMatrix partial_trace(const DensityMatrix& rho, int keep) {
  const auto& dims = rho.dims();
  require(dims.size() >= 2, ErrorCode::BadSubsystemIndex,
          "partial trace needs at least two subsystems");
  require(keep >= 0 && keep < static_cast<int>(dims.size()),
          ErrorCode::BadSubsystemIndex, "subsystem index out of range");

  // strides in row-major Kronecker order
  const int n = static_cast<int>(dims.size());
  std::vector<int> stride(n);
  stride[n - 1] = 1;
  for (int k = n - 2; k >= 0; --k) stride[k] = stride[k + 1] * dims[k + 1];

  const int dk = dims[keep];
  int denv = 1;
  for (int k = 0; k < n; ++k)
    if (k != keep) denv *= dims[k];

  // enumerate environment multi-indices as offsets
  std::vector<int> env_offsets(denv, 0);
  {
    std::vector<int> idx(n, 0);
    for (int e = 0; e < denv; ++e) {
      int off = 0;
      int rem = e;
      for (int k = n - 1; k >= 0; --k) {
        if (k == keep) continue;
        idx[k] = rem % dims[k];
        rem /= dims[k];
        off += idx[k] * stride[k];
      }
      env_offsets[e] = off;
    }
  }

  Matrix out = Matrix::Zero(dk, dk);
  const Matrix& m = rho.matrix();
  for (int i = 0; i < dk; ++i)
    for (int j = 0; j < dk; ++j) {
      Complex acc = 0;
      for (int off : env_offsets)
        acc += m(i * stride[keep] + off, j * stride[keep] + off);
      out(i, j) = acc;
    }
  return DensityMatrix(out, {dk});
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  Matrix out(a.dim() * b.dim(), a.dim() * b.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      out.block(i * b.dim(), j * b.dim(), b.dim(), b.dim()) =
          a.matrix()(i, j) * b.matrix();
  std::vector<int> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return DensityMatrix(out, dims);
}

PureState tensor(const PureState& a, const PureState& b) {
  Vector out(a.dim() * b.dim());
  for (int i = 0; i < a.dim(); ++i)
    out.segment(i * b.dim(), b.dim()) = a.amplitudes()(i) * b.amplitudes();
  std::vector<int> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return PureState(out, dims);
}

std::vector<double> schmidt_coefficients(const PureState& psi) {
  require(psi.dims().size() == 2, ErrorCode::NotBipartite,
          "Schmidt decomposition needs exactly two subsystems");
  const int m = psi.dims()[0];
  const int n = psi.dims()[1];
  Matrix a(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = psi.amplitudes()(i * n + j);
  Eigen::JacobiSVD<Matrix> svd(a);
  std::vector<double> s;
  for (int k = 0; k < svd.singularValues().size(); ++k) {
    const double v = svd.singularValues()(k);
    if (v * v > 1e-12) s.push_back(v * v);
  }
  return s;  // JacobiSVD returns singular values in descending order
}

}  // namespace affqis
