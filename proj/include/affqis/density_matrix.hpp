// density_matrix.hpp
// Validated density-matrix and pure-state types plus the dense Hermitian
// primitives (matrix square root, partial trace, tensor product, Schmidt
// coefficients) the rest of the library is built on.
//
// Conventions: subsystems are in row-major Kronecker order, i.e. the first
// entry of dims() is the slowest index of the composite basis. Every type is
// immutable after construction; all operations are pure functions.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "affqis/errors.hpp"
#include "affqis/tolerances.hpp"

namespace affqis {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;
using Complex = std::complex<double>;

class DensityMatrix {
 public:
  // Validates Hermiticity, unit trace and positivity. Eigenvalues in
  // [-psd_floor, 0) are clipped to zero and the spectrum renormalised so the
  // stored matrix has unit trace exactly (up to rounding).
  DensityMatrix(const Matrix& data, std::vector<int> dims,
                const Tolerances& tol = default_tolerances());

  const Matrix& matrix() const { return matrix_; }
  const Matrix& sqrt() const { return sqrt_; }
  const RealVector& eigenvalues() const { return eigenvalues_; }
  const Matrix& eigenvectors() const { return eigenvectors_; }
  const std::vector<int>& dims() const { return dims_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }
  bool is_bipartite() const { return dims_.size() == 2; }

 private:
  Matrix matrix_;
  Matrix sqrt_;
  RealVector eigenvalues_;  // ascending, clipped to [0, 1]
  Matrix eigenvectors_;
  std::vector<int> dims_;
};

class PureState {
 public:
  PureState(const Vector& amplitudes, std::vector<int> dims,
            const Tolerances& tol = default_tolerances());

  const Vector& amplitudes() const { return amplitudes_; }
  const std::vector<int>& dims() const { return dims_; }
  int dim() const { return static_cast<int>(amplitudes_.size()); }

  DensityMatrix to_density() const;

 private:
  Vector amplitudes_;
  std::vector<int> dims_;
};

DensityMatrix make_density(const Matrix& matrix, const std::vector<int>& dims,
                           const Tolerances& tol = default_tolerances());

// Hermitian PSD square root; S*S reconstructs rho within tol.sqrt_reconstruct.
Matrix matrix_sqrt(const DensityMatrix& rho);

// Square root of an arbitrary Hermitian PSD matrix (negative eigenvalues are
// clipped at zero). Used for pinched blocks and sub-normalised states.
Matrix psd_sqrt(const Matrix& a);

// Reduced state on subsystem `keep` (0-based), tracing out all others.
DensityMatrix partial_trace(const DensityMatrix& rho, int keep);

// Kronecker product with concatenated dims.
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);
PureState tensor(const PureState& a, const PureState& b);

// Squared singular values of the bipartite amplitude matrix, descending,
// zero entries dropped. Requires exactly two subsystems.
std::vector<double> schmidt_coefficients(const PureState& psi);

// Max-norm of a matrix; convenience used across tests and validators.
double max_abs(const Matrix& a);

}  // namespace affqis
