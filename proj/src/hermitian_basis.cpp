#include "affqis/hermitian_basis.hpp"

#include <cmath>

namespace affqis {

HermitianBasis::HermitianBasis(int dim) : dim_(dim) {
  require(dim >= 1, ErrorCode::DimensionMismatch, "basis dimension < 1");
  operators_.reserve(dim * dim);

  operators_.push_back(Matrix::Identity(dim, dim) / std::sqrt(double(dim)));

  for (int l = 1; l < dim; ++l) {
    Matrix d = Matrix::Zero(dim, dim);
    for (int k = 0; k < l; ++k) d(k, k) = 1.0;
    d(l, l) = -double(l);
    operators_.push_back(d / std::sqrt(double(l) * (l + 1)));
  }

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      Matrix s = Matrix::Zero(dim, dim);
      s(i, j) = inv_sqrt2;
      s(j, i) = inv_sqrt2;
      operators_.push_back(s);
      Matrix a = Matrix::Zero(dim, dim);
      a(i, j) = Complex(0.0, -inv_sqrt2);
      a(j, i) = Complex(0.0, inv_sqrt2);
      operators_.push_back(a);
    }
  }

  const auto& tol = default_tolerances();
  for (size_t k = 0; k < operators_.size(); ++k)
    for (size_t l = k; l < operators_.size(); ++l) {
      const double ip = (operators_[k] * operators_[l]).trace().real();
      const double expect = (k == l) ? 1.0 : 0.0;
      require(std::abs(ip - expect) <= tol.basis_orthonormal,
              ErrorCode::InternalConsistency,
              "Hermitian basis lost orthonormality");
    }
}

}  // namespace affqis
