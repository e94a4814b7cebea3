// hermitian_basis.hpp
// Orthonormal Hermitian operator basis under the trace inner product:
// generalized Gell-Mann matrices plus the scaled identity. Fixed ordering:
// index 0 is I/sqrt(d), then the d-1 diagonal generators, then for each pair
// i<j (row-major) the symmetric and antisymmetric off-diagonal generators.

#pragma once

#include <vector>

#include "affqis/density_matrix.hpp"

namespace affqis {

class HermitianBasis {
 public:
  explicit HermitianBasis(int dim);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(operators_.size()); }
  const Matrix& operator[](int k) const { return operators_[k]; }
  const std::vector<Matrix>& operators() const { return operators_; }

 private:
  int dim_;
  std::vector<Matrix> operators_;
};

}  // namespace affqis
