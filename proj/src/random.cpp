#include "affqis/random.hpp"

namespace affqis {

Matrix ginibre(int rows, int cols, Rng& rng) {
  Matrix g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) g(i, j) = rng.complex_gaussian();
  return g;
}

DensityMatrix random_density(int dim, int rank, Rng& rng) {
  require(rank >= 1 && rank <= dim, ErrorCode::BadRank,
          "rank must be in [1, dim]");
  Matrix g = ginibre(dim, rank, rng);
  Matrix r = g * g.adjoint();
  return DensityMatrix(r / r.trace().real(), {dim});
}

DensityMatrix random_density(int dim, int rank, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(dim, rank, rng);
}

Matrix random_unitary(int dim, Rng& rng) {
  Matrix g = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < dim; ++k) {
    Complex d = r(k, k);
    q.col(k) *= d / std::abs(d);
  }
  return q;
}

Matrix random_unitary(int dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_unitary(dim, rng);
}

PureState random_pure(const std::vector<int>& dims, Rng& rng) {
  int dim = 1;
  for (int d : dims) dim *= d;
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = rng.complex_gaussian();
  return PureState(v / v.norm(), dims);
}

PureState random_pure(const std::vector<int>& dims, std::uint64_t seed) {
  Rng rng(seed);
  return random_pure(dims, rng);
}

}  // namespace affqis
