// random.hpp
// Deterministic random inputs for Monte-Carlo verification: Ginibre-induced
// density matrices, Haar unitaries (QR with phase-fixed R diagonal) and Haar
// pure states. Same seed, same output.

#pragma once

#include <cstdint>
#include <random>

#include "affqis/density_matrix.hpp"

namespace affqis {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double gaussian() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }
  // uniform integer in [0, n)
  int below(int n) {
    return static_cast<int>(std::uniform_int_distribution<int>(0, n - 1)(engine_));
  }

  Complex complex_gaussian() { return {gaussian(), gaussian()}; }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

Matrix ginibre(int rows, int cols, Rng& rng);

// Ginibre-induced state of the given rank.
DensityMatrix random_density(int dim, int rank, std::uint64_t seed);
DensityMatrix random_density(int dim, int rank, Rng& rng);

Matrix random_unitary(int dim, std::uint64_t seed);
Matrix random_unitary(int dim, Rng& rng);

PureState random_pure(const std::vector<int>& dims, std::uint64_t seed);
PureState random_pure(const std::vector<int>& dims, Rng& rng);

}  // namespace affqis
