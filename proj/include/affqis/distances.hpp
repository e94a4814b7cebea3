// distances.hpp
// Affinity Tr(sqrt(rho) sqrt(sigma)) and the competitor distances (fidelity,
// trace distance), plus the single-qubit Bloch-vector closed form.

#pragma once

#include <array>

#include "affqis/density_matrix.hpp"

namespace affqis {

struct BlochVector {
  std::array<double, 3> r{0.0, 0.0, 0.0};

  BlochVector() = default;
  BlochVector(double x, double y, double z,
              const Tolerances& tol = default_tolerances());

  double norm() const;
  double dot(const BlochVector& other) const;

  // (I + r.sigma)/2 as a validated state
  DensityMatrix to_density() const;
};

// Tr(sqrt(rho) sqrt(sigma)), clamped to [0, 1]. Out-of-range beyond
// tol.range_clamp raises InternalConsistency instead of clamping silently.
double affinity(const DensityMatrix& rho, const DensityMatrix& sigma);

// d_A = 1 - A.
double affinity_metric(const DensityMatrix& rho, const DensityMatrix& sigma);

// Tr sqrt(sqrt(rho) sigma sqrt(rho)) via eigenvalues clipped at zero.
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

// (1/2) sum |eig(rho - sigma)|.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

// Affinity of two (possibly sub-normalised) PSD matrices. Needed where
// pinched blocks are compared without renormalisation.
double affinity_general(const Matrix& a, const Matrix& b);

// Closed-form single-qubit affinity from two Bloch vectors.
double qubit_affinity_closed_form(const BlochVector& r, const BlochVector& s);

}  // namespace affqis
