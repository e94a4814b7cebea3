#include "affqis/distances.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace affqis {

namespace {

void check_same_dims(const DensityMatrix& a, const DensityMatrix& b) {
  require(a.dims() == b.dims(), ErrorCode::DimensionMismatch,
          "states live on different spaces");
}

// Clamp a nominally-[0,1] quantity, erroring if it is badly out of range.
double clamp_unit(double v, const char* what,
                  const Tolerances& tol = default_tolerances()) {
  require(v >= -tol.range_clamp && v <= 1.0 + tol.range_clamp,
          ErrorCode::InternalConsistency,
          std::string(what) + " = " + std::to_string(v) + " outside [0,1]");
  return std::min(1.0, std::max(0.0, v));
}

}  // namespace

BlochVector::BlochVector(double x, double y, double z, const Tolerances& tol)
    : r{x, y, z} {
  require(norm() <= 1.0 + tol.psd_floor, ErrorCode::BlochOutOfBall,
          "|r| = " + std::to_string(norm()));
}

double BlochVector::norm() const {
  return std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
}

double BlochVector::dot(const BlochVector& o) const {
  return r[0] * o.r[0] + r[1] * o.r[1] + r[2] * o.r[2];
}

DensityMatrix BlochVector::to_density() const {
  Matrix m(2, 2);
  m(0, 0) = Complex(1.0 + r[2], 0.0) / 2.0;
  m(1, 1) = Complex(1.0 - r[2], 0.0) / 2.0;
  m(0, 1) = Complex(r[0], -r[1]) / 2.0;
  m(1, 0) = Complex(r[0], r[1]) / 2.0;
  return DensityMatrix(m, {2});
}

double affinity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  check_same_dims(rho, sigma);
  const Complex t = (rho.sqrt() * sigma.sqrt()).trace();
  require(std::abs(t.imag()) <= default_tolerances().imag_part,
          ErrorCode::InternalConsistency, "affinity trace has imaginary part");
  return clamp_unit(t.real(), "affinity");
}

double affinity_metric(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return 1.0 - affinity(rho, sigma);
}

double affinity_general(const Matrix& a, const Matrix& b) {
  return (psd_sqrt(a) * psd_sqrt(b)).trace().real();
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  check_same_dims(rho, sigma);
  const Matrix m = rho.sqrt() * sigma.matrix() * rho.sqrt();
  Eigen::SelfAdjointEigenSolver<Matrix> es((m + m.adjoint()) / 2.0);
  const double f = es.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  return clamp_unit(f, "fidelity");
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  check_same_dims(rho, sigma);
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix() - sigma.matrix());
  return clamp_unit(0.5 * es.eigenvalues().cwiseAbs().sum(), "trace distance");
}

double qubit_affinity_closed_form(const BlochVector& r, const BlochVector& s) {
  const double rn = std::min(r.norm(), 1.0);
  const double sn = std::min(s.norm(), 1.0);
  const double num =
      (1.0 + std::sqrt(1.0 - rn * rn)) * (1.0 + std::sqrt(1.0 - sn * sn)) +
      r.dot(s);
  const double den = (std::sqrt(1.0 + rn) + std::sqrt(1.0 - rn)) *
                     (std::sqrt(1.0 + sn) + std::sqrt(1.0 - sn));
  return clamp_unit(num / den, "qubit affinity");
}

}  // namespace affqis
