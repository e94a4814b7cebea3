// correlations.hpp
// Bipartite affinity-based correlation measures: the symmetric geometric
// discord, its correlation-matrix lower bound, measurement-relative
// coherence, the coherence difference and the correlated-coherence pair
// Q/N, plus the local-coherence trade-off check.
//
// Convention note. Throughout this module the affinity between a state and
// its pinched image is evaluated as Tr(sqrt(rho) P(sqrt(rho))) where P is
// the pinching map. This is what makes the Hellinger identity exact
// (measurement_coherence == hellinger_coherence to machine precision) and it
// reproduces every closed-form value of the analytic families; evaluating
// Tr(sqrt(rho) sqrt(P(rho))) instead does not.

#pragma once

#include <optional>
#include <vector>

#include "affqis/density_matrix.hpp"
#include "affqis/hermitian_basis.hpp"
#include "affqis/optimize.hpp"

namespace affqis {

class ProjectiveMeasurement {
 public:
  // Complete set of rank-1 orthogonal projectors given by the columns of a
  // unitary.
  explicit ProjectiveMeasurement(const Matrix& unitary,
                                 const Tolerances& tol = default_tolerances());

  int dim() const { return static_cast<int>(unitary_.rows()); }
  const Matrix& unitary() const { return unitary_; }
  Matrix projector(int k) const {
    return unitary_.col(k) * unitary_.col(k).adjoint();
  }

  static ProjectiveMeasurement computational(int dim);

 private:
  Matrix unitary_;
};

// Pinch an arbitrary square matrix on one subsystem (side 0 = a, 1 = b) of a
// bipartite space, or pinch jointly on both sides.
Matrix pinch_local(const Matrix& m, const ProjectiveMeasurement& pm,
                   const std::vector<int>& dims, int side);
Matrix pinch_both(const Matrix& m, const ProjectiveMeasurement& pa,
                  const ProjectiveMeasurement& pb,
                  const std::vector<int>& dims);

// Post-measurement state after local projective measurement on subsystem a,
// and optionally also on b.
DensityMatrix measure_local(const DensityMatrix& rho,
                            const ProjectiveMeasurement& pi_a,
                            const std::optional<ProjectiveMeasurement>& pi_b =
                                std::nullopt);

// --- admissible-measurement parameterisation -----------------------------

// Measurement bases commuting with a marginal up to its eigenvalue
// degeneracy structure: the basis is V * blockdiag(W_c) with V the marginal
// eigenvectors and W_c free unitaries on eigenvalue clusters (gap tolerance
// tol.degenerate_gap). Non-degenerate marginals admit only their eigenbasis
// (zero parameters); a maximally mixed marginal admits every basis.
class BlockBasis {
 public:
  BlockBasis(const DensityMatrix& marginal, double gap_tol);
  // unconstrained variant: one block spanning everything
  explicit BlockBasis(int dim);

  int param_count() const { return param_count_; }
  Matrix basis(const Eigen::VectorXd& params) const;

 private:
  Matrix eigvecs_;
  std::vector<int> block_sizes_;
  int param_count_;
};

// --- discord ---------------------------------------------------------------

// Symmetric affinity-based geometric discord: 1 - max over admissible local
// projective pairs of Tr(sqrt(rho) P_ab(sqrt(rho))). Admissibility follows
// the marginal-invariance rule of BlockBasis.
double discord_affinity(const DensityMatrix& rho, int restarts = 20,
                        std::uint64_t seed = 0);

// Pure bipartite states: 1 - sum s_i^2 from the Schmidt coefficients.
double discord_pure(const PureState& psi);

struct CorrelationMatrix {
  RealMatrix gamma;  // m^2 x n^2 expansion coefficients of sqrt(rho)
};

CorrelationMatrix correlation_matrix(const DensityMatrix& rho);

// Lower bound on the discord from the Gram spectrum of the correlation
// matrix: per measured side, 1 - [G_00 + sum of the (k-1) largest
// eigenvalues of G with the identity row/column removed], maximised over
// sides. For 2 x n systems the a-side term is the closed formula
// 1 - G_00 - lambda_max.
double discord_lower_bound(const DensityMatrix& rho);

// --- measurement-relative coherence ---------------------------------------

// C(rho|Pi) = 1 - Tr(sqrt(rho) Pi_a(sqrt(rho))), one-sided measurement on a.
double measurement_coherence(const DensityMatrix& rho,
                             const ProjectiveMeasurement& pi_a);

// || sqrt(rho) - Pi_a(sqrt(rho)) ||_2^2, computed literally; equals
// measurement_coherence for every state and measurement.
double hellinger_coherence(const DensityMatrix& rho,
                           const ProjectiveMeasurement& pi_a);

// Delta(rho|Pi) = C(rho|Pi) - C(rho_a|Pi), the local term evaluated on the
// marginal with the same measurement basis.
double coherence_difference(const DensityMatrix& rho,
                            const ProjectiveMeasurement& pi_a);

// Extremal one-sided measurement coherences over unconstrained bases.
double measurement_coherence_min(const DensityMatrix& rho, int restarts = 20,
                                 std::uint64_t seed = 0);
double measurement_coherence_max(const DensityMatrix& rho, int restarts = 20,
                                 std::uint64_t seed = 0);

// Q = min over unconstrained one-sided measurements of Delta.
double correlated_coherence_q(const DensityMatrix& rho, int restarts = 20,
                              std::uint64_t seed = 0);
// N = max over marginal-invariant measurements of Delta (the
// measurement-induced-nonlocality analog).
double correlated_coherence_n(const DensityMatrix& rho, int restarts = 20,
                              std::uint64_t seed = 0);
// Unconstrained variant of N, reported separately by the CLI.
double correlated_coherence_n_unconstrained(const DensityMatrix& rho,
                                            int restarts = 20,
                                            std::uint64_t seed = 0);

// --- local-coherence trade-off ---------------------------------------------

struct TradeoffReport {
  double lhs;           // C(rho_a x rho_b), basis coherence of the product
  double rhs;           // 2{1 - [1 - C(rho_a)/2][1 - C(rho_b)/2]}
  double discord_phi;   // discord of the CNOT-like image of the product
  double pinched_bound; // 1 - (1-C_a)^2 (1-C_b)^2; discord_phi never exceeds it
};

// Evaluates both sides of the conversion display and applies the incoherent
// CNOT-like permutation Phi = sum |i, i+j mod d><i, j|. Requires equal
// subsystem dimensions.
TradeoffReport local_coherence_tradeoff_check(const DensityMatrix& rho_a,
                                              const DensityMatrix& rho_b,
                                              int restarts = 20,
                                              std::uint64_t seed = 0);

// The CNOT-like image itself, exposed for tests.
DensityMatrix cnot_image(const DensityMatrix& rho_a,
                         const DensityMatrix& rho_b);

}  // namespace affqis
