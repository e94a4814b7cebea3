// coherence.hpp
// Basis-dependent coherence measures relative to the computational basis:
// the affinity closed form and its closest incoherent state, plus numerical
// C_F and C_T oracles obtained by optimisation over the incoherent simplex
// (softmax reparameterisation + BFGS, multi-restart). Callers rotate states
// with a unitary to change basis.

#pragma once

#include <utility>
#include <vector>

#include "affqis/density_matrix.hpp"
#include "affqis/optimize.hpp"

namespace affqis {

struct IncoherentState {
  RealVector diagonal;

  explicit IncoherentState(const RealVector& diag,
                           const Tolerances& tol = default_tolerances());

  DensityMatrix to_density() const;
};

class QuantumChannel {
 public:
  // Validates trace preservation sum_i K_i^dag K_i = I. If `incoherent` is
  // set, additionally verifies on every basis state that each K_i maps
  // diagonal states to diagonal states.
  QuantumChannel(std::vector<Matrix> kraus, bool incoherent = false,
                 const Tolerances& tol = default_tolerances());

  const std::vector<Matrix>& kraus() const { return kraus_; }
  bool incoherent() const { return incoherent_; }
  int dim() const { return static_cast<int>(kraus_.front().rows()); }

 private:
  std::vector<Matrix> kraus_;
  bool incoherent_;
};

DensityMatrix apply_channel(const DensityMatrix& rho,
                            const QuantumChannel& channel);

// Per-outcome (probability, normalised state); outcomes below p = 1e-12
// are dropped.
std::vector<std::pair<double, DensityMatrix>> selective_outcomes(
    const DensityMatrix& rho, const QuantumChannel& channel);

QuantumChannel identity_channel(int dim);
QuantumChannel dephasing_channel(int dim);
// Stinespring blocks of a Haar unitary on dim*kraus_count.
QuantumChannel random_cptp_channel(int dim, int kraus_count, Rng& rng);
// Diagonal-times-permutation Kraus operators with per-column unit amplitude
// vectors: trace preserving and incoherent by construction.
QuantumChannel random_incoherent_channel(int dim, int kraus_count, Rng& rng);

// C_A(rho) = 1 - sqrt(sum_i <i|sqrt(rho)|i>^2), closed form.
double coherence_affinity(const DensityMatrix& rho);

// delta_i proportional to <i|sqrt(rho)|i>^2; attains the closed-form optimum.
IncoherentState closest_incoherent_state(const DensityMatrix& rho);

// Independent oracle for the closed form: maximise A(rho, delta) over the
// incoherent simplex numerically.
double coherence_affinity_bruteforce(const DensityMatrix& rho,
                                     int restarts = 20,
                                     std::uint64_t seed = 0);

// C_F = 1 - max_delta F(rho, delta), same optimisation scheme.
double coherence_fidelity(const DensityMatrix& rho, int restarts = 20,
                          std::uint64_t seed = 0);

enum class TraceConvention { raw, normalized };

// C_T = min_delta ||rho - delta||_1. `raw` is the plain Schatten-1 norm;
// `normalized` halves it so the Holevo chain applies verbatim.
double coherence_trace(const DensityMatrix& rho, int restarts = 20,
                       std::uint64_t seed = 0,
                       TraceConvention convention = TraceConvention::raw);

// 1D scan of the pure-qubit affinity over incoherent states s = (0,0,s_z).
// Returns (argmax s_z, coherence 1 - max A). Requires |r_z| <= 1.
std::pair<double, double> qubit_pure_affinity_coherence_scan(double r_z);

}  // namespace affqis
