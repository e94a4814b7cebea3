// tolerances.hpp
// All numerical tolerances of the library in one record. Operations read
// from default_tolerances() unless a caller passes an explicit override.

#pragma once

namespace affqis {

struct Tolerances {
  // construction / validation
  double hermitian = 1e-12;       // max |rho - rho^dag| entry
  double trace_input = 1e-8;      // |Tr rho - 1| accepted before renormalisation
  double psd_floor = 1e-10;       // eigenvalues in [-psd_floor, 0) are clipped to 0
  double unit_norm_input = 1e-8;  // pure-state squared-norm acceptance window
  double basis_orthonormal = 1e-10;
  double projector_complete = 1e-10;
  double kraus_complete = 1e-10;

  // numerical identities
  double sqrt_reconstruct = 1e-9;  // ||S*S - rho||_max
  double imag_part = 1e-10;        // tolerated imaginary residue of real traces
  double range_clamp = 1e-8;       // out-of-[0,1] beyond this is an internal error
  double degenerate_gap = 1e-8;    // eigenvalue clustering gap for marginals / spectra

  // optimizers
  double grad_norm = 1e-9;       // quasi-Newton convergence
  double simplex_tol = 1e-9;     // Nelder-Mead convergence (spread of values)
  double golden_tol = 1e-10;     // golden-section bracket width
  int max_iterations = 500;
  int default_restarts = 20;
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

}  // namespace affqis
