#ifndef CHEBLAT_DYNAMICS_HPP
#define CHEBLAT_DYNAMICS_HPP

#include <complex>
#include <optional>
#include <vector>

#include "cheblat/models.hpp"

namespace cheblat {

struct LatticeState {
  std::vector<std::complex<double>> u, v;
  double t = 0.0;

  long size() const { return static_cast<long>(u.size()); }
};

struct EvolveConfig {
  double dt = 1e-3;
  double t_end = 1.0;
  Boundary boundary = Boundary::Periodic;
  int stride = 1;          // record every stride-th step (plus the final one)
  double overflow_cap = 1e6;
  // Accuracy claims assume dt <= 0.01; step-refinement studies opt out.
  bool allow_large_dt = false;
};

// Time derivative of the coupled lattice: du/dt = i{ [u+ + u- - 2u] +
// S [u+ + u- + (nu1-2mu1)/mu1 u] } with S = mu1|u|^2 + mu2|v|^2, and the
// matching v equation. Open boundaries treat missing neighbors as zero.
LatticeState rhs(const SalernoParams& p, const LatticeState& state,
                 Boundary bc = Boundary::Periodic);

struct Trajectory {
  std::vector<LatticeState> samples;
  std::optional<double> diverged_at;  // set when the state blew up; time of failure
};

// Classical fixed-step fourth-order integration; deterministic given inputs.
Trajectory evolve(const SalernoParams& p, const LatticeState& initial,
                  const EvolveConfig& cfg);

struct FrequencyEstimate {
  double omega_u = 0.0;  // least-squares slope of the unwrapped phase, negated
  double omega_v = 0.0;
  double fit_rms_u = 0.0;
  double fit_rms_v = 0.0;
};

// Phase-rotation frequencies at one site. Unwraps arg u_j(t) with a +-pi
// branch tracker, then fits a line. Throws when the site modulus is below
// 1e-6 (phase undefined) or fewer than three samples exist.
FrequencyEstimate extract_frequency(const Trajectory& traj, long site);

// u_j = f_j exp(-i delta1), v_j = g_j exp(-i delta2) at t = 0.
LatticeState state_from_profile(const Profile& profile, double delta1 = 0.0,
                                double delta2 = 0.0);

}  // namespace cheblat

#endif
