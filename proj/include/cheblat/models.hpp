#ifndef CHEBLAT_MODELS_HPP
#define CHEBLAT_MODELS_HPP

#include <optional>
#include <string>
#include <vector>

#include "cheblat/profiles.hpp"

namespace cheblat {

enum class Boundary { Periodic, Open };

struct SalernoParams {
  double mu1 = -1.0;
  double mu2 = -1.0;
  double nu1 = -2.0;
  double nu2 = -2.0;

  void validate() const;  // mu1, mu2 nonzero (or all four zero: linear mode)
  bool linear() const { return mu1 == 0.0 && mu2 == 0.0; }
};

struct ALParams {
  double mu1 = -1.0;
  double mu2 = -1.0;

  void validate() const;
  SalernoParams to_salerno() const { return {mu1, mu2, 2.0 * mu1, 2.0 * mu2}; }
};

// Coupled quartic-on-site model with quartic shift coupling. Admissible when
// c1 = c2 = f = e/2, b1 = b2 = -d, a1 = a2, c1 h^2 > 0 and
// a1 + 2/h^2 = b1 / sqrt(h^2 c1); the stationary amplitude is then
// phi^2 + psi^2 = 1/sqrt(c1 h^2).
struct Phi6Params {
  double a1, a2, b1, b2, c1, c2, d, e, f, h;

  void validate() const;          // throws std::domain_error when inadmissible
  double amplitude2() const;      // the constant phi^2 + psi^2
  static Phi6Params from_free(double c1, double h, double b1);  // closes the relations
};

// Coupled cubic-on-site model; admissible when 2 beta1 = 2 beta2 = gamma and
// alpha1 = alpha2 = -1/h^2 with beta1 > 0; amplitude phi^2 + psi^2 = 1/(2 beta1 h^2).
struct Phi4Params {
  double alpha1, alpha2, beta1, beta2, gamma, h;

  void validate() const;
  double amplitude2() const;
  static Phi4Params from_free(double beta1, double h);
};

// Real stationary site pair. Ghost values carry the continuum neighbors just
// outside the window so residuals are interior statements even when the
// window is not commensurate with the profile period.
struct StationaryPair {
  std::vector<double> f, g;
  std::optional<double> f_left, f_right, g_left, g_right;

  long size() const { return static_cast<long>(f.size()); }
};

struct ResidualReport {
  double max_abs = 0.0;
  double rms = 0.0;
  double max_scaled = 0.0;  // per-site residual over the sum of |term| magnitudes
  long argmax_site = 0;
  long sites = 0;
};

struct FrequencySet {
  double omega1 = 0.0;        // nu1/mu1, zeroes the first stationary equation
  double omega2 = 0.0;        // nu1 mu2 / mu1^2, zeroes the second one
  double omega2_paper = 0.0;  // same value under the report schema's conventional key
  double omega2_alt = 0.0;    // 2 nu2/mu2 - nu1 mu2/mu1^2 (sign-flipped variant)
  std::optional<double> omega2_al;  // 2 mu1/mu2, an inverse-ratio variant (integrable case)
  std::vector<std::string> flags;   // which candidates disagree with omega2
};

// Frequencies making both stationary residuals vanish identically, found by
// substituting mu1 f^2 + mu2 g^2 = -1. The alternative closed forms are
// reported alongside; disagreements are flagged, not silently dropped.
FrequencySet derive_frequencies(const SalernoParams& p, const StationaryPair& pair);

ResidualReport residual_salerno(const SalernoParams& p, const StationaryPair& pair,
                                double omega1, double omega2,
                                Boundary bc = Boundary::Periodic);
ResidualReport residual_al(const ALParams& p, const StationaryPair& pair,
                           double omega1, double omega2,
                           Boundary bc = Boundary::Periodic);
ResidualReport residual_phi6(const Phi6Params& p, const StationaryPair& pair,
                             Boundary bc = Boundary::Periodic);
ResidualReport residual_phi4(const Phi4Params& p, const StationaryPair& pair,
                             Boundary bc = Boundary::Periodic);

// Pair builders (Chebyshev-recurrence route, ghost neighbors included).
StationaryPair salerno_pair(const ProfileSpec& spec, long lattice = 64);
// amp2 is the target constant f^2 + g^2; bounded families only.
StationaryPair amplitude_pair(Family family, int n, double beta, double c2,
                              double m, double amp2, long lattice = 64);

}  // namespace cheblat

#endif
