#ifndef CHEBLAT_PROFILES_HPP
#define CHEBLAT_PROFILES_HPP

#include <optional>
#include <string>
#include <vector>

#include "cheblat/lame.hpp"

namespace cheblat {

// The six substitution families. The field polynomial argument y and the
// companion prefactor s are, per family:
//   Dn:   y = dn(x,m),    s = sqrt(m) sn          (s^2 = 1 - y^2)
//   Cn:   y = cn(x,m),    s = sn                  (s^2 = 1 - y^2)
//   Sech: y = sech(x),    s = tanh(x)             (s^2 = 1 - y^2)
//   Cos:  y = cos(x),     s = sin(x)              (s^2 = 1 - y^2)
//   Nd:   y = 1/dn(x,m),  s = sqrt(m) sn / dn     (s^2 = y^2 - 1)
//   Cosh: y = cosh(x),    s = sinh(x)             (s^2 = y^2 - 1)
enum class Family { Dn, Cn, Sech, Cos, Nd, Cosh };

bool family_bounded(Family f);                 // y stays in [-1, 1]
const char* family_name(Family f);
Family family_from_name(const std::string& s);  // throws std::invalid_argument

struct ProfileSpec {
  Family family = Family::Dn;
  int n = 1;          // polynomial order
  double beta = 1.0;  // width per lattice site
  double c2 = 0.0;    // translation shift, sites
  double m = 0.5;     // elliptic parameter
  double mu1 = -1.0;
  double mu2 = -1.0;
};

// Enforces the coupling-sign rules (bounded families need mu1, mu2 < 0;
// unbounded ones need opposite signs), the family/modulus pairing
// (Cos <-> m = 0, Sech/Cosh <-> m = 1), beta > 0 and n >= 1.
void validate(const ProfileSpec& spec);

struct Profile {
  ProfileSpec spec;
  long j0 = 0;  // first stored lattice index
  std::vector<double> x, f, g;
  std::vector<double> residual;         // 1 + mu1 f^2 + mu2 g^2, compensated sum
  std::vector<double> residual_scaled;  // residual / max(1, |mu1 f^2|, |mu2 g^2|)
  std::optional<double> period_f;       // measured period in sites, when periodic
  std::optional<double> period_g;

  long size() const { return static_cast<long>(f.size()); }
  double residual_max() const;
  double residual_scaled_max() const;
  std::string to_csv() const;   // columns: j,x,f,g,residual
  std::string to_json() const;
};

struct BuildOptions {
  double x_cap = 20.0;  // window |x| <= x_cap for the amplitude-growing families
};

// Assembles f_j = T_n(y_j)/sqrt|mu1| and g_j = s_j U_{n-1}(y_j)/sqrt|mu2| on
// lattice sites x_j = beta (j + c2), j centered on zero. For the unbounded
// families with mu1 > 0 the two fields swap roles. Fills the measured period
// metadata for the periodic families.
Profile build_profile(const ProfileSpec& spec, long lattice = 64,
                      const BuildOptions& opts = {});

// Raw pair before coupling normalization: F = T_n(y), G = s U_{n-1}(y),
// evaluated by the Chebyshev recurrence.
void eval_raw(Family family, int n, double beta, double c2, double m, long j,
              double& f_out, double& g_out);

// [first, last] site range of a centered window of the given length, reduced
// for the amplitude-growing families so |x| stays within the cap. Throws when
// the reduction empties the window.
std::pair<long, long> site_window(Family family, double beta, double c2, long lattice,
                                  double x_cap = 20.0);

// Same pair evaluated from an explicit coefficient vector (Horner in y^2).
// flip_a1 negates the lowest-order field coefficient - the mutation hook used
// by the verifier's self-test.
void eval_from_coeffs(const LameCoeffs& c, Family family, double beta, double c2,
                      double m, long j, double& f_out, double& g_out,
                      bool flip_a1 = false);

struct PeriodCheck {
  bool f_periodic = false;          // some candidate period matched
  bool g_periodic = false;
  double period_f_x = 0.0;          // smallest matching x-period
  double period_g_x = 0.0;
  bool stated_claim_holds = false;  // the per-family published boundary condition
};

// Periodicity measured on the continuum functions F(x) = T_n(y(x)) and
// G(x) = s(x) U_{n-1}(y(x)) at 100 pseudo-random arguments, candidates
// {2K, 4K} (with K(0) = pi/2 covering the trigonometric family). The stated
// boundary condition is f at 2K and g at 4K for Dn, both at 2K for Cn and Cos.
// Throws std::invalid_argument for non-periodic families.
PeriodCheck boundary_period_check(const ProfileSpec& spec);

// Sitewise agreement of a family at its limiting modulus with the closed-form
// limit family: Dn/Cn -> Sech at m = 1, Cn -> Cos at m = 0, Nd -> Cosh at
// m = 1. True when the maximum deviation stays below 1e-12.
bool limit_check(Family from, Family to, int n, double beta, double c2);

}  // namespace cheblat

#endif
