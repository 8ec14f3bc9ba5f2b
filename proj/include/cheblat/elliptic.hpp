#ifndef CHEBLAT_ELLIPTIC_HPP
#define CHEBLAT_ELLIPTIC_HPP

namespace cheblat::elliptic {

// Shared tolerance record for the kernel and its consumers.
struct Tolerances {
  double identity = 1e-12;     // budget for sn^2+cn^2-1 and dn^2+m sn^2-1
  double convergence = 1e-15;  // relative AGM stopping threshold
};

const Tolerances& default_tolerances();

// sn, cn, dn at a common argument. The parameter convention is the one where
// m multiplies sn^2: dn^2 + m sn^2 = 1, so dn ranges over [sqrt(1-m), 1].
struct Triple {
  double sn = 0.0;
  double cn = 1.0;
  double dn = 1.0;
};

// Complete elliptic integral of the first kind by the arithmetic-geometric
// mean, K(m) = pi / (2 agm(1, sqrt(1-m))). Requires 0 <= m < 1; throws
// std::domain_error outside [0,1] and a distinct divergence error at m = 1.
double complete_k(double m, const Tolerances& tol = default_tolerances());

// Jacobi elliptic functions by the descending Landen transformation on the
// AGM ladder. m = 0 and m = 1 are exact closed-form branches (trigonometric
// and hyperbolic); interior m reduces the argument by half periods first.
Triple jacobi(double x, double m, const Tolerances& tol = default_tolerances());

}  // namespace cheblat::elliptic

#endif
