#include "cheblat/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cheblat::elliptic {

namespace {
constexpr int kMaxLevels = 60;  // AGM converges quadratically; ~8 suffice
}

const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

double complete_k(double m, const Tolerances& tol) {
  if (!(m >= 0.0 && m <= 1.0)) {
    throw std::domain_error("complete_k: modulus m must lie in [0, 1)");
  }
  if (m == 1.0) {
    throw std::domain_error("complete_k: K(m) diverges at m = 1");
  }
  double a = 1.0;
  double b = std::sqrt(1.0 - m);
  for (int i = 0; i < kMaxLevels && std::fabs(a - b) > tol.convergence * a; ++i) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return std::numbers::pi / (2.0 * a);
}

Triple jacobi(double x, double m, const Tolerances& tol) {
  if (!std::isfinite(x)) throw std::invalid_argument("jacobi: argument must be finite");
  if (!(m >= 0.0 && m <= 1.0)) {
    throw std::domain_error("jacobi: modulus m must lie in [0, 1]");
  }
  if (m == 0.0) return {std::sin(x), std::cos(x), 1.0};
  if (m == 1.0) {
    const double sech = 1.0 / std::cosh(x);
    return {std::tanh(x), sech, sech};
  }

  // Reduce by half periods: sn and cn flip sign across 2K, dn is 2K-periodic.
  const double quarter = complete_k(m, tol);
  double xr = x;
  double sign = 1.0;
  const double q = std::round(x / (2.0 * quarter));
  if (q != 0.0) {
    xr = x - 2.0 * quarter * q;
    if (std::fmod(std::fabs(q), 2.0) == 1.0) sign = -1.0;
  }

  // Ascending AGM ladder, then the descending phase recursion
  // phi_{i-1} = (phi_i + asin((c_i/a_i) sin phi_i)) / 2.
  double a[kMaxLevels + 1];
  double c[kMaxLevels + 1];
  double an = 1.0;
  double bn = std::sqrt(1.0 - m);
  a[0] = an;
  c[0] = std::sqrt(m);
  int levels = 0;
  while (levels < kMaxLevels && std::fabs(c[levels]) > tol.convergence * a[levels]) {
    ++levels;
    const double next_a = 0.5 * (an + bn);
    c[levels] = 0.5 * (an - bn);
    bn = std::sqrt(an * bn);
    an = next_a;
    a[levels] = an;
  }
  double phi = std::ldexp(an * xr, levels);
  for (int i = levels; i >= 1; --i) {
    const double s = std::clamp(c[i] / a[i] * std::sin(phi), -1.0, 1.0);
    phi = 0.5 * (phi + std::asin(s));
  }
  const double sn = std::sin(phi);
  const double cn = std::cos(phi);
  const double dn = std::sqrt(std::max(0.0, 1.0 - m * sn * sn));
  return {sign * sn, sign * cn, dn};
}

}  // namespace cheblat::elliptic
