#ifndef CHEBLAT_CHEBYSHEV_HPP
#define CHEBLAT_CHEBYSHEV_HPP

#include <string>

#include "cheblat/intpoly.hpp"

namespace cheblat {

enum class ChebKind { FirstKind, SecondKind };

// Exact integer coefficients of T_n or U_n from the three-term recurrence
// p_{n+1} = 2x p_n - p_{n-1}, with T_0 = U_0 = 1, T_1 = x, U_1 = 2x.
IntPoly cheb_coeffs(ChebKind kind, int n);

// Floating-point evaluation by the forward three-term recurrence.
double cheb_eval(ChebKind kind, int n, double x);

// The closed-sum polynomial
//   f_n(x) = sum_{l=0}^{floor(n/2)} (-1)^l binom(n-l, l) n (2x)^{n-2l} / (2(n-l)),
// assembled in exact arithmetic; every division is checked to be exact.
IntPoly explicit_first_kind(int n);

// The closed-sum polynomial
//   g_n(x) = (1/2) sum_{l=0}^{floor(n/2)} (-1)^l binom(n-l-1, l) (2x)^{n-2l},
// which equals x*U_{n-1}(x).
IntPoly explicit_second_kind_times_x(int n);

// Coefficient-wise equality of the closed sums with the recurrence polynomials:
// f_n == T_n and g_n == x*U_{n-1}.
bool explicit_formula_check(int n);

struct MasterIdentityReport {
  int n = 0;
  IntPoly residual;  // T_n^2 + (1-y^2) U_{n-1}^2 - 1, expanded exactly
  bool verdict = false;

  std::string to_json() const;  // {"kind":..., "N":..., "residual_coeffs":[], "verdict":...}
};

// Expands T_n(y)^2 + (1-y^2) U_{n-1}(y)^2 - 1 in exact integer arithmetic and
// certifies that it is the zero polynomial.
MasterIdentityReport prove_master_identity(int n);

}  // namespace cheblat

#endif
