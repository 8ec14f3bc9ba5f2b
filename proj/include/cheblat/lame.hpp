#ifndef CHEBLAT_LAME_HPP
#define CHEBLAT_LAME_HPP

#include <string>
#include <vector>

#include "cheblat/bigint.hpp"
#include "cheblat/intpoly.hpp"

namespace cheblat {

enum class Parity { Odd, Even };

// Exact coefficient vectors of the order-n solution pair. a[] carries the
// field-polynomial coefficients A_k (in units of 1/sqrt|mu1|), b[] the
// companion coefficients B_k (in units of 1/sqrt|mu2|).
//
// Layout: odd n  -> A_k multiplies y^(2k-1), B_k multiplies y^(2k-2),
//         even n -> A_k multiplies y^(2(k-1)), B_k multiplies y^(2k-1),
// with k starting at 1. Both vectors end in the leading value 2^(n-1).
struct LameCoeffs {
  int n = 0;
  Parity parity = Parity::Odd;
  std::vector<BigInt> a;
  std::vector<BigInt> b;

  std::string to_json() const;  // {"N":..., "parity":..., "a":[...], "b":[...]}
};

// Builds the vectors from the falling-factorial closed forms
//   |A| = n (n-k-1)! / (k! (n-2k)!) * 2^(n-2k-1),
//   |B| = (n-k-1)! / (k! (n-2k-1)!) * 2^(n-2k-1),
// with alternating signs in k. The k = n/2 term of even orders carries
// 2^(-1), absorbed by an exact division. Purely integer output.
LameCoeffs general_coeffs(int n);

// Reassemble the full polynomials from a coefficient vector.
IntPoly lame_f_poly(const LameCoeffs& c);  // should equal T_n
IntPoly lame_u_poly(const LameCoeffs& c);  // should equal U_{n-1}

// a[] equals the parity slice of T_n and b[] the matching slice of U_{n-1},
// compared exactly against the recurrence coefficients.
bool chebyshev_crosscheck(int n);

// Residue-class sign rules for the lowest-order coefficients:
//   n = 4k+1: A1 = +n, B1 = +1        n = 4k+3: A1 = -n, B1 = -1
//   n = 4k+2: A1 = -1, B1 = +n, A2 = +n^2/2
//   n = 4k+4: A1 = +1, B1 = -n, A2 = -n^2/2
bool sign_pattern_check(int n);

// Expands P_f(y)^2 + (1-y^2) P_u(y)^2 - 1 from the generated vectors in exact
// arithmetic; the vanishing of every coefficient is the full set of quadratic
// relations among the A_k, B_k.
bool constraint_poly_check(int n);

}  // namespace cheblat

#endif
