#ifndef CHEBLAT_INTPOLY_HPP
#define CHEBLAT_INTPOLY_HPP

#include <string>
#include <vector>

#include "cheblat/bigint.hpp"

namespace cheblat {

// Dense univariate polynomial with exact integer coefficients, stored in
// ascending degree order. The zero polynomial has an empty coefficient list.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  static IntPoly constant(long long c);
  static IntPoly monomial(BigInt c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // zero: -1
  bool is_zero() const { return coeffs_.empty(); }
  const BigInt& coeff(int d) const;  // zero outside the stored range
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  IntPoly operator+(const IntPoly& rhs) const;
  IntPoly operator-(const IntPoly& rhs) const;
  IntPoly operator*(const IntPoly& rhs) const;
  IntPoly scaled(const BigInt& k) const;
  IntPoly shifted_up(int k) const;  // multiply by x^k
  IntPoly derivative() const;
  BigInt eval(const BigInt& x) const;       // Horner
  double eval_double(double x) const;       // Horner in doubles
  bool operator==(const IntPoly& rhs) const { return coeffs_ == rhs.coeffs_; }
  bool operator!=(const IntPoly& rhs) const { return !(*this == rhs); }

  std::string to_string() const;  // e.g. "4*x^3 - 3*x"

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  std::vector<BigInt> coeffs_;
};

}  // namespace cheblat

#endif
