#ifndef CHEBLAT_BIGINT_HPP
#define CHEBLAT_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace cheblat {

// Arbitrary-precision signed integer (sign + base-2^32 magnitude).
// Covers exactly what the polynomial identity proofs need: add, subtract,
// multiply, divmod with exact-division checks, factorial/binomial builders,
// and decimal conversion. Not a general bignum library.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long value);  // NOLINT: implicit by design, mirrors int literals

  static BigInt pow2(unsigned exponent);
  static BigInt factorial(unsigned n);
  // Binomial coefficient; zero when k > n. Built by the multiplicative
  // recurrence C(n,k) = C(n,k-1)*(n-k+1)/k whose intermediates are integers.
  static BigInt binomial(unsigned n, unsigned k);

  bool is_zero() const { return limbs_.empty(); }
  int sign() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }
  BigInt abs() const;
  BigInt operator-() const;

  BigInt& operator+=(const BigInt& rhs);
  BigInt& operator-=(const BigInt& rhs);
  BigInt& operator*=(const BigInt& rhs);
  friend BigInt operator+(BigInt a, const BigInt& b) { a += b; return a; }
  friend BigInt operator-(BigInt a, const BigInt& b) { a -= b; return a; }
  friend BigInt operator*(BigInt a, const BigInt& b) { a *= b; return a; }

  // Truncated division: quotient rounds toward zero, remainder takes the
  // dividend's sign. Throws std::domain_error on zero divisor.
  static void divmod(const BigInt& num, const BigInt& den, BigInt& quot, BigInt& rem);
  // Division that must be exact; throws std::logic_error on a nonzero remainder.
  BigInt exact_div(const BigInt& den) const;

  bool operator==(const BigInt& rhs) const {
    return negative_ == rhs.negative_ && limbs_ == rhs.limbs_;
  }
  bool operator!=(const BigInt& rhs) const { return !(*this == rhs); }
  bool operator<(const BigInt& rhs) const;
  bool operator>(const BigInt& rhs) const { return rhs < *this; }
  bool operator<=(const BigInt& rhs) const { return !(rhs < *this); }
  bool operator>=(const BigInt& rhs) const { return !(*this < rhs); }

  bool fits_int64() const;
  long long to_int64() const;  // throws std::overflow_error when out of range
  double to_double() const;    // exact when the magnitude fits in 53 bits
  std::string to_string() const;

  std::size_t bit_length() const;

 private:
  static int compare_mag(const std::vector<std::uint32_t>& a,
                         const std::vector<std::uint32_t>& b);
  static void add_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
  // Requires |a| >= |b|.
  static void sub_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
  void trim();

  std::vector<std::uint32_t> limbs_;  // little-endian, no leading zeros; empty == 0
  bool negative_ = false;             // never set for zero
};

}  // namespace cheblat

#endif
