#include "cheblat/lame.hpp"

#include <stdexcept>

#include "cheblat/chebyshev.hpp"
#include "cheblat/io.hpp"

namespace cheblat {

LameCoeffs general_coeffs(int n) {
  if (n < 1) throw std::invalid_argument("general_coeffs: order must be positive");
  const bool odd = (n % 2) != 0;
  LameCoeffs out;
  out.n = n;
  out.parity = odd ? Parity::Odd : Parity::Even;
  out.a.resize(static_cast<std::size_t>(odd ? (n + 1) / 2 : n / 2 + 1));
  out.b.resize(static_cast<std::size_t>(odd ? (n + 1) / 2 : n / 2));

  for (int k = 0; 2 * k <= n; ++k) {
    // |A| = n (n-k-1)! / (k! (n-2k)!) * 2^(n-2k-1); the exponent is -1 only
    // at the even-order edge k = n/2, where the division stays exact.
    BigInt num = BigInt(n) * BigInt::factorial(static_cast<unsigned>(n - k - 1));
    BigInt den = BigInt::factorial(static_cast<unsigned>(k)) *
                 BigInt::factorial(static_cast<unsigned>(n - 2 * k));
    if (n - 2 * k - 1 >= 0) {
      num *= BigInt::pow2(static_cast<unsigned>(n - 2 * k - 1));
    } else {
      den *= BigInt(2);
    }
    BigInt val = num.exact_div(den);
    if (k % 2) val = -val;
    const int idx = odd ? (n - 2 * k + 1) / 2 : n / 2 - k + 1;  // 1-based slot
    out.a[static_cast<std::size_t>(idx - 1)] = std::move(val);
  }

  for (int k = 0; 2 * k <= n - 1; ++k) {
    // |B| = binom(n-k-1, k) * 2^(n-2k-1)
    BigInt val = BigInt::binomial(static_cast<unsigned>(n - k - 1), static_cast<unsigned>(k)) *
                 BigInt::pow2(static_cast<unsigned>(n - 2 * k - 1));
    if (k % 2) val = -val;
    const int idx = odd ? (n - 2 * k + 1) / 2 : n / 2 - k;
    out.b[static_cast<std::size_t>(idx - 1)] = std::move(val);
  }
  return out;
}

IntPoly lame_f_poly(const LameCoeffs& c) {
  const bool odd = c.parity == Parity::Odd;
  std::vector<BigInt> v(static_cast<std::size_t>(c.n) + 1);
  for (std::size_t i = 0; i < c.a.size(); ++i) {
    const std::size_t deg = odd ? 2 * i + 1 : 2 * i;
    v[deg] = c.a[i];
  }
  return IntPoly(std::move(v));
}

IntPoly lame_u_poly(const LameCoeffs& c) {
  const bool odd = c.parity == Parity::Odd;
  std::vector<BigInt> v(static_cast<std::size_t>(c.n));  // degree n-1
  for (std::size_t i = 0; i < c.b.size(); ++i) {
    const std::size_t deg = odd ? 2 * i : 2 * i + 1;
    v[deg] = c.b[i];
  }
  return IntPoly(std::move(v));
}

bool chebyshev_crosscheck(int n) {
  const LameCoeffs c = general_coeffs(n);
  return lame_f_poly(c) == cheb_coeffs(ChebKind::FirstKind, n) &&
         lame_u_poly(c) == cheb_coeffs(ChebKind::SecondKind, n - 1);
}

bool sign_pattern_check(int n) {
  const LameCoeffs c = general_coeffs(n);
  const BigInt big_n(n);
  switch (n % 4) {
    case 1:
      return c.a[0] == big_n && c.b[0] == BigInt(1);
    case 3:
      return c.a[0] == -big_n && c.b[0] == BigInt(-1);
    case 2:
      return c.a[0] == BigInt(-1) && c.b[0] == big_n &&
             c.a[1] == (big_n * big_n).exact_div(BigInt(2));
    default:  // n = 4k+4
      return c.a[0] == BigInt(1) && c.b[0] == -big_n &&
             c.a[1] == -(big_n * big_n).exact_div(BigInt(2));
  }
}

bool constraint_poly_check(int n) {
  const LameCoeffs c = general_coeffs(n);
  const IntPoly f = lame_f_poly(c);
  const IntPoly u = lame_u_poly(c);
  const IntPoly one_minus_y2(std::vector<BigInt>{BigInt(1), BigInt(0), BigInt(-1)});
  return (f * f + one_minus_y2 * (u * u) - IntPoly::constant(1)).is_zero();
}

std::string LameCoeffs::to_json() const {
  json::Value obj = json::Value::object();
  obj.set("N", json::Value(static_cast<long long>(n)));
  obj.set("parity", json::Value(parity == Parity::Odd ? "odd" : "even"));
  json::Value ja = json::Value::array();
  for (const BigInt& v : a) ja.push_back(json::Value(v.to_string()));
  obj.set("a", std::move(ja));
  json::Value jb = json::Value::array();
  for (const BigInt& v : b) jb.push_back(json::Value(v.to_string()));
  obj.set("b", std::move(jb));
  return obj.dump();
}

}  // namespace cheblat
