#include "cheblat/intpoly.hpp"

#include <stdexcept>

namespace cheblat {

namespace {
const BigInt kZero(0);
}

IntPoly IntPoly::constant(long long c) {
  return IntPoly(std::vector<BigInt>{BigInt(c)});
}

IntPoly IntPoly::monomial(BigInt c, int degree) {
  if (degree < 0) throw std::invalid_argument("IntPoly: negative degree");
  std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1);
  v.back() = std::move(c);
  return IntPoly(std::move(v));
}

const BigInt& IntPoly::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<std::size_t>(d)];
}

IntPoly IntPoly::operator+(const IntPoly& rhs) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < coeffs_.size()) out[i] += coeffs_[i];
    if (i < rhs.coeffs_.size()) out[i] += rhs.coeffs_[i];
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& rhs) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < coeffs_.size()) out[i] += coeffs_[i];
    if (i < rhs.coeffs_.size()) out[i] -= rhs.coeffs_[i];
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return IntPoly();
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::scaled(const BigInt& k) const {
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * k;
  return IntPoly(std::move(out));
}

IntPoly IntPoly::shifted_up(int k) const {
  if (k < 0) throw std::invalid_argument("IntPoly: negative shift");
  if (is_zero()) return IntPoly();
  std::vector<BigInt> out(coeffs_.size() + static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + k] = coeffs_[i];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return IntPoly();
  std::vector<BigInt> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = coeffs_[i] * BigInt(static_cast<long long>(i));
  }
  return IntPoly(std::move(out));
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * x + coeffs_[i];
  }
  return acc;
}

double IntPoly::eval_double(double x) const {
  double acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * x + coeffs_[i].to_double();
  }
  return acc;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    std::string mag = c.abs().to_string();
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (i == 0) {
      out += mag;
    } else {
      if (mag != "1") out += mag + "*";
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace cheblat
