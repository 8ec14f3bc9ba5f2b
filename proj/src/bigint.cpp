#include "cheblat/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cheblat {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long value) {
  negative_ = value < 0;
  // Negate via unsigned arithmetic so LLONG_MIN is handled.
  std::uint64_t mag = negative_ ? ~static_cast<std::uint64_t>(value) + 1
                                : static_cast<std::uint64_t>(value);
  while (mag != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
    mag >>= 32;
  }
  if (limbs_.empty()) negative_ = false;
}

BigInt BigInt::pow2(unsigned exponent) {
  BigInt r;
  r.limbs_.assign(exponent / 32 + 1, 0);
  r.limbs_.back() = 1u << (exponent % 32);
  return r;
}

BigInt BigInt::factorial(unsigned n) {
  BigInt r(1);
  for (unsigned i = 2; i <= n; ++i) r *= BigInt(static_cast<long long>(i));
  return r;
}

BigInt BigInt::binomial(unsigned n, unsigned k) {
  if (k > n) return BigInt(0);
  if (k > n - k) k = n - k;
  BigInt r(1);
  for (unsigned i = 1; i <= k; ++i) {
    r *= BigInt(static_cast<long long>(n - k + i));
    r = r.exact_div(BigInt(static_cast<long long>(i)));
  }
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  r.negative_ = false;
  return r;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  if (!r.is_zero()) r.negative_ = !r.negative_;
  return r;
}

int BigInt::compare_mag(const std::vector<std::uint32_t>& a,
                        const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

void BigInt::add_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t sum = carry + a[i] + (i < b.size() ? b[i] : 0u);
    a[i] = static_cast<std::uint32_t>(sum & 0xffffffffu);
    carry = sum >> 32;
  }
  if (carry) a.push_back(static_cast<std::uint32_t>(carry));
}

void BigInt::sub_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t diff = static_cast<std::int64_t>(a[i]) - borrow -
                        (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
    if (diff < 0) {
      diff += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    a[i] = static_cast<std::uint32_t>(diff);
  }
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) negative_ = false;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
  if (negative_ == rhs.negative_) {
    add_mag(limbs_, rhs.limbs_);
  } else {
    int c = compare_mag(limbs_, rhs.limbs_);
    if (c == 0) {
      limbs_.clear();
      negative_ = false;
    } else if (c > 0) {
      sub_mag(limbs_, rhs.limbs_);
    } else {
      std::vector<std::uint32_t> tmp = rhs.limbs_;
      sub_mag(tmp, limbs_);
      limbs_ = std::move(tmp);
      negative_ = rhs.negative_;
    }
  }
  trim();
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt& BigInt::operator*=(const BigInt& rhs) {
  if (is_zero() || rhs.is_zero()) {
    limbs_.clear();
    negative_ = false;
    return *this;
  }
  std::vector<std::uint32_t> out(limbs_.size() + rhs.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
      std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) * rhs.limbs_[j] +
                          out[i + j] + carry;
      out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    std::size_t pos = i + rhs.limbs_.size();
    while (carry) {
      std::uint64_t cur = out[pos] + carry;
      out[pos] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++pos;
    }
  }
  limbs_ = std::move(out);
  negative_ = negative_ != rhs.negative_;
  trim();
  return *this;
}

std::size_t BigInt::bit_length() const {
  if (limbs_.empty()) return 0;
  std::uint32_t top = limbs_.back();
  std::size_t bits = (limbs_.size() - 1) * 32;
  while (top) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

void BigInt::divmod(const BigInt& num, const BigInt& den, BigInt& quot, BigInt& rem) {
  if (den.is_zero()) throw std::domain_error("BigInt: division by zero");
  const int c = compare_mag(num.limbs_, den.limbs_);
  if (c < 0) {
    quot = BigInt(0);
    rem = num;
    return;
  }
  // Schoolbook binary long division on magnitudes.
  const std::size_t nbits = num.bit_length();
  std::vector<std::uint32_t> q((nbits + 31) / 32, 0);
  std::vector<std::uint32_t> r;
  for (std::size_t i = nbits; i-- > 0;) {
    // r = (r << 1) | bit_i(num)
    std::uint32_t carry = (num.limbs_[i / 32] >> (i % 32)) & 1u;
    for (std::size_t k = 0; k < r.size(); ++k) {
      std::uint32_t next = r[k] >> 31;
      r[k] = (r[k] << 1) | carry;
      carry = next;
    }
    if (carry) r.push_back(carry);
    if (compare_mag(r, den.limbs_) >= 0) {
      sub_mag(r, den.limbs_);
      while (!r.empty() && r.back() == 0) r.pop_back();
      q[i / 32] |= 1u << (i % 32);
    }
  }
  quot.limbs_ = std::move(q);
  quot.negative_ = num.negative_ != den.negative_;
  quot.trim();
  rem.limbs_ = std::move(r);
  rem.negative_ = num.negative_;
  rem.trim();
}

BigInt BigInt::exact_div(const BigInt& den) const {
  BigInt q, r;
  divmod(*this, den, q, r);
  if (!r.is_zero()) {
    throw std::logic_error("BigInt: division expected to be exact left remainder " +
                           r.to_string());
  }
  return q;
}

bool BigInt::operator<(const BigInt& rhs) const {
  if (negative_ != rhs.negative_) return negative_;
  int c = compare_mag(limbs_, rhs.limbs_);
  return negative_ ? c > 0 : c < 0;
}

bool BigInt::fits_int64() const {
  if (limbs_.size() > 2) return false;
  std::uint64_t mag = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) mag = (mag << 32) | limbs_[i];
  return negative_ ? mag <= (1ull << 63) : mag < (1ull << 63);
}

long long BigInt::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("BigInt: value does not fit in int64");
  std::uint64_t mag = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) mag = (mag << 32) | limbs_[i];
  return negative_ ? -static_cast<long long>(mag - 1) - 1 : static_cast<long long>(mag);
}

double BigInt::to_double() const {
  double mag = 0.0;
  for (std::size_t i = limbs_.size(); i-- > 0;) mag = mag * 4294967296.0 + limbs_[i];
  return negative_ ? -mag : mag;
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::uint32_t> mag = limbs_;
  std::string digits;
  while (!mag.empty()) {
    // Short division by 1e9, most significant limb first.
    std::uint64_t rem = 0;
    for (std::size_t i = mag.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | mag[i];
      mag[i] = static_cast<std::uint32_t>(cur / 1000000000ull);
      rem = cur % 1000000000ull;
    }
    while (!mag.empty() && mag.back() == 0) mag.pop_back();
    for (int k = 0; k < 9; ++k) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (negative_) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

}  // namespace cheblat
