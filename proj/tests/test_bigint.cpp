#include "cheblat/bigint.hpp"

#include <random>

#include <stdexcept>

#include "doctest.h"

using cheblat::BigInt;

TEST_CASE("construction and decimal round-trip") {
  CHECK(BigInt(0).to_string() == "0");
  CHECK(BigInt(-1).to_string() == "-1");
  CHECK(BigInt(123456789012345678LL).to_string() == "123456789012345678");
  CHECK(BigInt(-9223372036854775807LL - 1).to_string() == "-9223372036854775808");
  CHECK(BigInt(0).is_zero());
  CHECK(BigInt(5).sign() == 1);
  CHECK(BigInt(-5).sign() == -1);
}

TEST_CASE("arithmetic agrees with native 128-bit on random operands") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long long> dist(-1000000000LL, 1000000000LL);
  for (int i = 0; i < 2000; ++i) {
    const long long a = dist(rng), b = dist(rng);
    const __int128 sum = static_cast<__int128>(a) + b;
    const __int128 diff = static_cast<__int128>(a) - b;
    const __int128 prod = static_cast<__int128>(a) * b;
    CHECK((BigInt(a) + BigInt(b)).to_int64() == static_cast<long long>(sum));
    CHECK((BigInt(a) - BigInt(b)).to_int64() == static_cast<long long>(diff));
    CHECK((BigInt(a) * BigInt(b)).to_int64() == static_cast<long long>(prod));
    if (b != 0) {
      BigInt q, r;
      BigInt::divmod(BigInt(a), BigInt(b), q, r);
      CHECK(q.to_int64() == a / b);
      CHECK(r.to_int64() == a % b);
    }
  }
}

TEST_CASE("multi-limb multiplication and division") {
  // (2^100 + 1)(2^100 - 1) = 2^200 - 1
  const BigInt p100 = BigInt::pow2(100);
  const BigInt prod = (p100 + BigInt(1)) * (p100 - BigInt(1));
  CHECK(prod == BigInt::pow2(200) - BigInt(1));
  BigInt q, r;
  BigInt::divmod(prod, p100 + BigInt(1), q, r);
  CHECK(r.is_zero());
  CHECK(q == p100 - BigInt(1));
  CHECK(prod.exact_div(p100 - BigInt(1)) == p100 + BigInt(1));
  CHECK_THROWS_AS(prod.exact_div(BigInt(7)), std::logic_error);  // 2^200-1 = 7k+3
}

TEST_CASE("factorial and binomial") {
  CHECK(BigInt::factorial(0) == BigInt(1));
  CHECK(BigInt::factorial(20).to_string() == "2432902008176640000");
  CHECK(BigInt::factorial(30).to_string() == "265252859812191058636308480000000");
  CHECK(BigInt::binomial(30, 15).to_string() == "155117520");
  CHECK(BigInt::binomial(64, 32).to_string() == "1832624140942590534");
  CHECK(BigInt::binomial(5, 9).is_zero());
  CHECK(BigInt::binomial(7, 0) == BigInt(1));
  // Pascal rule on a big row.
  CHECK(BigInt::binomial(100, 40) ==
        BigInt::binomial(99, 39) + BigInt::binomial(99, 40));
}

TEST_CASE("comparisons and conversions") {
  CHECK(BigInt(-3) < BigInt(2));
  CHECK(BigInt(-3) < BigInt(-2));
  CHECK(BigInt::pow2(64) > BigInt(1));
  CHECK(-BigInt::pow2(64) < BigInt(-1));
  CHECK(BigInt::pow2(63).fits_int64() == false);
  CHECK((-BigInt::pow2(63)).fits_int64() == true);
  CHECK(BigInt::pow2(20).to_double() == doctest::Approx(1048576.0));
  CHECK_THROWS_AS(BigInt::pow2(63).to_int64(), std::overflow_error);
}

TEST_CASE("divmod invariant on multi-limb random operands") {
  std::mt19937_64 rng(909);
  const auto random_big = [&rng](int limbs) {
    BigInt v(0);
    for (int i = 0; i < limbs; ++i) {
      v = v * BigInt(1LL << 32) + BigInt(static_cast<long long>(rng() & 0xffffffffu));
    }
    return (rng() & 1) ? -v : v;
  };
  for (int trial = 0; trial < 300; ++trial) {
    const BigInt a = random_big(1 + static_cast<int>(rng() % 6));
    BigInt b = random_big(1 + static_cast<int>(rng() % 3));
    if (b.is_zero()) b = BigInt(3);
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK(q * b + r == a);                   // reconstruction
    CHECK(r.abs() < b.abs());                // remainder bound
    if (!r.is_zero()) CHECK(r.sign() == a.sign());  // truncation semantics
  }
  BigInt q, r;
  CHECK_THROWS_AS(BigInt::divmod(BigInt(1), BigInt(0), q, r), std::domain_error);
}
