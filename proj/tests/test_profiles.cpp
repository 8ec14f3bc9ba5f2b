#include "cheblat/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "cheblat/elliptic.hpp"
#include <stdexcept>

#include "doctest.h"

using namespace cheblat;

TEST_CASE("order-3 dn profile satisfies the constraint sitewise") {
  const ProfileSpec spec{Family::Dn, 3, 0.7, 0.3, 0.5, -1.0, -1.0};
  const Profile p = build_profile(spec, 32);
  CHECK(p.size() == 32);
  CHECK(p.residual_max() < 1e-12);
}

TEST_CASE("order-3 dn profile matches the direct closed form") {
  // f = dn (A dn^2 + B), g = sqrt(m) sn (C dn^2 + D) with
  // A = 4, B = -3, C = 4, D = -1 in coupling units.
  const ProfileSpec spec{Family::Dn, 3, 0.7, 0.3, 0.5, -1.0, -1.0};
  const Profile p = build_profile(spec, 32);
  for (long i = 0; i < p.size(); ++i) {
    const auto t = elliptic::jacobi(p.x[i], spec.m);
    const double f_ref = t.dn * (4.0 * t.dn * t.dn - 3.0);
    const double g_ref = std::sqrt(spec.m) * t.sn * (4.0 * t.dn * t.dn - 1.0);
    CHECK(std::fabs(p.f[i] - f_ref) < 1e-13);
    CHECK(std::fabs(p.g[i] - g_ref) < 1e-13);
  }
}

TEST_CASE("order-4 dn profile matches the direct closed form") {
  // f = A dn^4 + B dn^2 + C, g = sqrt(m) sn dn (D dn^2 + E) with
  // A = 8, B = -8, C = 1, D = 8, E = -4.
  const ProfileSpec spec{Family::Dn, 4, 1.1, -0.2, 0.7, -1.0, -1.0};
  const Profile p = build_profile(spec, 32);
  for (long i = 0; i < p.size(); ++i) {
    const auto t = elliptic::jacobi(p.x[i], spec.m);
    const double d2 = t.dn * t.dn;
    const double f_ref = 8.0 * d2 * d2 - 8.0 * d2 + 1.0;
    const double g_ref = std::sqrt(spec.m) * t.sn * t.dn * (8.0 * d2 - 4.0);
    CHECK(std::fabs(p.f[i] - f_ref) < 1e-12);
    CHECK(std::fabs(p.g[i] - g_ref) < 1e-12);
  }
}

TEST_CASE("order-1 hyperbolic profile is the sech/tanh pair") {
  const ProfileSpec spec{Family::Dn, 1, 0.9, 0.0, 1.0, -1.0, -1.0};
  const Profile p = build_profile(spec, 16);
  for (long i = 0; i < p.size(); ++i) {
    CHECK(p.f[i] == doctest::Approx(1.0 / std::cosh(p.x[i])).epsilon(1e-14));
    CHECK(p.g[i] == doctest::Approx(std::tanh(p.x[i])).epsilon(1e-14));
  }
}

TEST_CASE("mixed-sign family: residual holds and the pair grows") {
  const ProfileSpec spec{Family::Nd, 3, 0.5, 0.1, 0.9, -1.0, 1.0};
  const Profile p = build_profile(spec, 64);
  CHECK(p.residual_scaled_max() < 1e-12);
  // The companion field escapes the bounded-family envelope |g| <= N/sqrt|mu2|
  // (here N = 3): near the dn minimum it reaches s*U ~ 100.
  double max_g = 0.0;
  for (long i = 0; i < p.size(); ++i) max_g = std::max(max_g, std::fabs(p.g[i]));
  CHECK(max_g > 3.0);

  // The cosh family grows monotonically with |x|.
  const ProfileSpec ch{Family::Cosh, 3, 0.3, 0.0, 1.0, -1.0, 1.0};
  const Profile pc = build_profile(ch, 64);
  CHECK(std::fabs(pc.g.front()) > 100.0 * std::fabs(pc.g[pc.size() / 2]));
}

TEST_CASE("field-swapped mirror of the mixed-sign branch") {
  const ProfileSpec direct{Family::Nd, 3, 0.5, 0.1, 0.9, -1.0, 1.0};
  const ProfileSpec mirror{Family::Nd, 3, 0.5, 0.1, 0.9, 1.0, -1.0};
  const Profile a = build_profile(direct, 32);
  const Profile b = build_profile(mirror, 32);
  CHECK(b.residual_scaled_max() < 1e-12);
  for (long i = 0; i < a.size(); ++i) {
    CHECK(a.f[i] == doctest::Approx(b.g[i]).epsilon(1e-14));
    CHECK(a.g[i] == doctest::Approx(b.f[i]).epsilon(1e-14));
  }
}

TEST_CASE("constraint residual across families, orders, random draws") {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> beta_d(0.1, 5.0);
  std::uniform_real_distribution<double> c2_d(-2.0, 2.0);
  std::uniform_real_distribution<double> m_d(0.01, 0.99);
  const Family fams[] = {Family::Dn, Family::Cn,   Family::Sech,
                         Family::Cos, Family::Nd, Family::Cosh};
  for (Family fam : fams) {
    for (int n = 1; n <= 12; ++n) {
      for (int draw = 0; draw < 10; ++draw) {
        ProfileSpec spec;
        spec.family = fam;
        spec.n = n;
        spec.beta = beta_d(rng);
        spec.c2 = c2_d(rng);
        spec.m = fam == Family::Cos ? 0.0
                 : (fam == Family::Sech || fam == Family::Cosh) ? 1.0
                                                                : m_d(rng);
        if (family_bounded(fam)) {
          spec.mu1 = -1.3;
          spec.mu2 = -0.6;
        } else {
          spec.mu1 = -1.3;
          spec.mu2 = 0.6;
        }
        CAPTURE(family_name(fam));
        CAPTURE(n);
        CAPTURE(draw);
        const Profile p = build_profile(spec, 64);
        if (family_bounded(fam)) {
          CHECK(p.residual_max() < 1e-12);
        } else {
          CHECK(p.residual_scaled_max() < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("sign-constraint and family/modulus validation") {
  ProfileSpec spec{Family::Dn, 3, 0.7, 0.0, 0.5, 1.0, 1.0};
  CHECK_THROWS_AS(build_profile(spec, 16), std::domain_error);  // both positive
  spec.mu1 = -1.0;
  CHECK_THROWS_AS(build_profile(spec, 16), std::domain_error);  // bounded, mu2 > 0
  spec.mu2 = -1.0;
  CHECK_NOTHROW(build_profile(spec, 16));

  ProfileSpec nd{Family::Nd, 2, 0.5, 0.0, 0.5, -1.0, -1.0};
  CHECK_THROWS_AS(build_profile(nd, 16), std::domain_error);  // needs opposite signs

  ProfileSpec cos_bad{Family::Cos, 3, 0.7, 0.0, 0.5, -1.0, -1.0};
  CHECK_THROWS_AS(build_profile(cos_bad, 16), std::domain_error);  // cos needs m = 0
  ProfileSpec sech_bad{Family::Sech, 3, 0.7, 0.0, 0.5, -1.0, -1.0};
  CHECK_THROWS_AS(build_profile(sech_bad, 16), std::domain_error);  // sech needs m = 1

  ProfileSpec bad_beta{Family::Dn, 3, -0.7, 0.0, 0.5, -1.0, -1.0};
  CHECK_THROWS_AS(build_profile(bad_beta, 16), std::invalid_argument);
  ProfileSpec bad_n{Family::Dn, 0, 0.7, 0.0, 0.5, -1.0, -1.0};
  CHECK_THROWS_AS(build_profile(bad_n, 16), std::invalid_argument);
}

TEST_CASE("limit relations between families") {
  CHECK(limit_check(Family::Dn, Family::Sech, 4, 0.8, 0.1));
  CHECK(limit_check(Family::Cn, Family::Sech, 4, 0.8, 0.1));
  CHECK(limit_check(Family::Cn, Family::Cos, 3, 0.8, 0.1));
  CHECK(limit_check(Family::Nd, Family::Cosh, 4, 0.3, 0.1));
  CHECK(limit_check(Family::Dn, Family::Sech, 1, 1.2, -0.4));
  CHECK_THROWS_AS(limit_check(Family::Dn, Family::Cos, 3, 0.8, 0.1), std::invalid_argument);
}

TEST_CASE("measured boundary periods") {
  SUBCASE("dn family: field at 2K, companion at 4K") {
    const ProfileSpec spec{Family::Dn, 3, 0.7, 0.3, 0.5, -1.0, -1.0};
    const PeriodCheck pc = boundary_period_check(spec);
    const double k = elliptic::complete_k(0.5);
    CHECK(pc.stated_claim_holds);
    CHECK(pc.period_f_x == doctest::Approx(2.0 * k));
    CHECK(pc.period_g_x == doctest::Approx(4.0 * k));
  }
  SUBCASE("cn family, odd order: both fields measure 4K, so the 2K claim fails") {
    const ProfileSpec spec{Family::Cn, 3, 0.7, 0.3, 0.5, -1.0, -1.0};
    const PeriodCheck pc = boundary_period_check(spec);
    const double k = elliptic::complete_k(0.5);
    CHECK(pc.f_periodic);
    CHECK(pc.g_periodic);
    CHECK(pc.period_f_x == doctest::Approx(4.0 * k));
    CHECK(pc.period_g_x == doctest::Approx(4.0 * k));
    CHECK_FALSE(pc.stated_claim_holds);
  }
  SUBCASE("cn family, even order: both fields at 2K as stated") {
    const ProfileSpec spec{Family::Cn, 2, 0.7, 0.3, 0.5, -1.0, -1.0};
    const PeriodCheck pc = boundary_period_check(spec);
    const double k = elliptic::complete_k(0.5);
    CHECK(pc.stated_claim_holds);
    CHECK(pc.period_f_x == doctest::Approx(2.0 * k));
    CHECK(pc.period_g_x == doctest::Approx(2.0 * k));
  }
  SUBCASE("trigonometric family, odd order: period 2 pi") {
    const ProfileSpec spec{Family::Cos, 3, 0.7, 0.3, 0.0, -1.0, -1.0};
    const PeriodCheck pc = boundary_period_check(spec);
    CHECK(pc.period_f_x == doctest::Approx(2.0 * std::numbers::pi));
    CHECK(pc.period_g_x == doctest::Approx(2.0 * std::numbers::pi));
  }
  SUBCASE("non-periodic families are rejected") {
    const ProfileSpec spec{Family::Sech, 3, 0.7, 0.3, 1.0, -1.0, -1.0};
    CHECK_THROWS_AS(boundary_period_check(spec), std::invalid_argument);
  }
}

TEST_CASE("profile period metadata in sites") {
  const ProfileSpec spec{Family::Dn, 3, 0.7, 0.3, 0.5, -1.0, -1.0};
  const Profile p = build_profile(spec, 32);
  const double k = elliptic::complete_k(0.5);
  REQUIRE(p.period_f.has_value());
  REQUIRE(p.period_g.has_value());
  CHECK(*p.period_f == doctest::Approx(2.0 * k / spec.beta));
  CHECK(*p.period_g == doctest::Approx(4.0 * k / spec.beta));
  const ProfileSpec sech{Family::Sech, 3, 0.7, 0.3, 1.0, -1.0, -1.0};
  const Profile ps = build_profile(sech, 32);
  CHECK_FALSE(ps.period_f.has_value());
}

TEST_CASE("negating either field leaves the residual unchanged") {
  const ProfileSpec spec{Family::Cn, 5, 0.9, 0.2, 0.6, -1.0, -1.0};
  const Profile p = build_profile(spec, 32);
  for (long i = 0; i < p.size(); ++i) {
    const double r = 1.0 + spec.mu1 * p.f[i] * p.f[i] + spec.mu2 * p.g[i] * p.g[i];
    const double r_neg = 1.0 + spec.mu1 * (-p.f[i]) * (-p.f[i]) + spec.mu2 * p.g[i] * p.g[i];
    CHECK(r == r_neg);
  }
}

TEST_CASE("coupling scale bookkeeping: mu1 -> 4 mu1 halves f") {
  ProfileSpec spec{Family::Dn, 3, 0.7, 0.3, 0.5, -1.0, -1.0};
  const Profile p1 = build_profile(spec, 32);
  spec.mu1 = -4.0;
  const Profile p4 = build_profile(spec, 32);
  CHECK(p4.residual_max() < 1e-12);
  for (long i = 0; i < p1.size(); ++i) {
    CHECK(p4.f[i] == doctest::Approx(0.5 * p1.f[i]).epsilon(1e-15));
    CHECK(p4.g[i] == p1.g[i]);
  }
}

TEST_CASE("unbounded window honors the |x| cap") {
  const ProfileSpec spec{Family::Cosh, 2, 1.0, 0.0, 1.0, -1.0, 1.0};
  const Profile p = build_profile(spec, 64);
  CHECK(p.size() < 64);
  for (long i = 0; i < p.size(); ++i) CHECK(std::fabs(p.x[i]) <= 20.0);
  BuildOptions opts;
  opts.x_cap = 5.0;
  const Profile tight = build_profile(spec, 64, opts);
  CHECK(tight.size() < p.size());
}

TEST_CASE("csv export columns") {
  const ProfileSpec spec{Family::Dn, 2, 0.7, 0.0, 0.5, -1.0, -1.0};
  const Profile p = build_profile(spec, 4);
  const std::string csv = p.to_csv();
  CHECK(csv.rfind("j,x,f,g,residual\r\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);  // header + 4 sites
}

TEST_CASE("family name round-trip") {
  for (Family f : {Family::Dn, Family::Cn, Family::Sech, Family::Cos, Family::Nd, Family::Cosh}) {
    CHECK(family_from_name(family_name(f)) == f);
  }
  CHECK_THROWS_AS(family_from_name("tanh"), std::invalid_argument);
}

TEST_CASE("degenerate dn family at m = 0 collapses to the constant solution") {
  const ProfileSpec spec{Family::Dn, 5, 0.8, 0.1, 0.0, -4.0, -1.0};
  const Profile p = build_profile(spec, 16);
  CHECK(p.residual_max() < 1e-12);
  for (long i = 0; i < p.size(); ++i) {
    CHECK(p.f[i] == doctest::Approx(0.5));  // T_5(1)/sqrt(4)
    CHECK(p.g[i] == doctest::Approx(0.0));
  }
}
