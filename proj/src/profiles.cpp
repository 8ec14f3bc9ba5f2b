#include "cheblat/profiles.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "cheblat/chebyshev.hpp"
#include "cheblat/elliptic.hpp"
#include "cheblat/io.hpp"

namespace cheblat {

namespace {

// Neumaier-compensated sum of three addends; the constraint residual is a
// cancellation of O(1)-or-larger terms down to roundoff.
double comp_sum3(double a, double b, double c) {
  double s = a;
  double comp = 0.0;
  for (double v : {b, c}) {
    const double t = s + v;
    if (std::fabs(s) >= std::fabs(v)) {
      comp += (s - t) + v;
    } else {
      comp += (v - t) + s;
    }
    s = t;
  }
  return s + comp;
}

struct FamilyPoint {
  double y;  // polynomial argument
  double s;  // companion prefactor
};

FamilyPoint family_point(Family fam, double x, double m) {
  switch (fam) {
    case Family::Dn: {
      const auto t = elliptic::jacobi(x, m);
      return {t.dn, std::sqrt(m) * t.sn};
    }
    case Family::Cn: {
      const auto t = elliptic::jacobi(x, m);
      return {t.cn, t.sn};
    }
    case Family::Sech:
      return {1.0 / std::cosh(x), std::tanh(x)};
    case Family::Cos:
      return {std::cos(x), std::sin(x)};
    case Family::Nd: {
      const auto t = elliptic::jacobi(x, m);
      return {1.0 / t.dn, std::sqrt(m) * t.sn / t.dn};
    }
    case Family::Cosh:
      return {std::cosh(x), std::sinh(x)};
  }
  throw std::logic_error("family_point: unreachable");
}

// T_n(y) and U_{n-1}(y) by the simultaneous three-term recurrence.
void cheb_pair(int n, double y, double& t_out, double& u_out) {
  double t_prev = 1.0, t_cur = y;   // T_0, T_1
  double u_prev = 1.0, u_cur = 2.0 * y;  // U_0, U_1
  if (n == 1) {
    t_out = t_cur;
    u_out = u_prev;
    return;
  }
  for (int k = 2; k <= n; ++k) {
    const double t_next = 2.0 * y * t_cur - t_prev;
    t_prev = t_cur;
    t_cur = t_next;
  }
  for (int k = 2; k <= n - 1; ++k) {
    const double u_next = 2.0 * y * u_cur - u_prev;
    u_prev = u_cur;
    u_cur = u_next;
  }
  t_out = t_cur;
  u_out = u_cur;
}

double site_x(double beta, double c2, long j) { return beta * (static_cast<double>(j) + c2); }

}  // namespace

bool family_bounded(Family f) {
  return f == Family::Dn || f == Family::Cn || f == Family::Sech || f == Family::Cos;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::Dn: return "dn";
    case Family::Cn: return "cn";
    case Family::Sech: return "sech";
    case Family::Cos: return "cos";
    case Family::Nd: return "nd";
    case Family::Cosh: return "cosh";
  }
  return "?";
}

Family family_from_name(const std::string& s) {
  if (s == "dn") return Family::Dn;
  if (s == "cn") return Family::Cn;
  if (s == "sech") return Family::Sech;
  if (s == "cos") return Family::Cos;
  if (s == "nd") return Family::Nd;
  if (s == "cosh") return Family::Cosh;
  throw std::invalid_argument("unknown family: " + s);
}

void validate(const ProfileSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("profile: order must be positive");
  if (!(spec.beta > 0.0)) throw std::invalid_argument("profile: beta must be positive");
  if (!(spec.m >= 0.0 && spec.m <= 1.0)) {
    throw std::domain_error("profile: modulus m must lie in [0, 1]");
  }
  switch (spec.family) {
    case Family::Cos:
      if (spec.m != 0.0) {
        throw std::domain_error("profile: the cos family requires m = 0");
      }
      break;
    case Family::Sech:
    case Family::Cosh:
      if (spec.m != 1.0) {
        throw std::domain_error("profile: the sech/cosh families require m = 1");
      }
      break;
    case Family::Dn:
    case Family::Cn:
    case Family::Nd:
      break;  // any m in [0, 1]; m = 1 lands on the hyperbolic branch
  }
  if (family_bounded(spec.family)) {
    if (!(spec.mu1 < 0.0 && spec.mu2 < 0.0)) {
      throw std::domain_error("profile: sign constraint violated - bounded families need mu1 < 0 and mu2 < 0");
    }
  } else {
    const bool direct = spec.mu1 < 0.0 && spec.mu2 > 0.0;
    const bool swapped = spec.mu1 > 0.0 && spec.mu2 < 0.0;
    if (!direct && !swapped) {
      throw std::domain_error("profile: sign constraint violated - unbounded families need opposite-sign couplings");
    }
  }
}

void eval_raw(Family family, int n, double beta, double c2, double m, long j,
              double& f_out, double& g_out) {
  const FamilyPoint p = family_point(family, site_x(beta, c2, j), m);
  double t, u;
  cheb_pair(n, p.y, t, u);
  f_out = t;
  g_out = p.s * u;
}

void eval_from_coeffs(const LameCoeffs& c, Family family, double beta, double c2,
                      double m, long j, double& f_out, double& g_out, bool flip_a1) {
  const FamilyPoint p = family_point(family, site_x(beta, c2, j), m);
  const double y2 = p.y * p.y;
  const bool odd = c.parity == Parity::Odd;
  double pa = 0.0;
  for (std::size_t i = c.a.size(); i-- > 0;) {
    double ci = c.a[i].to_double();
    if (flip_a1 && i == 0) ci = -ci;
    pa = pa * y2 + ci;
  }
  double pb = 0.0;
  for (std::size_t i = c.b.size(); i-- > 0;) {
    pb = pb * y2 + c.b[i].to_double();
  }
  if (odd) {
    f_out = p.y * pa;       // sum A_k y^(2k-1)
    g_out = p.s * pb;       // s * sum B_k y^(2k-2)
  } else {
    f_out = pa;             // sum A_k y^(2(k-1))
    g_out = p.s * p.y * pb; // s * sum B_k y^(2k-1)
  }
}

namespace {

struct PeriodProbe {
  bool periodic = false;
  double period_x = 0.0;
};

// Smallest of the candidate x-periods under which the continuum function
// repeats at 100 pseudo-random arguments.
template <typename F>
PeriodProbe probe_period(const F& fn, const std::vector<double>& candidates) {
  std::mt19937_64 rng(0x5eedc0deULL);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  std::vector<double> xs(100);
  for (double& x : xs) x = dist(rng);
  for (double period : candidates) {
    bool ok = true;
    for (double x : xs) {
      if (std::fabs(fn(x + period) - fn(x)) > 1e-10) {
        ok = false;
        break;
      }
    }
    if (ok) return {true, period};
  }
  return {};
}

}  // namespace

PeriodCheck boundary_period_check(const ProfileSpec& spec) {
  validate(spec);
  const Family fam = spec.family;
  if (fam != Family::Dn && fam != Family::Cn && fam != Family::Cos) {
    throw std::invalid_argument("boundary_period_check: family is not periodic");
  }
  if (spec.m == 1.0) {
    throw std::invalid_argument("boundary_period_check: the m = 1 branch is hyperbolic, not periodic");
  }
  const double quarter = fam == Family::Cos ? std::numbers::pi / 2.0
                                            : elliptic::complete_k(spec.m);
  const std::vector<double> candidates{2.0 * quarter, 4.0 * quarter};
  const int n = spec.n;
  const auto f_fn = [&](double x) {
    const FamilyPoint p = family_point(fam, x, spec.m);
    double t, u;
    cheb_pair(n, p.y, t, u);
    return t;
  };
  const auto g_fn = [&](double x) {
    const FamilyPoint p = family_point(fam, x, spec.m);
    double t, u;
    cheb_pair(n, p.y, t, u);
    return p.s * u;
  };
  const PeriodProbe pf = probe_period(f_fn, candidates);
  const PeriodProbe pg = probe_period(g_fn, candidates);

  PeriodCheck out;
  out.f_periodic = pf.periodic;
  out.g_periodic = pg.periodic;
  out.period_f_x = pf.period_x;
  out.period_g_x = pg.period_x;
  // Stated boundary conditions: u at 2K and v at 4K for the dn family; both
  // fields at 2K for the cn family and its trigonometric limit.
  const double tol = 1e-10;
  if (fam == Family::Dn) {
    out.stated_claim_holds = pf.periodic && pg.periodic &&
                             std::fabs(pf.period_x - 2.0 * quarter) < tol &&
                             std::fabs(pg.period_x - 4.0 * quarter) < tol;
  } else {
    out.stated_claim_holds = pf.periodic && pg.periodic &&
                             std::fabs(pf.period_x - 2.0 * quarter) < tol &&
                             std::fabs(pg.period_x - 2.0 * quarter) < tol;
  }
  return out;
}

bool limit_check(Family from, Family to, int n, double beta, double c2) {
  double m;
  if ((from == Family::Dn || from == Family::Cn) && to == Family::Sech) {
    m = 1.0;
  } else if (from == Family::Cn && to == Family::Cos) {
    m = 0.0;
  } else if (from == Family::Nd && to == Family::Cosh) {
    m = 1.0;
  } else {
    throw std::invalid_argument("limit_check: unsupported family pair");
  }
  const bool unbounded = !family_bounded(to);
  double worst = 0.0;
  for (long j = -32; j < 32; ++j) {
    const double x = site_x(beta, c2, j);
    if (unbounded && std::fabs(x) > 20.0) continue;
    double f_a, g_a, f_b, g_b;
    eval_raw(from, n, beta, c2, m, j, f_a, g_a);
    eval_raw(to, n, beta, c2, m, j, f_b, g_b);
    // Deviation relative to the field size: the amplitude-growing families
    // agree to machine precision site by site, not to a fixed absolute level.
    worst = std::max(worst, std::fabs(f_a - f_b) / std::max(1.0, std::fabs(f_b)));
    worst = std::max(worst, std::fabs(g_a - g_b) / std::max(1.0, std::fabs(g_b)));
  }
  return worst < 1e-12;
}

std::pair<long, long> site_window(Family family, double beta, double c2, long lattice,
                                  double x_cap) {
  if (lattice < 1) throw std::invalid_argument("site_window: lattice length must be positive");
  long first = -lattice / 2;
  long last = first + lattice - 1;
  if (!family_bounded(family)) {
    // x_j = beta (j + c2) is monotone in j; clip to |x| <= x_cap.
    const long lo = static_cast<long>(std::ceil(-x_cap / beta - c2));
    const long hi = static_cast<long>(std::floor(x_cap / beta - c2));
    first = std::max(first, lo);
    last = std::min(last, hi);
    if (first > last) {
      throw std::invalid_argument("site_window: window is empty (beta too large for the |x| cap)");
    }
  }
  return {first, last};
}

Profile build_profile(const ProfileSpec& spec, long lattice, const BuildOptions& opts) {
  validate(spec);

  Profile out;
  out.spec = spec;
  const bool bounded = family_bounded(spec.family);
  const bool swapped = !bounded && spec.mu1 > 0.0;  // mirror branch: fields interchange
  const double amp_f = 1.0 / std::sqrt(std::fabs(spec.mu1));
  const double amp_g = 1.0 / std::sqrt(std::fabs(spec.mu2));

  const auto [j_first, j_last] = site_window(spec.family, spec.beta, spec.c2, lattice, opts.x_cap);
  out.j0 = j_first;
  for (long j = j_first; j <= j_last; ++j) {
    const double x = site_x(spec.beta, spec.c2, j);
    double fr, gr;
    eval_raw(spec.family, spec.n, spec.beta, spec.c2, spec.m, j, fr, gr);
    const double f = (swapped ? gr : fr) * amp_f;
    const double g = (swapped ? fr : gr) * amp_g;
    const double p1 = spec.mu1 * f * f;
    const double p2 = spec.mu2 * g * g;
    const double r = comp_sum3(1.0, p1, p2);
    const double scale = std::max({1.0, std::fabs(p1), std::fabs(p2)});
    out.x.push_back(x);
    out.f.push_back(f);
    out.g.push_back(g);
    out.residual.push_back(r);
    out.residual_scaled.push_back(r / scale);
  }

  if ((spec.family == Family::Dn || spec.family == Family::Cn || spec.family == Family::Cos) &&
      spec.m < 1.0) {
    const PeriodCheck pc = boundary_period_check(spec);
    if (pc.f_periodic) out.period_f = pc.period_f_x / spec.beta;
    if (pc.g_periodic) out.period_g = pc.period_g_x / spec.beta;
  }
  return out;
}

double Profile::residual_max() const {
  double worst = 0.0;
  for (double r : residual) worst = std::max(worst, std::fabs(r));
  return worst;
}

double Profile::residual_scaled_max() const {
  double worst = 0.0;
  for (double r : residual_scaled) worst = std::max(worst, std::fabs(r));
  return worst;
}

std::string Profile::to_csv() const {
  std::string out = csv::row({"j", "x", "f", "g", "residual"});
  for (long i = 0; i < size(); ++i) {
    out += csv::row({std::to_string(j0 + i), fmt_g17(x[i]), fmt_g17(f[i]),
                     fmt_g17(g[i]), fmt_g17(residual[i])});
  }
  return out;
}

std::string Profile::to_json() const {
  json::Value obj = json::Value::object();
  obj.set("schema", json::Value(1ll));
  json::Value js = json::Value::object();
  js.set("family", json::Value(family_name(spec.family)));
  js.set("N", json::Value(static_cast<long long>(spec.n)));
  js.set("beta", json::Value(spec.beta));
  js.set("c2", json::Value(spec.c2));
  js.set("m", json::Value(spec.m));
  js.set("mu1", json::Value(spec.mu1));
  js.set("mu2", json::Value(spec.mu2));
  obj.set("spec", std::move(js));
  obj.set("j0", json::Value(static_cast<long long>(j0)));
  json::Value sites = json::Value::array();
  for (long i = 0; i < size(); ++i) {
    json::Value site = json::Value::object();
    site.set("j", json::Value(static_cast<long long>(j0 + i)));
    site.set("x", json::Value(x[i]));
    site.set("f", json::Value(f[i]));
    site.set("g", json::Value(g[i]));
    site.set("residual", json::Value(residual[i]));
    sites.push_back(std::move(site));
  }
  obj.set("sites", std::move(sites));
  if (period_f) obj.set("period_f", json::Value(*period_f));
  if (period_g) obj.set("period_g", json::Value(*period_g));
  obj.set("residual_max", json::Value(residual_max()));
  obj.set("residual_scaled_max", json::Value(residual_scaled_max()));
  return obj.dump(2);
}

}  // namespace cheblat
