#include "cheblat/models.hpp"

#include <cmath>
#include <stdexcept>

namespace cheblat {

namespace {

constexpr double kRelTol = 1e-12;

bool close_rel(double a, double b) {
  return std::fabs(a - b) <= kRelTol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

struct NeighborView {
  const StationaryPair& pair;
  Boundary bc;

  bool edge_skipped(long j) const {
    const long last = pair.size() - 1;
    if (j == 0 && !pair.f_left && bc == Boundary::Open) return true;
    if (j == last && !pair.f_right && bc == Boundary::Open) return true;
    return false;
  }
  double f_at(long j) const {
    const long last = pair.size() - 1;
    if (j < 0) return pair.f_left ? *pair.f_left : pair.f[last];
    if (j > last) return pair.f_right ? *pair.f_right : pair.f[0];
    return pair.f[j];
  }
  double g_at(long j) const {
    const long last = pair.size() - 1;
    if (j < 0) return pair.g_left ? *pair.g_left : pair.g[last];
    if (j > last) return pair.g_right ? *pair.g_right : pair.g[0];
    return pair.g[j];
  }
};

class ResidualAccum {
 public:
  void add(long site, double r_f, double scale_f, double r_g, double scale_g) {
    accumulate(site, r_f, scale_f);
    accumulate(site, r_g, scale_g);
    ++sites_;
  }
  ResidualReport report() const {
    ResidualReport out;
    out.max_abs = max_abs_;
    out.max_scaled = max_scaled_;
    out.argmax_site = argmax_;
    out.sites = sites_;
    out.rms = sites_ > 0 ? std::sqrt(sq_sum_ / (2.0 * static_cast<double>(sites_))) : 0.0;
    return out;
  }

 private:
  void accumulate(long site, double r, double scale) {
    const double a = std::fabs(r);
    if (a > max_abs_) {
      max_abs_ = a;
      argmax_ = site;
    }
    max_scaled_ = std::max(max_scaled_, a / std::max(1.0, scale));
    sq_sum_ += r * r;
  }

  double max_abs_ = 0.0;
  double max_scaled_ = 0.0;
  double sq_sum_ = 0.0;
  long argmax_ = 0;
  long sites_ = 0;
};

}  // namespace

void SalernoParams::validate() const {
  if (linear()) {
    if (nu1 != 0.0 || nu2 != 0.0) {
      throw std::invalid_argument("salerno: the linear mode needs nu1 = nu2 = 0 as well");
    }
    return;
  }
  if (mu1 == 0.0 || mu2 == 0.0) {
    throw std::invalid_argument("salerno: mu1 and mu2 must be nonzero");
  }
}

void ALParams::validate() const {
  if (mu1 == 0.0 || mu2 == 0.0) {
    throw std::invalid_argument("al: mu1 and mu2 must be nonzero");
  }
}

void Phi6Params::validate() const {
  if (!(h > 0.0)) throw std::domain_error("phi6: lattice spacing h must be positive");
  if (!(c1 * h * h > 0.0)) throw std::domain_error("phi6: c1 h^2 must be positive");
  if (!close_rel(c1, c2) || !close_rel(c1, f) || !close_rel(e, 2.0 * c1)) {
    throw std::domain_error("phi6: admissibility requires c1 = c2 = f = e/2");
  }
  if (!close_rel(b1, b2) || !close_rel(d, -b1)) {
    throw std::domain_error("phi6: admissibility requires b1 = b2 = -d");
  }
  if (!close_rel(a1, a2)) throw std::domain_error("phi6: admissibility requires a1 = a2");
  const double closure = b1 / std::sqrt(h * h * c1) - 2.0 / (h * h);
  if (!close_rel(a1, closure)) {
    throw std::domain_error("phi6: admissibility requires a1 + 2/h^2 = b1/sqrt(h^2 c1)");
  }
}

double Phi6Params::amplitude2() const { return 1.0 / std::sqrt(c1 * h * h); }

Phi6Params Phi6Params::from_free(double c1, double h, double b1) {
  Phi6Params p{};
  p.c1 = p.c2 = p.f = c1;
  p.e = 2.0 * c1;
  p.b1 = p.b2 = b1;
  p.d = -b1;
  p.h = h;
  p.a1 = p.a2 = b1 / std::sqrt(h * h * c1) - 2.0 / (h * h);
  return p;
}

void Phi4Params::validate() const {
  if (!(h > 0.0)) throw std::domain_error("phi4: lattice spacing h must be positive");
  if (!(beta1 > 0.0)) throw std::domain_error("phi4: beta1 must be positive");
  if (!close_rel(beta1, beta2) || !close_rel(gamma, 2.0 * beta1)) {
    throw std::domain_error("phi4: admissibility requires 2 beta1 = 2 beta2 = gamma");
  }
  const double target = -1.0 / (h * h);
  if (!close_rel(alpha1, target) || !close_rel(alpha2, target)) {
    throw std::domain_error("phi4: admissibility requires alpha1 = alpha2 = -1/h^2");
  }
}

double Phi4Params::amplitude2() const { return 1.0 / (2.0 * beta1 * h * h); }

Phi4Params Phi4Params::from_free(double beta1, double h) {
  Phi4Params p{};
  p.beta1 = p.beta2 = beta1;
  p.gamma = 2.0 * beta1;
  p.h = h;
  p.alpha1 = p.alpha2 = -1.0 / (h * h);
  return p;
}

FrequencySet derive_frequencies(const SalernoParams& p, const StationaryPair& pair) {
  p.validate();
  if (p.linear()) throw std::invalid_argument("derive_frequencies: undefined in the linear mode");
  // Precondition: the pair satisfies 1 + mu1 f^2 + mu2 g^2 = 0 sitewise.
  double worst = 0.0;
  for (long j = 0; j < pair.size(); ++j) {
    const double p1 = p.mu1 * pair.f[j] * pair.f[j];
    const double p2 = p.mu2 * pair.g[j] * pair.g[j];
    worst = std::max(worst, std::fabs(1.0 + p1 + p2) / std::max({1.0, std::fabs(p1), std::fabs(p2)}));
  }
  if (worst > 1e-6) {
    throw std::domain_error("derive_frequencies: pair does not satisfy the constraint");
  }

  FrequencySet out;
  out.omega1 = p.nu1 / p.mu1;
  out.omega2 = p.nu1 * p.mu2 / (p.mu1 * p.mu1);
  out.omega2_paper = out.omega2;
  out.omega2_alt = 2.0 * p.nu2 / p.mu2 - p.nu1 * p.mu2 / (p.mu1 * p.mu1);
  const bool al_case = close_rel(p.nu1, 2.0 * p.mu1) && close_rel(p.nu2, 2.0 * p.mu2);
  if (al_case) out.omega2_al = 2.0 * p.mu1 / p.mu2;
  if (!close_rel(out.omega2_alt, out.omega2)) out.flags.push_back("alt_formula_differs");
  if (out.omega2_al && !close_rel(*out.omega2_al, out.omega2)) {
    out.flags.push_back("al_formula_differs");
  }
  return out;
}

ResidualReport residual_salerno(const SalernoParams& p, const StationaryPair& pair,
                                double omega1, double omega2, Boundary bc) {
  p.validate();
  const NeighborView nb{pair, bc};
  const double cf = p.linear() ? 0.0 : (p.nu1 - 2.0 * p.mu1) / p.mu1;
  const double cg = p.linear() ? 0.0 : (p.nu2 - 2.0 * p.mu2) / p.mu2;
  const double lin_g = p.linear() ? 2.0
                                  : 2.0 + p.nu1 * p.mu2 / (p.mu1 * p.mu1) - p.nu2 / p.mu2;
  ResidualAccum acc;
  for (long j = 0; j < pair.size(); ++j) {
    if (nb.edge_skipped(j)) continue;
    const double f = pair.f[j], g = pair.g[j];
    const double fs = nb.f_at(j + 1) + nb.f_at(j - 1);
    const double gs = nb.g_at(j + 1) + nb.g_at(j - 1);
    const double s = p.mu1 * f * f + p.mu2 * g * g;
    // s itself is a cancellation; its rounding floor is set by the term
    // magnitudes, which is what the scaled residual must divide by.
    const double s_mag = std::fabs(p.mu1) * f * f + std::fabs(p.mu2) * g * g;
    const double r_f = (omega1 - 2.0) * f + fs * (s + 1.0) + s * cf * f;
    const double r_g = (omega2 - lin_g) * g + gs * (s + 1.0) + s * cg * g;
    const double scale_f = std::fabs((omega1 - 2.0) * f) +
                           std::fabs(fs) * (1.0 + s_mag) +
                           s_mag * std::fabs(cf * f);
    const double scale_g = std::fabs((omega2 - lin_g) * g) +
                           std::fabs(gs) * (1.0 + s_mag) +
                           s_mag * std::fabs(cg * g);
    acc.add(j, r_f, scale_f, r_g, scale_g);
  }
  return acc.report();
}

ResidualReport residual_al(const ALParams& p, const StationaryPair& pair,
                           double omega1, double omega2, Boundary bc) {
  p.validate();
  const NeighborView nb{pair, bc};
  const double lin_g = 2.0 * p.mu2 / p.mu1;
  ResidualAccum acc;
  for (long j = 0; j < pair.size(); ++j) {
    if (nb.edge_skipped(j)) continue;
    const double f = pair.f[j], g = pair.g[j];
    const double fs = nb.f_at(j + 1) + nb.f_at(j - 1);
    const double gs = nb.g_at(j + 1) + nb.g_at(j - 1);
    const double s = p.mu1 * f * f + p.mu2 * g * g;
    const double s_mag = std::fabs(p.mu1) * f * f + std::fabs(p.mu2) * g * g;
    const double r_f = (omega1 - 2.0) * f + fs * (s + 1.0);
    const double r_g = (omega2 - lin_g) * g + gs * (s + 1.0);
    const double scale_f = std::fabs((omega1 - 2.0) * f) + std::fabs(fs) * (1.0 + s_mag);
    const double scale_g = std::fabs((omega2 - lin_g) * g) + std::fabs(gs) * (1.0 + s_mag);
    acc.add(j, r_f, scale_f, r_g, scale_g);
  }
  return acc.report();
}

ResidualReport residual_phi6(const Phi6Params& p, const StationaryPair& pair, Boundary bc) {
  p.validate();
  const NeighborView nb{pair, bc};
  const double inv_h2 = 1.0 / (p.h * p.h);
  ResidualAccum acc;
  for (long j = 0; j < pair.size(); ++j) {
    if (nb.edge_skipped(j)) continue;
    const double phi = pair.f[j], psi = pair.g[j];
    const double phs = nb.f_at(j + 1) + nb.f_at(j - 1);
    const double pss = nb.g_at(j + 1) + nb.g_at(j - 1);
    const double phi2 = phi * phi, psi2 = psi * psi;
    const double bracket_f = p.c1 * phi2 * phi2 + p.e * phi2 * psi2 + p.f * psi2 * psi2;
    const double bracket_g = p.c2 * psi2 * psi2 + 0.5 * p.e * phi2 * phi2 + 2.0 * p.f * phi2 * psi2;
    const double r_f = p.a1 * phi - p.b1 * phi2 * phi + p.d * psi2 * phi + bracket_f * phs -
                       inv_h2 * (phs - 2.0 * phi);
    const double r_g = p.a2 * psi - p.b2 * psi2 * psi + p.d * phi2 * psi + bracket_g * pss -
                       inv_h2 * (pss - 2.0 * psi);
    const double scale_f = std::fabs(p.a1 * phi) + std::fabs(p.b1 * phi2 * phi) +
                           std::fabs(p.d * psi2 * phi) + std::fabs(bracket_f * phs) +
                           inv_h2 * (std::fabs(phs) + 2.0 * std::fabs(phi));
    const double scale_g = std::fabs(p.a2 * psi) + std::fabs(p.b2 * psi2 * psi) +
                           std::fabs(p.d * phi2 * psi) + std::fabs(bracket_g * pss) +
                           inv_h2 * (std::fabs(pss) + 2.0 * std::fabs(psi));
    acc.add(j, r_f, scale_f, r_g, scale_g);
  }
  return acc.report();
}

ResidualReport residual_phi4(const Phi4Params& p, const StationaryPair& pair, Boundary bc) {
  p.validate();
  const NeighborView nb{pair, bc};
  const double inv_h2 = 1.0 / (p.h * p.h);
  ResidualAccum acc;
  for (long j = 0; j < pair.size(); ++j) {
    if (nb.edge_skipped(j)) continue;
    const double phi = pair.f[j], psi = pair.g[j];
    const double phs = nb.f_at(j + 1) + nb.f_at(j - 1);
    const double pss = nb.g_at(j + 1) + nb.g_at(j - 1);
    const double bracket_f = 2.0 * p.beta1 * phi * phi + p.gamma * psi * psi;
    const double bracket_g = 2.0 * p.beta2 * psi * psi + p.gamma * phi * phi;
    const double r_f = inv_h2 * (phs - 2.0 * phi) - 2.0 * p.alpha1 * phi - bracket_f * phs;
    const double r_g = inv_h2 * (pss - 2.0 * psi) - 2.0 * p.alpha2 * psi - bracket_g * pss;
    const double scale_f = inv_h2 * (std::fabs(phs) + 2.0 * std::fabs(phi)) +
                           2.0 * std::fabs(p.alpha1 * phi) + std::fabs(bracket_f * phs);
    const double scale_g = inv_h2 * (std::fabs(pss) + 2.0 * std::fabs(psi)) +
                           2.0 * std::fabs(p.alpha2 * psi) + std::fabs(bracket_g * pss);
    acc.add(j, r_f, scale_f, r_g, scale_g);
  }
  return acc.report();
}

StationaryPair salerno_pair(const ProfileSpec& spec, long lattice) {
  validate(spec);
  const bool bounded = family_bounded(spec.family);
  const bool swapped = !bounded && spec.mu1 > 0.0;
  const double amp_f = 1.0 / std::sqrt(std::fabs(spec.mu1));
  const double amp_g = 1.0 / std::sqrt(std::fabs(spec.mu2));
  const auto [j_first, j_last] = site_window(spec.family, spec.beta, spec.c2, lattice);
  StationaryPair out;
  for (long j = j_first - 1; j <= j_last + 1; ++j) {
    double fr, gr;
    eval_raw(spec.family, spec.n, spec.beta, spec.c2, spec.m, j, fr, gr);
    const double f = (swapped ? gr : fr) * amp_f;
    const double g = (swapped ? fr : gr) * amp_g;
    if (j == j_first - 1) {
      out.f_left = f;
      out.g_left = g;
    } else if (j == j_last + 1) {
      out.f_right = f;
      out.g_right = g;
    } else {
      out.f.push_back(f);
      out.g.push_back(g);
    }
  }
  return out;
}

StationaryPair amplitude_pair(Family family, int n, double beta, double c2, double m,
                              double amp2, long lattice) {
  if (!family_bounded(family)) {
    throw std::domain_error("amplitude_pair: amplitude normalization needs a bounded family");
  }
  if (!(amp2 > 0.0)) throw std::domain_error("amplitude_pair: amplitude must be positive");
  const double amp = std::sqrt(amp2);
  const auto [j_first, j_last] = site_window(family, beta, c2, lattice);
  StationaryPair out;
  for (long j = j_first - 1; j <= j_last + 1; ++j) {
    double fr, gr;
    eval_raw(family, n, beta, c2, m, j, fr, gr);
    const double f = amp * fr;
    const double g = amp * gr;
    if (j == j_first - 1) {
      out.f_left = f;
      out.g_left = g;
    } else if (j == j_last + 1) {
      out.f_right = f;
      out.g_right = g;
    } else {
      out.f.push_back(f);
      out.g.push_back(g);
    }
  }
  return out;
}

}  // namespace cheblat
