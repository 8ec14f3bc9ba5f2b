#include "cheblat/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cheblat {

namespace {

using cplx = std::complex<double>;

inline cplx neighbor(const std::vector<cplx>& a, long j, long size, Boundary bc) {
  if (j < 0) return bc == Boundary::Periodic ? a[size - 1] : cplx(0.0, 0.0);
  if (j >= size) return bc == Boundary::Periodic ? a[0] : cplx(0.0, 0.0);
  return a[j];
}

}  // namespace

LatticeState rhs(const SalernoParams& p, const LatticeState& state, Boundary bc) {
  p.validate();
  const long size = state.size();
  if (size < 3 || state.v.size() != state.u.size()) {
    throw std::invalid_argument("rhs: state needs matching u, v with at least 3 sites");
  }
  const bool linear = p.linear();
  const double cf = linear ? 0.0 : (p.nu1 - 2.0 * p.mu1) / p.mu1;
  const double cg = linear ? 0.0 : (p.nu2 - 2.0 * p.mu2) / p.mu2;
  const double lin_g = linear ? 2.0
                              : 2.0 + p.nu1 * p.mu2 / (p.mu1 * p.mu1) - p.nu2 / p.mu2;
  const cplx rot(0.0, 1.0);

  LatticeState d;
  d.t = state.t;
  d.u.resize(size);
  d.v.resize(size);
  for (long j = 0; j < size; ++j) {
    const cplx u = state.u[j];
    const cplx v = state.v[j];
    const cplx us = neighbor(state.u, j + 1, size, bc) + neighbor(state.u, j - 1, size, bc);
    const cplx vs = neighbor(state.v, j + 1, size, bc) + neighbor(state.v, j - 1, size, bc);
    const double s = p.mu1 * std::norm(u) + p.mu2 * std::norm(v);
    d.u[j] = rot * (us - 2.0 * u + s * (us + cf * u));
    d.v[j] = rot * (vs - lin_g * v + s * (vs + cg * v));
  }
  return d;
}

Trajectory evolve(const SalernoParams& p, const LatticeState& initial,
                  const EvolveConfig& cfg) {
  p.validate();
  if (!(cfg.dt > 0.0)) throw std::invalid_argument("evolve: dt must be positive");
  if (!(cfg.t_end > 0.0)) throw std::invalid_argument("evolve: t_end must be positive");
  if (cfg.stride < 1) throw std::invalid_argument("evolve: stride must be positive");
  if (cfg.dt > 0.01 && !cfg.allow_large_dt) {
    throw std::invalid_argument("evolve: dt above the 0.01 accuracy cap (set allow_large_dt)");
  }

  const long steps = std::lround(cfg.t_end / cfg.dt);
  const long size = initial.size();
  LatticeState y = initial;

  Trajectory out;
  out.samples.push_back(y);

  const auto blown_up = [&](const LatticeState& st) {
    for (long j = 0; j < size; ++j) {
      if (!std::isfinite(st.u[j].real()) || !std::isfinite(st.u[j].imag()) ||
          !std::isfinite(st.v[j].real()) || !std::isfinite(st.v[j].imag()) ||
          std::abs(st.u[j]) > cfg.overflow_cap || std::abs(st.v[j]) > cfg.overflow_cap) {
        return true;
      }
    }
    return false;
  };

  LatticeState stage;
  for (long step = 1; step <= steps; ++step) {
    const LatticeState k1 = rhs(p, y, cfg.boundary);
    stage = y;
    for (long j = 0; j < size; ++j) {
      stage.u[j] = y.u[j] + 0.5 * cfg.dt * k1.u[j];
      stage.v[j] = y.v[j] + 0.5 * cfg.dt * k1.v[j];
    }
    const LatticeState k2 = rhs(p, stage, cfg.boundary);
    for (long j = 0; j < size; ++j) {
      stage.u[j] = y.u[j] + 0.5 * cfg.dt * k2.u[j];
      stage.v[j] = y.v[j] + 0.5 * cfg.dt * k2.v[j];
    }
    const LatticeState k3 = rhs(p, stage, cfg.boundary);
    for (long j = 0; j < size; ++j) {
      stage.u[j] = y.u[j] + cfg.dt * k3.u[j];
      stage.v[j] = y.v[j] + cfg.dt * k3.v[j];
    }
    const LatticeState k4 = rhs(p, stage, cfg.boundary);
    for (long j = 0; j < size; ++j) {
      y.u[j] += cfg.dt / 6.0 * (k1.u[j] + 2.0 * k2.u[j] + 2.0 * k3.u[j] + k4.u[j]);
      y.v[j] += cfg.dt / 6.0 * (k1.v[j] + 2.0 * k2.v[j] + 2.0 * k3.v[j] + k4.v[j]);
    }
    y.t = initial.t + static_cast<double>(step) * cfg.dt;
    if (blown_up(y)) {
      out.diverged_at = y.t;
      break;
    }
    if (step % cfg.stride == 0 || step == steps) out.samples.push_back(y);
  }
  return out;
}

FrequencyEstimate extract_frequency(const Trajectory& traj, long site) {
  if (traj.samples.size() < 3) {
    throw std::invalid_argument("extract_frequency: need at least three samples");
  }
  const LatticeState& first = traj.samples.front();
  if (site < 0 || site >= first.size()) {
    throw std::invalid_argument("extract_frequency: site out of range");
  }
  if (std::abs(first.u[site]) < 1e-6 || std::abs(first.v[site]) < 1e-6) {
    throw std::domain_error("extract_frequency: site modulus too small for a stable phase");
  }

  const auto fit = [&](auto field_of) {
    // Unwrap with a +-pi branch tracker, then least-squares slope.
    std::vector<double> ts, phases;
    ts.reserve(traj.samples.size());
    phases.reserve(traj.samples.size());
    double prev = std::arg(field_of(traj.samples.front()));
    double acc = prev;
    for (const LatticeState& st : traj.samples) {
      const double raw = std::arg(field_of(st));
      double delta = raw - prev;
      while (delta > std::numbers::pi) delta -= 2.0 * std::numbers::pi;
      while (delta < -std::numbers::pi) delta += 2.0 * std::numbers::pi;
      acc += delta;
      prev = raw;
      ts.push_back(st.t);
      phases.push_back(acc);
    }

    const std::size_t n = ts.size();
    double st_sum = 0.0, sp = 0.0, stt = 0.0, stp = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      st_sum += ts[i];
      sp += phases[i];
      stt += ts[i] * ts[i];
      stp += ts[i] * phases[i];
    }
    const double denom = static_cast<double>(n) * stt - st_sum * st_sum;
    const double slope = (static_cast<double>(n) * stp - st_sum * sp) / denom;
    const double intercept = (sp - slope * st_sum) / static_cast<double>(n);
    double rss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = phases[i] - (intercept + slope * ts[i]);
      rss += r * r;
    }
    return std::pair<double, double>(slope, std::sqrt(rss / static_cast<double>(n)));
  };

  FrequencyEstimate est;
  const auto [slope_u, rms_u] = fit([site](const LatticeState& st) { return st.u[site]; });
  const auto [slope_v, rms_v] = fit([site](const LatticeState& st) { return st.v[site]; });
  est.omega_u = -slope_u;  // the ansatz phase is exp(-i omega t)
  est.omega_v = -slope_v;
  est.fit_rms_u = rms_u;
  est.fit_rms_v = rms_v;
  return est;
}

LatticeState state_from_profile(const Profile& profile, double delta1, double delta2) {
  LatticeState st;
  st.t = 0.0;
  const cplx ph1 = std::polar(1.0, -delta1);
  const cplx ph2 = std::polar(1.0, -delta2);
  st.u.reserve(profile.f.size());
  st.v.reserve(profile.g.size());
  for (std::size_t i = 0; i < profile.f.size(); ++i) {
    st.u.push_back(profile.f[i] * ph1);
    st.v.push_back(profile.g[i] * ph2);
  }
  return st;
}

}  // namespace cheblat
