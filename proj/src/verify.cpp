#include "cheblat/verify.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

#include "cheblat/io.hpp"
#include "cheblat/lame.hpp"

namespace cheblat {

const char* model_name(Model m) {
  switch (m) {
    case Model::Salerno: return "salerno";
    case Model::AL: return "al";
    case Model::Phi6: return "phi6";
    case Model::Phi4: return "phi4";
  }
  return "?";
}

Model model_from_name(const std::string& s) {
  if (s == "salerno") return Model::Salerno;
  if (s == "al") return Model::AL;
  if (s == "phi6") return Model::Phi6;
  if (s == "phi4") return Model::Phi4;
  throw std::invalid_argument("unknown model: " + s);
}

std::vector<Family> default_families(Model m) {
  switch (m) {
    case Model::Salerno:
    case Model::AL:
      return {Family::Dn, Family::Cn, Family::Sech, Family::Cos, Family::Nd, Family::Cosh};
    case Model::Phi6:
      return {Family::Dn, Family::Cn, Family::Sech};
    case Model::Phi4:
      return {Family::Dn, Family::Cn, Family::Sech, Family::Cos};
  }
  return {};
}

namespace {

struct CellTask {
  Model model;
  Family family;
  int n;
  int draw;
  std::uint64_t seed;
};

double draw_m(Family fam, std::mt19937_64& rng) {
  switch (fam) {
    case Family::Cos: return 0.0;
    case Family::Sech:
    case Family::Cosh: return 1.0;
    default: {
      std::uniform_real_distribution<double> dist(0.01, 0.99);
      return dist(rng);
    }
  }
}

// Coefficient-route stationary pair, with ghost neighbors one site beyond
// each end of the window.
StationaryPair coeff_pair(const LameCoeffs& coeffs, Family fam, double beta, double c2,
                          double m, double scale_f, double scale_g, bool swap_fields,
                          long lattice, bool flip_a1) {
  const auto [j_first, j_last] = site_window(fam, beta, c2, lattice);
  StationaryPair out;
  for (long j = j_first - 1; j <= j_last + 1; ++j) {
    double fr, gr;
    eval_from_coeffs(coeffs, fam, beta, c2, m, j, fr, gr, flip_a1);
    const double f = (swap_fields ? gr : fr) * scale_f;
    const double g = (swap_fields ? fr : gr) * scale_g;
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

VerifyCell run_cell(const CellTask& task, const VerifyConfig& cfg) {
  VerifyCell cell;
  cell.model = task.model;
  cell.family = task.family;
  cell.n = task.n;
  cell.draw = task.draw;
  cell.bounded = family_bounded(task.family);

  std::mt19937_64 rng(task.seed);
  std::uniform_real_distribution<double> beta_dist(0.1, 5.0);
  std::uniform_real_distribution<double> c2_dist(-2.0, 2.0);
  std::uniform_real_distribution<double> coupling(0.5, 2.0);
  cell.beta = beta_dist(rng);
  cell.c2 = c2_dist(rng);
  cell.m = draw_m(task.family, rng);

  const LameCoeffs coeffs = general_coeffs(task.n);
  ResidualReport rep;

  switch (task.model) {
    case Model::Salerno:
    case Model::AL: {
      cell.mu1 = -coupling(rng);
      cell.mu2 = cell.bounded ? -coupling(rng) : coupling(rng);
      if (task.model == Model::AL) {
        cell.nu1 = 2.0 * cell.mu1;
        cell.nu2 = 2.0 * cell.mu2;
      } else {
        std::uniform_real_distribution<double> nu_dist(-3.0, 3.0);
        cell.nu1 = nu_dist(rng);
        cell.nu2 = nu_dist(rng);
      }
      const StationaryPair pair =
          coeff_pair(coeffs, task.family, cell.beta, cell.c2, cell.m,
                     1.0 / std::sqrt(std::fabs(cell.mu1)),
                     1.0 / std::sqrt(std::fabs(cell.mu2)), false, cfg.lattice,
                     cfg.inject_bug);
      const SalernoParams sp{cell.mu1, cell.mu2, cell.nu1, cell.nu2};
      cell.omega1 = sp.nu1 / sp.mu1;
      cell.omega2 = sp.nu1 * sp.mu2 / (sp.mu1 * sp.mu1);
      cell.omega2_paper = cell.omega2;
      if (task.model == Model::AL) {
        rep = residual_al(ALParams{cell.mu1, cell.mu2}, pair, cell.omega1, cell.omega2);
      } else {
        rep = residual_salerno(sp, pair, cell.omega1, cell.omega2);
      }
      break;
    }
    case Model::Phi6: {
      std::uniform_real_distribution<double> h_dist(0.5, 1.5);
      cell.c1 = coupling(rng);
      cell.h = h_dist(rng);
      cell.b1 = coupling(rng);
      const Phi6Params p = Phi6Params::from_free(cell.c1, cell.h, cell.b1);
      const double amp = std::sqrt(p.amplitude2());
      const StationaryPair pair = coeff_pair(coeffs, task.family, cell.beta, cell.c2,
                                             cell.m, amp, amp, false, cfg.lattice,
                                             cfg.inject_bug);
      rep = residual_phi6(p, pair);
      break;
    }
    case Model::Phi4: {
      std::uniform_real_distribution<double> h_dist(0.5, 1.5);
      std::uniform_real_distribution<double> b_dist(0.25, 1.5);
      cell.beta1 = b_dist(rng);
      cell.h = h_dist(rng);
      const Phi4Params p = Phi4Params::from_free(cell.beta1, cell.h);
      const double amp = std::sqrt(p.amplitude2());
      const StationaryPair pair = coeff_pair(coeffs, task.family, cell.beta, cell.c2,
                                             cell.m, amp, amp, false, cfg.lattice,
                                             cfg.inject_bug);
      rep = residual_phi4(p, pair);
      break;
    }
  }

  cell.max_abs = rep.max_abs;
  cell.rms = rep.rms;
  cell.max_scaled = rep.max_scaled;
  cell.residual_effective = cell.bounded ? rep.max_abs : rep.max_scaled;
  if (!cell.bounded) cell.flags.push_back("scaled_residual_gate");
  cell.pass = cell.residual_effective < cfg.threshold;
  return cell;
}

}  // namespace

VerifyReport run_verification(const VerifyConfig& cfg) {
  if (cfg.n_min < 1 || cfg.n_max < cfg.n_min) {
    throw std::invalid_argument("verify: bad order range");
  }
  if (cfg.draws < 0) throw std::invalid_argument("verify: draws must be nonnegative");
  if (cfg.jobs < 1) throw std::invalid_argument("verify: jobs must be positive");

  std::vector<CellTask> tasks;
  for (Model model : cfg.models) {
    const std::vector<Family> families =
        cfg.families.empty() ? default_families(model) : cfg.families;
    for (Family family : families) {
      if ((model == Model::Phi6 || model == Model::Phi4) && !family_bounded(family)) {
        throw std::domain_error("verify: amplitude-normalized models take bounded families only");
      }
      for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        for (int draw = 0; draw < cfg.draws; ++draw) {
          CellTask t{model, family, n, draw, 0};
          // Per-cell seed, independent of execution order and job count.
          const std::uint64_t index = tasks.size();
          t.seed = cfg.seed ^ (0x9e3779b97f4a7c15ull * (index + 1));
          tasks.push_back(t);
        }
      }
    }
  }

  VerifyReport report;
  report.config = cfg;
  report.cells.resize(tasks.size());

  const int jobs = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(cfg.jobs), std::max<std::size_t>(tasks.size(), 1)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) report.cells[i] = run_cell(tasks[i], cfg);
  } else {
    // Strided dispatch; every cell writes its own slot, so assembly order is
    // the grid order no matter which worker finishes first.
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = static_cast<std::size_t>(w); i < tasks.size();
             i += static_cast<std::size_t>(jobs)) {
          report.cells[i] = run_cell(tasks[i], cfg);
        }
      });
    }
    for (std::thread& th : pool) th.join();
  }

  for (const VerifyCell& cell : report.cells) {
    report.worst_effective = std::max(report.worst_effective, cell.residual_effective);
    if (!cell.pass) report.pass = false;
  }
  return report;
}

std::string VerifyReport::to_json() const {
  json::Value obj = json::Value::object();
  obj.set("schema", json::Value(1ll));
  json::Value jc = json::Value::object();
  json::Value jmodels = json::Value::array();
  for (Model m : config.models) jmodels.push_back(json::Value(model_name(m)));
  jc.set("models", std::move(jmodels));
  jc.set("n_min", json::Value(static_cast<long long>(config.n_min)));
  jc.set("n_max", json::Value(static_cast<long long>(config.n_max)));
  jc.set("draws", json::Value(static_cast<long long>(config.draws)));
  jc.set("seed", json::Value(static_cast<long long>(config.seed)));
  jc.set("threshold", json::Value(config.threshold));
  jc.set("lattice", json::Value(static_cast<long long>(config.lattice)));
  jc.set("inject_bug", json::Value(config.inject_bug));
  obj.set("config", std::move(jc));

  json::Value cells_json = json::Value::array();
  for (const VerifyCell& cell : cells) {
    json::Value c = json::Value::object();
    c.set("model", json::Value(model_name(cell.model)));
    c.set("family", json::Value(family_name(cell.family)));
    c.set("N", json::Value(static_cast<long long>(cell.n)));
    c.set("draw", json::Value(static_cast<long long>(cell.draw)));
    json::Value params = json::Value::object();
    params.set("beta", json::Value(cell.beta));
    params.set("c2", json::Value(cell.c2));
    params.set("m", json::Value(cell.m));
    if (cell.model == Model::Salerno || cell.model == Model::AL) {
      params.set("mu1", json::Value(cell.mu1));
      params.set("mu2", json::Value(cell.mu2));
      params.set("nu1", json::Value(cell.nu1));
      params.set("nu2", json::Value(cell.nu2));
    } else if (cell.model == Model::Phi6) {
      params.set("c1", json::Value(cell.c1));
      params.set("b1", json::Value(cell.b1));
      params.set("h", json::Value(cell.h));
    } else {
      params.set("beta1", json::Value(cell.beta1));
      params.set("h", json::Value(cell.h));
    }
    c.set("params", std::move(params));
    c.set("beta", json::Value(cell.beta));
    c.set("c2", json::Value(cell.c2));
    c.set("m", json::Value(cell.m));
    c.set("max_residual", json::Value(cell.max_abs));
    c.set("rms_residual", json::Value(cell.rms));
    c.set("max_residual_scaled", json::Value(cell.max_scaled));
    c.set("residual_effective", json::Value(cell.residual_effective));
    if (cell.model == Model::Salerno || cell.model == Model::AL) {
      c.set("omega1", json::Value(cell.omega1));
      c.set("omega2", json::Value(cell.omega2));
      c.set("omega2_paper", json::Value(cell.omega2_paper));
    }
    json::Value flags = json::Value::array();
    for (const std::string& f : cell.flags) flags.push_back(json::Value(f));
    c.set("flags", std::move(flags));
    c.set("pass", json::Value(cell.pass));
    cells_json.push_back(std::move(c));
  }
  obj.set("cells", std::move(cells_json));
  obj.set("worst_effective", json::Value(worst_effective));
  obj.set("pass", json::Value(pass));
  return obj.dump(2);
}

}  // namespace cheblat
