// cheblat - exact Chebyshev/elliptic solutions of coupled lattice models:
// profile generation, residual verification, identity tables, exact proofs,
// and time integration, batch-driven from JSON configs.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cheblat/chebyshev.hpp"
#include "cheblat/dynamics.hpp"
#include "cheblat/elliptic.hpp"
#include "cheblat/io.hpp"
#include "cheblat/lame.hpp"
#include "cheblat/models.hpp"
#include "cheblat/profiles.hpp"
#include "cheblat/verify.hpp"

namespace {

using cheblat::fmt_g17;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitBadInput = 2;

json load_config(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config: " + path);
  return json::parse(in);
}

template <typename T>
T field_or(const json& j, const std::string& key, T fallback) {
  if (j.contains(key)) return j.at(key).get<T>();
  return fallback;
}

void emit(const std::string& out_path, const std::string& contents) {
  if (out_path.empty()) {
    std::fputs(contents.c_str(), stdout);
  } else {
    cheblat::write_text_file(out_path, contents);
  }
}

cheblat::ProfileSpec spec_from_json(const json& j) {
  cheblat::ProfileSpec spec;
  spec.family = cheblat::family_from_name(field_or<std::string>(j, "family", "dn"));
  spec.n = field_or<int>(j, "N", 3);
  spec.beta = field_or<double>(j, "beta", 0.7);
  spec.c2 = field_or<double>(j, "c2", 0.0);
  spec.m = field_or<double>(j, "m", spec.family == cheblat::Family::Cos    ? 0.0
                                    : spec.family == cheblat::Family::Sech ||
                                            spec.family == cheblat::Family::Cosh
                                        ? 1.0
                                        : 0.5);
  spec.mu1 = field_or<double>(j, "mu1", -1.0);
  spec.mu2 = field_or<double>(j, "mu2", cheblat::family_bounded(spec.family) ? -1.0 : 1.0);
  return spec;
}

int cmd_gen_profile(const std::string& config_path, const std::string& out_path,
                    const std::string& format, long lattice_flag) {
  const json cfg = load_config(config_path);
  const cheblat::ProfileSpec spec = spec_from_json(cfg);
  const long lattice = lattice_flag > 0 ? lattice_flag : field_or<long>(cfg, "L", 64);
  const cheblat::Profile profile = cheblat::build_profile(spec, lattice);
  emit(out_path, format == "json" ? profile.to_json() : profile.to_csv());
  std::printf("profile family=%s N=%d sites=%ld residual_max=%s residual_scaled_max=%s\n",
              cheblat::family_name(spec.family), spec.n, profile.size(),
              fmt_g17(profile.residual_max()).c_str(),
              fmt_g17(profile.residual_scaled_max()).c_str());
  return kExitOk;
}

int cmd_verify(const std::string& config_path, const std::string& out_path,
               std::optional<long long> seed_flag, std::optional<double> threshold_flag,
               std::optional<int> jobs_flag, std::optional<int> n_max_flag,
               std::optional<int> draws_flag, bool inject_bug) {
  const json cfg = load_config(config_path);
  cheblat::VerifyConfig vc;
  if (cfg.contains("models")) {
    vc.models.clear();
    for (const auto& name : cfg.at("models")) {
      vc.models.push_back(cheblat::model_from_name(name.get<std::string>()));
    }
  }
  if (cfg.contains("families")) {
    for (const auto& name : cfg.at("families")) {
      vc.families.push_back(cheblat::family_from_name(name.get<std::string>()));
    }
  }
  vc.n_min = field_or<int>(cfg, "n_min", 1);
  vc.n_max = n_max_flag.value_or(field_or<int>(cfg, "n_max", 8));
  vc.draws = draws_flag.value_or(field_or<int>(cfg, "draws", 20));
  vc.seed = static_cast<std::uint64_t>(
      seed_flag.value_or(field_or<long long>(cfg, "seed", 12345)));
  vc.threshold = threshold_flag.value_or(field_or<double>(cfg, "threshold", 1e-10));
  vc.lattice = field_or<long>(cfg, "lattice", 64);
  vc.jobs = jobs_flag.value_or(field_or<int>(cfg, "jobs", 1));
  vc.inject_bug = inject_bug || field_or<bool>(cfg, "inject_bug", false);

  const cheblat::VerifyReport report = cheblat::run_verification(vc);
  emit(out_path, report.to_json() + "\n");
  int failed = 0;
  for (const auto& cell : report.cells) {
    if (!cell.pass) {
      ++failed;
      if (failed <= 20) {
        std::fprintf(stderr, "breach: model=%s family=%s N=%d draw=%d residual=%s\n",
                     cheblat::model_name(cell.model), cheblat::family_name(cell.family),
                     cell.n, cell.draw, fmt_g17(cell.residual_effective).c_str());
      }
    }
  }
  std::printf("verify cells=%zu worst=%s pass=%s\n", report.cells.size(),
              fmt_g17(report.worst_effective).c_str(), report.pass ? "yes" : "no");
  return report.pass ? kExitOk : kExitVerifyFail;
}

int cmd_identities(int n_max, const std::string& out_path, const std::string& format) {
  if (n_max < 1) throw std::invalid_argument("identities: n-max must be positive");
  static const double cos_pi_3[6] = {1.0, 0.5, -0.5, -1.0, -0.5, 0.5};
  static const double cos_pi_2[4] = {1.0, 0.0, -1.0, 0.0};
  bool all_ok = true;
  std::string csv_out = cheblat::csv::row(
      {"N", "f_at_1", "g_at_1", "f_at_half", "cos_n_pi_3", "f_at_0", "cos_n_pi_2", "pass"});
  cheblat::json::Value rows = cheblat::json::Value::array();
  for (int n = 1; n <= n_max; ++n) {
    const cheblat::IntPoly f = cheblat::explicit_first_kind(n);
    const cheblat::IntPoly g = cheblat::explicit_second_kind_times_x(n);
    const cheblat::BigInt f1 = f.eval(cheblat::BigInt(1));
    const cheblat::BigInt g1 = g.eval(cheblat::BigInt(1));
    const double f_half = f.eval_double(0.5);
    const double f_zero = f.eval_double(0.0);
    const bool ok = f1 == cheblat::BigInt(1) && g1 == cheblat::BigInt(n) &&
                    std::fabs(f_half - cos_pi_3[n % 6]) < 1e-12 &&
                    std::fabs(f_zero - cos_pi_2[n % 4]) < 1e-12;
    all_ok = all_ok && ok;
    csv_out += cheblat::csv::row({std::to_string(n), f1.to_string(), g1.to_string(),
                                  fmt_g17(f_half), fmt_g17(cos_pi_3[n % 6]), fmt_g17(f_zero),
                                  fmt_g17(cos_pi_2[n % 4]), ok ? "true" : "false"});
    cheblat::json::Value row = cheblat::json::Value::object();
    row.set("N", cheblat::json::Value(static_cast<long long>(n)));
    row.set("f_at_1", cheblat::json::Value(f1.to_string()));
    row.set("g_at_1", cheblat::json::Value(g1.to_string()));
    row.set("f_at_half", cheblat::json::Value(f_half));
    row.set("f_at_0", cheblat::json::Value(f_zero));
    row.set("pass", cheblat::json::Value(ok));
    rows.push_back(std::move(row));
  }
  if (format == "json") {
    cheblat::json::Value doc = cheblat::json::Value::object();
    doc.set("schema", cheblat::json::Value(1ll));
    doc.set("rows", std::move(rows));
    doc.set("pass", cheblat::json::Value(all_ok));
    emit(out_path, doc.dump(2) + "\n");
  } else {
    emit(out_path, csv_out);
  }
  std::printf("identities n=1..%d pass=%s\n", n_max, all_ok ? "yes" : "no");
  return all_ok ? kExitOk : kExitVerifyFail;
}

int cmd_prove(int n_max, int theorem_n_max, const std::string& out_path) {
  if (n_max < 1 || theorem_n_max < 1) {
    throw std::invalid_argument("prove: order ranges must be positive");
  }
  bool all_ok = true;
  cheblat::json::Value reports = cheblat::json::Value::array();
  for (int n = 1; n <= n_max; ++n) {
    const cheblat::MasterIdentityReport rep = cheblat::prove_master_identity(n);
    all_ok = all_ok && rep.verdict;
    cheblat::json::Value item = cheblat::json::Value::object();
    item.set("kind", cheblat::json::Value("master"));
    item.set("N", cheblat::json::Value(static_cast<long long>(n)));
    cheblat::json::Value coeffs = cheblat::json::Value::array();
    for (const auto& c : rep.residual.coeffs()) {
      coeffs.push_back(cheblat::json::Value(c.to_string()));
    }
    item.set("residual_coeffs", std::move(coeffs));
    item.set("verdict", cheblat::json::Value(rep.verdict ? "zero" : "nonzero"));
    reports.push_back(std::move(item));
  }
  cheblat::json::Value theorems = cheblat::json::Value::array();
  for (int n = 1; n <= theorem_n_max; ++n) {
    const bool ok = cheblat::explicit_formula_check(n);
    all_ok = all_ok && ok;
    cheblat::json::Value item = cheblat::json::Value::object();
    item.set("kind", cheblat::json::Value("closed_sum_equality"));
    item.set("N", cheblat::json::Value(static_cast<long long>(n)));
    item.set("verdict", cheblat::json::Value(ok ? "equal" : "unequal"));
    theorems.push_back(std::move(item));
  }
  cheblat::json::Value doc = cheblat::json::Value::object();
  doc.set("schema", cheblat::json::Value(1ll));
  doc.set("master_identities", std::move(reports));
  doc.set("closed_sum_checks", std::move(theorems));
  doc.set("pass", cheblat::json::Value(all_ok));
  emit(out_path, doc.dump(2) + "\n");
  std::printf("prove master=1..%d closed-sum=1..%d pass=%s\n", n_max, theorem_n_max,
              all_ok ? "yes" : "no");
  return all_ok ? kExitOk : kExitVerifyFail;
}

int cmd_evolve(const std::string& config_path, const std::string& out_path,
               const std::string& summary_path) {
  const json cfg = load_config(config_path);
  const std::string model = field_or<std::string>(cfg, "model", "al");
  if (model != "al" && model != "salerno") {
    throw std::invalid_argument("evolve: model must be al or salerno");
  }
  const json spec_json = cfg.contains("profile") ? cfg.at("profile") : cfg;
  const cheblat::ProfileSpec spec = spec_from_json(spec_json);
  const long lattice = field_or<long>(cfg, "lattice", 64);

  cheblat::SalernoParams params;
  if (model == "al") {
    params = cheblat::ALParams{spec.mu1, spec.mu2}.to_salerno();
  } else {
    params.mu1 = spec.mu1;
    params.mu2 = spec.mu2;
    params.nu1 = field_or<double>(cfg, "nu1", 2.0 * spec.mu1);
    params.nu2 = field_or<double>(cfg, "nu2", 2.0 * spec.mu2);
  }

  const cheblat::Profile profile = cheblat::build_profile(spec, lattice);
  cheblat::EvolveConfig ec;
  ec.dt = field_or<double>(cfg, "dt", 1e-3);
  ec.t_end = field_or<double>(cfg, "t_end", 10.0);
  ec.stride = field_or<int>(cfg, "stride", 100);
  ec.boundary = field_or<std::string>(cfg, "boundary", "periodic") == "open"
                    ? cheblat::Boundary::Open
                    : cheblat::Boundary::Periodic;
  const cheblat::LatticeState start =
      cheblat::state_from_profile(profile, field_or<double>(cfg, "delta1", 0.0),
                                  field_or<double>(cfg, "delta2", 0.0));
  const cheblat::Trajectory traj = cheblat::evolve(params, start, ec);

  // Strided trajectory export.
  std::string csv_out = cheblat::csv::row(
      {"t", "j", "re_u", "im_u", "abs_u", "arg_u", "re_v", "im_v", "abs_v", "arg_v"});
  for (const auto& st : traj.samples) {
    for (long i = 0; i < st.size(); ++i) {
      csv_out += cheblat::csv::row(
          {fmt_g17(st.t), std::to_string(profile.j0 + i), fmt_g17(st.u[i].real()),
           fmt_g17(st.u[i].imag()), fmt_g17(std::abs(st.u[i])), fmt_g17(std::arg(st.u[i])),
           fmt_g17(st.v[i].real()), fmt_g17(st.v[i].imag()), fmt_g17(std::abs(st.v[i])),
           fmt_g17(std::arg(st.v[i]))});
    }
  }
  emit(out_path, csv_out);

  double drift = 0.0;
  const auto& first = traj.samples.front();
  for (const auto& st : traj.samples) {
    for (long i = 0; i < st.size(); ++i) {
      drift = std::max(drift, std::fabs(std::abs(st.u[i]) - std::abs(first.u[i])));
      drift = std::max(drift, std::fabs(std::abs(st.v[i]) - std::abs(first.v[i])));
    }
  }

  // Healthiest site for the phase fit.
  long site = 0;
  double best = -1.0;
  for (long i = 0; i < first.size(); ++i) {
    const double score = std::min(std::abs(first.u[i]), std::abs(first.v[i]));
    if (score > best) {
      best = score;
      site = i;
    }
  }

  cheblat::json::Value summary = cheblat::json::Value::object();
  summary.set("schema", cheblat::json::Value(1ll));
  summary.set("model", cheblat::json::Value(model));
  summary.set("samples", cheblat::json::Value(static_cast<long long>(traj.samples.size())));
  summary.set("modulus_drift_max", cheblat::json::Value(drift));
  if (traj.diverged_at) {
    summary.set("diverged_at", cheblat::json::Value(*traj.diverged_at));
  } else {
    const cheblat::FrequencyEstimate est = cheblat::extract_frequency(traj, site);
    const cheblat::StationaryPair pair = cheblat::salerno_pair(spec, lattice);
    const cheblat::FrequencySet ws = cheblat::derive_frequencies(params, pair);
    summary.set("fit_site", cheblat::json::Value(static_cast<long long>(profile.j0 + site)));
    summary.set("omega1_est", cheblat::json::Value(est.omega_u));
    summary.set("omega2_est", cheblat::json::Value(est.omega_v));
    summary.set("fit_rms_u", cheblat::json::Value(est.fit_rms_u));
    summary.set("fit_rms_v", cheblat::json::Value(est.fit_rms_v));
    summary.set("omega1", cheblat::json::Value(ws.omega1));
    cheblat::json::Value cand = cheblat::json::Value::object();
    cand.set("omega2", cheblat::json::Value(ws.omega2));
    cand.set("omega2_paper", cheblat::json::Value(ws.omega2_paper));
    cand.set("omega2_alt", cheblat::json::Value(ws.omega2_alt));
    if (ws.omega2_al) cand.set("omega2_al", cheblat::json::Value(*ws.omega2_al));
    summary.set("omega2_candidates", std::move(cand));
    std::string verdict = "none";
    if (std::fabs(est.omega_v - ws.omega2) < 1e-6) verdict = "omega2";
    else if (std::fabs(est.omega_v - ws.omega2_alt) < 1e-6) verdict = "omega2_alt";
    else if (ws.omega2_al && std::fabs(est.omega_v - *ws.omega2_al) < 1e-6) verdict = "omega2_al";
    summary.set("omega2_verdict", cheblat::json::Value(verdict));
  }
  const std::string summary_text = summary.dump(2) + "\n";
  if (summary_path.empty()) {
    std::fputs(summary_text.c_str(), stdout);
  } else {
    cheblat::write_text_file(summary_path, summary_text);
  }
  return traj.diverged_at ? kExitVerifyFail : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Chebyshev/elliptic solutions of coupled lattice models"};
  app.require_subcommand(1);

  std::string config_path, out_path, summary_path, format = "csv";
  long lattice_flag = 0;
  std::optional<long long> seed_flag;
  std::optional<double> threshold_flag;
  std::optional<int> jobs_flag, n_max_flag, draws_flag;
  bool inject_bug = false;
  int identities_n = 64;
  int prove_n = 32;
  int theorem_n = 64;

  CLI::App* gen = app.add_subcommand("gen-profile", "sample a solution profile onto a lattice");
  gen->add_option("--config", config_path, "JSON profile spec");
  gen->add_option("--out", out_path, "output file (stdout when omitted)");
  gen->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  gen->add_option("--lattice", lattice_flag, "number of sites");

  CLI::App* verify = app.add_subcommand("verify", "residual sweep over models and families");
  verify->add_option("--config", config_path, "JSON grid config");
  verify->add_option("--out", out_path, "report file (stdout when omitted)");
  verify->add_option("--seed", seed_flag, "random seed");
  verify->add_option("--threshold", threshold_flag, "residual gate");
  verify->add_option("--jobs", jobs_flag, "worker count");
  verify->add_option("--n-max", n_max_flag, "highest order");
  verify->add_option("--draws", draws_flag, "draws per cell");
  verify->add_flag("--inject-bug", inject_bug, "flip a coefficient; the sweep must fail");

  CLI::App* idents = app.add_subcommand("identities", "endpoint and special-value table");
  idents->add_option("--n-max", identities_n, "highest order");
  idents->add_option("--out", out_path, "output file (stdout when omitted)");
  idents->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

  CLI::App* prove = app.add_subcommand("prove", "exact-arithmetic identity proofs");
  prove->add_option("--n-max", prove_n, "highest order for the squared-pair identity");
  prove->add_option("--theorem-n-max", theorem_n, "highest order for the closed-sum equalities");
  prove->add_option("--out", out_path, "report file (stdout when omitted)");

  CLI::App* evolve = app.add_subcommand("evolve", "integrate the time-dependent lattice");
  evolve->add_option("--config", config_path, "JSON run config");
  evolve->add_option("--out", out_path, "trajectory CSV (stdout when omitted)");
  evolve->add_option("--summary-out", summary_path, "summary JSON (stdout when omitted)");

  try {
    app.parse(argc, argv);
    if (gen->parsed()) return cmd_gen_profile(config_path, out_path, format, lattice_flag);
    if (verify->parsed()) {
      return cmd_verify(config_path, out_path, seed_flag, threshold_flag, jobs_flag,
                        n_max_flag, draws_flag, inject_bug);
    }
    if (idents->parsed()) return cmd_identities(identities_n, out_path, format);
    if (prove->parsed()) return cmd_prove(prove_n, theorem_n, out_path);
    if (evolve->parsed()) return cmd_evolve(config_path, out_path, summary_path);
    return kExitBadInput;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitBadInput;
  } catch (const nlohmann::json::exception& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitBadInput;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitBadInput;
  }
}
