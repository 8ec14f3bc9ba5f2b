#ifndef CHEBLAT_VERIFY_HPP
#define CHEBLAT_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cheblat/models.hpp"

namespace cheblat {

enum class Model { Salerno, AL, Phi6, Phi4 };

const char* model_name(Model m);
Model model_from_name(const std::string& s);

struct VerifyConfig {
  std::vector<Model> models{Model::Salerno, Model::AL, Model::Phi6, Model::Phi4};
  // When empty, each model runs its default family set: Salerno/AL take all
  // six, phi6 the dn/cn/sech set, phi4 the dn/cn/sech/cos set.
  std::vector<Family> families;
  int n_min = 1;
  int n_max = 8;
  int draws = 20;
  std::uint64_t seed = 12345;
  double threshold = 1e-10;
  long lattice = 64;
  int jobs = 1;
  bool inject_bug = false;  // flips the lowest-order field coefficient
};

struct VerifyCell {
  Model model = Model::Salerno;
  Family family = Family::Dn;
  int n = 1;
  int draw = 0;
  double beta = 0.0, c2 = 0.0, m = 0.0;
  double mu1 = 0.0, mu2 = 0.0, nu1 = 0.0, nu2 = 0.0;  // Salerno/AL draws
  double h = 0.0, c1 = 0.0, b1 = 0.0, beta1 = 0.0;    // phi6/phi4 draws
  double omega1 = 0.0, omega2 = 0.0, omega2_paper = 0.0;
  double max_abs = 0.0, rms = 0.0, max_scaled = 0.0;
  bool bounded = true;
  // Bounded-family cells gate on the absolute residual, amplitude-growing
  // cells on the magnitude-scaled one.
  double residual_effective = 0.0;
  bool pass = false;
  std::vector<std::string> flags;
};

struct VerifyReport {
  VerifyConfig config;
  std::vector<VerifyCell> cells;
  double worst_effective = 0.0;
  bool pass = true;

  std::string to_json() const;
};

std::vector<Family> default_families(Model m);

// Runs the full (model x family x order x draw) grid. Profiles are assembled
// from the explicit coefficient vectors (not the recurrence), so this path is
// an independent check of the generated coefficients; cells are distributed
// over a worker pool and reassembled in grid order. Each cell draws its own
// parameters from a seed derived from (config seed, cell index), so results
// do not depend on the job count.
VerifyReport run_verification(const VerifyConfig& cfg);

}  // namespace cheblat

#endif
