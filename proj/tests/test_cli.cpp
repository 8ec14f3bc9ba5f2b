#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

RunResult run_cli(const std::string& args) {
  const std::string stdout_path = "/tmp/cheblat_test_stdout.txt";
  const std::string cmd = std::string(CHEBLAT_BIN) + " " + args + " > " + stdout_path + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.stdout_text = slurp(stdout_path);
  return r;
}

}  // namespace

TEST_CASE("gen-profile writes a residual-clean table") {
  spit("/tmp/cheblat_prof.json",
       R"({"family":"dn","N":3,"beta":0.7,"c2":0.3,"m":0.5,"mu1":-1,"mu2":-1,"L":16})");
  const RunResult r =
      run_cli("gen-profile --config /tmp/cheblat_prof.json --out /tmp/cheblat_prof.csv");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("residual_max=") != std::string::npos);
  const std::string csv = slurp("/tmp/cheblat_prof.csv");
  CHECK(csv.rfind("j,x,f,g,residual\r\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 17);
}

TEST_CASE("gen-profile rejects invalid coupling signs with exit 2") {
  spit("/tmp/cheblat_bad.json", R"({"family":"dn","N":3,"mu1":1.0,"mu2":1.0})");
  CHECK(run_cli("gen-profile --config /tmp/cheblat_bad.json").exit_code == 2);
}

TEST_CASE("gen-profile rejects a trigonometric family with nonzero modulus") {
  spit("/tmp/cheblat_bad2.json", R"({"family":"cos","N":3,"m":0.5,"mu1":-1,"mu2":-1})");
  CHECK(run_cli("gen-profile --config /tmp/cheblat_bad2.json").exit_code == 2);
}

TEST_CASE("gen-profile rejects malformed config with exit 2") {
  spit("/tmp/cheblat_bad3.json", "{ not json");
  CHECK(run_cli("gen-profile --config /tmp/cheblat_bad3.json").exit_code == 2);
  CHECK(run_cli("gen-profile --config /tmp/cheblat_missing.json.nope").exit_code == 2);
}

TEST_CASE("verify passes on a small grid and fails under the coefficient mutation") {
  const RunResult ok = run_cli("verify --n-max 3 --draws 2 --out /tmp/cheblat_verify.json");
  CHECK(ok.exit_code == 0);
  CHECK(ok.stdout_text.find("pass=yes") != std::string::npos);
  const std::string report = slurp("/tmp/cheblat_verify.json");
  CHECK(report.find("\"schema\": 1") != std::string::npos);
  CHECK(report.find("\"pass\": true") != std::string::npos);

  const RunResult bad =
      run_cli("verify --n-max 3 --draws 2 --inject-bug --out /tmp/cheblat_verify_bad.json");
  CHECK(bad.exit_code == 1);
  CHECK(bad.stdout_text.find("pass=no") != std::string::npos);
}

TEST_CASE("verify reports are byte-identical for identical config and seed") {
  REQUIRE(run_cli("verify --n-max 3 --draws 2 --seed 777 --out /tmp/cheblat_v1.json").exit_code == 0);
  REQUIRE(run_cli("verify --n-max 3 --draws 2 --seed 777 --out /tmp/cheblat_v2.json").exit_code == 0);
  CHECK(slurp("/tmp/cheblat_v1.json") == slurp("/tmp/cheblat_v2.json"));
  // A different seed must change the drawn parameters.
  REQUIRE(run_cli("verify --n-max 3 --draws 2 --seed 778 --out /tmp/cheblat_v3.json").exit_code == 0);
  CHECK(slurp("/tmp/cheblat_v1.json") != slurp("/tmp/cheblat_v3.json"));
}

TEST_CASE("verify report order is independent of the job count") {
  REQUIRE(run_cli("verify --n-max 2 --draws 3 --jobs 1 --out /tmp/cheblat_j1.json").exit_code == 0);
  REQUIRE(run_cli("verify --n-max 2 --draws 3 --jobs 4 --out /tmp/cheblat_j4.json").exit_code == 0);
  CHECK(slurp("/tmp/cheblat_j1.json") == slurp("/tmp/cheblat_j4.json"));
}

TEST_CASE("verify accepts an empty grid") {
  spit("/tmp/cheblat_empty.json", R"({"draws":0})");
  const RunResult r = run_cli("verify --config /tmp/cheblat_empty.json");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("cells=0") != std::string::npos);
}

TEST_CASE("identities table covers the full range with exit 0") {
  const RunResult r = run_cli("identities --n-max 64 --out /tmp/cheblat_ids.csv");
  CHECK(r.exit_code == 0);
  const std::string csv = slurp("/tmp/cheblat_ids.csv");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 65);
  CHECK(csv.find("false") == std::string::npos);
}

TEST_CASE("prove emits zero-residual verdicts") {
  const RunResult r = run_cli("prove --n-max 8 --theorem-n-max 8 --out /tmp/cheblat_prove.json");
  CHECK(r.exit_code == 0);
  const std::string report = slurp("/tmp/cheblat_prove.json");
  CHECK(report.find("\"verdict\": \"zero\"") != std::string::npos);
  CHECK(report.find("\"verdict\": \"nonzero\"") == std::string::npos);
  CHECK(report.find("\"verdict\": \"unequal\"") == std::string::npos);
}

TEST_CASE("evolve conserves moduli and identifies the frequency") {
  spit("/tmp/cheblat_evolve.json",
       R"({"model":"al","profile":{"family":"dn","N":3,"beta":0.23175933466267149,"c2":0.25,"m":0.5,"mu1":-1,"mu2":-1},"lattice":32,"dt":0.001,"t_end":1.0,"stride":200})");
  const RunResult r = run_cli(
      "evolve --config /tmp/cheblat_evolve.json --out /tmp/cheblat_traj.csv "
      "--summary-out /tmp/cheblat_summary.json");
  CHECK(r.exit_code == 0);
  const std::string summary = slurp("/tmp/cheblat_summary.json");
  CHECK(summary.find("\"omega2_verdict\": \"omega2\"") != std::string::npos);
  const std::string traj = slurp("/tmp/cheblat_traj.csv");
  CHECK(traj.rfind("t,j,", 0) == 0);
}

TEST_CASE("unknown arguments exit nonzero") {
  CHECK(run_cli("no-such-command").exit_code != 0);
  CHECK(run_cli("gen-profile --format yaml").exit_code != 0);
}

TEST_CASE("verify honors a families subset and rejects impossible pairings") {
  spit("/tmp/cheblat_fam.json",
       R"({"models":["salerno"],"families":["dn","cos"],"n_max":2,"draws":2})");
  const RunResult r = run_cli("verify --config /tmp/cheblat_fam.json");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("cells=8") != std::string::npos);  // 2 families x 2 orders x 2 draws
  spit("/tmp/cheblat_fam_bad.json",
       R"({"models":["phi6"],"families":["cosh"],"n_max":2,"draws":2})");
  CHECK(run_cli("verify --config /tmp/cheblat_fam_bad.json").exit_code == 2);
}
