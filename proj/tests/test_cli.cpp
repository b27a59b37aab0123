#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "tightlie/report.hpp"

namespace {

std::string binary() {
  const char* b = std::getenv("TIGHTLIE_BIN");
  REQUIRE_MESSAGE(b != nullptr, "TIGHTLIE_BIN must point at the tightlie executable");
  return b;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = binary() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

}  // namespace

TEST_CASE("hom-check reports exact values and exit 0") {
  RunResult r = run("hom-check 'irrep:sp(8)' --json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["report"]["tight"] == true);
  CHECK(j["report"]["positive"] == true);
  std::string dc = j["report"]["factors"][0]["dc"].get<std::string>();
  CHECK((dc == "1" || dc == "-1"));
  // |tp(Z_8, rho(Z_D))| = n/2 = 2
  using tightlie::rat_parse;
  CHECK(abs(rat_parse(j["report"]["factors"][0]["tp_Z"].get<std::string>())) == tightlie::Rational(2));
}

TEST_CASE("sym2 report carries both exact ratios") {
  RunResult r = run("hom-check sym2:su12-su24 --json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["report"]["tight"] == false);
  CHECK(j["report"]["factors"][0]["dc"] == "1/2");
  CHECK(j["report"]["factors"][0]["dc_raw"] == "3/8");
  CHECK(j["report"]["hull_dim"].is_null());
}

TEST_CASE("determinism: identical argv and seed give identical bytes") {
  for (const char* args :
       {"cocycle-sup --domain polydisk:2 --restarts 6 --iters 800 --seed 7",
        "shilov-scan --domain ball:2,2 --samples 50 --seed 3 --csv",
        "shilov-scan --domain ball:1,2 --samples 50 --seed 3 --json"}) {
    CAPTURE(args);
    RunResult a = run(args), b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("serial reference and omp kernel emit identical reports") {
  RunResult a = run("cocycle-sup --domain disk --restarts 4 --iters 500 --seed 11");
  RunResult b = run("cocycle-sup --domain disk --restarts 4 --iters 500 --seed 11 --serial");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("exit codes: usage=1, validation=2") {
  CHECK(run("no-such-verb").exit_code == 1);
  CHECK(run("hom-check").exit_code == 1);
  CHECK(run("hom-check 'nonsense:desc'").exit_code == 2);
  CHECK(run("cocycle-eval --domain disk --points '[[1,0],[1,0],[0,1]]'").exit_code == 2);
  CHECK(run("hom-check 'irrep:sp(4)' --csv").exit_code == 1);
  CHECK(run("algebra-info 'su(0,2)'").exit_code == 2);
}

TEST_CASE("round-trip: dump then load reproduces the exact matrices") {
  std::string dump = "/tmp/tightlie_test_hom.json";
  std::string redump = "/tmp/tightlie_test_hom2.json";
  RunResult a = run("hom-check iB:B --dump-hom " + dump);
  CHECK(a.exit_code == 0);
  RunResult b = run("hom-check 'file:" + dump + "' --dump-hom " + redump);
  CHECK(b.exit_code == 0);
  std::ifstream f1(dump), f2(redump);
  nlohmann::json j1 = nlohmann::json::parse(f1), j2 = nlohmann::json::parse(f2);
  CHECK(j1["images"] == j2["images"]);
  CHECK(j1["codomain_form"] == j2["codomain_form"]);
  auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
  CHECK(ja["report"] == jb["report"]);
}

TEST_CASE("loading a non-homomorphism exits 2 with a witness pair") {
  // identity images with one basis element swapped: valid membership, broken brackets
  using namespace tightlie;
  LieHom id = identity_hom(sl2());
  Json j = hom_to_json(id);
  j["images"][0] = mat_to_json(sl2().basis()[0] + sl2().basis()[1]);
  std::ofstream out("/tmp/tightlie_bad_hom.json");
  out << j.dump();
  out.close();
  RunResult r = run("hom-check 'file:/tmp/tightlie_bad_hom.json'");
  CHECK(r.exit_code == 2);
  auto rep = nlohmann::json::parse(r.out);
  CHECK(rep["homomorphism"] == false);
  CHECK(rep.contains("witness"));
}

TEST_CASE("non-canonical rationals are parsed and re-emitted canonically") {
  using namespace tightlie;
  LieHom id = identity_hom(sl2());
  Json j = hom_to_json(id);
  // rewrite an entry as an unreduced fraction; 2/2 = 1 stays the same map
  j["images"][1][0][0] = "2/2";
  std::ofstream out("/tmp/tightlie_canon.json");
  out << j.dump();
  out.close();
  RunResult r = run("hom-check 'file:/tmp/tightlie_canon.json' --dump-hom /tmp/tightlie_canon2.json");
  CHECK(r.exit_code == 0);
  std::ifstream f2("/tmp/tightlie_canon2.json");
  nlohmann::json j2 = nlohmann::json::parse(f2);
  CHECK(j2["images"][1][0][0] == "1");
}

TEST_CASE("boundary-trace reports transversality summary") {
  RunResult r = run("boundary-trace --hom 'irrep:sp(4)' --directions 8 --tmax 20");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["rays"].size() == 8);
  CHECK(j["max_shilov_residual"].get<double>() < 1e-6);
  CHECK(j["min_pair_h"].get<double>() > 1e-3);
}
