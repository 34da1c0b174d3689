#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

const std::string kCli = NAKALAB_CLI_PATH;
const std::string kFixtures = NAKALAB_FIXTURES_DIR;

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = kCli + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fx(const std::string& name) { return kFixtures + "/" + name; }

}  // namespace

TEST_CASE("classify command") {
  auto r = run("classify " + fx("branch_a3.quiver"));
  CHECK(r.code == 0);
  CHECK(r.out.find("right 2-Nakayama, left 3-Nakayama") != std::string::npos);

  auto a1 = run("classify " + fx("a1.quiver"));
  CHECK(a1.code == 0);
  CHECK(a1.out.find("Nakayama (index 1)") != std::string::npos);

  auto kron = run("classify " + fx("kronecker.quiver"));
  CHECK(kron.code == 2);
  CHECK(kron.out.find("band") != std::string::npos);

  auto again = run("classify " + fx("branch_a3.quiver"));
  CHECK(again.out == r.out);  // deterministic output

  auto json = run("classify --json " + fx("ladder_3.quiver"));
  CHECK(json.code == 0);
  auto j = nlohmann::json::parse(json.out);
  CHECK(j["rightIndex"] == 4);
  CHECK(j["leftIndex"] == 4);
}

TEST_CASE("module command") {
  auto r = run("module " + fx("d4_121.rep") + " --json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["length"] == 5);
  CHECK(j["loewyLength"] == 3);
  CHECK(j["local"] == false);
  CHECK(j["uniserial"] == false);
  CHECK(j["factorIndex"] == 5);
  CHECK(j["cofactorIndex"] == 5);
  CHECK(j["radicalLayerDims"] == nlohmann::json::array({2, 1, 2}));
  CHECK(j["socleLayerDims"] == nlohmann::json::array({2, 2, 1}));

  auto two = run("module " + fx("ladder_2.quiver") + " " + fx("ladder2_p4.rep") + " --json");
  REQUIRE(two.code == 0);
  auto j2 = nlohmann::json::parse(two.out);
  CHECK(j2["factorIndex"] == 2);
  CHECK(j2["cofactorIndex"] == 3);
}

TEST_CASE("strings command") {
  auto r = run("strings " + fx("ladder_2.quiver"));
  CHECK(r.code == 0);
  CHECK(r.out.find("10 strings") != std::string::npos);

  auto kron = run("strings " + fx("kronecker.quiver"));
  CHECK(kron.code == 2);

  auto capped = run("strings " + fx("ladder_4.quiver") + " --budget 3");
  CHECK(capped.code == 4);
}

TEST_CASE("ar command") {
  auto r = run("ar " + fx("branch_a3.quiver"));
  CHECK(r.code == 0);
  CHECK(r.out.find("6 nodes, 6 edges, 3 translates") != std::string::npos);

  auto dot = run("ar " + fx("branch_a3.quiver") + " --dot -");
  CHECK(dot.code == 0);
  CHECK(dot.out.find("digraph AR") != std::string::npos);

  auto bad = run("ar " + fx("ladder_2.quiver"));
  CHECK(bad.code == 3);
}

TEST_CASE("check2 command") {
  CHECK(run("check2 " + fx("branch_a3.quiver")).code == 0);
  auto r = run("check2 " + fx("branch_d4.quiver"));
  CHECK(r.code == 3);
  CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("oracle command") {
  auto r = run("oracle " + fx("branch_a3.quiver"));
  CHECK(r.code == 0);
  CHECK(r.out.find("ok   factor index routes agree") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("hereditary command") {
  auto r = run("hereditary " + fx("branch_d4.quiver"));
  CHECK(r.code == 0);
  CHECK(r.out.find("type D4, 12 positive roots, 12 indecomposables") != std::string::npos);
  CHECK(r.out.find("right index 5 (predicted 5)") != std::string::npos);

  CHECK(run("hereditary " + fx("ladder_2.quiver")).code == 3);
  CHECK(run("hereditary --max-rank 2 " + fx("branch_d4.quiver")).code == 3);
}

TEST_CASE("parse failures exit with code one") {
  std::string bad = std::string(P_tmpdir) + "/nakalab_bad.quiver";
  {
    std::ofstream f(bad);
    f << "vertex 1\narrow a 1 9\n";
  }
  auto r = run("classify " + bad);
  CHECK(r.code == 1);
  CHECK(r.out.find("unknown vertex") != std::string::npos);
  std::remove(bad.c_str());
}
