#include "doctest.h"
#include "nakalab/oracle.hpp"
#include "nakalab/parse.hpp"

using namespace nakalab;

namespace {

const std::string kFixtures = NAKALAB_FIXTURES_DIR;

const InvariantResult& find(const std::vector<InvariantResult>& rs, const std::string& name) {
  for (const auto& r : rs)
    if (r.name == name) return r;
  REQUIRE(false);
  return rs.front();
}

}  // namespace

TEST_CASE("independent index routes agree on the five-dimensional witness") {
  Representation m = parse_module_file(kFixtures + "/d4_121.rep");
  CHECK(factor_index_by_definition(m) == 5);
  CHECK(factor_index_by_submodules(m, enumerate_submodules(m)) == 5);

  Representation p4 = parse_module_file(kFixtures + "/ladder2_p4.rep");
  CHECK(factor_index_by_definition(p4) == 2);
  CHECK(factor_index_by_submodules(p4, enumerate_submodules(p4)) == 2);
}

TEST_CASE("socle recursion accepts the truth and rejects wrong claims") {
  Representation m = parse_module_file(kFixtures + "/d4_121.rep");
  std::string witness;
  CHECK(check_socle_recursion(m, 5, &witness));
  CHECK(witness.empty());

  CHECK_FALSE(check_socle_recursion(m, 4, &witness));
  CHECK(witness.find("socle recursion gives 5") != std::string::npos);

  Representation p4 = parse_module_file(kFixtures + "/ladder2_p4.rep");
  CHECK(check_socle_recursion(p4, 2, &witness));
  CHECK_FALSE(check_socle_recursion(p4, 3, &witness));
}

TEST_CASE("invariant suite passes over the fixtures") {
  for (const std::string name :
       {"branch_a3.quiver", "ladder_2.quiver", "branch_d4.quiver", "a2.quiver"}) {
    auto alg = parse_algebra_file(kFixtures + "/" + name);
    auto results = run_module_invariants(alg);
    INFO("algebra ", name);
    for (const auto& r : results) {
      INFO(r.name, ": ", r.witness);
      CHECK(r.ok);
    }
    CHECK(find(results, "factor index routes agree").checked > 0);
  }
}

TEST_CASE("invariant counters track the module population") {
  auto alg = parse_algebra_file(kFixtures + "/ladder_2.quiver");
  auto results = run_module_invariants(alg);
  CHECK(find(results, "factor index routes agree").checked == 10);
  CHECK(find(results, "index 1 exactly for uniserial modules").checked == 10);
  // Two non-uniserial modules: P(4) and I(1).
  CHECK(find(results, "socle recursion").checked == 2);
}
