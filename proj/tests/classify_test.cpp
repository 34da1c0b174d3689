#include <map>

#include "doctest.h"
#include "nakalab/classify.hpp"
#include "nakalab/errors.hpp"
#include "nakalab/generate.hpp"
#include "nakalab/parse.hpp"

using namespace nakalab;

namespace {
const std::string kFixtures = NAKALAB_FIXTURES_DIR;
}

TEST_CASE("the branch fixture is right 2, left 3") {
  auto alg = parse_algebra_file(kFixtures + "/branch_a3.quiver");
  auto report = classify(alg);
  CHECK(report.right_index == 2);
  CHECK(report.left_index == 3);
  CHECK(report.backend == "both");
  CHECK(report.table.size() == 6);
  CHECK(report.right_witness_dims == std::vector<int>{1, 1, 1});
}

TEST_CASE("the branch D4 quiver tops out at five") {
  auto alg = parse_algebra_file(kFixtures + "/branch_d4.quiver");
  auto report = classify(alg);
  CHECK(report.right_index == 5);
  CHECK(report.left_index == 5);
  CHECK(report.backend == "hereditary");
  CHECK(report.table.size() == 12);
  CHECK(report.right_witness_dims == std::vector<int>{1, 1, 2, 1});
}

TEST_CASE("seam algebras hit index t+1") {
  auto alg = parse_algebra_file(kFixtures + "/ladder_2.quiver");
  auto report = classify(alg);
  CHECK(report.right_index == 3);
  CHECK(report.left_index == 3);
  CHECK(report.backend == "string");
  CHECK(report.table.size() == 10);
}

TEST_CASE("Nakayama cases") {
  auto a1 = classify(parse_algebra_file(kFixtures + "/a1.quiver"));
  CHECK(a1.right_index == 1);
  CHECK(a1.left_index == 1);
  CHECK(a1.table.size() == 1);

  auto a2 = classify(parse_algebra_file(kFixtures + "/a2.quiver"));
  CHECK(a2.right_index == 1);
  CHECK(a2.table.size() == 3);

  auto a3 = classify(parse_algebra_file(kFixtures + "/linear_a3.quiver"));
  CHECK(a3.right_index == 1);
  CHECK(a3.left_index == 1);
}

TEST_CASE("infinite type is reported with a certificate") {
  auto kron = parse_algebra_file(kFixtures + "/kronecker.quiver");
  CHECK_THROWS_AS(classify(kron), RepresentationInfiniteError);
}

TEST_CASE("arrow-level conditions") {
  auto ex = is_right_2_nakayama_syntactic(
      *parse_algebra_file(kFixtures + "/branch_a3.quiver"));
  CHECK(ex.ok);
  for (const auto& c : ex.conditions) CHECK(c.ok);

  auto d4 = is_right_2_nakayama_syntactic(
      *parse_algebra_file(kFixtures + "/branch_d4.quiver"));
  CHECK_FALSE(d4.ok);
  CHECK(d4.conditions[3].ok == false);  // two long paths from the stem
  CHECK_FALSE(d4.first_failure().empty());

  auto lam = is_right_2_nakayama_syntactic(
      *parse_algebra_file(kFixtures + "/ladder_2.quiver"));
  CHECK_FALSE(lam.ok);
  CHECK_FALSE(lam.conditions[0].ok);  // two arrows into the sink

  auto a2 = is_right_2_nakayama_syntactic(*parse_algebra_file(kFixtures + "/a2.quiver"));
  CHECK_FALSE(a2.ok);           // no branch vertex
  CHECK(a2.conditions[0].ok);
  CHECK(a2.conditions[1].ok);
  CHECK_FALSE(a2.conditions[2].ok);
  CHECK(admits_serial_quotients(*parse_algebra_file(kFixtures + "/a2.quiver")));
}

TEST_CASE("serial quotient lists") {
  auto alg = parse_algebra_file(kFixtures + "/branch_a3.quiver");
  auto list = serial_quotient_list(alg);
  REQUIRE(list.size() == 6);
  std::map<std::string, SerialKind> kinds;
  for (const auto& rec : list) kinds[rec.name] = rec.kind;
  CHECK(kinds.at("P(1)") == SerialKind::projective);
  CHECK(kinds.at("P(2)") == SerialKind::projective);
  CHECK(kinds.at("P(3)") == SerialKind::projective);
  CHECK(kinds.at("P(3)/S(1)") == SerialKind::socle_quotient);
  CHECK(kinds.at("P(3)/S(2)") == SerialKind::socle_quotient);
  CHECK(kinds.at("P(3)/rad") == SerialKind::top_quotient);
  for (const auto& rec : list) {
    CHECK(is_local(rec.module));
    CHECK(is_indecomposable(rec.module).indecomposable);
  }

  auto a2list = serial_quotient_list(parse_algebra_file(kFixtures + "/a2.quiver"));
  REQUIRE(a2list.size() == 3);
  CHECK(a2list[0].name == "P(1)/rad");
  CHECK(a2list[0].kind == SerialKind::radical_quotient);

  CHECK_THROWS_AS(serial_quotient_list(parse_algebra_file(kFixtures + "/ladder_2.quiver")),
                  PreconditionError);
  CHECK_THROWS_AS(two_nakayama_indecomposables(parse_algebra_file(kFixtures + "/a2.quiver")),
                  PreconditionError);
}

TEST_CASE("generation finds the loop algebras and stays canonical") {
  auto small = generate_string_algebras(1, 2);
  // One vertex: the point, the loop with square zero, and the two-loop
  // algebras with enough relations to stay a finite string algebra.
  CHECK(small.size() >= 2);
  bool point = false, dual_numbers = false;
  for (const auto& alg : small) {
    if (alg->quiver().num_arrows() == 0) point = true;
    if (alg->quiver().num_arrows() == 1 && alg->dimension() == 2) dual_numbers = true;
    CHECK(classify_shape(*alg).string_algebra);
    CHECK(classify_shape(*alg).connected);
  }
  CHECK(point);
  CHECK(dual_numbers);

  auto two = generate_string_algebras(2, 2);
  int chains = 0;
  for (const auto& alg : two)
    if (alg->quiver().num_vertices() == 2 && alg->quiver().num_arrows() == 1) ++chains;
  CHECK(chains == 1);  // 1 -> 2 and 2 -> 1 are the same algebra
}
