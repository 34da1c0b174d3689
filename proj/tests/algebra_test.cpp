#include "doctest.h"
#include "nakalab/algebra.hpp"
#include "nakalab/errors.hpp"
#include "nakalab/parse.hpp"

using namespace nakalab;

namespace {
const std::string kFixtures = NAKALAB_FIXTURES_DIR;
}

TEST_CASE("path basis of the branch fixture") {
  auto alg = parse_algebra_file(kFixtures + "/branch_a3.quiver");
  CHECK(alg->dimension() == 5);  // e1 e2 e3 a b
  CHECK(alg->loewy_length() == 2);
  CHECK(alg->prime() == 2);
  CHECK(alg->quiver().num_vertices() == 3);
}

TEST_CASE("relations cut the path basis") {
  auto alg = parse_algebra_file(kFixtures + "/ladder_2.quiver");
  CHECK(alg->dimension() == 8);  // four trivial paths, four arrows
  CHECK(alg->loewy_length() == 2);
  int a1 = alg->quiver().arrow_index("a1");
  int a2 = alg->quiver().arrow_index("a2");
  int b1 = alg->quiver().arrow_index("b1");
  CHECK(alg->path_in_ideal({a1, a2}));
  CHECK_FALSE(alg->path_in_ideal({a1}));
  CHECK_FALSE(alg->path_in_ideal({b1}));
  CHECK(alg->max_relation_length() == 2);
}

TEST_CASE("loop with vanishing square") {
  auto alg = parse_algebra_text("vertex 1\narrow a 1 1\nrel a a\n");
  CHECK(alg->dimension() == 2);
  CHECK(alg->loewy_length() == 2);
}

TEST_CASE("relation-free cycles are rejected") {
  std::string cyclic = "vertex 1 2\narrow a 1 2\narrow b 2 1\n";
  CHECK_THROWS_AS(parse_algebra_text(cyclic), ParseError);
  CHECK_THROWS_AS(parse_algebra_text("vertex 1\narrow a 1 1\n"), ParseError);
}

TEST_CASE("parser diagnostics carry positions") {
  try {
    parse_algebra_text("vertex 1\narrow a 1 7\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("unknown vertex") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_algebra_text("field 4\nvertex 1\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra_text("vertex 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra_text("vertex 1\narrow a 1 1\nrel a\n"), ParseError);
  // Non-composable relation.
  CHECK_THROWS_AS(
      parse_algebra_text("vertex 1 2 3\narrow a 1 2\narrow b 3 1\nrel a b\n"),
      ParseError);
}

TEST_CASE("field override wins over the file") {
  auto alg = parse_algebra_file(kFixtures + "/branch_a3.quiver", 5);
  CHECK(alg->prime() == 5);
}

TEST_CASE("shape classification") {
  auto ex = parse_algebra_file(kFixtures + "/branch_a3.quiver");
  auto shape = classify_shape(*ex);
  CHECK(shape.connected);
  CHECK(shape.hereditary);
  CHECK(shape.string_algebra);
  REQUIRE(shape.dynkin.has_value());
  CHECK(shape.dynkin->to_string() == "A3");

  auto lam = parse_algebra_file(kFixtures + "/ladder_2.quiver");
  auto lshape = classify_shape(*lam);
  CHECK(lshape.string_algebra);
  CHECK_FALSE(lshape.hereditary);
  CHECK_FALSE(lshape.dynkin.has_value());  // underlying graph is a 4-cycle

  auto kr = parse_algebra_file(kFixtures + "/kronecker.quiver");
  auto kshape = classify_shape(*kr);
  CHECK(kshape.hereditary);
  CHECK(kshape.string_algebra);
  CHECK_FALSE(kshape.dynkin.has_value());  // doubled edge

  auto d4 = parse_algebra_file(kFixtures + "/branch_d4.quiver");
  auto dshape = classify_shape(*d4);
  REQUIRE(dshape.dynkin.has_value());
  CHECK(dshape.dynkin->to_string() == "D4");
  CHECK(dshape.hereditary);
  // Two nonzero continuations after the stem arrow: not special biserial.
  CHECK_FALSE(dshape.string_algebra);
}

TEST_CASE("opposite algebra matches the opposite fixture") {
  auto ex = parse_algebra_file(kFixtures + "/branch_a3.quiver");
  auto op = parse_algebra_file(kFixtures + "/branch_a3_op.quiver");
  CHECK(opposite_algebra(*ex) == *op);
  CHECK(opposite_algebra(opposite_algebra(*ex)) == *ex);

  auto lam = parse_algebra_file(kFixtures + "/ladder_2.quiver");
  auto lop = opposite_algebra(*lam);
  CHECK(lop.dimension() == lam->dimension());
  CHECK(lop.relations().size() == 2);
}
