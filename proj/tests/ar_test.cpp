#include <algorithm>
#include <set>

#include "doctest.h"
#include "nakalab/ar.hpp"
#include "nakalab/errors.hpp"
#include "nakalab/parse.hpp"

using namespace nakalab;

namespace {

const std::string kFixtures = NAKALAB_FIXTURES_DIR;

int node_named(const ARQuiverGraph& g, const std::string& name) {
  for (size_t i = 0; i < g.nodes.size(); ++i)
    if (g.nodes[i].name == name) return static_cast<int>(i);
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_CASE("almost split sequences over the branch fixture") {
  auto alg = parse_algebra_file(kFixtures + "/branch_a3.quiver");
  auto list = serial_quotient_list(alg);
  int verified = 0;
  for (const auto& rec : list) {
    if (rec.kind == SerialKind::projective) {
      CHECK_THROWS_AS(almost_split_sequence(alg, rec.module), PreconditionError);
      continue;
    }
    ARSequence seq = almost_split_sequence(alg, rec.module);
    auto v = verify_almost_split(alg, seq);
    INFO(rec.name, ": ", v.failure);
    CHECK(v.ok);
    CHECK(module_length(seq.middle) ==
          module_length(seq.left) + module_length(seq.right));
    ++verified;

    if (rec.kind == SerialKind::top_quotient) {
      // The sequence under the top of the branching projective.
      CHECK(seq.middle_summands.size() == 2);
      CHECK(module_length(seq.left) == 3);
      CHECK(factor_serial_index(seq.left).index == 2);
    } else {
      CHECK(is_uniserial(seq.left));
    }
  }
  CHECK(verified == 3);
}

TEST_CASE("the chain algebra has the classical sequence") {
  auto alg = parse_algebra_file(kFixtures + "/a2.quiver");
  auto list = serial_quotient_list(alg);
  for (const auto& rec : list) {
    if (rec.kind == SerialKind::projective) continue;
    ARSequence seq = almost_split_sequence(alg, rec.module);
    CHECK(seq.middle_summands.size() == 1);
    CHECK(seq.left.dims() == std::vector<int>{0, 1});
    CHECK(seq.middle.dims() == std::vector<int>{1, 1});
    CHECK(verify_almost_split(alg, seq).ok);
  }
}

TEST_CASE("AR quiver of the branch fixture matches the known digraph") {
  auto alg = parse_algebra_file(kFixtures + "/branch_a3.quiver");
  ARQuiverGraph g = build_ar_quiver(alg);
  REQUIRE(g.nodes.size() == 6);

  int p1 = node_named(g, "P(1)");
  int p2 = node_named(g, "P(2)");
  int p3 = node_named(g, "P(3)");
  int q1 = node_named(g, "P(3)/S(1)");
  int q2 = node_named(g, "P(3)/S(2)");
  int top = node_named(g, "P(3)/rad");

  std::set<std::pair<int, int>> expected_edges = {{p1, p3}, {p2, p3}, {p3, q1},
                                                  {p3, q2}, {q1, top}, {q2, top}};
  CHECK(std::set<std::pair<int, int>>(g.edges.begin(), g.edges.end()) == expected_edges);

  std::set<std::pair<int, int>> expected_taus = {{q1, p1}, {q2, p2}, {top, p3}};
  CHECK(std::set<std::pair<int, int>>(g.translates.begin(), g.translates.end()) ==
        expected_taus);

  CHECK(g.nodes[p3].projective);
  CHECK_FALSE(g.nodes[top].projective);
  CHECK(g.nodes[p3].dims == std::vector<int>{1, 1, 1});
}

TEST_CASE("single point") {
  auto alg = parse_algebra_file(kFixtures + "/a1.quiver");
  ARQuiverGraph g = build_ar_quiver(alg);
  CHECK(g.nodes.size() == 1);
  CHECK(g.edges.empty());
  CHECK(g.translates.empty());
}

TEST_CASE("DOT export") {
  auto alg = parse_algebra_file(kFixtures + "/branch_a3.quiver");
  ARQuiverGraph g = build_ar_quiver(alg);
  std::string dot = ar_quiver_dot(g, alg->quiver());
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("1|1|1") != std::string::npos);
  CHECK(dot.find("style=dashed") != std::string::npos);
  CHECK(dot.find("// dim vector positions: d1|d2|d3") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '\n') > 10);
}

TEST_CASE("sequences refuse modules outside the list") {
  auto alg = parse_algebra_file(kFixtures + "/branch_a3.quiver");
  Representation stray = direct_sum(simple_module(alg, 0), simple_module(alg, 1));
  CHECK_THROWS_AS(almost_split_sequence(alg, stray), PreconditionError);

  auto lam = parse_algebra_file(kFixtures + "/ladder_2.quiver");
  CHECK_THROWS_AS(build_ar_quiver(lam), PreconditionError);
}
