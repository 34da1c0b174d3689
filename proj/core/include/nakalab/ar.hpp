#pragma once

#include <string>
#include <vector>

#include "nakalab/classify.hpp"

namespace nakalab {

// 0 -> left -> middle -> right -> 0 with the connecting maps; middle
// summands are kept separately (zero summands dropped) and `middle` is
// their direct sum.
struct ARSequence {
  Representation left;
  std::vector<Representation> middle_summands;
  Representation middle;
  Representation right;
  Intertwiner f;  // left -> middle
  Intertwiner g;  // middle -> right
  std::string description;
};

// The almost split sequence ending in m, which must be isomorphic to a
// non-projective entry of serial_quotient_list. Three shapes:
// radical quotients P/rad^t pull back along rad(P), socle quotients
// P/S sit under 0 -> S -> P -> P/S -> 0, and the top of a branching
// projective gets 0 -> P -> P/S1 + P/S2 -> P/rad -> 0.
ARSequence almost_split_sequence(AlgebraPtr alg, const Representation& m);

struct ARVerification {
  bool ok = true;
  std::vector<std::pair<std::string, bool>> checks;
  std::string failure;
};

// Exactness, non-splitness, indecomposable end terms, and the right
// almost split property of g against every indecomposable in the list.
ARVerification verify_almost_split(AlgebraPtr alg, const ARSequence& seq);

struct ARQuiverGraph {
  struct Node {
    std::string name;
    std::vector<int> dims;
    bool projective = false;
  };
  std::vector<Node> nodes;
  std::vector<std::pair<int, int>> edges;       // irreducible maps
  std::vector<std::pair<int, int>> translates;  // (node, tau node)
};

// Nodes are the indecomposables; edges come from the almost split
// sequences plus the radical inclusions into projectives.
ARQuiverGraph build_ar_quiver(AlgebraPtr alg);

// DOT rendering; node labels are dim vectors d1|d2|..., a comment maps
// label positions to vertex ids, tau translates are dashed.
std::string ar_quiver_dot(const ARQuiverGraph& g, const Quiver& q);

}  // namespace nakalab
