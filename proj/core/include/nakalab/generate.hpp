#pragma once

#include <vector>

#include "nakalab/algebra.hpp"

namespace nakalab {

// Every connected finite-dimensional string algebra with at most
// max_vertices vertices, at most max_arrows arrows and length-two
// monomial relations, one representative per isomorphism class of the
// bound quiver (vertex relabelings combined with permutations of
// parallel arrows). Loops and parallel arrow pairs are included; the
// degree caps of string algebras (at most two arrows in and out of each
// vertex) bound the search.
std::vector<AlgebraPtr> generate_string_algebras(int max_vertices, int max_arrows,
                                                 unsigned p = 2);

}  // namespace nakalab
