#pragma once

#include <string>
#include <vector>

#include "nakalab/representation.hpp"

namespace nakalab {

// Independent recomputations of the factor index, used to cross-check
// the layer-based fast path.

// Largest k with M/rad^k uniserial, via explicitly built quotients;
// the index is length - k (1 when M is uniserial).
int factor_index_by_definition(const Representation& m);

// Max length of a non-local submodule (1 when all are local), over the
// full submodule lattice.
int factor_index_by_submodules(const Representation& m,
                               const std::vector<SubspaceFamily>& submodules);

// index(M) = 1 + max over simple socle lines S of index(M/S), for
// non-uniserial M. Verifies a claimed index; fills witness on failure.
bool check_socle_recursion(const Representation& m, int claimed_index, std::string* witness);

struct InvariantResult {
  std::string name;
  bool ok = true;
  int checked = 0;
  std::string witness;
};

// Runs every module invariant over all indecomposables of the algebra,
// with submodule lattices capped by `budget`:
//   - the three factor-index routes agree,
//   - cofactor index equals the factor index of the dual,
//   - dualizing twice is the identity on the data,
//   - socle recursion,
//   - proper non-uniserial quotients have strictly smaller index,
//   - submodules of length >= index have exactly that index,
//   - submodules of smaller length have smaller index,
//   - max(1, l - ll) <= index <= l <= index + ll - 1,
//   - index = length iff not local (length >= 2),
//   - index 1 iff uniserial,
//   - rad^2 = 0 forces index l or l - 1 by locality (length > 2).
std::vector<InvariantResult> run_module_invariants(AlgebraPtr alg, long long budget = 4096);

}  // namespace nakalab
