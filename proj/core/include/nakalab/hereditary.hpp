#pragma once

#include <vector>

#include "nakalab/representation.hpp"

namespace nakalab {

// Positive roots of the underlying Dynkin graph: reflection closure of
// the simple roots, restricted to nonnegative vectors. Requires
// dynkin_type(q) to hold.
std::vector<std::vector<int>> positive_roots(const Quiver& q);

// Reflection functor at a source vertex k (all arrows at k point out):
// the fiber at k becomes the cokernel of the combined outgoing map and
// the arrows at k are reversed. Returns a module over the reflected
// algebra.
Representation reflect_at_source(const Representation& m, int k);

// Dual construction at a sink: kernel of the combined incoming map.
Representation reflect_at_sink(const Representation& m, int k);

// Inverse translate as the full source-reflection sweep in topological
// order; the quiver returns to its original orientation.
Representation inverse_translate(const Representation& m);

// All indecomposables of a representation-finite hereditary algebra:
// the inverse-translate orbits of the projectives. Count equals the
// number of positive roots. Throws RepresentationInfiniteError on
// non-Dynkin input.
std::vector<Representation> hereditary_indecomposables(AlgebraPtr alg);

struct PredictedIndex {
  int right = 0;
  int left = 0;
};

// Closed forms by Dynkin type and orientation: linear A_n orientations
// are Nakayama, other A_n orientations give n-1 or n depending on which
// side the branching sits, D_n gives 2n-3 and E6/E7/E8 give 11/17/29.
PredictedIndex predicted_nakayama_index(const BoundQuiverAlgebra& alg);

// The standard tree for a Dynkin type with one arrow per edge; bit i of
// `mask` flips the orientation of edge i. Vertex ids are 1..n.
AlgebraPtr dynkin_orientation(DynkinType t, unsigned mask, unsigned p = 2);
std::vector<AlgebraPtr> dynkin_orientations(DynkinType t, unsigned p = 2);

}  // namespace nakalab
