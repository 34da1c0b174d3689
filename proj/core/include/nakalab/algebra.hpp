#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nakalab/quiver.hpp"

namespace nakalab {

// A monomial relation: a composable sequence of at least two arrows
// declared to be zero in the algebra.
struct Relation {
  std::vector<int> arrows;
  bool operator==(const Relation& o) const = default;
};

struct DynkinType {
  char family = 'A';  // 'A', 'D' or 'E'
  int rank = 0;
  bool operator==(const DynkinType& o) const = default;
  std::string to_string() const { return family + std::to_string(rank); }
};

struct ShapeReport {
  bool connected = false;
  bool hereditary = false;        // no relations
  bool special_biserial = false;  // degree caps and unique continuations
  bool string_algebra = false;    // special biserial with monomial ideal
  std::optional<DynkinType> dynkin;  // underlying graph, connected only
  std::vector<std::pair<int, int>> arrow_degrees;  // (out, in) per vertex
};

// Bound quiver algebra KQ/I over F_p with monomial relations. The basis
// consists of the paths avoiding every relation as a contiguous subpath;
// construction fails if that set is infinite.
class BoundQuiverAlgebra {
public:
  BoundQuiverAlgebra(Quiver q, std::vector<Relation> relations, unsigned p);

  const Quiver& quiver() const { return quiver_; }
  const std::vector<Relation>& relations() const { return relations_; }
  unsigned prime() const { return p_; }

  // Paths avoiding relations, sorted by (start, length, arrow sequence).
  const std::vector<Path>& path_basis() const { return basis_; }
  int dimension() const { return static_cast<int>(basis_.size()); }

  // 1 + longest basis path.
  int loewy_length() const;

  // True if the path (given as arrow indices) contains a relation.
  bool path_in_ideal(const std::vector<int>& arrows) const;

  int max_relation_length() const;

  bool operator==(const BoundQuiverAlgebra& o) const {
    return quiver_ == o.quiver_ && relations_ == o.relations_ && p_ == o.p_;
  }

private:
  Quiver quiver_;
  std::vector<Relation> relations_;
  unsigned p_;
  std::vector<Path> basis_;
};

using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

// Same vertices and arrow names, arrows and relations reversed.
BoundQuiverAlgebra opposite_algebra(const BoundQuiverAlgebra& a);
AlgebraPtr opposite_ptr(const AlgebraPtr& a);

ShapeReport classify_shape(const BoundQuiverAlgebra& a);

// Dynkin type of the underlying undirected graph, if any. Requires the
// graph to be connected, simple and loop-free.
std::optional<DynkinType> dynkin_type(const Quiver& q);

}  // namespace nakalab
