#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nakalab/algebra.hpp"
#include "nakalab/matrix.hpp"

namespace nakalab {

// One subspace of each vertex fiber, stored as RREF row bases. Families
// produced by the series and submodule routines are closed under all
// arrow actions; is_subrepresentation checks that property.
struct SubspaceFamily {
  std::vector<Mat> basis;

  int total_dim() const;
  bool operator==(const SubspaceFamily& o) const { return basis == o.basis; }
  std::string to_string() const;
};

// Finite-dimensional right module over a bound quiver algebra: a fiber
// dimension per vertex and a dim(src) x dim(tgt) matrix per arrow acting
// on row vectors.
class Representation {
public:
  Representation(AlgebraPtr alg, std::vector<int> dims, std::vector<Mat> mats);

  const AlgebraPtr& algebra_ptr() const { return alg_; }
  const BoundQuiverAlgebra& algebra() const { return *alg_; }
  unsigned prime() const { return alg_->prime(); }
  int dim(int v) const { return dims_[v]; }
  const std::vector<int>& dims() const { return dims_; }
  const Mat& mat(int arrow) const { return mats_[arrow]; }
  int total_dim() const;

  // Product of the arrow matrices along a path (identity for trivial).
  Mat act(const Path& p) const;

  // Throws ParseError when a declared relation does not vanish.
  void validate() const;

private:
  AlgebraPtr alg_;
  std::vector<int> dims_;
  std::vector<Mat> mats_;
};

Representation zero_representation(AlgebraPtr alg);
Representation simple_module(AlgebraPtr alg, int vertex);
Representation projective_module(AlgebraPtr alg, int vertex);
Representation injective_module(AlgebraPtr alg, int vertex);

// Standard duality: transposed matrices over the opposite algebra.
// Pass `target` to bind the result to an existing structurally equal
// opposite algebra instead of a freshly built one.
Representation dualize(const Representation& m, AlgebraPtr target = nullptr);

Representation direct_sum(const Representation& a, const Representation& b);

SubspaceFamily zero_family(const Representation& m);
SubspaceFamily full_family(const Representation& m);
bool family_contains(const SubspaceFamily& outer, const SubspaceFamily& inner);
SubspaceFamily family_sum(const Representation& m, const SubspaceFamily& a,
                          const SubspaceFamily& b);
bool is_subrepresentation(const Representation& m, const SubspaceFamily& f);

// [M, rad M, rad^2 M, ..., 0], strictly decreasing.
std::vector<SubspaceFamily> radical_series(const Representation& m);
// [soc^1 M, soc^2 M, ..., M], strictly increasing.
std::vector<SubspaceFamily> socle_series(const Representation& m);

std::vector<int> radical_layer_dims(const Representation& m);
std::vector<int> socle_layer_dims(const Representation& m);

// Composition length; simples are one-dimensional here, so this is the
// total dimension.
int module_length(const Representation& m);
int loewy_length(const Representation& m);
bool is_local(const Representation& m);
bool is_uniserial(const Representation& m);

enum class Side { factor, cofactor };

struct SerialIndexReport {
  Side side = Side::factor;
  int index = 0;
  int length = 0;
  int loewy_length = 0;
  std::vector<int> radical_layers;
  std::vector<int> socle_layers;
  // First radical power that is nonzero and not local (factor side), or
  // the largest uniserial socle (cofactor side); index = length - witness.
  std::optional<int> witness;
};

SerialIndexReport factor_serial_index(const Representation& m);
SerialIndexReport cofactor_serial_index(const Representation& m);

Representation sub_representation(const Representation& m, const SubspaceFamily& f);
Representation quotient_by(const Representation& m, const SubspaceFamily& f);

// A module map M -> N as per-vertex matrices F_v, x |-> x F_v, subject
// to F_s N_a = M_a F_t for every arrow a: s -> t.
using Intertwiner = std::vector<Mat>;

std::vector<Intertwiner> hom_basis(const Representation& m, const Representation& n);
Intertwiner compose(const Intertwiner& f, const Intertwiner& g);
bool intertwiner_invertible(const Representation& m, const Representation& n,
                            const Intertwiner& f);

struct IndecomposabilityResult {
  bool indecomposable = false;
  bool proved = false;  // false when decided by random sampling only
  std::string detail;
};

// Fitting test: exhaustive over End(M) when p^dim End fits the budget,
// randomized otherwise (seed from NAKALAB_SEED).
IndecomposabilityResult is_indecomposable(const Representation& m, long long budget = 4096);

bool is_isomorphic(const Representation& m, const Representation& n,
                   long long budget = 65536);

// Every submodule, as the join closure of the cyclic submodules of all
// fiber vectors. Requires p^dim(M) <= budget.
std::vector<SubspaceFamily> enumerate_submodules(const Representation& m,
                                                 long long budget = 4096);

// The module upper/lower presented on explicit coset representatives of
// the ambient fibers, with enough data to write down induced maps.
struct SubquotientRep {
  Representation rep;
  std::vector<Mat> reps;  // representative ambient rows per vertex
  SubspaceFamily upper, lower;
};

SubquotientRep make_subquotient(const Representation& ambient, const SubspaceFamily& upper,
                                const SubspaceFamily& lower);

// The map [x] -> [x] for nested subquotients (upper and lower of `from`
// contained in those of `to`).
Intertwiner subquotient_map(const Representation& ambient, const SubquotientRep& from,
                            const SubquotientRep& to);

}  // namespace nakalab
