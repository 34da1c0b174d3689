#pragma once

#include <string>
#include <vector>

#include "nakalab/representation.hpp"
#include "nakalab/strings.hpp"

namespace nakalab {

struct ModuleRecord {
  std::string name;
  Representation module;
  SerialIndexReport factor;
};

// Classification of a representation-finite algebra by the largest
// factor-serial index over all indecomposables, on both sides.
struct NakayamaReport {
  std::string backend;  // "string", "hereditary" or "both"
  bool connected = true;
  bool representation_finite = true;
  int right_index = 0;
  int left_index = 0;
  std::vector<ModuleRecord> table;  // right-side indecomposables
  std::string right_witness, left_witness;
  std::vector<int> right_witness_dims, left_witness_dims;
};

// Enumerates all indecomposables (string and/or reflection backend,
// asserting agreement when both apply) and takes the maximal factor
// index; the left side is the right side of the opposite algebra.
// Throws RepresentationInfiniteError or UnsupportedClassError.
NakayamaReport classify(AlgebraPtr alg);

// Right-side only; used internally and by tests.
struct SideResult {
  std::string backend;
  int index = 0;
  std::vector<ModuleRecord> table;
  std::string witness;
  std::vector<int> witness_dims;
};
SideResult classify_side(AlgebraPtr alg);

struct ConditionDiagnostic {
  std::string name;
  bool ok = true;
  std::string witness;
};

struct TwoNakayamaCheck {
  bool ok = false;
  std::vector<ConditionDiagnostic> conditions;
  std::string first_failure() const;
};

// Arrow-level test: (1) every vertex has at most two arrows out and at
// most one in; (2) each arrow has at most one nonzero continuation;
// (3) some vertex has two arrows out; (4) two nonzero nontrivial paths
// from a common vertex, neither a prefix of the other, have length sum
// two. Holds exactly for the right 2-Nakayama algebras.
TwoNakayamaCheck is_right_2_nakayama_syntactic(const BoundQuiverAlgebra& alg);

// Conditions (1), (2) and (4) alone: every projective is uniserial or
// has semisimple radical of length two, so the serial quotient list
// below is the complete indecomposable list. Covers the Nakayama case
// excluded by condition (3).
bool admits_serial_quotients(const BoundQuiverAlgebra& alg);

enum class SerialKind { projective, radical_quotient, socle_quotient, top_quotient };

struct SerialModule {
  Representation module;
  int vertex = 0;  // projective cover P(vertex)
  SerialKind kind = SerialKind::projective;
  int radical_power = 0;  // t in P/rad^t for radical quotients
  int socle_vertex = -1;  // killed socle line for socle quotients
  std::string name;
  SubspaceFamily kernel;  // of P(vertex) ->> module
};

// P(v)/rad^t for uniserial P(v), and P(v), P(v)/S, P(v)/rad for the
// branching projectives. Pairwise non-isomorphic and complete under
// admits_serial_quotients.
std::vector<SerialModule> serial_quotient_list(AlgebraPtr alg);

// serial_quotient_list guarded by the full syntactic check.
std::vector<SerialModule> two_nakayama_indecomposables(AlgebraPtr alg);

}  // namespace nakalab
