#pragma once

#include <string>
#include <vector>

#include "nakalab/representation.hpp"

namespace nakalab {

// A letter of a walk: an arrow traversed forwards or backwards.
// Letters are ordered by (arrow index, forwards before backwards);
// that order fixes every canonical form below.
struct Letter {
  int arrow = 0;
  bool inverse = false;

  bool operator==(const Letter& o) const = default;
  bool operator<(const Letter& o) const {
    if (arrow != o.arrow) return arrow < o.arrow;
    return inverse < o.inverse;
  }
  Letter inverted() const { return {arrow, !inverse}; }
};

inline int letter_source(const Quiver& q, Letter l) {
  return l.inverse ? q.arrow(l.arrow).tgt : q.arrow(l.arrow).src;
}
inline int letter_target(const Quiver& q, Letter l) {
  return l.inverse ? q.arrow(l.arrow).src : q.arrow(l.arrow).tgt;
}

// A reduced walk avoiding the relations in both directions. The empty
// walk at a vertex is the trivial string there.
struct StringWord {
  int trivial_vertex = 0;  // meaningful only when letters is empty
  std::vector<Letter> letters;

  bool trivial() const { return letters.empty(); }
  int length() const { return static_cast<int>(letters.size()); }
  int source(const Quiver& q) const {
    return trivial() ? trivial_vertex : letter_source(q, letters.front());
  }
  int target(const Quiver& q) const {
    return trivial() ? trivial_vertex : letter_target(q, letters.back());
  }
  bool operator==(const StringWord& o) const = default;
};

StringWord inverse_word(const StringWord& w);

// Validity over a fixed algebra: composable, reduced, and no window of
// letters spelling a relation forwards or backwards.
bool is_valid_string(const BoundQuiverAlgebra& alg, const StringWord& w);

// min(w, w^{-1}) in the letter order.
StringWord canonical_string(const StringWord& w);

// A primitive cyclic string all of whose powers are strings.
struct Band {
  std::vector<Letter> letters;
};

// All strings up to inversion, sorted by (length, letters). Throws
// RepresentationInfiniteError when a band exists and
// BudgetExceededError past `cap` strings.
std::vector<StringWord> enumerate_strings(const BoundQuiverAlgebra& alg, size_t cap = 10000);

// Bands arising from simple cycles of the letter-window automaton, up
// to rotation and inversion. Empty exactly when the string algebra has
// finitely many strings; the full set of bands is infinite to rotation-
// closed powers, so only these generators are reported.
std::vector<Band> detect_bands(const BoundQuiverAlgebra& alg);

// The string module M(w): one basis point per walk vertex, arrows step
// along the walk.
Representation string_module(AlgebraPtr alg, const StringWord& w);

std::string string_to_text(const BoundQuiverAlgebra& alg, const StringWord& w);
std::string band_to_text(const BoundQuiverAlgebra& alg, const Band& b);

}  // namespace nakalab
