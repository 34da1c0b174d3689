#include "nakalab/generate.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nakalab/errors.hpp"

namespace nakalab {

namespace {

using PairList = std::vector<std::pair<int, int>>;  // sorted (src, tgt), 0-based

bool connected_on_all(int n, const PairList& arrows) {
  if (n == 1) return true;
  std::vector<std::vector<int>> adj(n);
  for (auto [s, t] : arrows) {
    adj[s].push_back(t);
    adj[t].push_back(s);
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

PairList relabeled(const PairList& arrows, const std::vector<int>& perm) {
  PairList out;
  out.reserve(arrows.size());
  for (auto [s, t] : arrows) out.emplace_back(perm[s], perm[t]);
  std::sort(out.begin(), out.end());
  return out;
}

// Arrow permutations induced by the vertex automorphisms of a sorted
// arrow list, including the swaps of parallel pairs.
std::vector<std::vector<int>> arrow_automorphisms(int n, const PairList& arrows) {
  int m = static_cast<int>(arrows.size());
  // Parallel classes: runs of equal pairs (size one or two under the
  // degree caps).
  std::vector<int> class_start;
  for (int i = 0; i < m; ++i)
    if (i == 0 || arrows[i] != arrows[i - 1]) class_start.push_back(i);
  auto class_of = [&](const std::pair<int, int>& pr) {
    for (int s : class_start)
      if (arrows[s] == pr) return s;
    return -1;
  };

  std::vector<std::vector<int>> result;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (relabeled(arrows, perm) != arrows) continue;
    // Slots mapped class to class; branch over the orderings inside
    // each image class of size two.
    std::vector<int> image_class(m), class_size(m, 0);
    for (int i = 0; i < m; ++i) {
      int c = class_of({perm[arrows[i].first], perm[arrows[i].second]});
      image_class[i] = c;
    }
    std::vector<int> dup_slots;  // first slot of each source class of size 2
    for (int i = 0; i < m; ++i)
      if (i + 1 < m && arrows[i] == arrows[i + 1]) {
        dup_slots.push_back(i);
        ++i;
      }
    int masks = 1 << dup_slots.size();
    for (int mask = 0; mask < masks; ++mask) {
      std::vector<int> sigma(m);
      std::vector<int> used(m, 0);
      for (int i = 0; i < m; ++i) {
        int base = image_class[i];
        // Position within the source class, possibly flipped.
        int offset = (i > 0 && arrows[i] == arrows[i - 1]) ? 1 : 0;
        auto it = std::find(dup_slots.begin(), dup_slots.end(), offset ? i - 1 : i);
        if (it != dup_slots.end() && (mask >> (it - dup_slots.begin())) & 1) offset ^= 1;
        sigma[i] = base + offset;
      }
      bool ok = true;
      for (int i = 0; i < m && ok; ++i) {
        if (used[sigma[i]]) ok = false;
        used[sigma[i]] = 1;
      }
      if (ok) result.push_back(sigma);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

using RelSet = std::vector<std::pair<int, int>>;  // sorted arrow index pairs

RelSet canonical_relations(const RelSet& rels, const std::vector<std::vector<int>>& autos) {
  RelSet best;
  bool first = true;
  for (const auto& sigma : autos) {
    RelSet mapped;
    mapped.reserve(rels.size());
    for (auto [i, j] : rels) mapped.emplace_back(sigma[i], sigma[j]);
    std::sort(mapped.begin(), mapped.end());
    if (first || mapped < best) {
      best = std::move(mapped);
      first = false;
    }
  }
  return best;
}

void emit_quiver_algebras(int n, const PairList& arrows, unsigned p,
                          std::vector<AlgebraPtr>& out) {
  int m = static_cast<int>(arrows.size());
  auto autos = arrow_automorphisms(n, arrows);

  std::vector<std::pair<int, int>> composable;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (arrows[i].second == arrows[j].first) composable.emplace_back(i, j);
  int nc = static_cast<int>(composable.size());
  assert(nc <= 2 * m);

  std::set<RelSet> seen;
  for (int mask = 0; mask < (1 << nc); ++mask) {
    RelSet rels;
    for (int k = 0; k < nc; ++k)
      if ((mask >> k) & 1) rels.push_back(composable[k]);

    // Unique continuation on both sides outside the relations.
    bool stringy = true;
    for (int i = 0; i < m && stringy; ++i) {
      int succ = 0, pred = 0;
      for (int j = 0; j < m; ++j) {
        if (arrows[i].second == arrows[j].first &&
            !std::binary_search(rels.begin(), rels.end(), std::make_pair(i, j)))
          ++succ;
        if (arrows[j].second == arrows[i].first &&
            !std::binary_search(rels.begin(), rels.end(), std::make_pair(j, i)))
          ++pred;
      }
      if (succ > 1 || pred > 1) stringy = false;
    }
    if (!stringy) continue;
    if (!seen.insert(canonical_relations(rels, autos)).second) continue;

    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 1);
    std::vector<Arrow> qarrows;
    qarrows.reserve(m);
    for (int i = 0; i < m; ++i)
      qarrows.push_back({"a" + std::to_string(i + 1), arrows[i].first, arrows[i].second});
    Quiver q(ids, qarrows);
    std::vector<Relation> relations;
    relations.reserve(rels.size());
    for (auto [i, j] : rels) relations.push_back(Relation{{i, j}});
    try {
      out.push_back(std::make_shared<const BoundQuiverAlgebra>(q, relations, p));
    } catch (const ParseError&) {
      // Relation-free cycle: infinite-dimensional, not part of the
      // population.
    }
  }
}

void enum_arrow_lists(int n, int max_arrows, unsigned p, std::vector<AlgebraPtr>& out) {
  PairList arrows;
  std::vector<int> outdeg(n, 0), indeg(n, 0);

  auto process = [&]() {
    if (static_cast<int>(arrows.size()) < n - 1) return;
    if (!connected_on_all(n, arrows)) return;
    // Keep only the least labeling of each multigraph.
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      if (relabeled(arrows, perm) < arrows) return;
    } while (std::next_permutation(perm.begin(), perm.end()));
    emit_quiver_algebras(n, arrows, p, out);
  };

  auto rec = [&](auto&& self, std::pair<int, int> min_pair) -> void {
    process();
    if (static_cast<int>(arrows.size()) == max_arrows) return;
    for (int s = min_pair.first; s < n; ++s)
      for (int t = (s == min_pair.first ? min_pair.second : 0); t < n; ++t) {
        if (outdeg[s] >= 2 || indeg[t] >= 2) continue;
        arrows.emplace_back(s, t);
        ++outdeg[s];
        ++indeg[t];
        self(self, {s, t});
        arrows.pop_back();
        --outdeg[s];
        --indeg[t];
      }
  };
  rec(rec, {0, 0});
}

}  // namespace

std::vector<AlgebraPtr> generate_string_algebras(int max_vertices, int max_arrows, unsigned p) {
  std::vector<AlgebraPtr> out;
  for (int n = 1; n <= max_vertices; ++n) enum_arrow_lists(n, max_arrows, p, out);
  return out;
}

}  // namespace nakalab
