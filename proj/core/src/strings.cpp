#include "nakalab/strings.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "nakalab/errors.hpp"

namespace nakalab {

namespace {

// No relation may appear as a window of consecutive letters, all
// forwards in order or all backwards in reverse order.
bool window_hits_relation(const BoundQuiverAlgebra& alg, const std::vector<Letter>& ls,
                          size_t end) {
  for (const Relation& r : alg.relations()) {
    const size_t k = r.arrows.size();
    if (end + 1 < k) continue;
    const size_t at = end + 1 - k;
    bool fwd = true, bwd = true;
    for (size_t i = 0; i < k && (fwd || bwd); ++i) {
      const Letter& l = ls[at + i];
      if (l.inverse || l.arrow != r.arrows[i]) fwd = false;
      if (!l.inverse || l.arrow != r.arrows[k - 1 - i]) bwd = false;
    }
    if (fwd || bwd) return true;
  }
  return false;
}

// Checks for appending `next` after position end-1 of a valid word.
bool extension_ok(const BoundQuiverAlgebra& alg, std::vector<Letter>& ls, Letter next,
                  int target_so_far) {
  const Quiver& q = alg.quiver();
  if (letter_source(q, next) != target_so_far) return false;
  if (!ls.empty() && ls.back() == next.inverted()) return false;
  ls.push_back(next);
  bool ok = !window_hits_relation(alg, ls, ls.size() - 1);
  ls.pop_back();
  return ok;
}

std::vector<Letter> all_letters(const Quiver& q) {
  std::vector<Letter> out;
  for (int a = 0; a < q.num_arrows(); ++a) {
    out.push_back({a, false});
    out.push_back({a, true});
  }
  return out;
}

}  // namespace

StringWord inverse_word(const StringWord& w) {
  StringWord r;
  r.trivial_vertex = w.trivial_vertex;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back(it->inverted());
  return r;
}

bool is_valid_string(const BoundQuiverAlgebra& alg, const StringWord& w) {
  const Quiver& q = alg.quiver();
  if (w.trivial()) return w.trivial_vertex >= 0 && w.trivial_vertex < q.num_vertices();
  for (size_t i = 0; i + 1 < w.letters.size(); ++i) {
    if (letter_target(q, w.letters[i]) != letter_source(q, w.letters[i + 1])) return false;
    if (w.letters[i + 1] == w.letters[i].inverted()) return false;
  }
  for (size_t i = 0; i < w.letters.size(); ++i) {
    std::vector<Letter> prefix(w.letters.begin(), w.letters.begin() + static_cast<long>(i) + 1);
    if (window_hits_relation(alg, prefix, i)) return false;
  }
  return true;
}

StringWord canonical_string(const StringWord& w) {
  if (w.trivial()) return w;
  StringWord inv = inverse_word(w);
  return inv.letters < w.letters ? inv : w;
}

std::vector<StringWord> enumerate_strings(const BoundQuiverAlgebra& alg, size_t cap) {
  std::vector<Band> bands = detect_bands(alg);
  if (!bands.empty())
    throw RepresentationInfiniteError(
        "infinitely many strings: band " + band_to_text(alg, bands.front()),
        band_to_text(alg, bands.front()));

  const Quiver& q = alg.quiver();
  std::vector<Letter> letters = all_letters(q);
  std::set<std::pair<int, std::vector<std::pair<int, int>>>> canon;
  std::vector<StringWord> out;
  auto record = [&](const StringWord& w) {
    StringWord c = canonical_string(w);
    std::vector<std::pair<int, int>> key;
    for (const Letter& l : c.letters) key.push_back({l.arrow, l.inverse ? 1 : 0});
    if (canon.insert({c.trivial() ? c.trivial_vertex : -1, key}).second) {
      out.push_back(c);
      if (out.size() > cap) throw BudgetExceededError("string enumeration exceeds cap");
    }
  };

  // Every string is reached by rightward extension from a trivial one.
  std::vector<Letter> cur;
  auto grow = [&](auto&& self, int at) -> void {
    for (const Letter& l : letters) {
      if (!extension_ok(alg, cur, l, at)) continue;
      cur.push_back(l);
      record(StringWord{0, cur});
      self(self, letter_target(q, l));
      cur.pop_back();
    }
  };
  for (int v = 0; v < q.num_vertices(); ++v) {
    record(StringWord{v, {}});
    grow(grow, v);
  }

  std::sort(out.begin(), out.end(), [](const StringWord& a, const StringWord& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.trivial()) return a.trivial_vertex < b.trivial_vertex;
    for (int i = 0; i < a.length(); ++i) {
      if (a.letters[i] == b.letters[i]) continue;
      return a.letters[i] < b.letters[i];
    }
    return false;
  });
  return out;
}

std::vector<Band> detect_bands(const BoundQuiverAlgebra& alg) {
  const Quiver& q = alg.quiver();
  const int window = std::max(1, alg.max_relation_length() - 1);
  constexpr size_t kMaxNodes = 20000;
  constexpr size_t kMaxCycles = 2000;

  // Nodes: valid words of `window` letters. Edges shift in one letter.
  std::vector<std::vector<Letter>> nodes;
  std::map<std::vector<std::pair<int, int>>, int> index;
  std::vector<Letter> cur;
  auto key_of = [](const std::vector<Letter>& ls) {
    std::vector<std::pair<int, int>> k;
    for (const Letter& l : ls) k.push_back({l.arrow, l.inverse ? 1 : 0});
    return k;
  };
  std::vector<Letter> letters = all_letters(q);
  auto gen = [&](auto&& self, int at, int depth) -> void {
    if (depth == window) {
      auto k = key_of(cur);
      if (!index.count(k)) {
        index[k] = static_cast<int>(nodes.size());
        nodes.push_back(cur);
        if (nodes.size() > kMaxNodes)
          throw BudgetExceededError("band automaton exceeds node cap");
      }
      return;
    }
    for (const Letter& l : letters) {
      if (!extension_ok(alg, cur, l, at)) continue;
      cur.push_back(l);
      self(self, letter_target(q, l), depth + 1);
      cur.pop_back();
    }
  };
  for (int v = 0; v < q.num_vertices(); ++v) gen(gen, v, 0);

  std::vector<std::vector<std::pair<int, int>>> adj(nodes.size());  // (node, letter idx)
  for (size_t u = 0; u < nodes.size(); ++u) {
    int at = letter_target(q, nodes[u].back());
    for (size_t li = 0; li < letters.size(); ++li) {
      std::vector<Letter> w = nodes[u];
      if (!extension_ok(alg, w, letters[li], at)) continue;
      w.push_back(letters[li]);
      w.erase(w.begin());
      auto it = index.find(key_of(w));
      if (it != index.end()) adj[u].push_back({it->second, static_cast<int>(li)});
    }
  }

  // Simple cycles, smallest start node first; each yields the cyclic
  // word of letters consumed along its edges.
  std::set<std::vector<std::pair<int, int>>> seen;
  std::vector<Band> bands;
  size_t cycles = 0;
  std::vector<int> path_letters;
  std::vector<char> on_path(nodes.size(), 0);
  auto canonical_band = [&](std::vector<Letter> w) {
    // Primitive part, then minimum over rotations of both directions.
    for (size_t d = 1; d <= w.size() / 2; ++d) {
      if (w.size() % d) continue;
      bool period = true;
      for (size_t i = d; i < w.size() && period; ++i)
        if (!(w[i] == w[i - d])) period = false;
      if (period) {
        w.resize(d);
        break;
      }
    }
    std::vector<Letter> best = w;
    for (int dir = 0; dir < 2; ++dir) {
      std::vector<Letter> base = w;
      if (dir) {
        StringWord tmp{0, w};
        base = inverse_word(tmp).letters;
      }
      for (size_t r = 0; r < base.size(); ++r) {
        std::vector<Letter> rot(base.begin() + static_cast<long>(r), base.end());
        rot.insert(rot.end(), base.begin(), base.begin() + static_cast<long>(r));
        if (rot < best) best = rot;
      }
    }
    return best;
  };
  auto dfs = [&](auto&& self, size_t root, size_t u) -> void {
    if (cycles > kMaxCycles) return;
    on_path[u] = 1;
    for (auto [v, li] : adj[u]) {
      if (static_cast<size_t>(v) < root) continue;
      if (static_cast<size_t>(v) == root) {
        ++cycles;
        std::vector<Letter> w;
        for (int idx : path_letters) w.push_back(letters[idx]);
        w.push_back(letters[li]);
        std::vector<Letter> c = canonical_band(w);
        if (seen.insert(key_of(c)).second) bands.push_back(Band{c});
      } else if (!on_path[v]) {
        path_letters.push_back(li);
        self(self, root, v);
        path_letters.pop_back();
      }
    }
    on_path[u] = 0;
  };
  for (size_t s = 0; s < nodes.size(); ++s) dfs(dfs, s, s);

  std::sort(bands.begin(), bands.end(), [](const Band& a, const Band& b) {
    if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
    return a.letters < b.letters;
  });
  return bands;
}

Representation string_module(AlgebraPtr alg, const StringWord& w) {
  const Quiver& q = alg->quiver();
  const unsigned p = alg->prime();
  if (!is_valid_string(*alg, w)) throw PreconditionError("not a valid string");

  const int n = w.length();
  std::vector<int> point_vertex(n + 1);
  point_vertex[0] = w.source(q);
  for (int i = 0; i < n; ++i) point_vertex[i + 1] = letter_target(q, w.letters[i]);

  std::vector<std::vector<int>> fiber(q.num_vertices());
  std::vector<int> pos(n + 1);
  for (int i = 0; i <= n; ++i) {
    pos[i] = static_cast<int>(fiber[point_vertex[i]].size());
    fiber[point_vertex[i]].push_back(i);
  }

  std::vector<int> dims(q.num_vertices());
  for (int v = 0; v < q.num_vertices(); ++v) dims[v] = static_cast<int>(fiber[v].size());
  std::vector<Mat> mats;
  for (int a = 0; a < q.num_arrows(); ++a)
    mats.emplace_back(dims[q.arrow(a).src], dims[q.arrow(a).tgt], p);
  for (int i = 0; i < n; ++i) {
    const Letter& l = w.letters[i];
    if (!l.inverse)
      mats[l.arrow].set(pos[i], pos[i + 1], 1);  // z_i . a = z_{i+1}
    else
      mats[l.arrow].set(pos[i + 1], pos[i], 1);  // z_{i+1} . a = z_i
  }
  return Representation(alg, std::move(dims), std::move(mats));
}

std::string string_to_text(const BoundQuiverAlgebra& alg, const StringWord& w) {
  const Quiver& q = alg.quiver();
  if (w.trivial()) return "e" + std::to_string(q.vertex_id(w.trivial_vertex));
  std::ostringstream os;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) os << ' ';
    os << q.arrow(w.letters[i].arrow).name;
    if (w.letters[i].inverse) os << "^-";
  }
  return os.str();
}

std::string band_to_text(const BoundQuiverAlgebra& alg, const Band& b) {
  return string_to_text(alg, StringWord{0, b.letters});
}

}  // namespace nakalab
