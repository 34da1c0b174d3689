#include "nakalab/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "nakalab/errors.hpp"
#include "nakalab/matrix.hpp"

namespace nakalab {

namespace {

// State of the path automaton: end vertex plus the last few arrows
// (one less than the longest relation suffices to spot every relation).
struct PathState {
  int vertex;
  std::vector<int> tail;
  bool operator<(const PathState& o) const {
    if (vertex != o.vertex) return vertex < o.vertex;
    return tail < o.tail;
  }
};

bool relation_is_suffix(const std::vector<int>& rel, const std::vector<int>& seq) {
  if (rel.size() > seq.size()) return false;
  return std::equal(rel.begin(), rel.end(), seq.end() - static_cast<long>(rel.size()));
}

}  // namespace

BoundQuiverAlgebra::BoundQuiverAlgebra(Quiver q, std::vector<Relation> relations, unsigned p)
    : quiver_(std::move(q)), relations_(std::move(relations)), p_(p) {
  if (!is_prime(p_)) throw ParseError("field characteristic must be prime");
  for (const Relation& r : relations_) {
    if (r.arrows.size() < 2) throw ParseError("relation must have length at least 2");
    for (size_t i = 0; i + 1 < r.arrows.size(); ++i)
      if (quiver_.arrow(r.arrows[i]).tgt != quiver_.arrow(r.arrows[i + 1]).src)
        throw ParseError("relation is not a composable path");
  }

  const int window = std::max(0, max_relation_length() - 1);

  auto step = [&](const PathState& s, int arrow, PathState& next) -> bool {
    std::vector<int> seq = s.tail;
    seq.push_back(arrow);
    for (const Relation& r : relations_)
      if (relation_is_suffix(r.arrows, seq)) return false;
    next.vertex = quiver_.arrow(arrow).tgt;
    next.tail = seq;
    if (static_cast<int>(next.tail.size()) > window)
      next.tail.erase(next.tail.begin(), next.tail.end() - window);
    return true;
  };

  // Cycle in the reachable state graph means infinitely many basis paths.
  std::map<PathState, int> color;  // 0 in progress, 1 done
  std::vector<std::pair<PathState, int>> stack;  // state, entering arrow
  auto dfs = [&](auto&& self, const PathState& s) -> void {
    color[s] = 0;
    for (int a : quiver_.arrows_out(s.vertex)) {
      PathState nx;
      if (!step(s, a, nx)) continue;
      auto it = color.find(nx);
      if (it == color.end()) {
        stack.push_back({nx, a});
        self(self, nx);
        stack.pop_back();
      } else if (it->second == 0) {
        std::ostringstream os;
        os << "algebra is infinite-dimensional: relation-free cycle ";
        std::vector<std::string> names;
        for (size_t i = stack.size(); i-- > 0;) {
          names.push_back(quiver_.arrow(stack[i].second).name);
          if (stack[i].first.vertex == nx.vertex && stack[i].first.tail == nx.tail) break;
        }
        std::reverse(names.begin(), names.end());
        names.push_back(quiver_.arrow(a).name);
        for (size_t i = 0; i < names.size(); ++i) os << (i ? " " : "") << names[i];
        throw ParseError(os.str());
      }
    }
    color[s] = 1;
  };
  for (int v = 0; v < quiver_.num_vertices(); ++v) {
    PathState s{v, {}};
    if (!color.count(s)) dfs(dfs, s);
  }

  // Enumerate the basis.
  constexpr size_t kMaxBasis = 200000;
  for (int v = 0; v < quiver_.num_vertices(); ++v) {
    std::vector<int> arrows;
    auto grow = [&](auto&& self, int end) -> void {
      if (basis_.size() >= kMaxBasis)
        throw BudgetExceededError("path basis exceeds enumeration cap");
      basis_.push_back(Path{v, arrows});
      for (int a : quiver_.arrows_out(end)) {
        arrows.push_back(a);
        bool ok = true;
        for (const Relation& r : relations_)
          if (relation_is_suffix(r.arrows, arrows)) {
            ok = false;
            break;
          }
        if (ok) self(self, quiver_.arrow(a).tgt);
        arrows.pop_back();
      }
    };
    grow(grow, v);
  }
  std::sort(basis_.begin(), basis_.end(), [](const Path& a, const Path& b) {
    if (a.start != b.start) return a.start < b.start;
    if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
    return a.arrows < b.arrows;
  });
}

int BoundQuiverAlgebra::loewy_length() const {
  int longest = -1;
  for (const Path& p : basis_) longest = std::max(longest, p.length());
  return longest + 1;
}

bool BoundQuiverAlgebra::path_in_ideal(const std::vector<int>& arrows) const {
  for (const Relation& r : relations_) {
    if (r.arrows.size() > arrows.size()) continue;
    for (size_t i = 0; i + r.arrows.size() <= arrows.size(); ++i)
      if (std::equal(r.arrows.begin(), r.arrows.end(), arrows.begin() + static_cast<long>(i)))
        return true;
  }
  return false;
}

int BoundQuiverAlgebra::max_relation_length() const {
  size_t m = 0;
  for (const Relation& r : relations_) m = std::max(m, r.arrows.size());
  return static_cast<int>(m);
}

BoundQuiverAlgebra opposite_algebra(const BoundQuiverAlgebra& a) {
  std::vector<Relation> rel;
  rel.reserve(a.relations().size());
  for (const Relation& r : a.relations()) {
    Relation rr = r;
    std::reverse(rr.arrows.begin(), rr.arrows.end());
    rel.push_back(std::move(rr));
  }
  return BoundQuiverAlgebra(a.quiver().opposite(), std::move(rel), a.prime());
}

AlgebraPtr opposite_ptr(const AlgebraPtr& a) {
  return std::make_shared<const BoundQuiverAlgebra>(opposite_algebra(*a));
}

ShapeReport classify_shape(const BoundQuiverAlgebra& alg) {
  const Quiver& q = alg.quiver();
  ShapeReport rep;
  rep.connected = q.is_connected();
  rep.hereditary = alg.relations().empty();
  for (int v = 0; v < q.num_vertices(); ++v)
    rep.arrow_degrees.push_back({q.out_degree(v), q.in_degree(v)});

  bool sb = true;
  for (int v = 0; v < q.num_vertices() && sb; ++v)
    if (q.out_degree(v) > 2 || q.in_degree(v) > 2) sb = false;
  for (int a = 0; a < q.num_arrows() && sb; ++a) {
    int succ = 0, pred = 0;
    for (int b : q.arrows_out(q.arrow(a).tgt))
      if (!alg.path_in_ideal({a, b})) ++succ;
    for (int b : q.arrows_in(q.arrow(a).src))
      if (!alg.path_in_ideal({b, a})) ++pred;
    if (succ > 1 || pred > 1) sb = false;
  }
  rep.special_biserial = sb;
  rep.string_algebra = sb;  // the ideal is monomial by construction
  rep.dynkin = dynkin_type(q);
  return rep;
}

std::optional<DynkinType> dynkin_type(const Quiver& q) {
  const int n = q.num_vertices();
  if (n == 0 || !q.is_connected()) return std::nullopt;
  if (q.num_arrows() != n - 1) return std::nullopt;  // trees only
  std::set<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adj(n);
  for (const Arrow& a : q.arrows()) {
    if (a.src == a.tgt) return std::nullopt;
    auto e = std::minmax(a.src, a.tgt);
    if (!edges.insert({e.first, e.second}).second) return std::nullopt;
    adj[a.src].push_back(a.tgt);
    adj[a.tgt].push_back(a.src);
  }

  std::vector<int> deg(n);
  int branch = -1;
  for (int v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(adj[v].size());
    if (deg[v] > 3) return std::nullopt;
    if (deg[v] == 3) {
      if (branch >= 0) return std::nullopt;
      branch = v;
    }
  }
  if (branch < 0) return DynkinType{'A', n};

  std::vector<int> lens;
  for (int w : adj[branch]) {
    int len = 0, prev = branch, cur = w;
    while (true) {
      ++len;
      int next = -1;
      for (int x : adj[cur])
        if (x != prev) next = x;
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  if (lens[0] == 1 && lens[1] == 1) return DynkinType{'D', n};
  if (lens[0] == 1 && lens[1] == 2 && lens[2] >= 2 && lens[2] <= 4)
    return DynkinType{'E', n};
  return std::nullopt;
}

}  // namespace nakalab
