#include "nakalab/hereditary.hpp"

#include <algorithm>
#include <set>

#include "nakalab/errors.hpp"

namespace nakalab {

std::vector<std::vector<int>> positive_roots(const Quiver& q) {
  if (!dynkin_type(q)) throw PreconditionError("positive roots need a Dynkin graph");
  const int n = q.num_vertices();
  std::vector<std::vector<int>> adj(n);
  for (const Arrow& a : q.arrows()) {
    adj[a.src].push_back(a.tgt);
    adj[a.tgt].push_back(a.src);
  }

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> work;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    work.push_back(e);
  }
  while (!work.empty()) {
    std::vector<int> v = work.back();
    work.pop_back();
    for (int i = 0; i < n; ++i) {
      std::vector<int> r = v;
      r[i] = -v[i];
      for (int j : adj[i]) r[i] += v[j];
      if (seen.insert(r).second) {
        if (seen.size() > 2000) throw std::logic_error("root closure diverges");
        work.push_back(r);
      }
    }
  }

  std::vector<std::vector<int>> pos;
  for (const std::vector<int>& v : seen) {
    bool ok = true;
    for (int x : v)
      if (x < 0) ok = false;
    if (ok) pos.push_back(v);
  }
  std::sort(pos.begin(), pos.end());
  return pos;
}

namespace {

AlgebraPtr reversed_at(const BoundQuiverAlgebra& alg, int k) {
  const Quiver& q = alg.quiver();
  std::vector<Arrow> arrows;
  for (const Arrow& a : q.arrows()) {
    if (a.src == k || a.tgt == k)
      arrows.push_back({a.name, a.tgt, a.src});
    else
      arrows.push_back(a);
  }
  return std::make_shared<const BoundQuiverAlgebra>(Quiver(q.vertex_ids(), arrows),
                                                    std::vector<Relation>{}, alg.prime());
}

}  // namespace

Representation reflect_at_source(const Representation& m, int k) {
  const Quiver& q = m.algebra().quiver();
  const unsigned p = m.prime();
  if (!m.algebra().relations().empty())
    throw PreconditionError("reflection functors need a hereditary algebra");
  if (q.in_degree(k) != 0) throw PreconditionError("reflection vertex is not a source");

  const std::vector<int>& outs = q.arrows_out(k);
  std::vector<Mat> blocks;
  std::vector<int> offset = {0};
  for (int a : outs) {
    blocks.push_back(m.mat(a));
    offset.push_back(offset.back() + m.dim(q.arrow(a).tgt));
  }
  const int total = offset.back();
  Mat b = hstack(blocks, m.dim(k), p);

  // Quotient of the row space F^total by rowspace(b): reduce against the
  // RREF and keep the free coordinates.
  Mat r = row_basis(b);
  std::vector<int> piv;
  {
    Mat tmp = b;
    piv = rref_in_place(tmp);
  }
  std::vector<char> is_piv(total, 0);
  for (int c : piv) is_piv[c] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < total; ++c)
    if (!is_piv[c]) free_cols.push_back(c);
  Mat proj(total, static_cast<int>(free_cols.size()), p);
  for (int i = 0; i < total; ++i) {
    Mat x(1, total, p);
    x.set(0, i, 1);
    for (int rr = 0; rr < r.rows(); ++rr) {
      unsigned f = x.at(0, piv[rr]);
      if (f) x = x - r.row(rr).scaled(f);
    }
    for (size_t j = 0; j < free_cols.size(); ++j) proj.set(i, static_cast<int>(j), x.at(0, free_cols[j]));
  }

  AlgebraPtr next = reversed_at(m.algebra(), k);
  const Quiver& nq = next->quiver();
  std::vector<int> dims = m.dims();
  dims[k] = static_cast<int>(free_cols.size());
  std::vector<Mat> mats;
  for (int a = 0; a < nq.num_arrows(); ++a) {
    const Arrow& na = nq.arrow(a);
    auto pos = std::find(outs.begin(), outs.end(), a);
    if (pos == outs.end()) {
      mats.push_back(m.mat(a));
      continue;
    }
    // Reversed arrow tgt -> k: include the block, then project.
    int bi = static_cast<int>(pos - outs.begin());
    Mat inc(m.dim(na.src), total, p);
    for (int i = 0; i < m.dim(na.src); ++i) inc.set(i, offset[bi] + i, 1);
    mats.push_back(inc * proj);
  }
  return Representation(next, std::move(dims), std::move(mats));
}

Representation reflect_at_sink(const Representation& m, int k) {
  const Quiver& q = m.algebra().quiver();
  const unsigned p = m.prime();
  if (!m.algebra().relations().empty())
    throw PreconditionError("reflection functors need a hereditary algebra");
  if (q.out_degree(k) != 0) throw PreconditionError("reflection vertex is not a sink");

  const std::vector<int>& ins = q.arrows_in(k);
  std::vector<Mat> blocks;
  std::vector<int> offset = {0};
  for (int a : ins) {
    blocks.push_back(m.mat(a));
    offset.push_back(offset.back() + m.dim(q.arrow(a).src));
  }
  Mat s = vstack(blocks, m.dim(k), p);
  Mat kern = left_kernel(s);

  AlgebraPtr next = reversed_at(m.algebra(), k);
  const Quiver& nq = next->quiver();
  std::vector<int> dims = m.dims();
  dims[k] = kern.rows();
  std::vector<Mat> mats;
  for (int a = 0; a < nq.num_arrows(); ++a) {
    auto pos = std::find(ins.begin(), ins.end(), a);
    if (pos == ins.end()) {
      mats.push_back(m.mat(a));
      continue;
    }
    int bi = static_cast<int>(pos - ins.begin());
    Mat block(kern.rows(), m.dim(nq.arrow(a).tgt), p);
    for (int i = 0; i < kern.rows(); ++i)
      for (int j = 0; j < block.cols(); ++j) block.set(i, j, kern.at(i, offset[bi] + j));
    mats.push_back(std::move(block));
  }
  return Representation(next, std::move(dims), std::move(mats));
}

namespace {

std::vector<int> topological_order(const Quiver& q) {
  const int n = q.num_vertices();
  std::vector<int> indeg(n), order;
  for (int v = 0; v < n; ++v) indeg[v] = q.in_degree(v);
  std::vector<int> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    int v = ready.front();
    ready.erase(ready.begin());
    order.push_back(v);
    for (int a : q.arrows_out(v))
      if (--indeg[q.arrow(a).tgt] == 0) ready.push_back(q.arrow(a).tgt);
  }
  if (static_cast<int>(order.size()) != n)
    throw PreconditionError("quiver has an oriented cycle");
  return order;
}

}  // namespace

Representation inverse_translate(const Representation& m) {
  const Quiver original = m.algebra().quiver();
  std::vector<int> order = topological_order(original);
  Representation cur = m;
  for (int k : order) cur = reflect_at_source(cur, k);
  if (!(cur.algebra().quiver() == original))
    throw std::logic_error("reflection sweep did not restore the orientation");
  // Rebind to the caller's algebra object.
  std::vector<Mat> mats;
  for (int a = 0; a < original.num_arrows(); ++a) mats.push_back(cur.mat(a));
  return Representation(m.algebra_ptr(), cur.dims(), std::move(mats));
}

std::vector<Representation> hereditary_indecomposables(AlgebraPtr alg) {
  if (!alg->relations().empty())
    throw PreconditionError("hereditary enumeration on a non-hereditary algebra");
  std::optional<DynkinType> t = dynkin_type(alg->quiver());
  if (!t)
    throw RepresentationInfiniteError(
        "hereditary algebra of non-Dynkin type has infinitely many indecomposables",
        "non-Dynkin underlying graph");

  const size_t expected = positive_roots(alg->quiver()).size();
  std::set<std::vector<int>> seen;
  std::vector<Representation> out;
  for (int v = 0; v < alg->quiver().num_vertices(); ++v) {
    Representation m = projective_module(alg, v);
    size_t steps = 0;
    while (m.total_dim() > 0) {
      if (seen.insert(m.dims()).second) out.push_back(m);
      if (++steps > expected + 1) throw std::logic_error("translate orbit does not terminate");
      m = inverse_translate(m);
    }
  }
  std::sort(out.begin(), out.end(), [](const Representation& a, const Representation& b) {
    if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
    return a.dims() < b.dims();
  });
  return out;
}

PredictedIndex predicted_nakayama_index(const BoundQuiverAlgebra& alg) {
  std::optional<DynkinType> t = dynkin_type(alg.quiver());
  if (!alg.relations().empty() || !t)
    throw PreconditionError("index prediction needs a hereditary Dynkin algebra");
  const Quiver& q = alg.quiver();
  const int n = t->rank;
  if (t->family == 'D') return {2 * n - 3, 2 * n - 3};
  if (t->family == 'E') {
    int v = n == 6 ? 11 : n == 7 ? 17 : 29;
    return {v, v};
  }
  bool out2 = false, in2 = false;
  for (int v = 0; v < q.num_vertices(); ++v) {
    out2 |= q.out_degree(v) == 2;
    in2 |= q.in_degree(v) == 2;
  }
  PredictedIndex r;
  r.right = in2 ? n : out2 ? n - 1 : 1;
  r.left = out2 ? n : in2 ? n - 1 : 1;
  return r;
}

AlgebraPtr dynkin_orientation(DynkinType t, unsigned mask, unsigned p) {
  const int n = t.rank;
  std::vector<std::pair<int, int>> edges;
  if (t.family == 'A') {
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  } else if (t.family == 'D') {
    for (int i = 1; i <= n - 3; ++i) edges.push_back({i, i + 1});
    edges.push_back({n - 2, n - 1});
    edges.push_back({n - 2, n});
  } else {
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
    edges.pop_back();
    edges.push_back({3, n});
  }
  std::vector<int> ids;
  for (int i = 1; i <= n; ++i) ids.push_back(i);
  std::vector<Arrow> arrows;
  for (size_t e = 0; e < edges.size(); ++e) {
    int s = edges[e].first - 1, tt = edges[e].second - 1;
    if (mask >> e & 1) std::swap(s, tt);
    arrows.push_back({"a" + std::to_string(e + 1), s, tt});
  }
  return std::make_shared<const BoundQuiverAlgebra>(Quiver(ids, arrows),
                                                    std::vector<Relation>{}, p);
}

std::vector<AlgebraPtr> dynkin_orientations(DynkinType t, unsigned p) {
  std::vector<AlgebraPtr> out;
  for (unsigned mask = 0; mask < (1u << (t.rank - 1)); ++mask)
    out.push_back(dynkin_orientation(t, mask, p));
  return out;
}

}  // namespace nakalab
