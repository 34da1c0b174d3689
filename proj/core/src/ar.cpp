#include "nakalab/ar.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "nakalab/errors.hpp"

namespace nakalab {

namespace {

Intertwiner into_sum_left(const Intertwiner& f1, const Intertwiner& f2) {
  Intertwiner f;
  for (size_t v = 0; v < f1.size(); ++v)
    f.push_back(hstack({f1[v], f2[v]}, f1[v].rows(), f1[v].prime()));
  return f;
}

Intertwiner from_sum_right(const Intertwiner& g1, const Intertwiner& g2) {
  Intertwiner g;
  for (size_t v = 0; v < g1.size(); ++v)
    g.push_back(vstack({g1[v], g2[v]}, g1[v].cols(), g1[v].prime()));
  return g;
}

Intertwiner negate(const Intertwiner& f, unsigned p) {
  Intertwiner r;
  for (const Mat& m : f) r.push_back(m.scaled(p - 1));
  return r;
}

const SerialModule* match_in_list(const std::vector<SerialModule>& list,
                                  const Representation& m) {
  for (const SerialModule& rec : list)
    if (is_isomorphic(rec.module, m)) return &rec;
  return nullptr;
}

}  // namespace

ARSequence almost_split_sequence(AlgebraPtr alg, const Representation& m) {
  std::vector<SerialModule> list = serial_quotient_list(alg);
  const SerialModule* rec = match_in_list(list, m);
  if (!rec) throw PreconditionError("module is not an indecomposable over this algebra");
  if (rec->kind == SerialKind::projective)
    throw PreconditionError("no almost split sequence ends in a projective");

  const unsigned p = alg->prime();
  const int v = rec->vertex;
  Representation proj = projective_module(alg, v);

  if (rec->kind == SerialKind::radical_quotient) {
    // 0 -> rad P/rad^{t+1} -> rad P/rad^t + P/rad^{t+1} -> P/rad^t -> 0
    std::vector<SubspaceFamily> rad = radical_series(proj);
    const int t = rec->radical_power;
    SubquotientRep a = make_subquotient(proj, rad[1], rad[t + 1]);
    SubquotientRep x = make_subquotient(proj, rad[1], rad[t]);
    SubquotientRep y = make_subquotient(proj, full_family(proj), rad[t + 1]);
    SubquotientRep r = make_subquotient(proj, full_family(proj), rad[t]);

    Intertwiner q = subquotient_map(proj, a, x);
    Intertwiner i = subquotient_map(proj, a, y);
    Intertwiner j = subquotient_map(proj, x, r);
    Intertwiner pr = subquotient_map(proj, y, r);

    ARSequence seq{a.rep, {}, a.rep, r.rep, {}, {}, ""};
    std::ostringstream ds;
    if (x.rep.total_dim() > 0) {
      seq.middle_summands = {x.rep, y.rep};
      seq.middle = direct_sum(x.rep, y.rep);
      seq.f = into_sum_left(q, i);
      seq.g = from_sum_right(negate(j, p), pr);
      ds << "0 -> rad " << rec->name << "+1 -> mixed middle -> " << rec->name << " -> 0";
    } else {
      seq.middle_summands = {y.rep};
      seq.middle = y.rep;
      seq.f = i;
      seq.g = pr;
      ds << "0 -> rad -> P/rad^" << t + 1 << " -> " << rec->name << " -> 0";
    }
    seq.description = ds.str();
    return seq;
  }

  if (rec->kind == SerialKind::socle_quotient) {
    // 0 -> S -> P -> P/S -> 0
    SubquotientRep s = make_subquotient(proj, rec->kernel, zero_family(proj));
    SubquotientRep pa = make_subquotient(proj, full_family(proj), zero_family(proj));
    SubquotientRep r = make_subquotient(proj, full_family(proj), rec->kernel);
    ARSequence seq{s.rep,
                   {pa.rep},
                   pa.rep,
                   r.rep,
                   subquotient_map(proj, s, pa),
                   subquotient_map(proj, pa, r),
                   "0 -> socle line -> P -> " + rec->name + " -> 0"};
    return seq;
  }

  // Top of a branching projective:
  // 0 -> P -> P/S1 + P/S2 -> P/rad -> 0.
  std::vector<const SerialModule*> socle_quots;
  for (const SerialModule& other : list)
    if (other.vertex == v && other.kind == SerialKind::socle_quotient)
      socle_quots.push_back(&other);
  if (socle_quots.size() != 2) throw std::logic_error("branching projective without two socle lines");

  SubquotientRep pa = make_subquotient(proj, full_family(proj), zero_family(proj));
  SubquotientRep x = make_subquotient(proj, full_family(proj), socle_quots[0]->kernel);
  SubquotientRep y = make_subquotient(proj, full_family(proj), socle_quots[1]->kernel);
  SubquotientRep r = make_subquotient(proj, full_family(proj), rec->kernel);

  Intertwiner q1 = subquotient_map(proj, pa, x);
  Intertwiner q2 = subquotient_map(proj, pa, y);
  Intertwiner r1 = subquotient_map(proj, x, r);
  Intertwiner r2 = subquotient_map(proj, y, r);

  ARSequence seq{pa.rep,
                 {x.rep, y.rep},
                 direct_sum(x.rep, y.rep),
                 r.rep,
                 into_sum_left(q1, q2),
                 from_sum_right(negate(r1, p), r2),
                 "0 -> P -> " + socle_quots[0]->name + " + " + socle_quots[1]->name + " -> " +
                     rec->name + " -> 0"};
  return seq;
}

namespace {

// Flatten an intertwiner into a single row vector for span arithmetic.
Mat flatten(const Intertwiner& f, unsigned p) {
  std::vector<Mat> parts;
  int cols = 0;
  for (const Mat& m : f) {
    parts.push_back(m.flattened());
    cols += m.rows() * m.cols();
  }
  return hstack(parts, 1, p);
}

}  // namespace

ARVerification verify_almost_split(AlgebraPtr alg, const ARSequence& seq) {
  ARVerification out;
  const unsigned p = alg->prime();
  auto check = [&](const std::string& name, bool ok) {
    out.checks.push_back({name, ok});
    if (!ok && out.ok) {
      out.ok = false;
      out.failure = name;
    }
  };

  const Quiver& q = alg->quiver();
  const int nv = q.num_vertices();

  Intertwiner fg = compose(seq.f, seq.g);
  bool zero = true;
  for (const Mat& m : fg) zero &= m.is_zero();
  check("composition g after f is zero", zero);

  bool inj = true, surj = true, dims = true;
  for (int v = 0; v < nv; ++v) {
    inj &= rank_of(seq.f[v]) == seq.left.dim(v);
    surj &= rank_of(seq.g[v]) == seq.right.dim(v);
    dims &= seq.left.dim(v) + seq.right.dim(v) == seq.middle.dim(v);
  }
  check("f injective", inj);
  check("g surjective", surj);
  check("fiber dimensions exact", dims);

  IndecomposabilityResult la = is_indecomposable(seq.left);
  IndecomposabilityResult ra = is_indecomposable(seq.right);
  check("left term indecomposable", la.indecomposable && la.proved);
  check("right term indecomposable", ra.indecomposable && ra.proved);

  // Non-split: no section s with s g = id.
  {
    std::vector<Intertwiner> homs = hom_basis(seq.right, seq.middle);
    std::vector<Mat> rows;
    for (const Intertwiner& h : homs) rows.push_back(flatten(compose(h, seq.g), p));
    Intertwiner id;
    for (int v = 0; v < nv; ++v) id.push_back(Mat::identity(seq.right.dim(v), p));
    Mat target = flatten(id, p);
    Mat sys = vstack(rows, target.cols(), p);
    Mat sol;
    check("sequence does not split", !solve_left(sys, target, sol));
  }

  // Right almost split: maps V -> right factoring through g are exactly
  // the span of Hom(V,middle) g; non-isos must land there, isos must not.
  std::vector<SerialModule> list = serial_quotient_list(alg);
  bool ras = true;
  std::string ras_witness;
  for (const SerialModule& rec : list) {
    const Representation& V = rec.module;
    std::vector<Intertwiner> through = hom_basis(V, seq.middle);
    std::vector<Mat> rows;
    for (const Intertwiner& h : through) rows.push_back(flatten(compose(h, seq.g), p));
    std::vector<Intertwiner> all = hom_basis(V, seq.right);
    int hom_cols = 0;
    for (int v = 0; v < nv; ++v) hom_cols += V.dim(v) * seq.right.dim(v);
    Mat image = row_basis(vstack(rows, hom_cols, p));

    if (!is_isomorphic(V, seq.right)) {
      bool covered = true;
      for (const Intertwiner& h : all)
        covered &= in_row_space(flatten(h, p), image);
      if (!covered) {
        ras = false;
        ras_witness = rec.name;
      }
      continue;
    }
    // V iso to the right term: enumerate Hom(V, right) over F_p.
    const size_t hd = all.size();
    std::vector<unsigned> c(hd, 0);
    while (true) {
      size_t i = 0;
      while (i < hd && c[i] == p - 1) c[i++] = 0;
      if (i == hd) break;
      ++c[i];
      Intertwiner h;
      for (int v = 0; v < nv; ++v) {
        Mat hv = all[0][v].scaled(c[0]);
        for (size_t k = 1; k < hd; ++k) hv = hv + all[k][v].scaled(c[k]);
        h.push_back(std::move(hv));
      }
      bool iso = intertwiner_invertible(V, seq.right, h);
      bool through_g = in_row_space(flatten(h, p), image);
      if (iso == through_g) {
        ras = false;
        ras_witness = rec.name + (iso ? " (iso factors)" : " (non-iso does not factor)");
        break;
      }
    }
  }
  check("g right almost split" + (ras_witness.empty() ? "" : " [" + ras_witness + "]"), ras);
  return out;
}

ARQuiverGraph build_ar_quiver(AlgebraPtr alg) {
  std::vector<SerialModule> list = serial_quotient_list(alg);
  ARQuiverGraph g;
  for (const SerialModule& rec : list)
    g.nodes.push_back(
        {rec.name, rec.module.dims(), rec.kind == SerialKind::projective});

  auto node_of = [&](const Representation& m) -> int {
    for (size_t i = 0; i < list.size(); ++i)
      if (is_isomorphic(list[i].module, m)) return static_cast<int>(i);
    throw std::logic_error("module missing from the indecomposable list");
  };

  std::set<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> taus;
  for (size_t i = 0; i < list.size(); ++i) {
    if (list[i].kind == SerialKind::projective) {
      // Radical inclusions: summands of rad P -> P.
      Representation proj = list[i].module;
      std::vector<SubspaceFamily> rad = radical_series(proj);
      if (rad[1].total_dim() == 0) continue;
      Representation radm = sub_representation(proj, rad[1]);
      if (is_indecomposable(radm).indecomposable) {
        edges.insert({node_of(radm), static_cast<int>(i)});
      } else {
        const Quiver& q = alg->quiver();
        for (int w = 0; w < q.num_vertices(); ++w)
          if (rad[1].basis[w].rows() > 0)
            edges.insert({node_of(simple_module(alg, w)), static_cast<int>(i)});
      }
      continue;
    }
    ARSequence seq = almost_split_sequence(alg, list[i].module);
    int a = node_of(seq.left);
    taus.push_back({static_cast<int>(i), a});
    for (const Representation& mid : seq.middle_summands) {
      int x = node_of(mid);
      edges.insert({a, x});
      edges.insert({x, static_cast<int>(i)});
    }
  }
  g.edges.assign(edges.begin(), edges.end());
  g.translates = std::move(taus);
  return g;
}

std::string ar_quiver_dot(const ARQuiverGraph& g, const Quiver& q) {
  std::ostringstream os;
  os << "digraph AR {\n";
  os << "  // dim vector positions: ";
  for (int v = 0; v < q.num_vertices(); ++v) os << (v ? "|" : "") << "d" << q.vertex_id(v);
  os << "\n  rankdir=LR;\n  node [shape=record];\n";
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    os << "  n" << i << " [label=\"";
    for (size_t v = 0; v < g.nodes[i].dims.size(); ++v)
      os << (v ? "|" : "") << g.nodes[i].dims[v];
    os << "\" tooltip=\"" << g.nodes[i].name << "\"";
    if (g.nodes[i].projective) os << " style=bold";
    os << "];\n";
  }
  for (auto [a, b] : g.edges) os << "  n" << a << " -> n" << b << ";\n";
  for (auto [m, t] : g.translates)
    os << "  n" << m << " -> n" << t << " [style=dashed constraint=false];\n";
  os << "}\n";
  return os.str();
}

}  // namespace nakalab
