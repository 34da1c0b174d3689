#include "nakalab/classify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "nakalab/errors.hpp"
#include "nakalab/hereditary.hpp"

namespace nakalab {

namespace {

std::string dims_name(const Quiver& q, const std::vector<int>& dims) {
  std::ostringstream os;
  os << "M(";
  for (int v = 0; v < q.num_vertices(); ++v) os << (v ? "," : "") << dims[v];
  os << ")";
  return os.str();
}

}  // namespace

SideResult classify_side(AlgebraPtr alg) {
  ShapeReport shape = classify_shape(*alg);
  const bool hered_dynkin = shape.hereditary && shape.dynkin.has_value();

  std::vector<ModuleRecord> table;
  std::string backend;
  if (shape.string_algebra) {
    backend = hered_dynkin ? "both" : "string";
    std::vector<StringWord> words = enumerate_strings(*alg);
    for (const StringWord& w : words) {
      Representation m = string_module(alg, w);
      table.push_back({"M(" + string_to_text(*alg, w) + ")", m, factor_serial_index(m)});
    }
    if (hered_dynkin) {
      std::vector<Representation> mods = hereditary_indecomposables(alg);
      std::multiset<std::vector<int>> a, b;
      for (const ModuleRecord& r : table) a.insert(r.module.dims());
      for (const Representation& m : mods) b.insert(m.dims());
      if (a != b) throw std::logic_error("string and reflection backends disagree");
    }
  } else if (hered_dynkin) {
    backend = "hereditary";
    for (const Representation& m : hereditary_indecomposables(alg))
      table.push_back({dims_name(alg->quiver(), m.dims()), m, factor_serial_index(m)});
  } else if (shape.hereditary) {
    throw RepresentationInfiniteError(
        "hereditary algebra of non-Dynkin type has infinitely many indecomposables",
        "non-Dynkin underlying graph");
  } else {
    throw UnsupportedClassError(
        "algebra is neither a string algebra nor hereditary of Dynkin type");
  }

  SideResult r;
  r.backend = backend;
  for (const ModuleRecord& rec : table)
    if (rec.factor.index > r.index) {
      r.index = rec.factor.index;
      r.witness = rec.name;
      r.witness_dims = rec.module.dims();
    }
  r.table = std::move(table);
  return r;
}

NakayamaReport classify(AlgebraPtr alg) {
  SideResult right = classify_side(alg);
  SideResult left = classify_side(opposite_ptr(alg));

  NakayamaReport rep;
  rep.backend = right.backend;
  rep.connected = alg->quiver().is_connected();
  rep.representation_finite = true;
  rep.right_index = right.index;
  rep.left_index = left.index;
  rep.table = std::move(right.table);
  rep.right_witness = right.witness;
  rep.right_witness_dims = right.witness_dims;
  rep.left_witness = left.witness;
  rep.left_witness_dims = left.witness_dims;
  return rep;
}

std::string TwoNakayamaCheck::first_failure() const {
  for (const ConditionDiagnostic& c : conditions)
    if (!c.ok) return c.name + ": " + c.witness;
  return "";
}

TwoNakayamaCheck is_right_2_nakayama_syntactic(const BoundQuiverAlgebra& alg) {
  const Quiver& q = alg.quiver();
  TwoNakayamaCheck out;
  out.conditions.resize(4);

  ConditionDiagnostic& c1 = out.conditions[0];
  c1.name = "arrow degrees (out <= 2, in <= 1)";
  c1.ok = true;
  for (int v = 0; v < q.num_vertices() && c1.ok; ++v) {
    if (q.out_degree(v) > 2) {
      c1.ok = false;
      c1.witness = "vertex " + std::to_string(q.vertex_id(v)) + " has out-degree " +
                   std::to_string(q.out_degree(v));
    } else if (q.in_degree(v) > 1) {
      c1.ok = false;
      c1.witness = "vertex " + std::to_string(q.vertex_id(v)) + " has in-degree " +
                   std::to_string(q.in_degree(v));
    }
  }

  ConditionDiagnostic& c2 = out.conditions[1];
  c2.name = "unique nonzero continuation per arrow";
  c2.ok = true;
  for (int a = 0; a < q.num_arrows() && c2.ok; ++a) {
    std::vector<std::string> cont;
    for (int b : q.arrows_out(q.arrow(a).tgt))
      if (!alg.path_in_ideal({a, b})) cont.push_back(q.arrow(b).name);
    if (cont.size() > 1) {
      c2.ok = false;
      c2.witness = "arrow " + q.arrow(a).name + " continues by " + cont[0] + " and " + cont[1];
    }
  }

  ConditionDiagnostic& c3 = out.conditions[2];
  c3.name = "some vertex with two arrows out";
  c3.ok = false;
  for (int v = 0; v < q.num_vertices(); ++v)
    if (q.out_degree(v) == 2) {
      c3.ok = true;
      c3.witness = "vertex " + std::to_string(q.vertex_id(v));
      break;
    }
  if (!c3.ok) c3.witness = "no vertex has out-degree 2";

  ConditionDiagnostic& c4 = out.conditions[3];
  c4.name = "branch paths have length sum 2";
  c4.ok = true;
  std::vector<std::vector<const Path*>> from(q.num_vertices());
  for (const Path& p : alg.path_basis())
    if (p.length() > 0) from[p.start].push_back(&p);
  for (int v = 0; v < q.num_vertices() && c4.ok; ++v) {
    for (size_t i = 0; i < from[v].size() && c4.ok; ++i)
      for (size_t j = i + 1; j < from[v].size() && c4.ok; ++j) {
        const Path& a = *from[v][i];
        const Path& b = *from[v][j];
        const Path& shorter = a.length() <= b.length() ? a : b;
        const Path& longer = a.length() <= b.length() ? b : a;
        if (std::equal(shorter.arrows.begin(), shorter.arrows.end(), longer.arrows.begin()))
          continue;  // one extends the other
        if (a.length() + b.length() != 2) {
          c4.ok = false;
          c4.witness = "paths " + path_to_string(q, a) + " and " + path_to_string(q, b) +
                       " from vertex " + std::to_string(q.vertex_id(v));
        }
      }
  }

  out.ok = c1.ok && c2.ok && c3.ok && c4.ok;
  return out;
}

bool admits_serial_quotients(const BoundQuiverAlgebra& alg) {
  TwoNakayamaCheck c = is_right_2_nakayama_syntactic(alg);
  return c.conditions[0].ok && c.conditions[1].ok && c.conditions[3].ok;
}

std::vector<SerialModule> serial_quotient_list(AlgebraPtr alg) {
  if (!admits_serial_quotients(*alg))
    throw PreconditionError("projectives are not serial quotients here: " +
                            is_right_2_nakayama_syntactic(*alg).first_failure());
  const Quiver& q = alg->quiver();
  std::vector<SerialModule> out;
  for (int v = 0; v < q.num_vertices(); ++v) {
    Representation p = projective_module(alg, v);
    std::vector<SubspaceFamily> rad = radical_series(p);
    const int ll = static_cast<int>(rad.size()) - 1;
    const std::string pname = "P(" + std::to_string(q.vertex_id(v)) + ")";
    if (is_uniserial(p)) {
      for (int t = 1; t <= ll; ++t) {
        SerialModule rec{quotient_by(p, rad[t]),
                         v,
                         t == ll ? SerialKind::projective : SerialKind::radical_quotient,
                         t,
                         -1,
                         "",
                         rad[t]};
        if (t == ll)
          rec.name = pname;
        else if (t == 1)
          rec.name = pname + "/rad";
        else
          rec.name = pname + "/rad^" + std::to_string(t);
        out.push_back(std::move(rec));
      }
    } else {
      // Branching projective: rad = soc = two simple lines.
      if (ll != 2 || rad[1].total_dim() != 2)
        throw std::logic_error("unexpected projective shape at " + pname);
      std::vector<std::pair<int, SubspaceFamily>> lines;
      for (int w = 0; w < q.num_vertices(); ++w) {
        if (rad[1].basis[w].rows() == 0) continue;
        if (rad[1].basis[w].rows() != 1)
          throw std::logic_error("unexpected radical shape at " + pname);
        SubspaceFamily line;
        for (int u = 0; u < q.num_vertices(); ++u)
          line.basis.push_back(u == w ? rad[1].basis[w] : Mat(0, p.dim(u), p.prime()));
        if (!is_subrepresentation(p, line))
          throw std::logic_error("radical line is not a submodule at " + pname);
        lines.push_back({w, line});
      }
      if (lines.size() != 2) throw std::logic_error("unexpected socle count at " + pname);

      out.push_back({p, v, SerialKind::projective, ll, -1, pname, zero_family(p)});
      for (auto& [w, line] : lines)
        out.push_back({quotient_by(p, line), v, SerialKind::socle_quotient, 0, w,
                       pname + "/S(" + std::to_string(q.vertex_id(w)) + ")", line});
      out.push_back({quotient_by(p, rad[1]), v, SerialKind::top_quotient, 1, -1,
                     pname + "/rad", rad[1]});
    }
  }
  return out;
}

std::vector<SerialModule> two_nakayama_indecomposables(AlgebraPtr alg) {
  TwoNakayamaCheck c = is_right_2_nakayama_syntactic(*alg);
  if (!c.ok)
    throw PreconditionError("not a right 2-Nakayama algebra; " + c.first_failure());
  return serial_quotient_list(alg);
}

}  // namespace nakalab
