#include "nakalab/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "nakalab/classify.hpp"

namespace nakalab {

namespace {

bool same_matrix(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != b.at(i, j)) return false;
  return true;
}

bool same_representation(const Representation& a, const Representation& b) {
  if (a.dims() != b.dims()) return false;
  for (int i = 0; i < static_cast<int>(a.algebra().quiver().arrows().size()); ++i)
    if (!same_matrix(a.mat(i), b.mat(i))) return false;
  return true;
}

// All lines through the origin of the row space of `basis`, as ambient rows
// normalized so the first nonzero coefficient is 1.
std::vector<Mat> lines_of(const Mat& basis, unsigned p) {
  std::vector<Mat> lines;
  int d = basis.rows();
  if (d == 0) return lines;
  std::vector<unsigned> coeff(d, 0);
  while (true) {
    int lead = -1;
    for (int i = 0; i < d; ++i)
      if (coeff[i] != 0) { lead = i; break; }
    if (lead >= 0 && coeff[lead] == 1) {
      Mat row(1, basis.cols(), p);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < basis.cols(); ++j)
          row.set(0, j, row.at(0, j) + coeff[i] * basis.at(i, j));
      lines.push_back(row);
    }
    int pos = d - 1;
    while (pos >= 0 && coeff[pos] == p - 1) coeff[pos--] = 0;
    if (pos < 0) break;
    ++coeff[pos];
  }
  return lines;
}

}  // namespace

int factor_index_by_definition(const Representation& m) {
  if (module_length(m) == 0) throw std::invalid_argument("zero module has no factor index");
  if (is_uniserial(m)) return 1;
  auto series = radical_series(m);
  int best = 0;
  for (int k = 0; k < static_cast<int>(series.size()); ++k) {
    if (is_uniserial(quotient_by(m, series[k]))) best = k;
  }
  return module_length(m) - best;
}

int factor_index_by_submodules(const Representation& m,
                               const std::vector<SubspaceFamily>& submodules) {
  if (module_length(m) == 0) throw std::invalid_argument("zero module has no factor index");
  int best = 1;
  for (const auto& fam : submodules) {
    if (fam.total_dim() == 0) continue;
    Representation sub = sub_representation(m, fam);
    if (!is_local(sub)) best = std::max(best, module_length(sub));
  }
  return best;
}

bool check_socle_recursion(const Representation& m, int claimed_index, std::string* witness) {
  if (is_uniserial(m)) {
    if (claimed_index == 1) return true;
    if (witness) *witness = "uniserial module with claimed index != 1";
    return false;
  }
  auto soc = socle_series(m).front();
  unsigned p = m.prime();
  int nv = static_cast<int>(m.algebra().quiver().vertex_ids().size());
  int best = 0;
  for (int v = 0; v < nv; ++v) {
    for (const Mat& line : lines_of(soc.basis[v], p)) {
      SubspaceFamily fam = zero_family(m);
      fam.basis[v] = line;
      int q = factor_serial_index(quotient_by(m, fam)).index;
      best = std::max(best, q);
    }
  }
  if (claimed_index == 1 + best) return true;
  if (witness) {
    std::ostringstream os;
    os << "claimed " << claimed_index << " but socle recursion gives " << 1 + best;
    *witness = os.str();
  }
  return false;
}

std::vector<InvariantResult> run_module_invariants(AlgebraPtr alg, long long budget) {
  std::vector<InvariantResult> results = {
      {"factor index routes agree"},
      {"cofactor index equals factor index of the dual"},
      {"dualizing twice restores the module"},
      {"socle recursion"},
      {"proper non-uniserial quotients shrink the index"},
      {"submodules of length >= index share the index"},
      {"shorter submodules have smaller index"},
      {"index within length and Loewy bounds"},
      {"index equals length exactly for non-local modules"},
      {"index 1 exactly for uniserial modules"},
      {"vanishing squared radical forces the extreme values"},
  };
  auto fail = [&](int i, const std::string& w) {
    if (results[i].ok) {
      results[i].ok = false;
      results[i].witness = w;
    }
  };

  auto side = classify_side(alg);
  for (const auto& rec : side.table) {
    const Representation& m = rec.module;
    int fast = rec.factor.index;
    int len = module_length(m);
    int ll = loewy_length(m);
    auto subs = enumerate_submodules(m, budget);

    ++results[0].checked;
    int by_def = factor_index_by_definition(m);
    int by_sub = factor_index_by_submodules(m, subs);
    if (by_def != fast || by_sub != fast) {
      std::ostringstream os;
      os << rec.name << ": layers " << fast << ", definition " << by_def << ", submodules "
         << by_sub;
      fail(0, os.str());
    }

    ++results[1].checked;
    Representation dm = dualize(m);
    if (cofactor_serial_index(m).index != factor_serial_index(dm).index)
      fail(1, rec.name);

    ++results[2].checked;
    if (!same_representation(dualize(dm, alg), m)) fail(2, rec.name);

    if (!is_uniserial(m)) {
      ++results[3].checked;
      std::string w;
      if (!check_socle_recursion(m, fast, &w)) fail(3, rec.name + ": " + w);
    }

    for (const auto& fam : subs) {
      if (fam.total_dim() == 0 || fam.total_dim() == module_length(m)) continue;
      Representation q = quotient_by(m, fam);
      Representation sub = sub_representation(m, fam);

      if (!is_uniserial(q)) {
        ++results[4].checked;
        if (factor_serial_index(q).index >= fast) fail(4, rec.name);
      }
      int sublen = module_length(sub);
      int subidx = factor_serial_index(sub).index;
      if (sublen >= fast) {
        ++results[5].checked;
        if (subidx != fast) fail(5, rec.name);
      } else {
        ++results[6].checked;
        if (subidx >= fast) fail(6, rec.name);
      }
    }

    ++results[7].checked;
    if (!(std::max(1, len - ll) <= fast && fast <= len && len <= fast + ll - 1))
      fail(7, rec.name);

    if (len >= 2) {
      ++results[8].checked;
      if ((fast == len) != !is_local(m)) fail(8, rec.name);
    }

    ++results[9].checked;
    if ((fast == 1) != is_uniserial(m)) fail(9, rec.name);

    if (len > 2 && ll <= 2) {
      ++results[10].checked;
      int expect = is_local(m) ? len - 1 : len;
      if (fast != expect) fail(10, rec.name);
    }
  }
  return results;
}

}  // namespace nakalab
