#include "nakalab/representation.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "nakalab/errors.hpp"

namespace nakalab {

int SubspaceFamily::total_dim() const {
  int d = 0;
  for (const Mat& b : basis) d += b.rows();
  return d;
}

std::string SubspaceFamily::to_string() const {
  std::ostringstream os;
  for (size_t v = 0; v < basis.size(); ++v) os << (v ? ";" : "") << basis[v].to_string();
  return os.str();
}

Representation::Representation(AlgebraPtr alg, std::vector<int> dims, std::vector<Mat> mats)
    : alg_(std::move(alg)), dims_(std::move(dims)), mats_(std::move(mats)) {
  const Quiver& q = alg_->quiver();
  if (static_cast<int>(dims_.size()) != q.num_vertices())
    throw std::invalid_argument("fiber count mismatch");
  if (static_cast<int>(mats_.size()) != q.num_arrows())
    throw std::invalid_argument("arrow matrix count mismatch");
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (mats_[a].rows() != dims_[ar.src] || mats_[a].cols() != dims_[ar.tgt])
      throw std::invalid_argument("arrow matrix shape mismatch at " + ar.name);
    if (mats_[a].prime() != alg_->prime())
      throw std::invalid_argument("arrow matrix over wrong field");
  }
}

int Representation::total_dim() const {
  int d = 0;
  for (int v : dims_) d += v;
  return d;
}

Mat Representation::act(const Path& p) const {
  Mat m = Mat::identity(dims_[p.start], prime());
  for (int a : p.arrows) m = m * mats_[a];
  return m;
}

void Representation::validate() const {
  for (const Relation& r : alg_->relations()) {
    Path p{alg_->quiver().arrow(r.arrows.front()).src, r.arrows};
    if (!act(p).is_zero()) {
      std::ostringstream os;
      os << "module violates relation";
      for (int a : r.arrows) os << ' ' << alg_->quiver().arrow(a).name;
      throw ParseError(os.str());
    }
  }
}

Representation zero_representation(AlgebraPtr alg) {
  const Quiver& q = alg->quiver();
  std::vector<int> dims(q.num_vertices(), 0);
  std::vector<Mat> mats;
  for (int a = 0; a < q.num_arrows(); ++a) mats.emplace_back(0, 0, alg->prime());
  return Representation(std::move(alg), std::move(dims), std::move(mats));
}

Representation simple_module(AlgebraPtr alg, int vertex) {
  const Quiver& q = alg->quiver();
  std::vector<int> dims(q.num_vertices(), 0);
  dims[vertex] = 1;
  std::vector<Mat> mats;
  for (int a = 0; a < q.num_arrows(); ++a)
    mats.emplace_back(dims[q.arrow(a).src], dims[q.arrow(a).tgt], alg->prime());
  return Representation(std::move(alg), std::move(dims), std::move(mats));
}

Representation projective_module(AlgebraPtr alg, int vertex) {
  const Quiver& q = alg->quiver();
  const unsigned p = alg->prime();
  // Fiber at v: basis paths from `vertex` ending at v, in basis order.
  std::vector<std::vector<Path>> fiber(q.num_vertices());
  for (const Path& pa : alg->path_basis())
    if (pa.start == vertex) fiber[pa.end(q)].push_back(pa);
  auto find_in_fiber = [&](int v, const Path& target) -> int {
    for (size_t i = 0; i < fiber[v].size(); ++i)
      if (fiber[v][i].arrows == target.arrows) return static_cast<int>(i);
    return -1;
  };
  std::vector<int> dims(q.num_vertices());
  for (int v = 0; v < q.num_vertices(); ++v) dims[v] = static_cast<int>(fiber[v].size());
  std::vector<Mat> mats;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    Mat m(dims[ar.src], dims[ar.tgt], p);
    for (int i = 0; i < dims[ar.src]; ++i) {
      Path ext = fiber[ar.src][i];
      ext.arrows.push_back(a);
      int j = find_in_fiber(ar.tgt, ext);
      if (j >= 0) m.set(i, j, 1);
    }
    mats.push_back(std::move(m));
  }
  return Representation(std::move(alg), std::move(dims), std::move(mats));
}

Representation injective_module(AlgebraPtr alg, int vertex) {
  AlgebraPtr op = opposite_ptr(alg);
  Representation pop = projective_module(op, vertex);
  return dualize(pop, alg);
}

Representation dualize(const Representation& m, AlgebraPtr target) {
  AlgebraPtr op = target ? target : opposite_ptr(m.algebra_ptr());
  if (!(*op == opposite_algebra(m.algebra())))
    throw std::invalid_argument("dualize: target is not the opposite algebra");
  const Quiver& q = m.algebra().quiver();
  std::vector<Mat> mats;
  for (int a = 0; a < q.num_arrows(); ++a) mats.push_back(m.mat(a).transposed());
  return Representation(std::move(op), m.dims(), std::move(mats));
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (!(a.algebra() == b.algebra())) throw std::invalid_argument("direct_sum: algebras differ");
  const Quiver& q = a.algebra().quiver();
  const unsigned p = a.prime();
  std::vector<int> dims(q.num_vertices());
  for (int v = 0; v < q.num_vertices(); ++v) dims[v] = a.dim(v) + b.dim(v);
  std::vector<Mat> mats;
  for (int ar = 0; ar < q.num_arrows(); ++ar) {
    const Arrow& arw = q.arrow(ar);
    Mat m(dims[arw.src], dims[arw.tgt], p);
    for (int i = 0; i < a.dim(arw.src); ++i)
      for (int j = 0; j < a.dim(arw.tgt); ++j) m.set(i, j, a.mat(ar).at(i, j));
    for (int i = 0; i < b.dim(arw.src); ++i)
      for (int j = 0; j < b.dim(arw.tgt); ++j)
        m.set(a.dim(arw.src) + i, a.dim(arw.tgt) + j, b.mat(ar).at(i, j));
    mats.push_back(std::move(m));
  }
  return Representation(a.algebra_ptr(), std::move(dims), std::move(mats));
}

SubspaceFamily zero_family(const Representation& m) {
  SubspaceFamily f;
  for (int v = 0; v < m.algebra().quiver().num_vertices(); ++v)
    f.basis.emplace_back(0, m.dim(v), m.prime());
  return f;
}

SubspaceFamily full_family(const Representation& m) {
  SubspaceFamily f;
  for (int v = 0; v < m.algebra().quiver().num_vertices(); ++v)
    f.basis.push_back(Mat::identity(m.dim(v), m.prime()));
  return f;
}

bool family_contains(const SubspaceFamily& outer, const SubspaceFamily& inner) {
  for (size_t v = 0; v < outer.basis.size(); ++v)
    if (!space_contains(outer.basis[v], inner.basis[v])) return false;
  return true;
}

SubspaceFamily family_sum(const Representation& m, const SubspaceFamily& a,
                          const SubspaceFamily& b) {
  SubspaceFamily f;
  for (int v = 0; v < m.algebra().quiver().num_vertices(); ++v)
    f.basis.push_back(space_sum(a.basis[v], b.basis[v]));
  return f;
}

bool is_subrepresentation(const Representation& m, const SubspaceFamily& f) {
  const Quiver& q = m.algebra().quiver();
  for (int a = 0; a < q.num_arrows(); ++a) {
    Mat img = space_image(f.basis[q.arrow(a).src], m.mat(a));
    if (!space_contains(f.basis[q.arrow(a).tgt], img)) return false;
  }
  return true;
}

std::vector<SubspaceFamily> radical_series(const Representation& m) {
  const Quiver& q = m.algebra().quiver();
  std::vector<SubspaceFamily> series = {full_family(m)};
  while (series.back().total_dim() > 0) {
    const SubspaceFamily& cur = series.back();
    SubspaceFamily next;
    for (int v = 0; v < q.num_vertices(); ++v) {
      std::vector<Mat> imgs;
      for (int a : q.arrows_in(v)) imgs.push_back(cur.basis[q.arrow(a).src] * m.mat(a));
      next.basis.push_back(row_basis(vstack(imgs, m.dim(v), m.prime())));
    }
    if (next.total_dim() >= cur.total_dim())
      throw std::logic_error("radical series does not descend");
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<SubspaceFamily> socle_series(const Representation& m) {
  const Quiver& q = m.algebra().quiver();
  std::vector<SubspaceFamily> series;
  SubspaceFamily cur;
  for (int v = 0; v < q.num_vertices(); ++v) {
    Mat k = Mat::identity(m.dim(v), m.prime());
    for (int a : q.arrows_out(v)) k = space_intersect(k, left_kernel(m.mat(a)));
    cur.basis.push_back(std::move(k));
  }
  series.push_back(cur);
  while (series.back().total_dim() < m.total_dim()) {
    const SubspaceFamily& prev = series.back();
    SubspaceFamily next;
    for (int v = 0; v < q.num_vertices(); ++v) {
      Mat k = Mat::identity(m.dim(v), m.prime());
      for (int a : q.arrows_out(v))
        k = space_intersect(k, space_preimage(m.mat(a), prev.basis[q.arrow(a).tgt]));
      next.basis.push_back(std::move(k));
    }
    if (next.total_dim() <= prev.total_dim())
      throw std::logic_error("socle series stalls; module does not respect the relations");
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<int> radical_layer_dims(const Representation& m) {
  std::vector<SubspaceFamily> s = radical_series(m);
  std::vector<int> layers;
  for (size_t i = 0; i + 1 < s.size(); ++i)
    layers.push_back(s[i].total_dim() - s[i + 1].total_dim());
  return layers;
}

std::vector<int> socle_layer_dims(const Representation& m) {
  std::vector<SubspaceFamily> s = socle_series(m);
  std::vector<int> layers;
  int prev = 0;
  for (const SubspaceFamily& f : s) {
    layers.push_back(f.total_dim() - prev);
    prev = f.total_dim();
  }
  if (m.total_dim() == 0) layers.clear();
  return layers;
}

int module_length(const Representation& m) { return m.total_dim(); }

int loewy_length(const Representation& m) {
  return static_cast<int>(radical_series(m).size()) - 1;
}

bool is_local(const Representation& m) {
  if (m.total_dim() == 0) return false;
  std::vector<int> layers = radical_layer_dims(m);
  return layers[0] == 1;
}

bool is_uniserial(const Representation& m) {
  for (int d : radical_layer_dims(m))
    if (d > 1) return false;
  return true;
}

namespace {

SerialIndexReport base_report(const Representation& m, Side side) {
  SerialIndexReport r;
  r.side = side;
  r.length = module_length(m);
  r.radical_layers = radical_layer_dims(m);
  r.socle_layers = socle_layer_dims(m);
  r.loewy_length = static_cast<int>(r.radical_layers.size());
  return r;
}

}  // namespace

SerialIndexReport factor_serial_index(const Representation& m) {
  if (m.total_dim() == 0) throw std::invalid_argument("zero module has no serial index");
  SerialIndexReport r = base_report(m, Side::factor);
  // index = length - i for the first radical power that is not local;
  // with strictly descending layers that is the first layer of dim >= 2.
  for (size_t i = 0; i < r.radical_layers.size(); ++i)
    if (r.radical_layers[i] > 1) {
      r.witness = static_cast<int>(i);
      r.index = r.length - static_cast<int>(i);
      return r;
    }
  r.index = 1;  // uniserial
  return r;
}

SerialIndexReport cofactor_serial_index(const Representation& m) {
  if (m.total_dim() == 0) throw std::invalid_argument("zero module has no serial index");
  SerialIndexReport r = base_report(m, Side::cofactor);
  // soc^j is uniserial exactly when the first j socle layers have dim 1,
  // so index = length - j for the largest uniserial socle.
  for (size_t i = 0; i < r.socle_layers.size(); ++i)
    if (r.socle_layers[i] > 1) {
      r.witness = static_cast<int>(i);
      r.index = r.length - static_cast<int>(i);
      return r;
    }
  r.index = 1;
  return r;
}

Representation sub_representation(const Representation& m, const SubspaceFamily& f) {
  const Quiver& q = m.algebra().quiver();
  std::vector<int> dims;
  for (const Mat& b : f.basis) dims.push_back(b.rows());
  std::vector<Mat> mats;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    Mat s(dims[ar.src], dims[ar.tgt], m.prime());
    for (int i = 0; i < dims[ar.src]; ++i) {
      Mat img = f.basis[ar.src].row(i) * m.mat(a);
      Mat x;
      if (!solve_left(f.basis[ar.tgt], img, x))
        throw std::invalid_argument("family is not closed under the arrow action");
      s.set_row(i, x);
    }
    mats.push_back(std::move(s));
  }
  return Representation(m.algebra_ptr(), std::move(dims), std::move(mats));
}

Representation quotient_by(const Representation& m, const SubspaceFamily& f) {
  SubquotientRep sq = make_subquotient(m, full_family(m), f);
  return sq.rep;
}

std::vector<Intertwiner> hom_basis(const Representation& m, const Representation& n) {
  const Quiver& q = m.algebra().quiver();
  const unsigned p = m.prime();
  if (!(m.algebra() == n.algebra())) throw std::invalid_argument("hom_basis: algebras differ");

  std::vector<int> offset(q.num_vertices() + 1, 0);
  for (int v = 0; v < q.num_vertices(); ++v)
    offset[v + 1] = offset[v] + m.dim(v) * n.dim(v);
  const int nvars = offset.back();

  int neqs = 0;
  for (int a = 0; a < q.num_arrows(); ++a)
    neqs += m.dim(q.arrow(a).src) * n.dim(q.arrow(a).tgt);

  // Unknowns x (flattened F_v); one column per equation F_s N_a = M_a F_t.
  Mat sys(nvars, neqs, p);
  int col = 0;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    for (int i = 0; i < m.dim(ar.src); ++i)
      for (int j = 0; j < n.dim(ar.tgt); ++j, ++col) {
        for (int k = 0; k < n.dim(ar.src); ++k) {
          int var = offset[ar.src] + i * n.dim(ar.src) + k;
          sys.set(var, col, sys.at(var, col) + n.mat(a).at(k, j));
        }
        for (int k = 0; k < m.dim(ar.tgt); ++k) {
          int var = offset[ar.tgt] + k * n.dim(ar.tgt) + j;
          sys.set(var, col,
                  static_cast<long long>(sys.at(var, col)) - m.mat(a).at(i, k));
        }
      }
  }

  Mat kern = left_kernel(sys);
  std::vector<Intertwiner> basis;
  for (int r = 0; r < kern.rows(); ++r) {
    Intertwiner f;
    for (int v = 0; v < q.num_vertices(); ++v) {
      Mat fv(m.dim(v), n.dim(v), p);
      for (int i = 0; i < m.dim(v); ++i)
        for (int j = 0; j < n.dim(v); ++j)
          fv.set(i, j, kern.at(r, offset[v] + i * n.dim(v) + j));
      f.push_back(std::move(fv));
    }
    basis.push_back(std::move(f));
  }
  return basis;
}

Intertwiner compose(const Intertwiner& f, const Intertwiner& g) {
  Intertwiner h;
  for (size_t v = 0; v < f.size(); ++v) h.push_back(f[v] * g[v]);
  return h;
}

bool intertwiner_invertible(const Representation& m, const Representation& n,
                            const Intertwiner& f) {
  for (size_t v = 0; v < f.size(); ++v) {
    if (m.dim(static_cast<int>(v)) != n.dim(static_cast<int>(v))) return false;
    if (rank_of(f[v]) != m.dim(static_cast<int>(v))) return false;
  }
  return true;
}

namespace {

unsigned long long env_seed() {
  if (const char* s = std::getenv("NAKALAB_SEED")) return std::strtoull(s, nullptr, 10);
  return 0x6e616b61ull;  // fixed default
}

Intertwiner combine(const std::vector<Intertwiner>& basis, const std::vector<unsigned>& c) {
  Intertwiner f;
  for (size_t v = 0; v < basis[0].size(); ++v) {
    Mat fv = basis[0][v].scaled(c[0]);
    for (size_t k = 1; k < basis.size(); ++k) fv = fv + basis[k][v].scaled(c[k]);
    f.push_back(std::move(fv));
  }
  return f;
}

// Fitting: a non-invertible endomorphism with a non-nilpotent power
// splits M. Returns true when f witnesses decomposability.
bool splits(const Representation& m, const Intertwiner& f) {
  bool invertible = true;
  for (size_t v = 0; v < f.size(); ++v)
    if (rank_of(f[v]) != m.dim(static_cast<int>(v))) {
      invertible = false;
      break;
    }
  if (invertible) return false;
  int n = 0;
  for (int v = 0; v < static_cast<int>(f.size()); ++v) n = std::max(n, m.dim(v));
  for (const Mat& fv : f)
    if (!fv.pow(n).is_zero()) return true;
  return false;
}

}  // namespace

IndecomposabilityResult is_indecomposable(const Representation& m, long long budget) {
  if (m.total_dim() == 0) throw std::invalid_argument("zero module");
  if (m.total_dim() == 1) return {true, true, "simple"};
  std::vector<Intertwiner> basis = hom_basis(m, m);
  const size_t h = basis.size();
  const unsigned p = m.prime();
  if (h == 1) return {true, true, "endomorphism ring is the field"};

  double combos = 1;
  for (size_t i = 0; i < h && combos <= static_cast<double>(budget); ++i) combos *= p;
  if (combos <= static_cast<double>(budget)) {
    std::vector<unsigned> c(h, 0);
    while (true) {
      size_t i = 0;
      while (i < h && c[i] == p - 1) c[i++] = 0;
      if (i == h) break;
      ++c[i];
      if (splits(m, combine(basis, c)))
        return {false, true, "splitting endomorphism found"};
    }
    return {true, true, "all endomorphisms invertible or nilpotent"};
  }

  std::mt19937_64 rng(env_seed());
  std::uniform_int_distribution<unsigned> dist(0, p - 1);
  for (long long t = 0; t < budget; ++t) {
    std::vector<unsigned> c(h);
    bool nz = false;
    for (auto& x : c) {
      x = dist(rng);
      nz |= x != 0;
    }
    if (!nz) continue;
    if (splits(m, combine(basis, c)))
      return {false, true, "splitting endomorphism found"};
  }
  return {true, false, "no splitting endomorphism in random sample"};
}

bool is_isomorphic(const Representation& m, const Representation& n, long long budget) {
  if (m.dims() != n.dims()) return false;
  if (m.total_dim() == 0) return true;
  std::vector<Intertwiner> basis = hom_basis(m, n);
  if (basis.empty()) return false;
  const size_t h = basis.size();
  const unsigned p = m.prime();
  double combos = 1;
  for (size_t i = 0; i < h; ++i) {
    combos *= p;
    if (combos > static_cast<double>(budget))
      throw BudgetExceededError("isomorphism test exceeds enumeration budget");
  }
  std::vector<unsigned> c(h, 0);
  while (true) {
    size_t i = 0;
    while (i < h && c[i] == p - 1) c[i++] = 0;
    if (i == h) break;
    ++c[i];
    if (intertwiner_invertible(m, n, combine(basis, c))) return true;
  }
  return false;
}

namespace {

SubspaceFamily closure(const Representation& m, SubspaceFamily f) {
  const Quiver& q = m.algebra().quiver();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < q.num_arrows(); ++a) {
      const Arrow& ar = q.arrow(a);
      Mat img = space_image(f.basis[ar.src], m.mat(a));
      if (!space_contains(f.basis[ar.tgt], img)) {
        f.basis[ar.tgt] = space_sum(f.basis[ar.tgt], img);
        changed = true;
      }
    }
  }
  return f;
}

}  // namespace

std::vector<SubspaceFamily> enumerate_submodules(const Representation& m, long long budget) {
  const unsigned p = m.prime();
  double vol = 1;
  for (int i = 0; i < m.total_dim(); ++i) {
    vol *= p;
    if (vol > static_cast<double>(budget))
      throw BudgetExceededError("submodule enumeration exceeds budget p^dim");
  }

  std::map<std::string, SubspaceFamily> seen;
  auto add = [&](const SubspaceFamily& f) -> bool {
    return seen.emplace(f.to_string(), f).second;
  };
  add(zero_family(m));

  // Cyclic submodules of every fiber vector.
  const Quiver& q = m.algebra().quiver();
  std::vector<SubspaceFamily> gens;
  for (int v = 0; v < q.num_vertices(); ++v) {
    long long count = 1;
    for (int i = 0; i < m.dim(v); ++i) count *= p;
    for (long long code = 1; code < count; ++code) {
      Mat vec(1, m.dim(v), p);
      long long c = code;
      for (int i = 0; i < m.dim(v); ++i) {
        vec.set(0, i, static_cast<long long>(c % p));
        c /= p;
      }
      SubspaceFamily f = zero_family(m);
      f.basis[v] = row_basis(vec);
      f = closure(m, f);
      if (add(f)) gens.push_back(f);
    }
  }

  // Join closure: sums of subrepresentations are subrepresentations.
  constexpr size_t kMaxLattice = 1 << 17;
  std::vector<SubspaceFamily> work(gens);
  while (!work.empty()) {
    SubspaceFamily f = work.back();
    work.pop_back();
    std::vector<SubspaceFamily> snapshot;
    snapshot.reserve(seen.size());
    for (const auto& [k, g] : seen) snapshot.push_back(g);
    for (const SubspaceFamily& g : snapshot) {
      SubspaceFamily s = family_sum(m, f, g);
      if (add(s)) {
        if (seen.size() > kMaxLattice)
          throw BudgetExceededError("submodule lattice exceeds enumeration cap");
        work.push_back(s);
      }
    }
  }

  std::vector<SubspaceFamily> out;
  out.reserve(seen.size());
  for (const auto& [k, f] : seen) out.push_back(f);
  std::sort(out.begin(), out.end(), [](const SubspaceFamily& a, const SubspaceFamily& b) {
    if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
    return a.to_string() < b.to_string();
  });
  return out;
}

SubquotientRep make_subquotient(const Representation& ambient, const SubspaceFamily& upper,
                                const SubspaceFamily& lower) {
  const Quiver& q = ambient.algebra().quiver();
  const unsigned p = ambient.prime();
  if (!family_contains(upper, lower))
    throw std::invalid_argument("subquotient: lower not contained in upper");

  std::vector<Mat> repmats;
  std::vector<Mat> solver;  // [reps; lower] stacked per vertex
  for (int v = 0; v < q.num_vertices(); ++v) {
    std::vector<Mat> reps;
    Mat span = lower.basis[v];
    for (int i = 0; i < upper.basis[v].rows(); ++i) {
      Mat r = upper.basis[v].row(i);
      if (!in_row_space(r, span)) {
        reps.push_back(r);
        span = space_sum(span, r);
      }
    }
    repmats.push_back(vstack(reps, ambient.dim(v), p));
    solver.push_back(vstack({repmats.back(), lower.basis[v]}, ambient.dim(v), p));
  }

  auto coords = [&](int v, const Mat& x) -> Mat {
    Mat c;
    if (!solve_left(solver[v], x, c))
      throw std::logic_error("subquotient: vector outside the upper family");
    Mat y(1, repmats[v].rows(), p);
    for (int j = 0; j < y.cols(); ++j) y.set(0, j, c.at(0, j));
    return y;
  };

  std::vector<int> dims;
  for (int v = 0; v < q.num_vertices(); ++v) dims.push_back(repmats[v].rows());
  std::vector<Mat> mats;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    Mat m(dims[ar.src], dims[ar.tgt], p);
    for (int i = 0; i < dims[ar.src]; ++i)
      m.set_row(i, coords(ar.tgt, repmats[ar.src].row(i) * ambient.mat(a)));
    mats.push_back(std::move(m));
  }
  return SubquotientRep{Representation(ambient.algebra_ptr(), std::move(dims), std::move(mats)),
                        std::move(repmats), upper, lower};
}

Intertwiner subquotient_map(const Representation& ambient, const SubquotientRep& from,
                            const SubquotientRep& to) {
  const Quiver& q = ambient.algebra().quiver();
  const unsigned p = ambient.prime();
  if (!family_contains(to.upper, from.upper) || !family_contains(to.lower, from.lower))
    throw std::invalid_argument("subquotient_map: families are not nested");
  Intertwiner f;
  for (int v = 0; v < q.num_vertices(); ++v) {
    Mat solver = vstack({to.reps[v], to.lower.basis[v]}, ambient.dim(v), p);
    Mat fv(from.reps[v].rows(), to.reps[v].rows(), p);
    for (int i = 0; i < from.reps[v].rows(); ++i) {
      Mat c;
      if (!solve_left(solver, from.reps[v].row(i), c))
        throw std::logic_error("subquotient_map: representative outside target");
      for (int j = 0; j < fv.cols(); ++j) fv.set(i, j, c.at(0, j));
    }
    f.push_back(std::move(fv));
  }
  return f;
}

}  // namespace nakalab
