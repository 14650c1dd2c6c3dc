#include "linkage/module.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <random>
#include <set>

#include "linkage/cache.hpp"
#include "linkage/linalg.hpp"

namespace linkage {

namespace {

std::atomic<bool> g_fault_skip_minimalize{false};

FreeVector column_to_vector(const Field& f, const ModuleOrder& ord, const std::vector<Poly>& col,
                            std::size_t offset = 0) {
  std::vector<VecTerm> terms;
  for (std::size_t i = 0; i < col.size(); ++i)
    for (const auto& t : col[i].terms()) terms.push_back({t.mon, static_cast<std::uint32_t>(offset + i), t.coef});
  return make_vector(f, ord, std::move(terms));
}

std::vector<Poly> reduce_column(const GradedRing& r, std::vector<Poly> col) {
  for (auto& p : col) p = r.reduce(p);
  return col;
}

using BasisKey = std::pair<std::uint32_t, std::array<std::uint8_t, kMaxVars>>;

/// k-basis of the degree-d part of F/U given by standard monomials.
struct DegreeBasis {
  std::vector<std::pair<Monomial, std::uint32_t>> elems;
  std::map<BasisKey, std::size_t> index;

  std::size_t size() const { return elems.size(); }
  std::vector<Scalar> coords(const FreeVector& v) const {
    std::vector<Scalar> out(elems.size());
    for (const auto& t : v.terms) {
      auto it = index.find({t.comp, t.mon.exp});
      if (it == index.end()) throw StructuralError("internal: vector leaves the standard basis");
      out[it->second] = t.coef;
    }
    return out;
  }
};

DegreeBasis standard_basis(const ModulePresentation& m, int d) {
  DegreeBasis b;
  const auto& gb = m.relation_gb();
  const int n = m.ring().num_vars();
  for (std::uint32_t c = 0; c < m.num_gens(); ++c) {
    int e = d - m.gen_twists()[c];
    if (e < 0) continue;
    auto lms = gb.leading_monomials(c);
    for (const auto& mon : monomials_of_degree(n, e)) {
      bool in_lt = false;
      for (const auto& lm : lms)
        if (lm.divides(mon)) {
          in_lt = true;
          break;
        }
      if (in_lt) continue;
      b.index[{c, mon.exp}] = b.elems.size();
      b.elems.push_back({mon, c});
    }
  }
  return b;
}

FreeVector times_term(const Field& f, const ModuleOrder& ord, const Poly& p, const Monomial& m, std::uint32_t comp) {
  std::vector<VecTerm> terms;
  for (const auto& t : p.terms()) terms.push_back({t.mon * m, comp, t.coef});
  return make_vector(f, ord, std::move(terms));
}

/// phi applied to an element of F_M given as a column (phi: rows = gens of N).
std::vector<Poly> apply_map(const GradedRing& r, const Matrix& phi, const std::vector<Poly>& col) {
  const Field& f = r.field();
  std::vector<Poly> out(phi.rows());
  for (std::size_t i = 0; i < col.size(); ++i) {
    if (col[i].is_zero()) continue;
    for (std::size_t l = 0; l < phi.rows(); ++l)
      if (!phi.at(l, i).is_zero()) out[l] = add(f, out[l], mul(f, phi.at(l, i), col[i]));
  }
  return reduce_column(r, std::move(out));
}

}  // namespace

void set_fault_skip_minimalize(bool on) { g_fault_skip_minimalize = on; }
bool fault_skip_minimalize() { return g_fault_skip_minimalize; }

// ---------------------------------------------------------------- Matrix

std::vector<Poly> Matrix::column(std::size_t j) const {
  std::vector<Poly> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<std::vector<Poly>>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw StructuralError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::constant(Scalar(1));
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& p : data_)
    if (!p.is_zero()) return false;
  return true;
}

Matrix multiply(const GradedRing& r, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw StructuralError("matrix product: dimension mismatch");
  const Field& f = r.field();
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Poly s;
      for (std::size_t k = 0; k < a.cols(); ++k)
        if (!a.at(i, k).is_zero() && !b.at(k, j).is_zero()) s = add(f, s, mul(f, a.at(i, k), b.at(k, j)));
      c.at(i, j) = r.reduce(s);
    }
  return c;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw StructuralError("hconcat: row mismatch");
  Matrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, a.cols() + j) = b.at(i, j);
  }
  return c;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return c;
}

// ---------------------------------------------------------------- presentations

struct ModulePresentation::Lazy {
  std::once_flag gb_once;
  GroebnerBasis gb;
  std::once_flag hs_once;
  HilbertSeries hs;
};

ModulePresentation::ModulePresentation(GradedRing ring, std::vector<int> gen_twists,
                                       std::vector<int> rel_twists, Matrix matrix)
    : ring_(std::move(ring)), gen_twists_(std::move(gen_twists)), rel_twists_(std::move(rel_twists)),
      matrix_(std::move(matrix)), lazy_(std::make_shared<Lazy>()) {
  if (!ring_.valid()) throw StructuralError("module over an uninitialized ring");
  if (matrix_.rows() != gen_twists_.size() || matrix_.cols() != rel_twists_.size())
    throw StructuralError("presentation matrix is " + std::to_string(matrix_.rows()) + "x" +
                          std::to_string(matrix_.cols()) + " but twists declare " +
                          std::to_string(gen_twists_.size()) + " generators and " +
                          std::to_string(rel_twists_.size()) + " relations");
  const int n = ring_.num_vars();
  for (std::size_t i = 0; i < matrix_.rows(); ++i)
    for (std::size_t j = 0; j < matrix_.cols(); ++j) {
      Poly& p = matrix_.at(i, j);
      for (const auto& t : p.terms())
        for (int v = n; v < kMaxVars; ++v)
          if (t.mon.exp[v] != 0) throw StructuralError("matrix entry uses an undeclared variable");
      p = ring_.reduce(p);
      if (p.is_zero()) continue;
      const int want = rel_twists_[j] - gen_twists_[i];
      for (const auto& t : p.terms())
        if (t.mon.degree() != want)
          throw StructuralError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                                p.to_string(ring_.variables()) + " has a term " +
                                t.mon.to_string(ring_.variables()) + " of degree " +
                                std::to_string(t.mon.degree()) + ", expected degree " + std::to_string(want));
    }
}

ModulePresentation ModulePresentation::free(const GradedRing& r, std::vector<int> gen_twists) {
  const std::size_t g = gen_twists.size();
  return ModulePresentation(r, std::move(gen_twists), {}, Matrix(g, 0));
}

ModulePresentation ModulePresentation::cyclic(const GradedRing& r, const std::vector<Poly>& ideal, int twist) {
  std::vector<int> rel;
  std::vector<Poly> gens;
  for (const auto& p : ideal) {
    Poly q = r.reduce(p);
    if (q.is_zero()) continue;
    if (!q.is_homogeneous()) throw StructuralError("ideal generator " + q.to_string(r.variables()) + " is not homogeneous");
    gens.push_back(q);
    rel.push_back(twist + q.degree());
  }
  Matrix m(1, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) m.at(0, j) = gens[j];
  return ModulePresentation(r, {twist}, rel, m);
}

ModulePresentation ModulePresentation::from_matrix(const GradedRing& r, std::vector<int> gen_twists,
                                                   const Matrix& matrix) {
  if (matrix.rows() != gen_twists.size())
    throw StructuralError("matrix has " + std::to_string(matrix.rows()) + " rows but " +
                          std::to_string(gen_twists.size()) + " generator twists were given");
  std::vector<std::vector<Poly>> cols;
  std::vector<int> rel;
  for (std::size_t j = 0; j < matrix.cols(); ++j) {
    std::optional<int> deg;
    for (std::size_t i = 0; i < matrix.rows(); ++i) {
      const Poly& p = matrix.at(i, j);
      if (p.is_zero()) continue;
      for (const auto& t : p.terms()) {
        int d = gen_twists[i] + t.mon.degree();
        if (!deg) deg = d;
        if (*deg != d)
          throw StructuralError("column " + std::to_string(j) + " is not homogeneous: term " +
                                t.mon.to_string(r.variables()) + " in row " + std::to_string(i) +
                                " has weighted degree " + std::to_string(d) + ", expected " + std::to_string(*deg));
      }
    }
    if (!deg) continue;
    cols.push_back(matrix.column(j));
    rel.push_back(*deg);
  }
  const std::size_t g = gen_twists.size();
  return ModulePresentation(r, std::move(gen_twists), std::move(rel), Matrix::from_columns(g, cols));
}

FreeVector ModulePresentation::relation_vector(std::size_t j) const {
  return column_to_vector(ring_.field(), order(), matrix_.column(j));
}

const GroebnerBasis& ModulePresentation::relation_gb() const {
  std::call_once(lazy_->gb_once, [&] {
    ModuleOrder ord = order();
    std::vector<FreeVector> gens;
    for (std::size_t j = 0; j < num_rels(); ++j) gens.push_back(relation_vector(j));
    for (auto& v : ideal_multiples(ring_, ord, num_gens())) gens.push_back(std::move(v));
    lazy_->gb = buchberger(ring_.field(), gens, ord);
  });
  return lazy_->gb;
}

const HilbertSeries& ModulePresentation::hilbert_series() const {
  std::call_once(lazy_->hs_once, [&] {
    const auto& gb = relation_gb();
    HilbertSeries hs{LaurentPoly(), ring_.num_vars()};
    LaurentPoly num;
    for (std::uint32_t c = 0; c < num_gens(); ++c)
      num = num + monomial_ideal_numerator(gb.leading_monomials(c)).shifted(gen_twists_[c]);
    hs.numerator = num;
    lazy_->hs = hs;
  });
  return lazy_->hs;
}

bool ModulePresentation::is_zero() const { return hilbert_series().is_zero(); }

std::string ModulePresentation::to_string() const {
  const auto& names = ring_.variables();
  std::string s = "coker(twists=[";
  for (std::size_t i = 0; i < gen_twists_.size(); ++i) s += (i ? "," : "") + std::to_string(gen_twists_[i]);
  s += "], matrix=[";
  for (std::size_t i = 0; i < matrix_.rows(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < matrix_.cols(); ++j) s += (j ? ", " : "") + matrix_.at(i, j).to_string(names);
    s += "]";
  }
  return s + "])";
}

// ---------------------------------------------------------------- minimal generators

std::vector<std::size_t> minimal_generator_indices(const GradedRing& r, const std::vector<int>& twists,
                                                   const std::vector<FreeVector>& vectors,
                                                   const std::vector<FreeVector>& base) {
  ModuleOrder ord(twists);
  GroebnerEngine eng(r.field(), ord);
  for (auto& v : ideal_multiples(r, ord, twists.size())) eng.add_generator(std::move(v));
  for (const auto& v : base) eng.add_generator(v);
  std::vector<std::size_t> order(vectors.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<int> degs(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (!vec_is_homogeneous(ord, vectors[i])) throw StructuralError("inhomogeneous vector in generating set");
    degs[i] = vec_degree(ord, vectors[i]);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return degs[a] < degs[b]; });
  std::vector<std::size_t> kept;
  for (std::size_t idx : order) {
    if (vectors[idx].is_zero()) continue;
    eng.complete(degs[idx]);
    if (eng.reduce(vectors[idx]).is_zero()) continue;
    kept.push_back(idx);
    eng.add_generator(vectors[idx]);
  }
  return kept;
}

// ---------------------------------------------------------------- minimalization

Minimalized minimalize_with_map(const ModulePresentation& m) {
  const GradedRing& r = m.ring();
  const Field& f = r.field();
  std::vector<std::vector<Poly>> cols;
  for (std::size_t j = 0; j < m.num_rels(); ++j) cols.push_back(m.matrix().column(j));
  std::vector<int> col_deg = m.rel_twists();
  std::vector<std::size_t> gens(m.num_gens());
  for (std::size_t i = 0; i < gens.size(); ++i) gens[i] = i;
  std::vector<std::vector<Poly>> t(m.num_gens());  // t[k] = row k of proj
  for (std::size_t k = 0; k < m.num_gens(); ++k) {
    t[k].resize(m.num_gens());
    t[k][k] = Poly::constant(Scalar(1));
  }

  for (;;) {
    std::size_t pi = 0, pj = 0;
    bool found = false;
    for (std::size_t j = 0; j < cols.size() && !found; ++j)
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (!cols[j][i].is_zero() && cols[j][i].is_constant()) {
          pi = i;
          pj = j;
          found = true;
          break;
        }
    if (!found) break;
    const Scalar c = cols[pj][pi].leading().coef;
    const std::vector<Poly> pivot = cols[pj];
    for (std::size_t l = 0; l < cols.size(); ++l) {
      if (l == pj || cols[l][pi].is_zero()) continue;
      Poly factor = scale(f, cols[l][pi], f.inv(c));
      for (std::size_t k = 0; k < gens.size(); ++k)
        if (!pivot[k].is_zero()) cols[l][k] = r.reduce(sub(f, cols[l][k], mul(f, factor, pivot[k])));
    }
    for (std::size_t o = 0; o < m.num_gens(); ++o) {
      const Poly to = t[pi][o];
      if (to.is_zero()) continue;
      Poly factor = scale(f, to, f.inv(c));
      for (std::size_t k = 0; k < gens.size(); ++k)
        if (k != pi && !pivot[k].is_zero()) t[k][o] = r.reduce(sub(f, t[k][o], mul(f, factor, pivot[k])));
    }
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(pj));
    col_deg.erase(col_deg.begin() + static_cast<std::ptrdiff_t>(pj));
    for (auto& col : cols) col.erase(col.begin() + static_cast<std::ptrdiff_t>(pi));
    gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(pi));
    t.erase(t.begin() + static_cast<std::ptrdiff_t>(pi));
  }

  std::vector<int> twists;
  for (auto g : gens) twists.push_back(m.gen_twists()[g]);
  std::vector<std::vector<Poly>> nonzero;
  std::vector<int> nonzero_deg;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    bool z = true;
    for (const auto& p : cols[j])
      if (!p.is_zero()) z = false;
    if (!z) {
      nonzero.push_back(cols[j]);
      nonzero_deg.push_back(col_deg[j]);
    }
  }
  ModulePresentation pruned(r, twists, nonzero_deg, Matrix::from_columns(twists.size(), nonzero));

  // canonical minimal relations: minimal subset of the reduced GB
  const auto& gb = pruned.relation_gb();
  std::vector<FreeVector> cand;
  for (const auto& g : gb.generators()) cand.push_back(g);
  ModuleOrder ord(twists);
  std::vector<std::vector<Poly>> rel_cols;
  std::vector<int> rel_deg;
  for (auto idx : minimal_generator_indices(r, twists, cand)) {
    rel_cols.push_back(vector_to_polys(f, cand[idx], twists.size()));
    rel_deg.push_back(vec_degree(ord, cand[idx]));
  }
  Minimalized out;
  out.module = ModulePresentation(r, twists, rel_deg, Matrix::from_columns(twists.size(), rel_cols));
  out.projection = Matrix(gens.size(), m.num_gens());
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (std::size_t o = 0; o < m.num_gens(); ++o) out.projection.at(k, o) = t[k][o];
  out.kept = gens;
  return out;
}

ModulePresentation minimalize(const ModulePresentation& m) { return minimalize_with_map(m).module; }

bool is_minimal(const ModulePresentation& m) {
  for (std::size_t i = 0; i < m.num_gens(); ++i)
    for (std::size_t j = 0; j < m.num_rels(); ++j)
      if (!m.matrix().at(i, j).is_zero() && m.matrix().at(i, j).is_constant()) return false;
  std::vector<FreeVector> rels;
  for (std::size_t j = 0; j < m.num_rels(); ++j) rels.push_back(m.relation_vector(j));
  return minimal_generator_indices(m.ring(), m.gen_twists(), rels).size() == m.num_rels();
}

// ---------------------------------------------------------------- syzygies

Kernel syzygies(const GradedRing& r, const Matrix& a, const std::vector<int>& row_twists,
                const std::vector<int>& col_twists, std::size_t max_rank) {
  const std::size_t rows = a.rows(), m = a.cols();
  if (row_twists.size() != rows || col_twists.size() != m) throw StructuralError("syzygies: twist mismatch");
  if (max_rank == 0) max_rank = budgets().max_rank;
  Kernel out;
  if (m == 0) return out;
  const Field& f = r.field();
  std::vector<int> tw = row_twists;
  tw.insert(tw.end(), col_twists.begin(), col_twists.end());
  std::vector<int> blocks(rows, 1);
  blocks.insert(blocks.end(), m, 0);
  ModuleOrder aug(tw, blocks);
  GroebnerEngine eng(f, aug);
  for (std::size_t j = 0; j < m; ++j) {
    FreeVector v = column_to_vector(f, aug, a.column(j));
    if (!v.is_zero() && vec_degree(aug, v) != col_twists[j]) throw StructuralError("syzygies: column degree mismatch");
    std::vector<VecTerm> terms = v.terms;
    terms.push_back({Monomial::one(), static_cast<std::uint32_t>(rows + j), Scalar(1)});
    eng.add_generator(make_vector(f, aug, std::move(terms)));
  }
  for (auto& v : ideal_multiples(r, aug, rows, 0)) eng.add_generator(std::move(v));
  for (auto& v : ideal_multiples(r, aug, m, rows)) eng.add_generator(std::move(v));
  eng.complete();
  GroebnerBasis basis = eng.reduced_basis();
  ModuleOrder target(col_twists);
  std::vector<FreeVector> cand;
  for (const auto& g : basis.generators()) {
    if (g.leading().comp < rows) continue;
    std::vector<VecTerm> terms;
    for (const auto& t : g.terms) terms.push_back({t.mon, static_cast<std::uint32_t>(t.comp - rows), t.coef});
    cand.push_back(make_vector(f, target, std::move(terms)));
  }
  for (auto idx : minimal_generator_indices(r, col_twists, cand)) {
    out.columns.push_back(vector_to_polys(f, cand[idx], m));
    out.twists.push_back(vec_degree(target, cand[idx]));
    if (out.columns.size() > max_rank)
      throw BudgetExceeded("syzygy module needs more than " + std::to_string(max_rank) + " generators");
  }
  return out;
}

// ---------------------------------------------------------------- twists and sums

ModulePresentation twist(const ModulePresentation& m, int a) {
  std::vector<int> g = m.gen_twists(), rl = m.rel_twists();
  for (auto& d : g) d -= a;
  for (auto& d : rl) d -= a;
  return ModulePresentation(m.ring(), g, rl, m.matrix());
}

ModulePresentation direct_sum(const ModulePresentation& m, const ModulePresentation& n) {
  require_same_ring(m.ring(), n.ring(), "direct_sum");
  std::vector<int> g = m.gen_twists(), rl = m.rel_twists();
  g.insert(g.end(), n.gen_twists().begin(), n.gen_twists().end());
  rl.insert(rl.end(), n.rel_twists().begin(), n.rel_twists().end());
  return ModulePresentation(m.ring(), g, rl, block_diagonal(m.matrix(), n.matrix()));
}

// ---------------------------------------------------------------- resolutions

namespace {

std::string key_material(const ModulePresentation& mm) {
  std::string s = mm.ring().key() + "|";
  for (int t : mm.gen_twists()) s += std::to_string(t) + ",";
  s += "|";
  const auto& names = mm.ring().variables();
  for (const auto& g : mm.relation_gb().generators()) {
    for (const auto& t : g.terms) s += t.coef.get_str() + "*" + t.mon.to_string(names) + "@" + std::to_string(t.comp) + " ";
    s += ";";
  }
  return s;
}

Resolution truncate(Resolution r, std::size_t length) {
  if (r.maps.size() > length) {
    r.maps.resize(length);
    r.twists.resize(length + 1);
    r.finite = false;
  }
  return r;
}

}  // namespace

Resolution minimal_free_resolution(const ModulePresentation& m, std::size_t length) {
  ModulePresentation mm = minimalize(m);
  const GradedRing& ring = mm.ring();
  const std::string material = key_material(mm);
  Resolution res;
  if (auto cached = resolution_cache().get(ring, material)) {
    if (cached->finite || cached->length() >= length) return truncate(std::move(*cached), length);
    res = std::move(*cached);
  } else {
    res.ring = ring;
    res.twists.push_back(mm.gen_twists());
    if (mm.num_rels() == 0) res.finite = true;
  }
  while (!res.finite && res.length() < length) {
    if (res.length() == 0) {
      res.maps.push_back(mm.matrix());
      res.twists.push_back(mm.rel_twists());
      continue;
    }
    const std::size_t i = res.length();
    Kernel k = syzygies(ring, res.maps[i - 1], res.twists[i - 1], res.twists[i]);
    if (k.columns.empty()) {
      res.finite = true;
      break;
    }
    res.maps.push_back(Matrix::from_columns(res.twists[i].size(), k.columns));
    res.twists.push_back(k.twists);
  }
  resolution_cache().put(material, res);
  return truncate(std::move(res), length);
}

std::size_t BettiTable::total(std::size_t i) const {
  if (i >= entries.size()) return 0;
  std::size_t s = 0;
  for (const auto& [d, c] : entries[i]) s += c;
  return s;
}

std::size_t BettiTable::at(std::size_t i, int j) const {
  if (i >= entries.size()) return 0;
  for (const auto& [d, c] : entries[i])
    if (d == j) return c;
  return 0;
}

std::string BettiTable::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    s += std::to_string(i) + ":";
    for (const auto& [d, c] : entries[i]) s += " " + std::to_string(d) + "^" + std::to_string(c);
    s += "\n";
  }
  return s;
}

BettiTable betti_of(const Resolution& r) {
  BettiTable b;
  for (const auto& tw : r.twists) {
    std::map<int, std::size_t> counts;
    for (int d : tw) ++counts[d];
    b.entries.emplace_back(counts.begin(), counts.end());
  }
  return b;
}

BettiTable betti(const ModulePresentation& m, std::size_t length) {
  return betti_of(minimal_free_resolution(m, length));
}

// ---------------------------------------------------------------- homomorphisms

std::vector<Matrix> degree_zero_homs(const ModulePresentation& m, const ModulePresentation& n) {
  require_same_ring(m.ring(), n.ring(), "degree_zero_homs");
  const GradedRing& r = m.ring();
  const Field& f = r.field();
  const ModuleOrder ord = n.order();
  const auto& gb = n.relation_gb();
  std::vector<DegreeBasis> src;
  std::vector<std::size_t> offset;
  std::size_t unknowns = 0;
  for (std::size_t i = 0; i < m.num_gens(); ++i) {
    src.push_back(standard_basis(n, m.gen_twists()[i]));
    offset.push_back(unknowns);
    unknowns += src.back().size();
  }
  std::vector<std::vector<Scalar>> rows;  // constraint rows
  for (std::size_t j = 0; j < m.num_rels(); ++j) {
    DegreeBasis tgt = standard_basis(n, m.rel_twists()[j]);
    if (tgt.size() == 0) continue;
    std::vector<std::vector<Scalar>> block(tgt.size(), std::vector<Scalar>(unknowns));
    for (std::size_t i = 0; i < m.num_gens(); ++i) {
      const Poly& aij = m.matrix().at(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t s = 0; s < src[i].size(); ++s) {
        const auto& [mon, comp] = src[i].elems[s];
        auto c = tgt.coords(gb.normal_form(times_term(f, ord, aij, mon, comp)));
        for (std::size_t k = 0; k < c.size(); ++k) block[k][offset[i] + s] = c[k];
      }
    }
    for (auto& row : block) rows.push_back(std::move(row));
  }
  DenseMatrix a(rows.size(), unknowns);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < unknowns; ++k) a.at(i, k) = rows[i][k];
  DenseMatrix ker = kernel(f, a);
  std::vector<Matrix> out;
  for (std::size_t b = 0; b < ker.cols(); ++b) {
    Matrix phi(n.num_gens(), m.num_gens());
    for (std::size_t i = 0; i < m.num_gens(); ++i) {
      std::vector<std::vector<PolyTerm>> comps(n.num_gens());
      for (std::size_t s = 0; s < src[i].size(); ++s) {
        const Scalar& c = ker.at(offset[i] + s, b);
        if (Field::is_zero(c)) continue;
        comps[src[i].elems[s].second].push_back({src[i].elems[s].first, c});
      }
      for (std::size_t l = 0; l < n.num_gens(); ++l) phi.at(l, i) = Poly::from_terms(f, comps[l]);
    }
    out.push_back(std::move(phi));
  }
  return out;
}

bool is_homomorphism(const ModulePresentation& m, const ModulePresentation& n, const Matrix& phi, int degree) {
  require_same_ring(m.ring(), n.ring(), "is_homomorphism");
  if (phi.rows() != n.num_gens() || phi.cols() != m.num_gens()) return false;
  const GradedRing& r = m.ring();
  const ModuleOrder ord = n.order();
  for (std::size_t i = 0; i < m.num_gens(); ++i) {
    FreeVector v = column_to_vector(r.field(), ord, phi.column(i));
    if (!v.is_zero() && (!vec_is_homogeneous(ord, v) || vec_degree(ord, v) != m.gen_twists()[i] + degree)) return false;
  }
  for (std::size_t j = 0; j < m.num_rels(); ++j) {
    auto img = apply_map(r, phi, m.matrix().column(j));
    if (!n.relation_gb().normal_form(column_to_vector(r.field(), ord, img)).is_zero()) return false;
  }
  return true;
}

namespace {

/// True when psi * phi is the identity of M modulo relations.
bool composes_to_identity(const ModulePresentation& m, const Matrix& phi, const Matrix& psi) {
  const GradedRing& r = m.ring();
  const Field& f = r.field();
  const ModuleOrder ord = m.order();
  for (std::size_t i = 0; i < m.num_gens(); ++i) {
    auto img = apply_map(r, psi, phi.column(i));
    img[i] = sub(f, img[i], Poly::constant(Scalar(1)));
    if (!m.relation_gb().normal_form(column_to_vector(f, ord, img)).is_zero()) return false;
  }
  return true;
}

std::optional<Matrix> find_inverse(const ModulePresentation& m, const ModulePresentation& n, const Matrix& phi) {
  const GradedRing& r = m.ring();
  const Field& f = r.field();
  auto basis = degree_zero_homs(n, m);
  if (basis.empty()) return std::nullopt;
  const ModuleOrder ord = m.order();
  std::vector<DegreeBasis> tgt;
  std::size_t rows = 0;
  std::vector<std::size_t> off;
  for (std::size_t i = 0; i < m.num_gens(); ++i) {
    tgt.push_back(standard_basis(m, m.gen_twists()[i]));
    off.push_back(rows);
    rows += tgt.back().size();
  }
  DenseMatrix a(rows, basis.size()), b(rows, 1);
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t i = 0; i < m.num_gens(); ++i) {
      auto img = apply_map(r, basis[k], phi.column(i));
      auto c = tgt[i].coords(m.relation_gb().normal_form(column_to_vector(f, ord, img)));
      for (std::size_t q = 0; q < c.size(); ++q) a.at(off[i] + q, k) = c[q];
    }
  for (std::size_t i = 0; i < m.num_gens(); ++i) {
    std::vector<Poly> e(m.num_gens());
    e[i] = Poly::constant(Scalar(1));
    auto c = tgt[i].coords(m.relation_gb().normal_form(column_to_vector(f, ord, e)));
    for (std::size_t q = 0; q < c.size(); ++q) b.at(off[i] + q, 0) = c[q];
  }
  DenseMatrix x;
  if (!solve(f, a, b, x)) return std::nullopt;
  Matrix psi(m.num_gens(), n.num_gens());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Scalar& c = x.at(k, 0);
    if (Field::is_zero(c)) continue;
    for (std::size_t p = 0; p < psi.rows(); ++p)
      for (std::size_t q = 0; q < psi.cols(); ++q)
        psi.at(p, q) = add(f, psi.at(p, q), scale(f, basis[k].at(p, q), c));
  }
  return psi;
}

std::multiset<int> as_multiset(const std::vector<int>& v) { return {v.begin(), v.end()}; }

}  // namespace

const char* IsoVerdict::kind_name(Kind k) {
  switch (k) {
    case Kind::Isomorphic: return "Isomorphic";
    case Kind::NotIsomorphic: return "NotIsomorphic";
    case Kind::Unknown: return "Unknown";
  }
  return "Unknown";
}

IsoVerdict is_isomorphic(const ModulePresentation& m0, const ModulePresentation& n0, const IsoOptions& opts) {
  require_same_ring(m0.ring(), n0.ring(), "is_isomorphic");
  IsoVerdict v;
  ModulePresentation m = minimalize(m0), n = minimalize(n0);
  const GradedRing& r = m.ring();
  const Field& f = r.field();
  if (m.hilbert_series() != n.hilbert_series()) {
    v.kind = IsoVerdict::Kind::NotIsomorphic;
    v.note = "Hilbert series differ: " + m.hilbert_series().to_string() + " vs " + n.hilbert_series().to_string();
    return v;
  }
  if (as_multiset(m.gen_twists()) != as_multiset(n.gen_twists())) {
    v.kind = IsoVerdict::Kind::NotIsomorphic;
    v.note = "graded Betti numbers beta_0 differ";
    return v;
  }
  if (as_multiset(m.rel_twists()) != as_multiset(n.rel_twists())) {
    v.kind = IsoVerdict::Kind::NotIsomorphic;
    v.note = "graded Betti numbers beta_1 differ";
    return v;
  }
  const std::size_t g = m.num_gens();
  if (g == 0) {
    v.kind = IsoVerdict::Kind::Isomorphic;
    v.note = "both modules are zero";
    return v;
  }
  auto basis = degree_zero_homs(m, n);
  if (basis.empty()) {
    v.kind = IsoVerdict::Kind::NotIsomorphic;
    v.note = "Hom(M,N)_0 = 0";
    return v;
  }
  auto surjective = [&](const Matrix& phi) {
    DenseMatrix c(g, g);
    for (std::size_t l = 0; l < g; ++l)
      for (std::size_t i = 0; i < g; ++i) c.at(l, i) = phi.at(l, i).constant_term();
    return rank(f, c) == g;
  };
  std::vector<Matrix> candidates = basis;
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> coef(-7, 7);
  for (int t = 0; t < opts.random_trials && basis.size() > 1; ++t) {
    Matrix phi(n.num_gens(), g);
    for (const auto& b : basis) {
      Scalar c = f.from_int(coef(rng));
      if (Field::is_zero(c)) continue;
      for (std::size_t p = 0; p < phi.rows(); ++p)
        for (std::size_t q = 0; q < phi.cols(); ++q) phi.at(p, q) = add(f, phi.at(p, q), scale(f, b.at(p, q), c));
    }
    candidates.push_back(std::move(phi));
  }
  for (const auto& phi : candidates) {
    if (!surjective(phi)) continue;
    auto psi = find_inverse(m, n, phi);
    if (psi && composes_to_identity(m, phi, *psi) && composes_to_identity(n, *psi, phi)) {
      v.kind = IsoVerdict::Kind::Isomorphic;
      v.forward = phi;
      v.backward = *psi;
      v.note = "verified degree-0 isomorphism";
      return v;
    }
  }
  v.kind = IsoVerdict::Kind::Unknown;
  v.note = "no invertible element among " + std::to_string(candidates.size()) + " candidates in Hom(M,N)_0 (dim " +
           std::to_string(basis.size()) + ")";
  return v;
}

IsoVerdict is_isomorphic_up_to_twist(const ModulePresentation& m, const ModulePresentation& n, const IsoOptions& opts) {
  require_same_ring(m.ring(), n.ring(), "is_isomorphic");
  ModulePresentation mm = minimalize(m), nn = minimalize(n);
  if (mm.num_gens() == 0 || nn.num_gens() == 0) {
    IsoVerdict v = is_isomorphic(mm, nn, opts);
    return v;
  }
  int a = *std::min_element(nn.gen_twists().begin(), nn.gen_twists().end()) -
          *std::min_element(mm.gen_twists().begin(), mm.gen_twists().end());
  IsoVerdict v = is_isomorphic(mm, twist(nn, a), opts);
  v.shift = a;
  return v;
}

// ---------------------------------------------------------------- annihilators

GroebnerBasis annihilator(const ModulePresentation& m) {
  const GradedRing& r = m.ring();
  const Field& f = r.field();
  const std::size_t g = m.num_gens();
  ModuleOrder ring_order = ModuleOrder::ring();
  if (g == 0) return buchberger(f, {vector_from_polys(f, ring_order, {Poly::constant(Scalar(1))})}, ring_order);
  // copy i of F is shifted so that e_i sits in degree 0
  std::vector<int> tw;
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t k = 0; k < g; ++k) tw.push_back(m.gen_twists()[k] - m.gen_twists()[i]);
  ModuleOrder big(tw);
  std::vector<FreeVector> vecs;
  {
    std::vector<VecTerm> terms;
    for (std::size_t i = 0; i < g; ++i) terms.push_back({Monomial::one(), static_cast<std::uint32_t>(i * g + i), Scalar(1)});
    vecs.push_back(make_vector(f, big, std::move(terms)));
  }
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < m.num_rels(); ++j) vecs.push_back(column_to_vector(f, big, m.matrix().column(j), i * g));
  }
  for (auto& v : ideal_multiples(r, big, g * g)) vecs.push_back(std::move(v));
  auto syz = syzygy_basis(f, vecs, tw);
  std::vector<FreeVector> ann;
  for (const auto& s : syz) {
    Poly c = vector_to_polys(f, s, vecs.size())[0];
    if (!c.is_zero()) ann.push_back(vector_from_polys(f, ring_order, {c}));
  }
  for (const auto& gi : r.ideal_gb().generators()) ann.push_back(gi);
  return buchberger(f, ann, ring_order);
}

std::vector<Poly> annihilator_generators(const ModulePresentation& m) {
  const GradedRing& r = m.ring();
  GroebnerBasis gb = annihilator(m);
  std::vector<FreeVector> cand = gb.generators();
  std::vector<Poly> out;
  for (auto idx : minimal_generator_indices(r, {0}, cand)) out.push_back(vector_to_polys(r.field(), cand[idx], 1)[0]);
  return out;
}

}  // namespace linkage
