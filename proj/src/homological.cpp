#include "linkage/homological.hpp"

namespace linkage {

namespace {

FreeVector to_vector(const Field& f, const ModuleOrder& ord, const std::vector<Poly>& col, std::size_t offset = 0) {
  std::vector<VecTerm> terms;
  for (std::size_t i = 0; i < col.size(); ++i)
    for (const auto& t : col[i].terms()) terms.push_back({t.mon, static_cast<std::uint32_t>(offset + i), t.coef});
  return make_vector(f, ord, std::move(terms));
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<int> negated(std::vector<int> v) {
  for (auto& x : v) x = -x;
  return v;
}

HilbertSeries quotient_series(const GradedRing& r, const std::vector<int>& twists, std::vector<FreeVector> gens) {
  ModuleOrder ord(twists);
  for (auto& v : ideal_multiples(r, ord, twists.size())) gens.push_back(std::move(v));
  GroebnerBasis gb = buchberger(r.field(), gens, ord);
  LaurentPoly num;
  for (std::uint32_t c = 0; c < twists.size(); ++c)
    num = num + monomial_ideal_numerator(gb.leading_monomials(c)).shifted(twists[c]);
  return {num, r.num_vars()};
}

// N's relations repeated in every block of a direct sum of copies of N
void add_block_relations(const Field& f, const ModuleOrder& ord, const ModulePresentation& n, std::size_t blocks,
                         std::vector<FreeVector>& out) {
  const std::size_t g = n.num_gens();
  for (std::size_t b = 0; b < blocks; ++b)
    for (std::size_t q = 0; q < n.num_rels(); ++q) out.push_back(to_vector(f, ord, n.matrix().column(q), b * g));
}

HilbertSeries sum_series(const ModulePresentation& n, const std::vector<int>& shifts) {
  HilbertSeries out{LaurentPoly(), n.ring().num_vars()};
  for (int a : shifts) out = out + n.hilbert_series().shifted(a);
  return out;
}

// coker of Hom(d, N): Hom(F, N) -> Hom(F', N) for d: F' -> F
HilbertSeries hom_map_coker(const std::vector<int>& f_twists, const std::vector<int>& fp_twists, const Matrix& d,
                            const ModulePresentation& n) {
  const GradedRing& r = n.ring();
  const Field& fld = r.field();
  const std::size_t g = n.num_gens();
  std::vector<int> tw;
  for (int b : fp_twists)
    for (int t : n.gen_twists()) tw.push_back(t - b);
  ModuleOrder ord(tw);
  std::vector<FreeVector> gens;
  for (std::size_t k = 0; k < f_twists.size(); ++k)
    for (std::size_t p = 0; p < g; ++p) {
      std::vector<VecTerm> terms;
      for (std::size_t l = 0; l < fp_twists.size(); ++l)
        for (const auto& t : d.at(k, l).terms()) terms.push_back({t.mon, static_cast<std::uint32_t>(l * g + p), t.coef});
      FreeVector v = make_vector(fld, ord, std::move(terms));
      if (!v.is_zero()) gens.push_back(std::move(v));
    }
  add_block_relations(fld, ord, n, fp_twists.size(), gens);
  return quotient_series(r, tw, std::move(gens));
}

// coker of d (x) N: F (x) N -> F' (x) N for d: F -> F'
HilbertSeries tensor_map_coker(const std::vector<int>& f_twists, const std::vector<int>& fp_twists, const Matrix& d,
                               const ModulePresentation& n) {
  const GradedRing& r = n.ring();
  const Field& fld = r.field();
  const std::size_t g = n.num_gens();
  std::vector<int> tw;
  for (int b : fp_twists)
    for (int t : n.gen_twists()) tw.push_back(t + b);
  ModuleOrder ord(tw);
  std::vector<FreeVector> gens;
  for (std::size_t l = 0; l < f_twists.size(); ++l)
    for (std::size_t p = 0; p < g; ++p) {
      std::vector<VecTerm> terms;
      for (std::size_t k = 0; k < fp_twists.size(); ++k)
        for (const auto& t : d.at(k, l).terms()) terms.push_back({t.mon, static_cast<std::uint32_t>(k * g + p), t.coef});
      FreeVector v = make_vector(fld, ord, std::move(terms));
      if (!v.is_zero()) gens.push_back(std::move(v));
    }
  add_block_relations(fld, ord, n, fp_twists.size(), gens);
  return quotient_series(r, tw, std::move(gens));
}

}  // namespace

HilbertSeries ext_hilbert_series(const ModulePresentation& m, const ModulePresentation& n, int i) {
  require_same_ring(m.ring(), n.ring(), "ext");
  if (i < 0) throw StructuralError("ext: negative index");
  const int nv = m.ring().num_vars();
  const std::size_t ui = static_cast<std::size_t>(i);
  Resolution res = minimal_free_resolution(m, ui + 1);
  if (ui > res.length()) return {LaurentPoly(), nv};
  auto negated_shifts = [](const std::vector<int>& v) {
    std::vector<int> out;
    for (int a : v) out.push_back(-a);
    return out;
  };
  HilbertSeries prev = ui == 0 ? sum_series(n, negated_shifts(res.twists[0]))
                               : hom_map_coker(res.twists[ui - 1], res.twists[ui], res.maps[ui - 1], n);
  if (ui == res.length()) return prev;
  HilbertSeries next = hom_map_coker(res.twists[ui], res.twists[ui + 1], res.maps[ui], n);
  return prev + next - sum_series(n, negated_shifts(res.twists[ui + 1]));
}

HilbertSeries tor_hilbert_series(const ModulePresentation& m, const ModulePresentation& n, int i) {
  require_same_ring(m.ring(), n.ring(), "tor");
  if (i < 0) throw StructuralError("tor: negative index");
  const int nv = m.ring().num_vars();
  const std::size_t ui = static_cast<std::size_t>(i);
  Resolution res = minimal_free_resolution(m, ui + 1);
  if (ui > res.length()) return {LaurentPoly(), nv};
  HilbertSeries upper = ui < res.length() ? tensor_map_coker(res.twists[ui + 1], res.twists[ui], res.maps[ui], n)
                                          : sum_series(n, res.twists[ui]);
  if (ui == 0) return upper;
  HilbertSeries lower = tensor_map_coker(res.twists[ui], res.twists[ui - 1], res.maps[ui - 1], n);
  return upper + lower - sum_series(n, res.twists[ui - 1]);
}

bool ext_is_zero(const ModulePresentation& m, const ModulePresentation& n, int i) {
  return ext_hilbert_series(m, n, i).reduced().is_zero();
}

bool tor_is_zero(const ModulePresentation& m, const ModulePresentation& n, int i) {
  return tor_hilbert_series(m, n, i).reduced().is_zero();
}

Subquotient homology(const ModulePresentation& c, const ModulePresentation& a, const ModulePresentation& b,
                     const Matrix& beta, const Matrix& alpha) {
  require_same_ring(a.ring(), b.ring(), "homology");
  require_same_ring(a.ring(), c.ring(), "homology");
  const GradedRing& r = a.ring();
  const Field& f = r.field();
  const std::size_t ga = a.num_gens();
  if (beta.rows() != ga || beta.cols() != c.num_gens() || alpha.rows() != b.num_gens() || alpha.cols() != ga)
    throw StructuralError("homology: map shapes do not match the modules");

  std::vector<std::vector<Poly>> zcols;
  std::vector<int> zdeg;
  if (b.num_gens() == 0) {
    for (std::size_t i = 0; i < ga; ++i) {
      std::vector<Poly> e(ga);
      e[i] = Poly::constant(Scalar(1));
      zcols.push_back(std::move(e));
      zdeg.push_back(a.gen_twists()[i]);
    }
  } else {
    Kernel k = syzygies(r, hconcat(alpha, b.matrix()), b.gen_twists(), concat(a.gen_twists(), b.rel_twists()));
    for (std::size_t q = 0; q < k.columns.size(); ++q) {
      std::vector<Poly> z(k.columns[q].begin(), k.columns[q].begin() + static_cast<std::ptrdiff_t>(ga));
      bool zero = true;
      for (const auto& p : z)
        if (!p.is_zero()) zero = false;
      if (zero) continue;
      zcols.push_back(std::move(z));
      zdeg.push_back(k.twists[q]);
    }
  }

  ModuleOrder ord(a.gen_twists());
  std::vector<FreeVector> base;
  for (std::size_t j = 0; j < beta.cols(); ++j) base.push_back(to_vector(f, ord, beta.column(j)));
  for (std::size_t j = 0; j < a.num_rels(); ++j) base.push_back(a.relation_vector(j));
  std::vector<FreeVector> zvec;
  for (const auto& z : zcols) zvec.push_back(to_vector(f, ord, z));
  std::vector<std::vector<Poly>> kept_cols;
  std::vector<int> kept_deg;
  for (auto idx : minimal_generator_indices(r, a.gen_twists(), zvec, base)) {
    kept_cols.push_back(zcols[idx]);
    kept_deg.push_back(zdeg[idx]);
  }

  Subquotient out;
  if (kept_cols.empty()) {
    out.module = ModulePresentation::zero(r);
    out.generators = Matrix(ga, 0);
    return out;
  }
  Matrix zmat = Matrix::from_columns(ga, kept_cols);
  Matrix big = hconcat(hconcat(zmat, beta), a.matrix());
  std::vector<int> tw = concat(concat(kept_deg, c.gen_twists()), a.rel_twists());
  Kernel k = syzygies(r, big, a.gen_twists(), tw);
  std::vector<std::vector<Poly>> rel_cols;
  std::vector<int> rel_deg;
  const std::size_t h = kept_cols.size();
  for (std::size_t q = 0; q < k.columns.size(); ++q) {
    std::vector<Poly> rel(k.columns[q].begin(), k.columns[q].begin() + static_cast<std::ptrdiff_t>(h));
    rel_cols.push_back(std::move(rel));
    rel_deg.push_back(k.twists[q]);
  }
  ModulePresentation pres(r, kept_deg, rel_deg, Matrix::from_columns(h, rel_cols));
  Minimalized mm = minimalize_with_map(pres);
  out.module = mm.module;
  out.generators = Matrix(ga, mm.kept.size());
  for (std::size_t q = 0; q < mm.kept.size(); ++q)
    for (std::size_t i = 0; i < ga; ++i) out.generators.at(i, q) = kept_cols[mm.kept[q]][i];
  return out;
}

Subquotient kernel_of(const ModulePresentation& a, const ModulePresentation& b, const Matrix& alpha) {
  return homology(ModulePresentation::zero(a.ring()), a, b, Matrix(a.num_gens(), 0), alpha);
}

ModulePresentation image_of(const ModulePresentation& a, const ModulePresentation& b, const Matrix& alpha) {
  require_same_ring(a.ring(), b.ring(), "image_of");
  const GradedRing& r = a.ring();
  if (a.num_gens() == 0) return ModulePresentation::zero(r);
  Kernel k = syzygies(r, hconcat(alpha, b.matrix()), b.gen_twists(), concat(a.gen_twists(), b.rel_twists()));
  std::vector<std::vector<Poly>> cols;
  for (const auto& col : k.columns)
    cols.emplace_back(col.begin(), col.begin() + static_cast<std::ptrdiff_t>(a.num_gens()));
  return minimalize(ModulePresentation(r, a.gen_twists(), k.twists, Matrix::from_columns(a.num_gens(), cols)));
}

ModulePresentation cokernel_of(const ModulePresentation& a, const ModulePresentation& b, const Matrix& alpha) {
  require_same_ring(a.ring(), b.ring(), "cokernel_of");
  return ModulePresentation(b.ring(), b.gen_twists(), concat(a.gen_twists(), b.rel_twists()),
                            hconcat(alpha, b.matrix()));
}

std::optional<std::vector<std::vector<Poly>>> lift(const GradedRing& r, const std::vector<int>& twists,
                                                   const Matrix& gens, const std::vector<int>& gen_degrees,
                                                   const Matrix& rels, const std::vector<int>& rel_degrees,
                                                   const Matrix& targets, const std::vector<int>& target_degrees) {
  const Field& f = r.field();
  const std::size_t rows = twists.size(), m = gens.cols();
  if (gens.rows() != rows || rels.rows() != rows || targets.rows() != rows || gen_degrees.size() != m ||
      rel_degrees.size() != rels.cols() || target_degrees.size() != targets.cols())
    throw StructuralError("lift: shape mismatch");
  std::vector<std::vector<Poly>> out;
  if (targets.cols() == 0) return out;
  std::vector<int> tw = concat(twists, gen_degrees);
  std::vector<int> blocks(rows, 1);
  blocks.insert(blocks.end(), m, 0);
  ModuleOrder aug(tw, blocks);
  GroebnerEngine eng(f, aug);
  for (std::size_t k = 0; k < m; ++k) {
    FreeVector v = to_vector(f, aug, gens.column(k));
    std::vector<VecTerm> terms = v.terms;
    terms.push_back({Monomial::one(), static_cast<std::uint32_t>(rows + k), Scalar(1)});
    eng.add_generator(make_vector(f, aug, std::move(terms)));
  }
  for (std::size_t j = 0; j < rels.cols(); ++j) eng.add_generator(to_vector(f, aug, rels.column(j)));
  for (auto& v : ideal_multiples(r, aug, rows, 0)) eng.add_generator(std::move(v));
  for (auto& v : ideal_multiples(r, aug, m, rows)) eng.add_generator(std::move(v));
  int top = INT_MIN;
  for (int d : target_degrees) top = std::max(top, d);
  eng.complete(top);
  for (std::size_t t = 0; t < targets.cols(); ++t) {
    FreeVector v = to_vector(f, aug, targets.column(t));
    if (!v.is_zero() && vec_degree(aug, v) != target_degrees[t]) throw StructuralError("lift: target degree mismatch");
    FreeVector red = eng.reduce(std::move(v));
    std::vector<Poly> coeffs(m);
    std::vector<std::vector<PolyTerm>> parts(m);
    for (const auto& term : red.terms) {
      if (term.comp < rows) return std::nullopt;
      parts[term.comp - rows].push_back({term.mon, f.neg(term.coef)});
    }
    for (std::size_t k = 0; k < m; ++k) coeffs[k] = Poly::from_terms(f, parts[k]);
    out.push_back(std::move(coeffs));
  }
  return out;
}

ModulePresentation hom_free(const std::vector<int>& free_twists, const ModulePresentation& n) {
  ModulePresentation out = ModulePresentation::zero(n.ring());
  for (int a : free_twists) out = direct_sum(out, twist(n, a));
  return out;
}

Matrix hom_free_map(const Matrix& d, std::size_t g) {
  Matrix out(d.cols() * g, d.rows() * g);
  for (std::size_t k = 0; k < d.rows(); ++k)
    for (std::size_t l = 0; l < d.cols(); ++l) {
      if (d.at(k, l).is_zero()) continue;
      for (std::size_t p = 0; p < g; ++p) out.at(l * g + p, k * g + p) = d.at(k, l);
    }
  return out;
}

ModulePresentation tensor_free(const std::vector<int>& free_twists, const ModulePresentation& n) {
  ModulePresentation out = ModulePresentation::zero(n.ring());
  for (int a : free_twists) out = direct_sum(out, twist(n, -a));
  return out;
}

Matrix tensor_free_map(const Matrix& d, std::size_t g) {
  Matrix out(d.rows() * g, d.cols() * g);
  for (std::size_t k = 0; k < d.rows(); ++k)
    for (std::size_t l = 0; l < d.cols(); ++l) {
      if (d.at(k, l).is_zero()) continue;
      for (std::size_t p = 0; p < g; ++p) out.at(k * g + p, l * g + p) = d.at(k, l);
    }
  return out;
}

Subquotient hom(const ModulePresentation& m, const ModulePresentation& n) {
  require_same_ring(m.ring(), n.ring(), "hom");
  ModulePresentation a = hom_free(m.gen_twists(), n);
  ModulePresentation b = hom_free(m.rel_twists(), n);
  return kernel_of(a, b, hom_free_map(m.matrix(), n.num_gens()));
}

ModulePresentation hom_module(const ModulePresentation& m, const ModulePresentation& n) { return hom(m, n).module; }

Matrix hom_generator_map(const Subquotient& h, std::size_t k, std::size_t m_gens, std::size_t n_gens) {
  Matrix phi(n_gens, m_gens);
  for (std::size_t i = 0; i < m_gens; ++i)
    for (std::size_t p = 0; p < n_gens; ++p) phi.at(p, i) = h.generators.at(i * n_gens + p, k);
  return phi;
}

ModulePresentation dual(const ModulePresentation& m) {
  return hom_module(m, ModulePresentation::free(m.ring(), {0}));
}

ModulePresentation tensor(const ModulePresentation& m, const ModulePresentation& n) {
  require_same_ring(m.ring(), n.ring(), "tensor");
  const std::size_t gm = m.num_gens(), gn = n.num_gens();
  std::vector<int> gens;
  for (std::size_t k = 0; k < gm; ++k)
    for (std::size_t p = 0; p < gn; ++p) gens.push_back(m.gen_twists()[k] + n.gen_twists()[p]);
  std::vector<std::vector<Poly>> cols;
  std::vector<int> degs;
  for (std::size_t j = 0; j < m.num_rels(); ++j)
    for (std::size_t p = 0; p < gn; ++p) {
      std::vector<Poly> col(gm * gn);
      for (std::size_t k = 0; k < gm; ++k) col[k * gn + p] = m.matrix().at(k, j);
      cols.push_back(std::move(col));
      degs.push_back(m.rel_twists()[j] + n.gen_twists()[p]);
    }
  for (std::size_t k = 0; k < gm; ++k)
    for (std::size_t q = 0; q < n.num_rels(); ++q) {
      std::vector<Poly> col(gm * gn);
      for (std::size_t p = 0; p < gn; ++p) col[k * gn + p] = n.matrix().at(p, q);
      cols.push_back(std::move(col));
      degs.push_back(m.gen_twists()[k] + n.rel_twists()[q]);
    }
  return ModulePresentation(m.ring(), gens, degs, Matrix::from_columns(gm * gn, cols));
}

ModulePresentation tor(const ModulePresentation& m, const ModulePresentation& n, int i) {
  require_same_ring(m.ring(), n.ring(), "tor");
  if (i < 0) throw StructuralError("tor: negative index");
  if (i == 0) return minimalize(tensor(m, n));
  const std::size_t ui = static_cast<std::size_t>(i);
  Resolution res = minimal_free_resolution(m, ui + 1);
  if (ui > res.length()) return ModulePresentation::zero(m.ring());
  const std::size_t g = n.num_gens();
  ModulePresentation a = tensor_free(res.twists[ui], n);
  ModulePresentation b = tensor_free(res.twists[ui - 1], n);
  Matrix alpha = tensor_free_map(res.maps[ui - 1], g);
  ModulePresentation c = ModulePresentation::zero(m.ring());
  Matrix beta(a.num_gens(), 0);
  if (ui < res.length()) {
    c = tensor_free(res.twists[ui + 1], n);
    beta = tensor_free_map(res.maps[ui], g);
  }
  return homology(c, a, b, beta, alpha).module;
}

ModulePresentation ext(const ModulePresentation& m, const ModulePresentation& n, int i) {
  require_same_ring(m.ring(), n.ring(), "ext");
  if (i < 0) throw StructuralError("ext: negative index");
  const std::size_t ui = static_cast<std::size_t>(i);
  Resolution res = minimal_free_resolution(m, ui + 1);
  if (ui > res.length()) return ModulePresentation::zero(m.ring());
  const std::size_t g = n.num_gens();
  ModulePresentation a = hom_free(res.twists[ui], n);
  ModulePresentation c = ModulePresentation::zero(m.ring());
  Matrix beta(a.num_gens(), 0);
  if (ui >= 1) {
    c = hom_free(res.twists[ui - 1], n);
    beta = hom_free_map(res.maps[ui - 1], g);
  }
  ModulePresentation b = ModulePresentation::zero(m.ring());
  Matrix alpha(0, a.num_gens());
  if (ui < res.length()) {
    b = hom_free(res.twists[ui + 1], n);
    alpha = hom_free_map(res.maps[ui], g);
  }
  return homology(c, a, b, beta, alpha).module;
}

ModulePresentation restrict_to_ambient(const ModulePresentation& m) {
  const GradedRing& r = m.ring();
  if (r.is_polynomial_ring()) return m;
  GradedRing s = r.ambient();
  std::vector<std::vector<Poly>> cols;
  std::vector<int> degs = m.rel_twists();
  for (std::size_t j = 0; j < m.num_rels(); ++j) cols.push_back(m.matrix().column(j));
  for (std::size_t k = 0; k < m.num_gens(); ++k)
    for (const auto& g : r.ideal_generators()) {
      std::vector<Poly> col(m.num_gens());
      col[k] = g;
      cols.push_back(std::move(col));
      degs.push_back(m.gen_twists()[k] + g.degree());
    }
  return ModulePresentation(s, m.gen_twists(), degs, Matrix::from_columns(m.num_gens(), cols));
}

ModulePresentation extend_to_ring(const ModulePresentation& m, const GradedRing& r) {
  if (m.ring() != r.ambient() && m.ring() != r) throw StructuralError("extend_to_ring: module is not over the ambient ring");
  return minimalize(ModulePresentation(r, m.gen_twists(), m.rel_twists(), m.matrix()));
}

ModulePresentation ext_to_ambient(const ModulePresentation& m, int i) {
  GradedRing s = m.ring().ambient();
  if (i < 0 || i > s.num_vars()) return ModulePresentation::zero(s);
  return ext(restrict_to_ambient(m), ModulePresentation::free(s, {0}), i);
}

ModulePresentation transpose(const ModulePresentation& m) {
  ModulePresentation mm = fault_skip_minimalize() ? m : minimalize(m);
  return ModulePresentation(mm.ring(), negated(mm.rel_twists()), negated(mm.gen_twists()), mm.matrix().transposed());
}

ModulePresentation transpose_wrt(const ModulePresentation& m, const ModulePresentation& c) {
  require_same_ring(m.ring(), c.ring(), "transpose_wrt");
  ModulePresentation mm = minimalize(m);
  const std::size_t g0 = mm.num_gens(), g1 = mm.num_rels(), gc = c.num_gens();
  std::vector<int> gens;
  for (std::size_t j = 0; j < g1; ++j)
    for (std::size_t p = 0; p < gc; ++p) gens.push_back(c.gen_twists()[p] - mm.rel_twists()[j]);
  std::vector<std::vector<Poly>> cols;
  std::vector<int> degs;
  for (std::size_t i = 0; i < g0; ++i)
    for (std::size_t p = 0; p < gc; ++p) {
      std::vector<Poly> col(g1 * gc);
      for (std::size_t j = 0; j < g1; ++j) col[j * gc + p] = mm.matrix().at(i, j);
      cols.push_back(std::move(col));
      degs.push_back(c.gen_twists()[p] - mm.gen_twists()[i]);
    }
  for (std::size_t j = 0; j < g1; ++j)
    for (std::size_t q = 0; q < c.num_rels(); ++q) {
      std::vector<Poly> col(g1 * gc);
      for (std::size_t p = 0; p < gc; ++p) col[j * gc + p] = c.matrix().at(p, q);
      cols.push_back(std::move(col));
      degs.push_back(c.rel_twists()[q] - mm.rel_twists()[j]);
    }
  return ModulePresentation(m.ring(), gens, degs, Matrix::from_columns(g1 * gc, cols));
}

ModulePresentation syzygy(const ModulePresentation& m, int i) {
  if (i < 0) throw StructuralError("syzygy: negative index");
  if (i == 0) return minimalize(m);
  const std::size_t ui = static_cast<std::size_t>(i);
  Resolution res = minimal_free_resolution(m, ui + 1);
  if (ui > res.length()) return ModulePresentation::zero(m.ring());
  if (ui == res.length()) return ModulePresentation::free(m.ring(), res.twists[ui]);
  return ModulePresentation(m.ring(), res.twists[ui], res.twists[ui + 1], res.maps[ui]);
}

ModulePresentation lambda(const ModulePresentation& m) { return syzygy(transpose(m), 1); }

BidualityDefect biduality_defect(const ModulePresentation& m, const ModulePresentation& c) {
  ModulePresentation t = transpose_wrt(m, c);
  return BidualityDefect{ext(t, c, 1), ext(t, c, 2)};
}

Pushforward universal_pushforward(const ModulePresentation& m, const ModulePresentation& c) {
  require_same_ring(m.ring(), c.ring(), "universal_pushforward");
  ModulePresentation mm = minimalize(m);
  ModulePresentation e1 = ext(transpose_wrt(mm, c), c, 1);
  if (!e1.is_zero())
    throw Inapplicable("universal pushforward needs Ext^1(Tr_C M, C) = 0, but it has Hilbert series " +
                       e1.hilbert_series().to_string());
  Subquotient h = hom(mm, c);
  const std::size_t m_count = h.module.num_gens(), gc = c.num_gens(), g = mm.num_gens();
  ModulePresentation target = ModulePresentation::zero(m.ring());
  for (std::size_t k = 0; k < m_count; ++k) target = direct_sum(target, twist(c, h.module.gen_twists()[k]));
  Matrix f(m_count * gc, g);
  for (std::size_t k = 0; k < m_count; ++k)
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t p = 0; p < gc; ++p) f.at(k * gc + p, i) = h.generators.at(i * gc + p, k);
  Pushforward out;
  out.map_matrix = f;
  out.source = mm;
  out.target = target;
  out.m = m_count;
  out.cokernel = minimalize(cokernel_of(mm, target, f));
  out.injective = kernel_of(mm, target, f).module.is_zero();
  out.ext1_vanishes = ext(out.cokernel, c, 1).is_zero();
  return out;
}

}  // namespace linkage
