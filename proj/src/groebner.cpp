#include "linkage/groebner.hpp"

#include <algorithm>
#include <atomic>

namespace linkage {

bool FreeVector::operator==(const FreeVector& o) const {
  if (terms.size() != o.terms.size()) return false;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].comp != o.terms[i].comp || terms[i].mon != o.terms[i].mon ||
        terms[i].coef != o.terms[i].coef)
      return false;
  }
  return true;
}

ModuleOrder::ModuleOrder(std::vector<int> twists, std::vector<int> blocks, Kind kind)
    : twists_(std::move(twists)), blocks_(std::move(blocks)), kind_(kind) {
  if (!blocks_.empty() && blocks_.size() != twists_.size())
    throw StructuralError("module order: block vector length differs from rank");
}

FreeVector make_vector(const Field& f, const ModuleOrder& ord, std::vector<VecTerm> terms) {
  std::sort(terms.begin(), terms.end(), [&](const VecTerm& a, const VecTerm& b) {
    return ord.compare(a.mon, a.comp, b.mon, b.comp) > 0;
  });
  FreeVector v;
  v.terms.reserve(terms.size());
  for (auto& t : terms) {
    if (t.comp >= ord.rank()) throw StructuralError("vector component exceeds module rank");
    if (!v.terms.empty() && v.terms.back().comp == t.comp && v.terms.back().mon == t.mon) {
      v.terms.back().coef = f.add(v.terms.back().coef, t.coef);
      if (Field::is_zero(v.terms.back().coef)) v.terms.pop_back();
    } else if (!Field::is_zero(t.coef)) {
      v.terms.push_back(std::move(t));
    }
  }
  return v;
}

FreeVector vector_from_polys(const Field& f, const ModuleOrder& ord, const std::vector<Poly>& comps) {
  if (comps.size() != ord.rank()) throw StructuralError("vector length differs from module rank");
  std::vector<VecTerm> terms;
  for (std::uint32_t c = 0; c < comps.size(); ++c)
    for (const auto& t : comps[c].terms()) terms.push_back({t.mon, c, t.coef});
  return make_vector(f, ord, std::move(terms));
}

std::vector<Poly> vector_to_polys(const Field& f, const FreeVector& v, std::size_t rank) {
  std::vector<std::vector<PolyTerm>> parts(rank);
  for (const auto& t : v.terms) {
    if (t.comp >= rank) throw StructuralError("vector component exceeds rank");
    parts[t.comp].push_back({t.mon, t.coef});
  }
  std::vector<Poly> out;
  out.reserve(rank);
  for (auto& p : parts) out.push_back(Poly::from_terms(f, std::move(p)));
  return out;
}

FreeVector vec_add(const Field& f, const ModuleOrder& ord, const FreeVector& a, const FreeVector& b) {
  return vec_sub_mul(f, ord, a, b, Monomial::one(), f.from_int(-1));
}

FreeVector vec_sub_mul(const Field& f, const ModuleOrder& ord, const FreeVector& a,
                       const FreeVector& b, const Monomial& m, const Scalar& c) {
  FreeVector out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  const bool unit_mult = m.is_one();
  while (i < a.terms.size() || j < b.terms.size()) {
    int cmp;
    Monomial bm;
    if (j < b.terms.size()) bm = unit_mult ? b.terms[j].mon : b.terms[j].mon * m;
    if (i == a.terms.size()) cmp = -1;
    else if (j == b.terms.size()) cmp = 1;
    else cmp = ord.compare(a.terms[i].mon, a.terms[i].comp, bm, b.terms[j].comp);
    if (cmp > 0) {
      out.terms.push_back(a.terms[i++]);
    } else if (cmp < 0) {
      out.terms.push_back({bm, b.terms[j].comp, f.neg(f.mul(c, b.terms[j].coef))});
      ++j;
    } else {
      Scalar s = f.sub(a.terms[i].coef, f.mul(c, b.terms[j].coef));
      if (!Field::is_zero(s)) out.terms.push_back({a.terms[i].mon, a.terms[i].comp, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

FreeVector vec_scale(const Field& f, const FreeVector& a, const Scalar& c) {
  FreeVector out;
  if (Field::is_zero(c)) return out;
  out.terms.reserve(a.terms.size());
  for (const auto& t : a.terms) out.terms.push_back({t.mon, t.comp, f.mul(t.coef, c)});
  return out;
}

void make_monic(const Field& f, FreeVector& v) {
  if (v.is_zero() || Field::is_one(v.terms.front().coef)) return;
  Scalar inv = f.inv(v.terms.front().coef);
  for (auto& t : v.terms) t.coef = f.mul(t.coef, inv);
}

int vec_degree(const ModuleOrder& ord, const FreeVector& v) {
  if (v.is_zero()) return -1;
  return ord.weighted_degree(v.leading().mon, v.leading().comp);
}

bool vec_is_homogeneous(const ModuleOrder& ord, const FreeVector& v) {
  if (v.is_zero()) return true;
  int d = vec_degree(ord, v);
  for (const auto& t : v.terms)
    if (ord.weighted_degree(t.mon, t.comp) != d) return false;
  return true;
}

namespace {

// Full reduction: walks the vector once, reducing every term that has a
// divisor among the candidates of its component. Terms in front of the
// current position are never touched by later reduction steps.
template <typename Candidates>
FreeVector full_reduce(const Field& f, const ModuleOrder& ord, FreeVector v, Candidates&& cands) {
  std::size_t pos = 0;
  while (pos < v.terms.size()) {
    const VecTerm& t = v.terms[pos];
    const FreeVector* red = cands(t);
    if (red == nullptr) {
      ++pos;
      continue;
    }
    const VecTerm& lt = red->leading();
    Monomial q = t.mon / lt.mon;
    Scalar c = f.div(t.coef, lt.coef);
    // reducer's leading term cancels v[pos]; earlier terms are strictly larger
    FreeVector head;
    head.terms.assign(v.terms.begin(), v.terms.begin() + static_cast<std::ptrdiff_t>(pos));
    FreeVector tail;
    tail.terms.assign(v.terms.begin() + static_cast<std::ptrdiff_t>(pos), v.terms.end());
    FreeVector reduced = vec_sub_mul(f, ord, tail, *red, q, c);
    head.terms.insert(head.terms.end(), std::make_move_iterator(reduced.terms.begin()),
                      std::make_move_iterator(reduced.terms.end()));
    v = std::move(head);
  }
  return v;
}

}  // namespace

GroebnerBasis::GroebnerBasis(Field field, ModuleOrder order, std::vector<FreeVector> elements,
                             bool reduced)
    : field_(field), order_(std::move(order)), elements_(std::move(elements)), reduced_(reduced) {
  by_comp_.assign(order_.rank(), {});
  for (int i = 0; i < static_cast<int>(elements_.size()); ++i) {
    if (elements_[i].is_zero()) continue;
    by_comp_[elements_[i].leading().comp].push_back(i);
  }
}

FreeVector GroebnerBasis::normal_form(FreeVector f) const {
  return full_reduce(field_, order_, std::move(f), [&](const VecTerm& t) -> const FreeVector* {
    for (int idx : by_comp_[t.comp]) {
      const auto& lt = elements_[idx].leading();
      if (lt.mon.degree() <= t.mon.degree() && lt.mon.divides(t.mon)) return &elements_[idx];
    }
    return nullptr;
  });
}

std::vector<Monomial> GroebnerBasis::leading_monomials(std::uint32_t c) const {
  std::vector<Monomial> out;
  if (c >= by_comp_.size()) return out;
  for (int idx : by_comp_[c]) out.push_back(elements_[idx].leading().mon);
  return out;
}

namespace {
std::atomic<int> g_max_degree{kDefaultMaxDegree};
std::atomic<std::size_t> g_max_rank{kDefaultMaxRank};
}  // namespace

Budgets budgets() { return Budgets{g_max_degree.load(), g_max_rank.load()}; }

void set_budgets(const Budgets& b) {
  g_max_degree = b.max_degree;
  g_max_rank = b.max_rank;
}

GroebnerEngine::GroebnerEngine(Field field, ModuleOrder order, int max_degree)
    : field_(field), order_(std::move(order)), max_degree_(max_degree < 0 ? g_max_degree.load() : max_degree),
      product_criterion_(order_.rank() == 1) {
  active_by_comp_.assign(order_.rank(), {});
  base_degree_ = 0;
  if (order_.rank() > 0) base_degree_ = *std::min_element(order_.twists().begin(), order_.twists().end());
}

void GroebnerEngine::add_generator(FreeVector v) {
  if (v.is_zero()) return;
  if (!vec_is_homogeneous(order_, v))
    throw StructuralError("Gröbner engine requires homogeneous generators");
  int d = vec_degree(order_, v);
  pending_.emplace(d, std::move(v));
}

FreeVector GroebnerEngine::reduce_skip(FreeVector v, int skip) const {
  return full_reduce(field_, order_, std::move(v), [&](const VecTerm& t) -> const FreeVector* {
    for (int idx : active_by_comp_[t.comp]) {
      if (idx == skip) continue;
      const auto& lt = elems_[idx].v.leading();
      if (lt.mon.degree() <= t.mon.degree() && lt.mon.divides(t.mon)) return &elems_[idx].v;
    }
    return nullptr;
  });
}

FreeVector GroebnerEngine::reduce(FreeVector v) const { return reduce_skip(std::move(v), -1); }

FreeVector GroebnerEngine::s_vector(const Pair& p) const {
  const FreeVector& a = elems_[p.i].v;
  const FreeVector& b = elems_[p.j].v;
  Monomial ma = p.lcm / a.leading().mon;
  Monomial mb = p.lcm / b.leading().mon;
  FreeVector sa = vec_sub_mul(field_, order_, FreeVector{}, a, ma, field_.from_int(-1));
  return vec_sub_mul(field_, order_, sa, b, mb, Scalar(1));
}

void GroebnerEngine::insert(FreeVector v) {
  make_monic(field_, v);
  const int h = static_cast<int>(elems_.size());
  const std::uint32_t comp = v.leading().comp;
  const Monomial lm = v.leading().mon;
  elems_.push_back({std::move(v), 0, true});
  elems_.back().degree = vec_degree(order_, elems_.back().v);

  auto& active = active_by_comp_[comp];
  std::vector<int> candidates = active;
  std::vector<Monomial> lcms;
  lcms.reserve(candidates.size());
  for (int g : candidates) lcms.push_back(lm.lcm(elems_[g].v.leading().mon));

  // chain criterion among the new pairs (h, g)
  std::vector<char> keep(candidates.size(), 0);
  std::vector<char> processed(candidates.size(), 0);
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    processed[a] = 1;
    bool coprime = product_criterion_ && lm.coprime(elems_[candidates[a]].v.leading().mon);
    bool dominated = false;
    if (!coprime) {
      for (std::size_t b = 0; b < candidates.size() && !dominated; ++b) {
        if (b == a) continue;
        bool in_c = !processed[b];
        bool in_d = processed[b] && keep[b];
        if ((in_c || in_d) && lcms[b].divides(lcms[a])) dominated = true;
      }
    }
    keep[a] = coprime || !dominated;
  }

  // old pairs made redundant by h
  for (auto it = pairs_.begin(); it != pairs_.end();) {
    const Pair& p = *it;
    if (elems_[p.i].v.leading().comp == comp && lm.divides(p.lcm)) {
      Monomial li = elems_[p.i].v.leading().mon.lcm(lm);
      Monomial lj = elems_[p.j].v.leading().mon.lcm(lm);
      if (li != p.lcm && lj != p.lcm) {
        it = pairs_.erase(it);
        continue;
      }
    }
    ++it;
  }

  for (std::size_t a = 0; a < candidates.size(); ++a) {
    if (!keep[a]) continue;
    int g = candidates[a];
    if (product_criterion_ && lm.coprime(elems_[g].v.leading().mon)) continue;
    pairs_.insert(Pair{order_.weighted_degree(lcms[a], comp), g, h, lcms[a]});
  }

  std::vector<int> still_active;
  still_active.reserve(active.size() + 1);
  for (int g : active) {
    if (lm.divides(elems_[g].v.leading().mon)) elems_[g].active = false;
    else still_active.push_back(g);
  }
  still_active.push_back(h);
  active = std::move(still_active);
}

void GroebnerEngine::complete(int up_to_degree) {
  for (;;) {
    int next = INT_MAX;
    if (!pairs_.empty()) next = pairs_.begin()->degree;
    if (!pending_.empty()) next = std::min(next, pending_.begin()->first);
    if (next == INT_MAX || next > up_to_degree) return;
    if (next - base_degree_ > max_degree_)
      throw BudgetExceeded("Gröbner basis computation exceeds degree budget " +
                           std::to_string(max_degree_));

    std::vector<Pair> batch;
    while (!pairs_.empty() && pairs_.begin()->degree == next) {
      batch.push_back(*pairs_.begin());
      pairs_.erase(pairs_.begin());
    }
    for (const auto& p : batch) {
      FreeVector r = reduce(s_vector(p));
      if (!r.is_zero()) insert(std::move(r));
    }
    auto range = pending_.equal_range(next);
    std::vector<FreeVector> inputs;
    for (auto it = range.first; it != range.second; ++it) inputs.push_back(std::move(it->second));
    pending_.erase(range.first, range.second);
    for (auto& v : inputs) {
      FreeVector r = reduce(std::move(v));
      if (!r.is_zero()) insert(std::move(r));
    }
  }
}

std::vector<FreeVector> GroebnerEngine::active_elements() const {
  std::vector<FreeVector> out;
  for (const auto& comp : active_by_comp_)
    for (int idx : comp) out.push_back(elems_[idx].v);
  return out;
}

GroebnerBasis GroebnerEngine::reduced_basis() const {
  std::vector<int> idx;
  for (const auto& comp : active_by_comp_) idx.insert(idx.end(), comp.begin(), comp.end());
  std::vector<FreeVector> out;
  out.reserve(idx.size());
  for (int i : idx) {
    FreeVector v = elems_[i].v;
    // keep the leading term, reduce the tail against every other element
    VecTerm lead = v.terms.front();
    FreeVector tail;
    tail.terms.assign(v.terms.begin() + 1, v.terms.end());
    tail = reduce_skip(std::move(tail), i);
    FreeVector r;
    r.terms.reserve(tail.terms.size() + 1);
    r.terms.push_back(lead);
    r.terms.insert(r.terms.end(), tail.terms.begin(), tail.terms.end());
    make_monic(field_, r);
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [&](const FreeVector& a, const FreeVector& b) {
    return order_.compare(a.leading().mon, a.leading().comp, b.leading().mon, b.leading().comp) < 0;
  });
  return GroebnerBasis(field_, order_, std::move(out), true);
}

GroebnerBasis buchberger(const Field& f, const std::vector<FreeVector>& generators,
                         const ModuleOrder& order, int max_degree) {
  GroebnerEngine eng(f, order, max_degree);
  for (const auto& g : generators) eng.add_generator(g);
  eng.complete();
  return eng.reduced_basis();
}

FreeVector normal_form(const FreeVector& f, const GroebnerBasis& g) {
  for (const auto& t : f.terms)
    if (t.comp >= g.order().rank()) throw StructuralError("normal_form: rank mismatch");
  return g.normal_form(f);
}

std::vector<FreeVector> syzygy_basis(const Field& f, const std::vector<FreeVector>& vectors,
                                     const std::vector<int>& twists, int max_degree) {
  const std::size_t r = twists.size();
  const std::size_t m = vectors.size();
  ModuleOrder base(twists);
  std::vector<int> aug_twists = twists;
  std::vector<int> blocks(r, 1);
  std::vector<int> src_twists;
  for (const auto& v : vectors) {
    for (const auto& t : v.terms)
      if (t.comp >= r) throw StructuralError("syzygy_basis: rank mismatch");
    if (v.is_zero()) src_twists.push_back(0);
    else src_twists.push_back(vec_degree(base, v));
  }
  aug_twists.insert(aug_twists.end(), src_twists.begin(), src_twists.end());
  blocks.insert(blocks.end(), m, 0);
  ModuleOrder aug(aug_twists, blocks);
  GroebnerEngine eng(f, aug, max_degree);
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<VecTerm> terms = vectors[j].terms;
    terms.push_back({Monomial::one(), static_cast<std::uint32_t>(r + j), Scalar(1)});
    eng.add_generator(make_vector(f, aug, std::move(terms)));
  }
  eng.complete();
  ModuleOrder target(src_twists);
  std::vector<FreeVector> out;
  GroebnerBasis basis = eng.reduced_basis();
  for (const auto& g : basis.generators()) {
    if (g.leading().comp < r) continue;
    std::vector<VecTerm> terms;
    for (const auto& t : g.terms) terms.push_back({t.mon, static_cast<std::uint32_t>(t.comp - r), t.coef});
    out.push_back(make_vector(f, target, std::move(terms)));
  }
  return out;
}

}  // namespace linkage
