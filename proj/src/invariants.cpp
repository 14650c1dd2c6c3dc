#include "linkage/invariants.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace linkage {

namespace {

std::string module_key(const ModulePresentation& m) {
  std::string k = m.ring().key() + "|g";
  for (int a : m.gen_twists()) k += std::to_string(a) + ",";
  k += "|r";
  for (int a : m.rel_twists()) k += std::to_string(a) + ",";
  return k + "|" + m.to_string();
}

struct Profile {
  std::vector<ModulePresentation> ext;
  std::vector<std::vector<Poly>> ann;  // annihilator generators over S, empty for zero modules
};

std::mutex g_profile_mu;
std::map<std::string, std::shared_ptr<const Profile>>& profile_memo() {
  static std::map<std::string, std::shared_ptr<const Profile>> memo;
  return memo;
}

std::shared_ptr<const Profile> profile(const ModulePresentation& m) {
  const std::string key = module_key(m);
  {
    std::lock_guard<std::mutex> lock(g_profile_mu);
    auto it = profile_memo().find(key);
    if (it != profile_memo().end()) return it->second;
  }
  auto p = std::make_shared<Profile>();
  const int n = m.ring().num_vars();
  ModulePresentation ms = minimalize(restrict_to_ambient(m));
  GradedRing s = m.ring().ambient();
  for (int j = 0; j <= n; ++j) {
    ModulePresentation e = minimalize(ext(ms, ModulePresentation::free(s, {0}), j));
    p->ann.push_back(e.is_zero() ? std::vector<Poly>{} : annihilator_generators(e));
    p->ext.push_back(std::move(e));
  }
  std::lock_guard<std::mutex> lock(g_profile_mu);
  return profile_memo().emplace(key, std::move(p)).first->second;
}

ModulePresentation ring_module(const GradedRing& r) { return ModulePresentation::free(r, {0}); }

ModulePresentation residue_field(const GradedRing& r) {
  std::vector<Poly> vars;
  for (int i = 0; i < r.num_vars(); ++i) vars.push_back(Poly::variable(i));
  return ModulePresentation::cyclic(r, vars);
}

int resolve_bound(const GradedRing& r, int bound) { return bound < 0 ? default_bound(r) : bound; }

BoundedVerdict combine(const std::vector<BoundedVerdict>& parts) {
  BoundedVerdict out = BoundedVerdict::exact(true);
  for (const auto& p : parts) {
    if (p.kind == BoundedVerdict::Kind::False) return p;
    if (p.kind == BoundedVerdict::Kind::Unknown) out = p;
    if (out.kind == BoundedVerdict::Kind::True && p.kind != BoundedVerdict::Kind::True) out = p;
  }
  return out;
}

}  // namespace

int default_bound(const GradedRing& r) { return 2 * (r.num_vars() + 1); }

const char* BoundedVerdict::kind_name(Kind k) {
  switch (k) {
    case Kind::True: return "True";
    case Kind::False: return "False";
    case Kind::TrueUpToBound: return "TrueUpToBound";
    case Kind::TrueOnProbes: return "TrueOnProbes";
    case Kind::Unknown: return "Unknown";
  }
  return "?";
}

BoundedVerdict BoundedVerdict::exact(bool value, std::string note) {
  BoundedVerdict v;
  v.kind = value ? Kind::True : Kind::False;
  v.witness = value ? -1 : 0;
  v.note = std::move(note);
  return v;
}

const char* GcDimVerdict::kind_name(Kind k) {
  switch (k) {
    case Kind::Zero: return "Zero";
    case Kind::Finite: return "Finite";
    case Kind::Infinite: return "Infinite";
    case Kind::PositiveUnknown: return "PositiveUnknown";
  }
  return "?";
}

// ---------------------------------------------------------------- probe primes

std::vector<ProbePrime> default_probe_primes(const GradedRing& r) {
  const int n = r.num_vars();
  std::vector<std::pair<int, unsigned>> masks;
  for (unsigned mask = 0; mask < (1u << n); ++mask) masks.push_back({__builtin_popcount(mask), mask});
  std::sort(masks.begin(), masks.end());
  std::vector<ProbePrime> out;
  for (auto [h, mask] : masks) {
    ProbePrime p;
    p.variables = std::vector<int>{};
    p.label = "(";
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        p.variables->push_back(i);
        p.generators.push_back(Poly::variable(i));
        p.label += (p.variables->size() > 1 ? "," : "") + r.variables()[i];
      }
    if (mask == 0) p.label += "0";
    p.label += ")";
    p.height = h;
    bool contains = true;
    for (const auto& g : r.ideal_generators())
      if (!prime_contains(r, p, g)) contains = false;
    if (contains) out.push_back(std::move(p));
  }
  return out;
}

ProbePrime user_probe_prime(const GradedRing& r, std::vector<Poly> generators, std::string label) {
  ProbePrime p;
  for (const auto& g : generators)
    if (!g.is_homogeneous()) throw StructuralError("probe prime generator " + g.to_string(r.variables()) + " is not homogeneous");
  p.generators = std::move(generators);
  p.label = std::move(label);
  p.user_supplied = true;
  GradedRing s = r.ambient();
  ModulePresentation q = ModulePresentation::cyclic(s, p.generators);
  p.height = r.num_vars() - q.hilbert_series().dimension();
  for (const auto& g : r.ideal_generators())
    if (!prime_contains(r, p, g))
      throw Inapplicable("probe prime " + p.label + " does not contain the ring relation " + g.to_string(r.variables()));
  return p;
}

bool prime_contains(const GradedRing& r, const ProbePrime& p, const Poly& f) {
  if (p.variables) {
    for (const auto& t : f.terms()) {
      bool hit = false;
      for (int v : *p.variables)
        if (t.mon.exp[static_cast<std::size_t>(v)] > 0) hit = true;
      if (!hit) return false;
    }
    return true;
  }
  const Field& fld = r.field();
  std::vector<FreeVector> gens;
  for (const auto& g : p.generators) gens.push_back(vector_from_polys(fld, ModuleOrder::ring(), {g}));
  GroebnerBasis gb = buchberger(fld, gens, ModuleOrder::ring());
  return gb.normal_form(vector_from_polys(fld, ModuleOrder::ring(), {f})).is_zero();
}

// ---------------------------------------------------------------- depth and dimension

const std::vector<ModulePresentation>& ambient_ext_profile(const ModulePresentation& m) { return profile(m)->ext; }

std::vector<int> ambient_ext_indices(const ModulePresentation& m) {
  std::vector<int> out;
  const auto& e = ambient_ext_profile(m);
  for (std::size_t j = 0; j < e.size(); ++j)
    if (!e[j].is_zero()) out.push_back(static_cast<int>(j));
  return out;
}

int depth(const ModulePresentation& m) {
  auto idx = ambient_ext_indices(m);
  if (idx.empty()) return kInfiniteDepth;
  return m.ring().num_vars() - idx.back();
}

int krull_dim(const ModulePresentation& m) {
  auto idx = ambient_ext_indices(m);
  if (idx.empty()) return -1;
  return m.ring().num_vars() - idx.front();
}

std::vector<int> local_cohomology_degrees(const ModulePresentation& m) {
  std::vector<int> out;
  for (int j : ambient_ext_indices(m)) out.push_back(m.ring().num_vars() - j);
  std::sort(out.begin(), out.end());
  return out;
}

int cc(const ModulePresentation& m) {
  auto deg = local_cohomology_degrees(m);
  if (deg.size() <= 1) throw Inapplicable("cc is defined only for non-Cohen-Macaulay modules");
  return deg[deg.size() - 2];
}

bool is_cohen_macaulay(const ModulePresentation& m) { return local_cohomology_degrees(m).size() <= 1; }

bool is_maximal_cm(const ModulePresentation& m) {
  if (m.is_zero()) return true;
  return depth(m) == m.ring().invariants().dim;
}

GradeResult grade_module(const ModulePresentation& m, int bound) {
  if (m.is_zero()) throw Inapplicable("grade of the zero module is infinite");
  const GradedRing& r = m.ring();
  GradeResult g;
  if (r.invariants().cohen_macaulay) {
    g.value = r.invariants().dim - krull_dim(m);
    return g;
  }
  g.exact = false;
  g.bound = resolve_bound(r, bound);
  for (int i = 0; i <= g.bound; ++i)
    if (!ext_is_zero(m, ring_module(r), i)) {
      g.value = i;
      g.exact = true;
      break;
    }
  return g;
}

std::string ReducedGrade::to_string() const {
  if (value) return std::to_string(*value);
  return infinite_exact ? "inf" : "InfinityUpTo(" + std::to_string(bound) + ")";
}

BoundedVerdict ext_vanishes(const ModulePresentation& m, const ModulePresentation& n, int lo, int hi) {
  BoundedVerdict v;
  for (int i = lo; i <= hi; ++i) {
    Resolution res = minimal_free_resolution(m, static_cast<std::size_t>(i) + 1);
    if (res.finite && static_cast<std::size_t>(i) > res.length()) return BoundedVerdict::exact(true);
    if (!ext_is_zero(m, n, i)) {
      v.kind = BoundedVerdict::Kind::False;
      v.witness = i;
      v.note = "Ext^" + std::to_string(i) + " != 0";
      return v;
    }
  }
  Resolution res = minimal_free_resolution(m, static_cast<std::size_t>(std::max(hi, 0)) + 1);
  if (res.finite && static_cast<std::size_t>(hi) >= res.length()) return BoundedVerdict::exact(true);
  v.kind = BoundedVerdict::Kind::TrueUpToBound;
  v.bound = hi;
  return v;
}

ReducedGrade reduced_grade(const ModulePresentation& m, const ModulePresentation& c, int bound) {
  ReducedGrade g;
  g.bound = resolve_bound(m.ring(), bound);
  if (g.bound < 1) throw StructuralError("reduced_grade needs a bound >= 1");
  BoundedVerdict v = ext_vanishes(m, c, 1, g.bound);
  if (v.failed()) g.value = v.witness;
  g.infinite_exact = v.kind == BoundedVerdict::Kind::True;
  return g;
}

int depth_at_prime(const ModulePresentation& m, const ProbePrime& p) {
  auto prof = profile(m);
  const GradedRing& r = m.ring();
  for (int j = static_cast<int>(prof->ext.size()) - 1; j >= 0; --j) {
    if (prof->ext[static_cast<std::size_t>(j)].is_zero()) continue;
    bool inside = true;
    for (const auto& a : prof->ann[static_cast<std::size_t>(j)])
      if (!prime_contains(r, p, a)) inside = false;
    if (inside) return p.height - j;
  }
  return kInfiniteDepth;
}

int dim_at_prime(const ModulePresentation& m, const ProbePrime& p) {
  auto prof = profile(m);
  const GradedRing& r = m.ring();
  for (std::size_t j = 0; j < prof->ext.size(); ++j) {
    if (prof->ext[j].is_zero()) continue;
    bool inside = true;
    for (const auto& a : prof->ann[j])
      if (!prime_contains(r, p, a)) inside = false;
    if (inside) return p.height - static_cast<int>(j);
  }
  return -1;
}

void clear_invariant_memo() {
  std::lock_guard<std::mutex> lock(g_profile_mu);
  profile_memo().clear();
}

BoundedVerdict serre_tilde(const ModulePresentation& m, int k, const std::vector<ProbePrime>& extra_probes) {
  if (k < 1) throw StructuralError("serre_tilde needs k >= 1");
  const GradedRing& r = m.ring();
  const int n = r.num_vars();
  if (r.invariants().cohen_macaulay) {
    const int c = r.invariants().codim;
    const auto& e = ambient_ext_profile(m);
    for (int j = c + 1; j <= n; ++j) {
      if (e[static_cast<std::size_t>(j)].is_zero()) continue;
      int d = e[static_cast<std::size_t>(j)].hilbert_series().dimension();
      if (d > n - j - k) {
        BoundedVerdict v;
        v.kind = BoundedVerdict::Kind::False;
        v.witness = j;
        v.note = "dim Ext^" + std::to_string(j) + "_S(M,S) = " + std::to_string(d) + " > " + std::to_string(n - j - k);
        return v;
      }
    }
    return BoundedVerdict::exact(true);
  }
  std::vector<ProbePrime> probes = default_probe_primes(r);
  probes.insert(probes.end(), extra_probes.begin(), extra_probes.end());
  ModulePresentation rm = ring_module(r);
  for (std::size_t i = 0; i < probes.size(); ++i) {
    int dm = depth_at_prime(m, probes[i]);
    int dr = depth_at_prime(rm, probes[i]);
    if (dm < std::min(k, dr)) {
      BoundedVerdict v;
      v.kind = BoundedVerdict::Kind::False;
      v.witness = static_cast<int>(i);
      v.note = "depth at " + probes[i].label + " is " + std::to_string(dm) + " < min(" + std::to_string(k) + ", " +
               std::to_string(dr) + ")";
      return v;
    }
  }
  BoundedVerdict v;
  v.kind = BoundedVerdict::Kind::TrueOnProbes;
  v.note = std::to_string(probes.size()) + " probe primes";
  return v;
}

// ---------------------------------------------------------------- semidualizing modules

SemidualizingCertificate is_semidualizing(const ModulePresentation& c, int bound) {
  const GradedRing& r = c.ring();
  const int b = resolve_bound(r, bound);
  SemidualizingCertificate cert;
  cert.c = c;
  ModulePresentation h = hom_module(c, c);
  cert.homothety_witness = is_isomorphic(ring_module(r), h);
  // R -> Hom(C, C) is injective iff ann C = 0; then it is onto iff the Hilbert series agree
  const bool faithful = !c.is_zero() && annihilator_generators(c).empty();
  cert.homothety_bijective = faithful && h.hilbert_series() == ring_module(r).hilbert_series();
  if (!cert.homothety_bijective) {
    cert.ext_vanishing.kind = BoundedVerdict::Kind::Unknown;
    cert.ext_vanishing.note = "not evaluated: homothety is not bijective";
    return cert;
  }
  cert.ext_vanishing = ext_vanishes(c, c, 1, b);
  return cert;
}

ModulePresentation canonical_module(const GradedRing& r) {
  const int n = r.num_vars();
  ModulePresentation e = ext_to_ambient(ring_module(r), r.invariants().codim);
  return extend_to_ring(twist(e, -n), r);
}

AuslanderMap auslander_map(const ModulePresentation& m, const ModulePresentation& c) {
  require_same_ring(m.ring(), c.ring(), "auslander_map");
  const GradedRing& r = m.ring();
  AuslanderMap out;
  out.source = minimalize(m);
  const std::size_t g = out.source.num_gens(), gc = c.num_gens();
  ModulePresentation t = tensor(out.source, c);
  const std::size_t gt = t.num_gens();
  Subquotient h = hom(c, t);
  out.target = h.module;
  if (g == 0) {
    out.matrix = Matrix(h.module.num_gens(), 0);
    out.isomorphism = h.module.is_zero();
    return out;
  }
  ModulePresentation a = hom_free(c.gen_twists(), t);
  Matrix targets(a.num_gens(), g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t p = 0; p < gc; ++p) targets.at(p * gt + i * gc + p, i) = Poly::constant(Scalar(1));
  auto coeffs = lift(r, a.gen_twists(), h.generators, h.module.gen_twists(), a.matrix(), a.rel_twists(), targets,
                     out.source.gen_twists());
  if (!coeffs) throw std::logic_error("auslander_map: mu(e_i) is not in Hom(C, M (x) C)");
  out.matrix = Matrix::from_columns(h.module.num_gens(), *coeffs);
  std::vector<int> rels = out.source.gen_twists();
  rels.insert(rels.end(), h.module.rel_twists().begin(), h.module.rel_twists().end());
  ModulePresentation cok(r, h.module.gen_twists(), rels, hconcat(out.matrix, h.module.matrix()));
  out.isomorphism = cok.is_zero() && out.source.hilbert_series() == h.module.hilbert_series();
  return out;
}

BoundedVerdict in_auslander_class(const ModulePresentation& m, const ModulePresentation& c, int bound) {
  const int b = resolve_bound(m.ring(), bound);
  SemidualizingCertificate cert = is_semidualizing(c, b);
  if (!cert.valid()) throw Inapplicable("in_auslander_class: C is not semidualizing");
  if (!auslander_map(m, c).isomorphism) {
    BoundedVerdict v;
    v.kind = BoundedVerdict::Kind::False;
    v.witness = 0;
    v.note = "mu: M -> Hom(C, M (x) C) is not an isomorphism";
    return v;
  }
  ModulePresentation t = tensor(m, c);
  for (int i = 1; i <= b; ++i) {
    if (!tor_is_zero(m, c, i)) {
      BoundedVerdict v;
      v.kind = BoundedVerdict::Kind::False;
      v.witness = i;
      v.note = "Tor_" + std::to_string(i) + "(M, C) != 0";
      return v;
    }
    if (!ext_is_zero(c, t, i)) {
      BoundedVerdict v;
      v.kind = BoundedVerdict::Kind::False;
      v.witness = i;
      v.note = "Ext^" + std::to_string(i) + "(C, M (x) C) != 0";
      return v;
    }
  }
  BoundedVerdict v;
  v.kind = BoundedVerdict::Kind::TrueUpToBound;
  v.bound = b;
  return v;
}

// ---------------------------------------------------------------- G_C-dimension

BoundedVerdict gc_dim_zero(const ModulePresentation& m, const ModulePresentation& c, int bound) {
  const int b = resolve_bound(m.ring(), bound);
  BidualityDefect d = biduality_defect(m, c);
  if (!d.vanishes()) {
    BoundedVerdict v;
    v.kind = BoundedVerdict::Kind::False;
    v.witness = 0;
    v.note = d.kernel_module.is_zero() ? "M -> M^CC is not onto" : "M -> M^CC is not injective";
    return v;
  }
  BoundedVerdict e1 = ext_vanishes(m, c, 1, b);
  if (e1.failed()) {
    e1.note += " for M";
    return e1;
  }
  BoundedVerdict e2 = ext_vanishes(hom_module(m, c), c, 1, b);
  if (e2.failed()) {
    e2.note += " for Hom(M, C)";
    return e2;
  }
  return combine({e1, e2});
}

GcDimVerdict gc_dim(const ModulePresentation& m, const ModulePresentation& c, int bound) {
  const GradedRing& r = m.ring();
  GcDimVerdict out;
  out.bound = resolve_bound(r, bound);
  if (m.is_zero()) {
    out.kind = GcDimVerdict::Kind::Zero;
    out.note = "zero module";
    return out;
  }
  try {
    const int rr = r.invariants().depth - depth(m);
    if (rr < 0) {
      out.kind = GcDimVerdict::Kind::Infinite;
      out.note = "depth M > depth R";
      return out;
    }
    BoundedVerdict z = gc_dim_zero(syzygy(m, rr), c, out.bound);
    if (z.failed()) {
      out.kind = GcDimVerdict::Kind::Infinite;
      out.value = rr;
      out.note = "syzygy " + std::to_string(rr) + " is not totally C-reflexive: " + z.note;
      return out;
    }
    out.kind = rr == 0 ? GcDimVerdict::Kind::Zero : GcDimVerdict::Kind::Finite;
    out.value = rr;
    if (z.kind == BoundedVerdict::Kind::True) out.note = "exact";
  } catch (const BudgetExceeded& e) {
    out.kind = GcDimVerdict::Kind::PositiveUnknown;
    out.note = e.what();
  }
  return out;
}

BoundedVerdict is_gc_perfect(const GradedRing& r, const std::vector<Poly>& ideal, const ModulePresentation& c,
                             int bound) {
  ModulePresentation m = ModulePresentation::cyclic(r, ideal);
  if (m.is_zero()) throw Inapplicable("is_gc_perfect: the ideal is not proper");
  GradeResult g = grade_module(m, bound);
  GcDimVerdict gd = gc_dim(m, c, bound);
  BoundedVerdict v;
  if (gd.kind == GcDimVerdict::Kind::Infinite) {
    v.kind = BoundedVerdict::Kind::False;
    v.note = "G_C-dimension is infinite";
    return v;
  }
  if (gd.kind == GcDimVerdict::Kind::PositiveUnknown || !g.value) {
    v.kind = BoundedVerdict::Kind::Unknown;
    v.note = "G_C-dimension or grade undetermined";
    return v;
  }
  if (*g.value != gd.value) {
    v.kind = BoundedVerdict::Kind::False;
    v.witness = gd.value;
    v.note = "grade " + std::to_string(*g.value) + " != G_C-dimension " + std::to_string(gd.value);
    return v;
  }
  v.kind = gd.note == "exact" ? BoundedVerdict::Kind::True : BoundedVerdict::Kind::TrueUpToBound;
  v.bound = gd.bound;
  v.note = "grade = G_C-dimension = " + std::to_string(gd.value);
  return v;
}

BoundedVerdict is_gc_gorenstein(const GradedRing& r, const std::vector<Poly>& ideal, const ModulePresentation& c,
                                int bound) {
  BoundedVerdict p = is_gc_perfect(r, ideal, c, bound);
  if (!p.holds()) return p;
  ModulePresentation m = ModulePresentation::cyclic(r, ideal);
  const int g = *grade_module(m, bound).value;
  const std::size_t b0 = minimalize(ext(m, c, g)).num_gens();
  if (b0 != 1) {
    BoundedVerdict v;
    v.kind = BoundedVerdict::Kind::False;
    v.witness = g;
    v.note = "Ext^" + std::to_string(g) + "(R/I, C) needs " + std::to_string(b0) + " generators";
    return v;
  }
  return p;
}

ModulePresentation change_ring(const ModulePresentation& m, const GradedRing& r) {
  if (m.ring().ambient() != r.ambient()) throw StructuralError("change_ring: rings have different ambient rings");
  return ModulePresentation(r, m.gen_twists(), m.rel_twists(), m.matrix());
}

std::pair<ModulePresentation, SemidualizingCertificate> induced_semidualizing(const GradedRing& r,
                                                                              const std::vector<Poly>& ideal,
                                                                              const ModulePresentation& c,
                                                                              int bound) {
  BoundedVerdict p = is_gc_perfect(r, ideal, c, bound);
  if (p.failed()) throw Inapplicable("induced_semidualizing: the ideal is not G_C-perfect (" + p.note + ")");
  ModulePresentation m = ModulePresentation::cyclic(r, ideal);
  const int g = *grade_module(m, bound).value;
  GradedRing q = quotient_ring(r, ideal);
  ModulePresentation k = minimalize(change_ring(ext(m, c, g), q));
  return {k, is_semidualizing(k, bound)};
}

// ---------------------------------------------------------------- finiteness conditions

std::pair<bool, std::optional<std::int64_t>> is_finite_length(const ModulePresentation& m) {
  const HilbertSeries& hs = m.hilbert_series();
  if (hs.dimension() > 0) return {false, std::nullopt};
  return {true, hs.is_zero() ? 0 : hs.length()};
}

bool m_in_ass(const ModulePresentation& m) { return !hom_module(residue_field(m.ring()), m).is_zero(); }

bool is_eilenberg_maclane(const ModulePresentation& m) {
  auto deg = local_cohomology_degrees(m);
  if (deg.empty()) return true;
  for (int d : deg)
    if (d != deg.front() && d != deg.back()) return false;
  return true;
}

bool is_generalized_cm(const ModulePresentation& m) {
  const int d = krull_dim(m);
  if (d < 1) throw Inapplicable("generalized Cohen-Macaulay needs dim M >= 1");
  const int n = m.ring().num_vars();
  const auto& e = ambient_ext_profile(m);
  for (int i = 0; i < d; ++i)
    if (e[static_cast<std::size_t>(n - i)].hilbert_series().dimension() > 0) return false;
  return true;
}

BoundedVerdict is_reduced_gc_perfect(const ModulePresentation& m, const ModulePresentation& c, int bound) {
  GcDimVerdict gd = gc_dim(m, c, bound);
  BoundedVerdict v;
  if (gd.kind == GcDimVerdict::Kind::PositiveUnknown) {
    v.kind = BoundedVerdict::Kind::Unknown;
    v.note = gd.note;
    return v;
  }
  if (gd.kind == GcDimVerdict::Kind::Infinite || gd.value == 0) {
    v.kind = BoundedVerdict::Kind::False;
    v.note = gd.kind == GcDimVerdict::Kind::Infinite ? "infinite G_C-dimension" : "G_C-dimension 0 < reduced grade";
    return v;
  }
  ReducedGrade rg = reduced_grade(m, c, bound);
  if (!rg.value || *rg.value != gd.value) {
    v.kind = BoundedVerdict::Kind::False;
    v.witness = rg.value.value_or(-1);
    v.note = "rgr = " + rg.to_string() + ", G_C-dim = " + std::to_string(gd.value);
    return v;
  }
  v.kind = BoundedVerdict::Kind::TrueUpToBound;
  v.bound = gd.bound;
  v.note = "rgr = G_C-dim = " + std::to_string(gd.value);
  return v;
}

int n_torsionfree_degree(const ModulePresentation& m, int bound) {
  const int b = resolve_bound(m.ring(), bound);
  ModulePresentation t = transpose(m);
  ModulePresentation r = ring_module(m.ring());
  for (int i = 1; i <= b; ++i)
    if (!ext_is_zero(t, r, i)) return i - 1;
  return b;
}

}  // namespace linkage
