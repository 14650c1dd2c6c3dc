#include "linkage/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

#include "linkage/polyparse.hpp"

namespace linkage {

namespace {

struct IdInfo {
  TheoremId id;
  const char* name;
  const char* signature;
};

const IdInfo kIds[] = {
    {TheoremId::THM_MS, "THM_MS", "M"},
    {TheoremId::PROP_T1, "PROP_T1", "M, C, n"},
    {TheoremId::PROP_P3, "PROP_P3", "M, n"},
    {TheoremId::PROP_T13, "PROP_T13", "M, C, n"},
    {TheoremId::COR_C2, "COR_C2", "M, n"},
    {TheoremId::LEM_LEM2, "LEM_LEM2", "M, C"},
    {TheoremId::THM_TH5, "THM_TH5", "M, C, n"},
    {TheoremId::COR_COR7, "COR_COR7", "M, C, n"},
    {TheoremId::THM_THEOREM1, "THM_THEOREM1", "M"},
    {TheoremId::THM_THE1, "THM_THE1", "M"},
    {TheoremId::COR_THEOREM3, "COR_THEOREM3", "I, J (or M = R/I)"},
    {TheoremId::THM_PROP_EVEN, "THM_PROP_EVEN", "M, c1, c2, C, n (M1, M2 optional)"},
    {TheoremId::THM_TH1, "THM_TH1", "M, C, n"},
    {TheoremId::COR_COR5, "COR_COR5", "M, C"},
    {TheoremId::COR_COR6, "COR_COR6", "M, a, C"},
    {TheoremId::THM_COR3, "THM_COR3", "M"},
    {TheoremId::THM_TH2, "THM_TH2", "M, C"},
    {TheoremId::COR_SELF, "COR_SELF", "M, C"},
    {TheoremId::THM_TH3, "THM_TH3", "M, C"},
    {TheoremId::THM_TH6, "THM_TH6", "M, C"},
    {TheoremId::PROP_XTM, "PROP_XTM", "M, C"},
    {TheoremId::THM_TH4, "THM_TH4", "M, C"},
    {TheoremId::THM_TH7, "THM_TH7", "M, C"},
    {TheoremId::COR_COR1, "COR_COR1", "M"},
    {TheoremId::COR_COR4, "COR_COR4", "M"},
    {TheoremId::REMARK3_I, "REMARK3_I", "M, C"},
    {TheoremId::G3_AB_FORMULA, "G3_AB_FORMULA", "M, C"},
};

const IdInfo& info(TheoremId id) {
  for (const auto& i : kIds)
    if (i.id == id) return i;
  throw std::logic_error("unknown theorem id");
}

// ---------------------------------------------------------------- memoization

std::mutex g_memo_mu;
std::vector<std::function<void()>>& memo_clearers() {
  static std::vector<std::function<void()>> c;
  return c;
}

template <class T>
std::map<std::string, T>& memo_store() {
  static std::map<std::string, T>* store = [] {
    auto* s = new std::map<std::string, T>();
    memo_clearers().push_back([s] { s->clear(); });
    return s;
  }();
  return *store;
}

template <class T, class F>
T memoize(const std::string& key, F&& f) {
  {
    std::lock_guard<std::mutex> lock(g_memo_mu);
    auto& s = memo_store<T>();
    auto it = s.find(key);
    if (it != s.end()) return it->second;
  }
  T v = f();
  std::lock_guard<std::mutex> lock(g_memo_mu);
  memo_store<T>().emplace(key, v);
  return v;
}

std::string mkey(const ModulePresentation& m) {
  std::string k = fault_skip_minimalize() ? "F|" : "|";
  k += m.ring().key() + "|g";
  for (int a : m.gen_twists()) k += std::to_string(a) + ",";
  k += "|r";
  for (int a : m.rel_twists()) k += std::to_string(a) + ",";
  return k + "|" + m.to_string();
}

// ---------------------------------------------------------------- facts and claims

int rank_of(Quality q) { return static_cast<int>(q); }
Quality worst(Quality a, Quality b) { return rank_of(a) >= rank_of(b) ? a : b; }

std::string fact_str(const std::string& name, const Fact& f) {
  std::string s = name + " = ";
  s += f.known() ? (f.value ? "true" : "false") : "?";
  s += " (" + std::string(quality_name(f.quality)) + ")";
  if (!f.note.empty()) s += " [" + f.note + "]";
  return s;
}

Fact f_not(Fact f) {
  f.value = !f.value;
  return f;
}

Fact f_and(const std::vector<Fact>& fs) {
  for (const auto& f : fs)
    if (f.known() && !f.value && f.quality == Quality::Exact) return f;
  for (const auto& f : fs)
    if (!f.known()) return f;
  Fact out = Fact::exact(true);
  bool any_false = false;
  for (const auto& f : fs) {
    if (!f.value) {
      if (!any_false) out = f;
      any_false = true;
      continue;
    }
    if (!any_false) out.quality = worst(out.quality, f.quality);
  }
  if (!any_false) {
    std::string notes;
    for (const auto& f : fs)
      if (!f.note.empty()) notes += (notes.empty() ? "" : "; ") + f.note;
    out.note = notes;
  }
  return out;
}

Fact exact_cmp(bool v, const std::string& note) { return Fact::exact(v, note); }

using Side = std::pair<std::string, Fact>;

ClaimResult equiv(std::string name, const std::vector<Side>& sides) {
  ClaimResult c;
  c.claim = std::move(name);
  for (const auto& s : sides) c.detail += (c.detail.empty() ? "" : "; ") + fact_str(s.first, s.second);
  bool any_true = false, any_false = false, exact_true = false, exact_false = false, unknown = false;
  Quality q = Quality::Exact;
  for (const auto& [n, f] : sides) {
    if (!f.known()) {
      unknown = true;
      continue;
    }
    q = worst(q, f.quality);
    if (f.value) {
      any_true = true;
      exact_true |= f.quality == Quality::Exact;
    } else {
      any_false = true;
      exact_false |= f.quality == Quality::Exact;
    }
  }
  if (any_true && any_false) {
    c.outcome = ClaimResult::Outcome::Fails;
    c.exact_failure = exact_true && exact_false;
    c.quality = c.exact_failure ? Quality::Exact : q;
    return c;
  }
  if (unknown) {
    c.outcome = ClaimResult::Outcome::Undetermined;
    return c;
  }
  c.outcome = ClaimResult::Outcome::Holds;
  c.quality = q;
  return c;
}

ClaimResult implies(std::string name, const Side& a, const Side& b) {
  ClaimResult c;
  c.claim = std::move(name);
  c.detail = fact_str(a.first, a.second) + "; " + fact_str(b.first, b.second);
  const Fact& fa = a.second;
  const Fact& fb = b.second;
  if (fa.known() && !fa.value) {
    c.outcome = ClaimResult::Outcome::Holds;
    c.quality = fa.quality;
  } else if (fb.known() && fb.value) {
    c.outcome = ClaimResult::Outcome::Holds;
    c.quality = fb.quality;
  } else if (fa.known() && fb.known()) {
    c.outcome = ClaimResult::Outcome::Fails;
    c.exact_failure = fa.quality == Quality::Exact && fb.quality == Quality::Exact;
    c.quality = worst(fa.quality, fb.quality);
  } else {
    c.outcome = ClaimResult::Outcome::Undetermined;
  }
  return c;
}

ClaimResult holds(std::string name, const Fact& f) {
  ClaimResult c;
  c.claim = std::move(name);
  c.detail = fact_str(c.claim, f);
  if (!f.known()) {
    c.outcome = ClaimResult::Outcome::Undetermined;
  } else if (f.value) {
    c.outcome = ClaimResult::Outcome::Holds;
    c.quality = f.quality;
  } else {
    c.outcome = ClaimResult::Outcome::Fails;
    c.exact_failure = f.quality == Quality::Exact;
    c.quality = f.quality;
  }
  return c;
}

ClaimResult degrade(ClaimResult c, Quality q) {
  if (c.outcome == ClaimResult::Outcome::Holds) c.quality = worst(c.quality, q);
  if (c.outcome == ClaimResult::Outcome::Fails && q != Quality::Exact && c.exact_failure) {
    // the guarding condition itself is only bounded
    c.quality = worst(c.quality, q);
  }
  return c;
}

HypothesisStatus status_of(std::string name, const Fact& f, int bound) {
  HypothesisStatus h;
  h.hypothesis = std::move(name);
  h.note = f.note;
  if (!f.known()) {
    h.state = HypothesisState::Unknown;
  } else if (!f.value) {
    h.state = HypothesisState::Failed;
  } else if (f.quality == Quality::Exact) {
    h.state = HypothesisState::Exact;
  } else if (f.quality == Quality::Bounded) {
    h.state = HypothesisState::BoundedTrue;
    h.bound = bound;
  } else {
    h.state = HypothesisState::ProbeVerified;
  }
  return h;
}

struct MissingBinding : StructuralError {
  using StructuralError::StructuralError;
};

struct HypothesisStop {};

// ---------------------------------------------------------------- module-level helpers

ModulePresentation ring_module(const GradedRing& r) { return ModulePresentation::free(r, {0}); }

bool free_rank_one(const ModulePresentation& c) {
  ModulePresentation m = minimalize(c);
  return m.num_gens() == 1 && m.num_rels() == 0;
}

ModulePresentation lam(const ModulePresentation& m) {
  return memoize<ModulePresentation>("lam" + mkey(m), [&] { return link(m); });
}

ModulePresentation tensor_min(const ModulePresentation& m, const ModulePresentation& c) {
  return memoize<ModulePresentation>("ten" + mkey(m) + "#" + mkey(c), [&] { return minimalize(tensor(m, c)); });
}

ModulePresentation canonical_of(const GradedRing& r) {
  return memoize<ModulePresentation>("omega|" + r.key(), [&] { return minimalize(canonical_module(r)); });
}

bool linked_exact(const ModulePresentation& m) {
  return memoize<bool>("hl" + mkey(m), [&] {
    return is_stable(m).stable && ext_is_zero(transpose(m), ring_module(m.ring()), 1);
  });
}

int depth_of(const ModulePresentation& m) {
  return memoize<int>("depth" + mkey(m), [&] { return depth(m); });
}

bool pd_finite(const ModulePresentation& m) {
  if (m.is_zero()) return true;
  return memoize<bool>("pd" + mkey(m), [&] {
    const auto len = static_cast<std::size_t>(std::max(0, m.ring().invariants().depth) + 1);
    return minimal_free_resolution(m, len).finite;
  });
}

ModulePresentation ideal_quotient_module(const GradedRing& r, const std::vector<Poly>& ideal) {
  return ModulePresentation::cyclic(r, ideal);
}

/// M/JM for an ideal J of R.
ModulePresentation mod_ideal(const ModulePresentation& m, const std::vector<Poly>& j) {
  const GradedRing& r = m.ring();
  std::vector<int> rels = m.rel_twists();
  std::vector<std::vector<Poly>> cols;
  for (std::size_t c = 0; c < m.num_rels(); ++c) cols.push_back(m.matrix().column(c));
  for (std::size_t i = 0; i < m.num_gens(); ++i)
    for (const auto& g : j) {
      Poly q = r.reduce(g);
      if (q.is_zero()) continue;
      std::vector<Poly> col(m.num_gens());
      col[i] = q;
      cols.push_back(col);
      rels.push_back(m.gen_twists()[i] + q.degree());
    }
  return ModulePresentation(r, m.gen_twists(), rels, Matrix::from_columns(m.num_gens(), cols));
}

/// A module over R/c re-presented over R.
ModulePresentation pullback(const ModulePresentation& m, const GradedRing& r, const std::vector<Poly>& c) {
  ModulePresentation over_r = change_ring(m, r);
  return minimalize(mod_ideal(over_r, c));
}

bool cm_of_dim(const ModulePresentation& m, int d) {
  return !m.is_zero() && is_cohen_macaulay(m) && krull_dim(m) == d;
}

// ---------------------------------------------------------------- check context

struct Ctx {
  const Bindings& b;
  const HarnessConfig& cfg;
  TheoremReport& rep;
  GradedRing r;
  int bound = 0;
  std::optional<ModulePresentation> c_cache;

  Ctx(const Bindings& bb, const HarnessConfig& cc, TheoremReport& rr) : b(bb), cfg(cc), rep(rr) {
    if (b.m) r = b.m->ring();
    else if (b.ring) r = *b.ring;
    else if (b.m1) r = b.m1->ring();
    else throw MissingBinding(std::string(info(rep.id).name) + ": no module or ring bound");
    bound = cfg.bound < 0 ? default_bound(r) : cfg.bound;
  }

  const ModulePresentation& M() const {
    if (!b.m) throw MissingBinding(std::string(info(rep.id).name) + ": binding M is missing");
    return *b.m;
  }
  const ModulePresentation& C() {
    if (!c_cache) {
      c_cache = b.c ? *b.c : ring_module(r);
      require_same_ring(c_cache->ring(), r, "check");
    }
    return *c_cache;
  }
  const std::vector<Poly>& ideal(const char* name) const {
    if (b.ideal.empty()) throw MissingBinding(std::string(info(rep.id).name) + ": binding " + name + " is missing");
    return b.ideal;
  }
  std::vector<int> ns() const {
    if (b.n) return {*b.n};
    std::vector<int> out;
    for (int n = 1; n <= cfg.n_max; ++n) out.push_back(n);
    return out;
  }
  int d() const { return r.invariants().dim; }
  int depth_r() const { return r.invariants().depth; }

  /// Records a hypothesis; stops the check when it does not hold.
  void hyp(const std::string& name, const Fact& f) {
    rep.hypotheses.push_back(status_of(name, f, bound));
    if (!f.known() || !f.value) throw HypothesisStop{};
  }
  /// Records a conditional hypothesis and reports whether it may be used.
  bool cond(const std::string& name, const Fact& f) {
    HypothesisStatus h = status_of(name, f, bound);
    h.conditional = true;
    rep.hypotheses.push_back(h);
    return f.known() && f.value;
  }
  void claim(ClaimResult c) { rep.claims.push_back(std::move(c)); }

  std::vector<ProbePrime> probes() const {
    std::vector<ProbePrime> p = default_probe_primes(r);
    p.insert(p.end(), cfg.extra_probes.begin(), cfg.extra_probes.end());
    return p;
  }
  bool is_max_ideal(const ProbePrime& p) const {
    return p.variables && static_cast<int>(p.variables->size()) == r.num_vars();
  }
  int depth_r_at(const ProbePrime& p) const { return depth_at_prime(ring_module(r), p); }

  // ----- shared facts

  Fact serre(const ModulePresentation& m, int k) const {
    std::string key = "serre" + std::to_string(k) + mkey(m);
    for (const auto& p : cfg.extra_probes) key += "+" + p.label;
    return memoize<Fact>(key, [&] { return Fact::from(serre_tilde(m, k, cfg.extra_probes)); });
  }
  Fact semidualizing() {
    if (free_rank_one(C())) return Fact::exact(true, "C is free of rank one");
    return memoize<Fact>("sd" + std::to_string(bound) + mkey(C()), [&] {
      SemidualizingCertificate cert = is_semidualizing(C(), bound);
      if (!cert.homothety_bijective) return Fact::exact(false, "homothety R -> Hom(C,C) is not bijective");
      Fact f = Fact::from(cert.ext_vanishing);
      if (f.quality == Quality::Exact && f.value) f.note = "Ext^i(C,C) = 0 for all i > 0";
      return f;
    });
  }
  bool canonical() { return is_canonical_module(C()); }

  GcDimVerdict gcd(const ModulePresentation& m, const ModulePresentation& c) const {
    return memoize<GcDimVerdict>("gcd" + std::to_string(bound) + mkey(m) + "#" + mkey(c),
                                 [&] { return gc_dim(m, c, bound); });
  }
  /// Finiteness of G_C-dim M.
  Fact gc_finite(const ModulePresentation& m, const ModulePresentation& c) {
    if (c.ring().invariants().cohen_macaulay && is_canonical_module(c))
      return Fact::exact(true, "C is a canonical module");
    GcDimVerdict g = gcd(m, c);
    switch (g.kind) {
      case GcDimVerdict::Kind::Zero:
      case GcDimVerdict::Kind::Finite:
        return {true, g.note == "exact" ? Quality::Exact : Quality::Bounded,
                "G_C-dim = " + std::to_string(g.value)};
      case GcDimVerdict::Kind::Infinite:
        return Fact::exact(false, g.note);
      default:
        return Fact::unknown(g.note);
    }
  }
  /// G_C-dim M, assuming it is finite: depth R - depth M.
  int gc_value(const ModulePresentation& m) const {
    if (m.is_zero()) return 0;
    return depth_r() - depth_of(m);
  }
  Fact gc_zero(const ModulePresentation& m, const ModulePresentation& c) {
    return memoize<Fact>("gc0" + std::to_string(bound) + mkey(m) + "#" + mkey(c),
                         [&] { return Fact::from(gc_dim_zero(m, c, bound)); });
  }
  Fact in_a(const ModulePresentation& x, const ModulePresentation& c) {
    if (free_rank_one(c)) return Fact::exact(true, "every module is in A_R");
    if (pd_finite(x)) return Fact::exact(true, "finite projective dimension");
    return memoize<Fact>("inA" + std::to_string(bound) + mkey(x) + "#" + mkey(c), [&] {
      try {
        return Fact::from(in_auslander_class(x, c, bound));
      } catch (const Inapplicable& e) {
        return Fact::unknown(e.what());
      }
    });
  }
  Fact linked(const ModulePresentation& m) const { return Fact::exact(linked_exact(m)); }
  Fact ring_cm() const { return Fact::exact(r.invariants().cohen_macaulay); }

  /// R_p Gorenstein for every p with depth R_p <= k.
  Fact gorenstein_on_x(int k) {
    if (r.invariants().gorenstein) return Fact::exact(true, "R is Gorenstein");
    if (k >= depth_r()) return Fact::exact(false, "the maximal ideal lies in X^" + std::to_string(k));
    if (k == 0 && r.invariants().cohen_macaulay)
      return Fact::exact(is_first_syzygy(canonical_of(r)), "generically Gorenstein iff omega embeds in a free module");
    return Fact::unknown("Gorenstein locus on X^" + std::to_string(k) + " not computed");
  }
  /// G-dim(M_p) < infinity on X^k.
  Fact gdim_on_x(const ModulePresentation& m, int k) {
    Fact g = gorenstein_on_x(k);
    if (g.known() && g.value) return g;
    Fact f = gc_finite(m, ring_module(r));
    if (f.known() && f.value) {
      f.note = "G-dim M is finite globally";
      return f;
    }
    return g.known() ? g : f;
  }
  /// G_C-dim(M_p) < infinity on X^k.
  Fact gcdim_on_x(const ModulePresentation& m, int k) {
    if (r.invariants().cohen_macaulay && canonical()) return Fact::exact(true, "C is a canonical module");
    if (free_rank_one(C())) return gdim_on_x(m, k);
    Fact f = gc_finite(m, C());
    if (f.known() && f.value) return f;
    return Fact::unknown("G_C-dimension on X^" + std::to_string(k) + " undetermined");
  }
  /// id C_p < infinity on X^k.
  Fact injdim_on_x(int k) {
    if (r.invariants().cohen_macaulay && canonical()) return Fact::exact(true, "C is a canonical module");
    if (free_rank_one(C())) return gorenstein_on_x(k);
    return Fact::unknown("injective dimension of C on X^" + std::to_string(k) + " undetermined");
  }
  /// G-dim of lambda M finite (with C = R).
  Fact gdim_lambda(const ModulePresentation& l) {
    if (r.invariants().gorenstein) return Fact::exact(true, "R is Gorenstein");
    return gc_finite(l, ring_module(r));
  }
  /// rgr(X, C) >= n; exact once the bound covers n - 1.
  Fact rgr_at_least(const ModulePresentation& x, const ModulePresentation& c, int n) const {
    ReducedGrade g = memoize<ReducedGrade>("rgr" + std::to_string(bound) + mkey(x) + "#" + mkey(c),
                                           [&] { return reduced_grade(x, c, bound); });
    if (g.value) return Fact::exact(*g.value >= n, "rgr = " + std::to_string(*g.value));
    if (g.infinite_exact || g.bound >= n - 1) return Fact::exact(true, "rgr = " + g.to_string());
    return {true, Quality::Bounded, "rgr = " + g.to_string()};
  }
  ReducedGrade rgr(const ModulePresentation& x, const ModulePresentation& c) const {
    return memoize<ReducedGrade>("rgr" + std::to_string(bound) + mkey(x) + "#" + mkey(c),
                                 [&] { return reduced_grade(x, c, bound); });
  }
  Fact ext_zero_range(const ModulePresentation& x, const ModulePresentation& c, int lo, int hi) const {
    if (hi < lo) return Fact::exact(true, "empty range");
    BoundedVerdict v = ext_vanishes(x, c, lo, hi);
    return Fact::exact(!v.failed(), v.note);
  }
  /// No H^i_m(X) for lo < i < hi.
  Fact lc_vanish(const ModulePresentation& x, int lo, int hi) const {
    for (int i : local_cohomology_degrees(x))
      if (i > lo && i < hi) return Fact::exact(false, "H^" + std::to_string(i) + "_m != 0");
    return Fact::exact(true);
  }
  Fact nth_c_syzygy(const ModulePresentation& m, const ModulePresentation& c, int n) const {
    ModulePresentation x = m;
    for (int k = 1; k <= n; ++k) {
      Pushforward pf;
      try {
        pf = universal_pushforward(x, c);
      } catch (const Inapplicable&) {
        return Fact::exact(false, "cokernel " + std::to_string(k - 1) + " is not C-torsionless");
      }
      if (!pf.injective) return Fact::exact(false, "pushforward " + std::to_string(k) + " is not injective");
      x = minimalize(pf.cokernel);
    }
    return Fact::exact(true, "iterated universal pushforward");
  }
  /// X_p is not Cohen-Macaulay.
  bool non_cm_at(const ModulePresentation& x, const ProbePrime& p) const {
    const int dm = dim_at_prime(x, p);
    if (dm < 0) return false;
    return depth_at_prime(x, p) != dm;
  }
};

Fact sample(bool violated, std::size_t checked, const std::string& what) {
  if (violated) return Fact::exact(false, what);
  if (checked == 0) return Fact::exact(true, "no probe prime applies");
  return {true, Quality::Probe, std::to_string(checked) + " probe primes"};
}

// ---------------------------------------------------------------- checks

void check_ms(Ctx& x) {
  const auto& m = x.M();
  x.hyp("R is graded local (semiperfect)", Fact::exact(true));
  LinkageReport lr = is_horizontally_linked(m, x.cfg.iso);
  Fact a = Fact::exact(lr.verdict, "free rank " + std::to_string(lr.free_rank_stripped) + ", Ext^1(Tr M,R) " +
                                       (lr.syzygy_test ? "= 0" : "!= 0"));
  const bool summand = has_free_summand_by_trace(m);
  const bool syz = is_first_syzygy(m);
  Fact b = Fact::exact(!summand && syz, std::string(summand ? "free summand" : "no free summand") +
                                            (syz ? ", syzygy" : ", not a syzygy"));
  Fact c = lr.double_link_iso.resolved() ? Fact::exact(lr.double_link_iso.isomorphic())
                                         : Fact::unknown(lr.double_link_iso.note);
  x.claim(equiv("horizontal linkage criteria agree",
                {{"stable and Ext^1(Tr M,R)=0", a}, {"stable and a syzygy", b}, {"M = lambda^2 M", c}}));
}

void check_t1(Ctx& x) {
  const auto& m = x.M();
  x.hyp("C semidualizing", x.semidualizing());
  ModulePresentation trc = transpose_wrt(m, x.C());
  for (int n : x.ns()) {
    const std::string s = std::to_string(n);
    Side i{"Ext^i(Tr_C M,C)=0, 1<=i<=" + s, x.ext_zero_range(trc, x.C(), 1, n)};
    Side ii{"M is a " + s + "th C-syzygy", x.nth_c_syzygy(m, x.C(), n)};
    Side iii{"M satisfies S~_" + s, x.serre(m, n)};
    x.claim(implies("(i) => (ii), n=" + s, i, ii));
    x.claim(implies("(ii) => (iii), n=" + s, ii, iii));
    Fact gx = x.gcdim_on_x(m, n - 1);
    if (x.cond("finite G_C-dimension on X^" + std::to_string(n - 1), gx))
      x.claim(degrade(implies("(iii) => (i), n=" + s, iii, i), gx.quality));
  }
}

ModulePresentation omega_tensor(Ctx& x) { return tensor_min(x.M(), canonical_of(x.r)); }

void hyp_linked_cm(Ctx& x) {
  x.hyp("R Cohen-Macaulay", x.ring_cm());
  x.hyp("M horizontally linked", x.linked(x.M()));
}

void check_p3(Ctx& x) {
  hyp_linked_cm(x);
  ModulePresentation t = omega_tensor(x);
  x.hyp("M (x) omega satisfies (S_1)", x.serre(t, 1));
  const ModulePresentation l = lam(x.M());
  for (int n : x.ns()) {
    const std::string s = std::to_string(n);
    x.claim(equiv("n=" + s, {{"lambda M satisfies (S_" + s + ")", x.serre(l, n)},
                             {"H^i_m(M (x) omega)=0 for d-n<i<d", x.lc_vanish(t, x.d() - n, x.d())}}));
  }
}

void check_c2(Ctx& x) {
  hyp_linked_cm(x);
  ModulePresentation t = omega_tensor(x);
  x.hyp("M (x) omega satisfies (S_1)", x.serre(t, 1));
  const ModulePresentation l = lam(x.M());
  for (int n : x.ns()) {
    const std::string s = std::to_string(n);
    x.claim(equiv("n=" + s, {{"M (x) omega satisfies (S_" + s + ")", x.serre(t, n)},
                             {"H^i_m(lambda M)=0 for d-n<i<d", x.lc_vanish(l, x.d() - n, x.d())}}));
  }
}

void check_t13(Ctx& x) {
  const auto& m = x.M();
  x.hyp("C semidualizing", x.semidualizing());
  ModulePresentation t = tensor_min(m, x.C());
  ModulePresentation tr = transpose(m);
  for (int n : x.ns()) {
    const std::string s = std::to_string(n);
    Side i{"Ext^i(Tr M,C)=0, 1<=i<=" + s, x.ext_zero_range(tr, x.C(), 1, n)};
    Side ii{"M (x) C is a " + s + "th C-syzygy", x.nth_c_syzygy(t, x.C(), n)};
    Side iii{"M (x) C satisfies S~_" + s, x.serre(t, n)};
    x.claim(implies("(i) => (ii), n=" + s, i, ii));
    x.claim(implies("(ii) => (iii), n=" + s, ii, iii));
    Fact ix = x.injdim_on_x(n - 1);
    if (x.cond("C of finite injective dimension on X^" + std::to_string(n - 1), ix))
      x.claim(degrade(implies("(iii) => (i), n=" + s, iii, i), ix.quality));
  }
}

void check_lem2(Ctx& x) {
  const auto& m = x.M();
  x.hyp("C semidualizing", x.semidualizing());
  x.hyp("M in A_C", x.in_a(m, x.C()));
  ModulePresentation t = tensor_min(m, x.C());
  const int dm = depth_of(m), dt = depth_of(t);
  x.claim(holds("depth M = depth M (x) C",
                exact_cmp(dm == dt, std::to_string(dm) + " vs " + std::to_string(dt))));
  const int km = krull_dim(m), kt = krull_dim(t);
  x.claim(holds("dim M = dim M (x) C", exact_cmp(km == kt, std::to_string(km) + " vs " + std::to_string(kt))));
  for (int n : x.ns())
    x.claim(equiv("(S_" + std::to_string(n) + ") transfers", {{"M", x.serre(m, n)}, {"M (x) C", x.serre(t, n)}}));
  x.claim(equiv("Cohen-Macaulay transfers",
                {{"M CM", Fact::exact(is_cohen_macaulay(m))}, {"M (x) C CM", Fact::exact(is_cohen_macaulay(t))}}));
}

void check_th5(Ctx& x) {
  const auto& m = x.M();
  x.hyp("C semidualizing", x.semidualizing());
  x.hyp("M in A_C", x.in_a(m, x.C()));
  ModulePresentation t = tensor_min(m, x.C());
  ModulePresentation tr = transpose(m);
  for (int n : x.ns()) {
    const std::string s = std::to_string(n);
    Side i{"Ext^i(Tr M,R)=0, 1<=i<=" + s, x.ext_zero_range(tr, ring_module(x.r), 1, n)};
    Side ii{"Ext^i(Tr M,C)=0, 1<=i<=" + s, x.ext_zero_range(tr, x.C(), 1, n)};
    Side iii{"M (x) C satisfies S~_" + s, x.serre(t, n)};
    Side iv{"M satisfies S~_" + s, x.serre(m, n)};
    x.claim(implies("(i) => (ii), n=" + s, i, ii));
    x.claim(implies("(ii) => (iii), n=" + s, ii, iii));
    x.claim(equiv("(iii) <=> (iv), n=" + s, {iii, iv}));
    Fact g = x.gdim_on_x(m, n - 1);
    if (x.cond("finite G-dimension on X^" + std::to_string(n - 1), g))
      x.claim(degrade(implies("(iv) => (i), n=" + s, iv, i), g.quality));
  }
}

void check_cor7(Ctx& x) {
  const auto& m = x.M();
  x.hyp("C semidualizing", x.semidualizing());
  x.hyp("M stable", Fact::exact(is_stable(m).stable));
  x.hyp("M in A_C", x.in_a(m, x.C()));
  const std::vector<int> ns = x.ns();
  std::vector<int> usable;
  Quality q = Quality::Exact;
  for (int n : ns) {
    Fact g = x.gdim_on_x(m, n - 1);
    if (!g.known() || !g.value) {
      if (usable.empty()) x.hyp("finite G-dimension on X^" + std::to_string(n - 1), g);
      x.rep.note += "n >= " + std::to_string(n) + " skipped: G-dimension hypothesis fails on X^" +
                    std::to_string(n - 1) + ". ";
      break;
    }
    q = worst(q, g.quality);
    usable.push_back(n);
  }
  x.rep.hypotheses.push_back(
      status_of("finite G-dimension on X^" + std::to_string(usable.back() - 1), {true, q, ""}, x.bound));
  const ModulePresentation l = lam(m);
  Fact hl = x.linked(m);
  for (int n : usable) {
    const std::string s = std::to_string(n);
    Fact rhs = f_and({hl, x.ext_zero_range(l, x.C(), 1, n - 1)});
    x.claim(equiv("n=" + s, {{"M satisfies S~_" + s, x.serre(m, n)},
                             {"M linked and Ext^i(lambda M,C)=0 for 0<i<" + s, rhs}}));
  }
}

void check_theorem1(Ctx& x) {
  hyp_linked_cm(x);
  ModulePresentation t = omega_tensor(x);
  x.hyp("M (x) omega satisfies S~_1", x.serre(t, 1));
  const ModulePresentation l = lam(x.M());
  const int d = x.d();
  const int n0 = std::max(1, d - std::min(depth_of(l), d) + 1);
  const int n1 = std::max(1, d - std::min(depth_of(t), d) + 1);
  x.claim(equiv("four conditions agree",
                {{"M (x) omega mCM", Fact::exact(is_maximal_cm(t))},
                 {"lambda M mCM", Fact::exact(is_maximal_cm(l))},
                 {"M (x) omega satisfies (S_" + std::to_string(n0) + ")", x.serre(t, n0)},
                 {"lambda M satisfies (S_" + std::to_string(n1) + ")", x.serre(l, n1)}}));
}

/// Homogeneous generators of an ideal isomorphic to omega, if one is found.
std::optional<std::vector<Poly>> omega_ideal(const GradedRing& r, std::uint64_t seed) {
  ModulePresentation w = canonical_of(r);
  Subquotient h = hom(w, ring_module(r));
  const std::size_t g = w.num_gens(), k = h.module.num_gens();
  auto try_map = [&](const std::vector<Poly>& images, int deg) -> bool {
    Matrix f(1, g);
    for (std::size_t i = 0; i < g; ++i) f.at(0, i) = images[i];
    return kernel_of(w, ModulePresentation::free(r, {-deg}), f).module.is_zero();
  };
  std::map<int, std::vector<std::size_t>> by_degree;
  for (std::size_t a = 0; a < k; ++a) by_degree[h.module.gen_twists()[a]].push_back(a);
  std::mt19937_64 rng(seed);
  const Field& fld = r.field();
  for (const auto& [deg, idx] : by_degree) {
    for (int trial = 0; trial <= 8; ++trial) {
      std::vector<Poly> images(g);
      for (std::size_t pos = 0; pos < idx.size(); ++pos) {
        Scalar coef = trial == 0 ? Scalar(pos == 0 ? 1 : 0)
                                 : fld.normalize(Scalar(static_cast<long>(rng() % 19) - 9));
        if (trial == 0 && pos > 0) break;
        for (std::size_t i = 0; i < g; ++i)
          images[i] = add(fld, images[i], scale(fld, h.generators.at(i, idx[pos]), coef));
      }
      if (try_map(images, deg)) {
        std::vector<Poly> out;
        for (auto& p : images)
          if (!p.is_zero()) out.push_back(r.reduce(p));
        return out;
      }
    }
  }
  return std::nullopt;
}

void hyp_non_gorenstein_generic(Ctx& x) {
  x.hyp("R Cohen-Macaulay", x.ring_cm());
  x.hyp("R not Gorenstein", Fact::exact(!x.r.invariants().gorenstein));
  x.hyp("R generically Gorenstein", x.gorenstein_on_x(0));
}

std::vector<Poly> omega_ideal_hyp(Ctx& x) {
  auto w = omega_ideal(x.r, x.cfg.iso.seed);
  x.hyp("omega embeds as an ideal", w ? Fact::exact(true) : Fact::unknown("no injective map omega -> R found"));
  return *w;
}

void check_the1(Ctx& x) {
  const auto& m = x.M();
  hyp_non_gorenstein_generic(x);
  x.hyp("M maximal Cohen-Macaulay", Fact::exact(is_maximal_cm(m) && !m.is_zero()));
  x.hyp("M horizontally linked", x.linked(m));
  x.hyp("M (x) omega satisfies (S_1)", x.serre(omega_tensor(x), 1));
  std::vector<Poly> w = omega_ideal_hyp(x);
  ModulePresentation q = minimalize(mod_ideal(m, w));
  x.claim(equiv("(i) <=> (ii)", {{"lambda M mCM", Fact::exact(is_maximal_cm(lam(m)))},
                                 {"M/omega M CM of dimension d-1", Fact::exact(cm_of_dim(q, x.d() - 1))}}));
}

void check_theorem3(Ctx& x) {
  std::vector<Poly> i = x.b.ideal;
  if (i.empty() && x.b.m) {
    ModulePresentation mm = minimalize(*x.b.m);
    if (mm.num_gens() == 1) i = annihilator_generators(mm);
  }
  if (i.empty()) throw MissingBinding("COR_THEOREM3: binding I is missing");
  hyp_non_gorenstein_generic(x);
  ModulePresentation ri = ideal_quotient_module(x.r, i);
  std::vector<Poly> j = x.b.ideal2;
  if (j.empty()) j = annihilator_generators(lam(ri));
  ModulePresentation rj = ideal_quotient_module(x.r, j);
  x.hyp("R/I Cohen-Macaulay", Fact::exact(!ri.is_zero() && is_cohen_macaulay(ri)));
  IdealLinkVerdict v = linked_by_ideal(ri, rj, {}, x.cfg.iso);
  const bool resolved = v.m_to_lambda_n.resolved() && v.n_to_lambda_m.resolved();
  x.hyp("I and J linked by the zero ideal", resolved ? Fact::exact(v.verified, v.note) : Fact::unknown(v.note));
  std::vector<Poly> w = omega_ideal_hyp(x);
  ModulePresentation rw = ideal_quotient_module(x.r, w);
  x.hyp("I omega = I cap omega", Fact::exact(tor_is_zero(rw, ri, 1), "Tor_1(R/omega, R/I) = 0"));
  std::vector<Poly> iw = i;
  iw.insert(iw.end(), w.begin(), w.end());
  ModulePresentation riw = ideal_quotient_module(x.r, iw);
  x.claim(equiv("R/J CM <=> R/(I+omega) CM of dimension d-1",
                {{"R/J CM", Fact::exact(is_cohen_macaulay(rj))},
                 {"R/(I+omega) CM of dimension d-1", Fact::exact(cm_of_dim(riw, x.d() - 1))}}));
}

void check_even(Ctx& x) {
  const auto& m = x.M();
  const std::vector<Poly>& c1 = x.ideal("c1");
  const std::vector<Poly>& c2 = x.b.ideal2.empty() ? c1 : x.b.ideal2;
  auto linked_over = [&](const std::vector<Poly>& c) {
    GradedRing q = quotient_ring(x.r, c);
    return pullback(link(minimalize(change_ring(m, q))), x.r, c);
  };
  ModulePresentation m1 = x.b.m1 ? *x.b.m1 : linked_over(c1);
  ModulePresentation m2 = x.b.m2 ? *x.b.m2 : linked_over(c2);
  x.hyp("C semidualizing", x.semidualizing());
  x.hyp("c1 G_C-Gorenstein", Fact::from(is_gc_gorenstein(x.r, c1, x.C(), x.bound)));
  x.hyp("c2 G_C-Gorenstein", Fact::from(is_gc_gorenstein(x.r, c2, x.C(), x.bound)));
  auto link_fact = [&](const ModulePresentation& a, const ModulePresentation& b, const std::vector<Poly>& c) {
    try {
      IdealLinkVerdict v = linked_by_ideal(a, b, c, x.cfg.iso);
      if (!v.m_to_lambda_n.resolved() || !v.n_to_lambda_m.resolved()) return Fact::unknown(v.note);
      return Fact::exact(v.verified, v.note);
    } catch (const Inapplicable& e) {
      return Fact::exact(false, e.what());
    }
  };
  x.hyp("M1 ~c1 M", link_fact(m1, m, c1));
  x.hyp("M ~c2 M2", link_fact(m, m2, c2));
  x.hyp("G_C-dim M finite", x.gc_finite(m, x.C()));
  for (int n : x.ns())
    x.claim(equiv("S~_" + std::to_string(n) + " transfers", {{"M1", x.serre(m1, n)}, {"M2", x.serre(m2, n)}}));
  if (x.r.invariants().cohen_macaulay)
    x.claim(equiv("Cohen-Macaulay transfers",
                  {{"M1 CM", Fact::exact(is_cohen_macaulay(m1))}, {"M2 CM", Fact::exact(is_cohen_macaulay(m2))}}));
}

void hyp_th_common(Ctx& x, bool need_stable) {
  const auto& m = x.M();
  x.hyp("C semidualizing", x.semidualizing());
  if (need_stable) x.hyp("M stable", Fact::exact(is_stable(m).stable));
  else x.hyp("M horizontally linked", x.linked(m));
  x.hyp("G_C-dim M finite", x.gc_finite(m, x.C()));
  x.hyp("lambda M in A_C", x.in_a(lam(m), x.C()));
}

void check_th1(Ctx& x) {
  const auto& m = x.M();
  hyp_th_common(x, true);
  const ModulePresentation l = lam(m);
  const ModulePresentation r1 = ring_module(x.r);
  Fact hl = x.linked(m);
  for (int n : x.ns()) {
    const std::string s = std::to_string(n);
    x.claim(equiv("(i) n=" + s, {{"M satisfies S~_" + s, x.serre(m, n)},
                                 {"M linked and rgr(lambda M) >= " + s, f_and({hl, x.rgr_at_least(l, r1, n)})}}));
    if (hl.value)
      x.claim(equiv("(ii) n=" + s, {{"rgr(M,C) >= " + s, x.rgr_at_least(m, x.C(), n)},
                                    {"lambda M satisfies S~_" + s, x.serre(l, n)}}));
  }
}

void check_cor5(Ctx& x) {
  const auto& m = x.M();
  x.hyp("R Cohen-Macaulay", x.ring_cm());
  hyp_th_common(x, true);
  const ModulePresentation l = lam(m);
  Fact hl = x.linked(m);
  const int d = x.d();
  const int n0 = std::max(1, d - std::min(depth_of(m), d) + 1);
  x.claim(equiv("three conditions agree",
                {{"M mCM", Fact::exact(is_maximal_cm(m))},
                 {"lambda M mCM and M linked", f_and({Fact::exact(is_maximal_cm(l)), hl})},
                 {"lambda M satisfies (S_" + std::to_string(n0) + ") and M linked", f_and({x.serre(l, n0), hl})}}));
}

void check_cor6(Ctx& x) {
  const auto& m = x.M();
  const std::vector<Poly>& a = x.ideal("a");
  x.hyp("R Cohen-Macaulay", x.ring_cm());
  x.hyp("C semidualizing", x.semidualizing());
  x.hyp("G_C-dim M finite", x.gc_finite(m, x.C()));
  x.hyp("a G_C-perfect", Fact::from(is_gc_perfect(x.r, a, x.C(), x.bound)));
  GradedRing q = quotient_ring(x.r, a);
  bool annihilated = true;
  for (const auto& g : a) {
    ModulePresentation test = minimalize(mod_ideal(m, {g}));
    if (test.hilbert_series() != m.hilbert_series()) annihilated = false;
  }
  x.hyp("a annihilates M", Fact::exact(annihilated));
  ModulePresentation mq = minimalize(change_ring(m, q));
  x.hyp("M horizontally linked over R/a", x.linked(mq));
  ModulePresentation lq = link(mq);
  auto [k, cert] = induced_semidualizing(x.r, a, x.C(), x.bound);
  x.hyp("lambda_{R/a} M in A_K", x.in_a(lq, k));
  x.claim(equiv("M CM <=> lambda_{R/a} M CM",
                {{"M CM", Fact::exact(is_cohen_macaulay(m))}, {"lambda_{R/a} M CM", Fact::exact(is_cohen_macaulay(lq))}}));
}

void hyp_noncm_linked(Ctx& x) {
  const auto& m = x.M();
  hyp_linked_cm(x);
  x.hyp("M not Cohen-Macaulay", Fact::exact(!is_cohen_macaulay(m)));
  x.hyp("G-dim lambda M finite", x.gdim_lambda(lam(m)));
}

void check_cor3(Ctx& x) {
  const auto& m = x.M();
  hyp_noncm_linked(x);
  const ModulePresentation l = lam(m);
  const int d = x.d(), n = x.r.num_vars();
  const int c = cc(m);
  const auto& prof = ambient_ext_profile(m);
  const int e = prof[static_cast<std::size_t>(n - c)].hilbert_series().dimension();
  Fact fin = Fact::exact(e <= 0, "dim Ext^" + std::to_string(n - c) + "_S(M,S) = " + std::to_string(e));
  const int dl = depth_of(l);
  bool violated = false;
  std::size_t checked = 0;
  std::string what;
  for (const auto& p : x.probes()) {
    if (x.is_max_ideal(p) || !x.non_cm_at(m, p)) continue;
    ++checked;
    const int v = depth_at_prime(l, p);
    if (v + c <= d) {
      violated = true;
      what = "depth of lambda M at " + p.label + " is " + std::to_string(v);
      break;
    }
  }
  Fact ii = f_and({Fact::exact(dl + c == d, "depth lambda M = " + std::to_string(dl) + ", cc = " + std::to_string(c)),
                   sample(violated, checked, what)});
  x.claim(equiv("(i) <=> (ii)", {{"H^cc_m(M) finitely generated", fin}, {"depth identity and probe inequalities", ii}}));
}

/// depth M_p + depth (lambda M)_p > depth R_p off X^0, or 2 depth M_p > depth R_p.
Fact depth_sum_probe(Ctx& x, const ModulePresentation& m, const ModulePresentation& l, bool self) {
  bool violated = false;
  std::size_t checked = 0;
  std::string what;
  for (const auto& p : x.probes()) {
    const int dr = x.depth_r_at(p);
    if (dr <= 0) continue;
    ++checked;
    const long dm = depth_at_prime(m, p);
    const long dl = self ? dm : depth_at_prime(l, p);
    if (dm + dl <= dr) {
      violated = true;
      what = "at " + p.label + ": " + std::to_string(dm) + " + " + std::to_string(dl) + " <= " + std::to_string(dr);
      break;
    }
  }
  return sample(violated, checked, what);
}

void check_th2(Ctx& x) {
  const auto& m = x.M();
  hyp_th_common(x, false);
  x.claim(equiv("G_C-dim M = 0 <=> depth inequality off X^0",
                {{"G_C-dim M = 0", x.gc_zero(m, x.C())}, {"depth M_p + depth (lambda M)_p > depth R_p",
                                                          depth_sum_probe(x, m, lam(m), false)}}));
}

void check_self(Ctx& x) {
  const auto& m = x.M();
  x.hyp("C semidualizing", x.semidualizing());
  IsoVerdict v = is_self_linked(m, x.cfg.iso);
  x.hyp("M horizontally self-linked", v.resolved() ? Fact::exact(v.isomorphic(), v.note) : Fact::unknown(v.note));
  x.hyp("G_C-dim M finite", x.gc_finite(m, x.C()));
  x.hyp("M in A_C", x.in_a(m, x.C()));
  x.claim(equiv("G_C-dim M = 0 <=> depth M_p > depth R_p / 2 off X^0",
                {{"G_C-dim M = 0", x.gc_zero(m, x.C())}, {"2 depth M_p > depth R_p", depth_sum_probe(x, m, m, true)}}));
}

void hyp_positive_gc(Ctx& x) {
  hyp_th_common(x, false);
  const int g = x.gc_value(x.M());
  x.hyp("G_C-dim M > 0", Fact::exact(g > 0, "G_C-dim = " + std::to_string(g)));
}

/// p in ng(M): M_p nonzero with positive G_C-dimension (depth M_p < depth R_p).
bool in_ng(Ctx& x, const ModulePresentation& m, const ProbePrime& p) {
  const int dm = depth_at_prime(m, p);
  return dm != kInfiniteDepth && dm < x.depth_r_at(p);
}

void check_th3(Ctx& x) {
  const auto& m = x.M();
  hyp_positive_gc(x);
  const ModulePresentation l = lam(m);
  ReducedGrade rl = x.rgr(l, ring_module(x.r));
  x.hyp("rgr(lambda M) finite", rl.value ? Fact::exact(true, "rgr = " + std::to_string(*rl.value))
                                         : Fact::unknown("rgr(lambda M) = " + rl.to_string()));
  const int t = *rl.value;
  const int syz = n_torsionfree_degree(m, x.bound);
  const int dm = depth_of(m);
  x.rep.note += "syz(M) is computed as the torsion-free degree max{n : Ext^i(Tr M,R)=0, 1<=i<=n}, which equals it "
                "for modules of finite G-dimension. ";
  Fact i = Fact::exact(dm == syz && syz == t, "depth " + std::to_string(dm) + ", syz " + std::to_string(syz) +
                                                  ", rgr(lambda M) " + std::to_string(t));
  Fact ii = Fact::exact(m_in_ass(minimalize(ext(l, ring_module(x.r), t))), "socle test");
  bool violated = false;
  std::size_t checked = 0;
  std::string what;
  for (const auto& p : x.probes()) {
    if (!in_ng(x, m, p)) continue;
    ++checked;
    const int v = depth_at_prime(m, p);
    if (dm > v) {
      violated = true;
      what = "depth M_p = " + std::to_string(v) + " at " + p.label;
      break;
    }
  }
  x.claim(equiv("(i) <=> (ii) <=> (iii)", {{"depth M = syz M = rgr(lambda M)", i},
                                           {"m in Ass Ext^rgr(lambda M, R)", ii},
                                           {"depth M <= depth M_p on ng(M)", sample(violated, checked, what)}}));
  x.claim(holds("rgr(lambda M) <= syz M <= depth M", Fact::exact(t <= syz && syz <= dm)));
}

void check_th6(Ctx& x) {
  const auto& m = x.M();
  hyp_th_common(x, false);
  const ModulePresentation l = lam(m);
  ReducedGrade rc = x.rgr(m, x.C());
  std::optional<int> inf;
  std::string where;
  std::size_t checked = 0;
  bool below = false;
  for (const auto& p : x.probes()) {
    if (!in_ng(x, m, p)) continue;
    ++checked;
    const int v = depth_at_prime(l, p);
    if (!inf || v < *inf) {
      inf = v;
      where = p.label;
    }
    if (rc.value && v < *rc.value) below = true;
  }
  ClaimResult c;
  c.claim = "rgr(M,C) = inf depth (lambda M)_p over ng(M)";
  c.detail = "rgr(M,C) = " + rc.to_string() + ", probe infimum = " + (inf ? std::to_string(*inf) + " at " + where : "none") +
             " over " + std::to_string(checked) + " probes";
  if (below) {
    c.outcome = ClaimResult::Outcome::Fails;
    c.exact_failure = true;
    c.quality = Quality::Exact;
  } else if (rc.value && inf && *inf == *rc.value) {
    c.outcome = ClaimResult::Outcome::Holds;
    c.quality = Quality::Exact;
  } else if (!rc.value && !inf) {
    c.outcome = ClaimResult::Outcome::Holds;
    c.quality = rc.infinite_exact ? Quality::Exact : Quality::Bounded;
  } else if (!rc.value) {
    c.outcome = ClaimResult::Outcome::Undetermined;
  } else {
    c.outcome = ClaimResult::Outcome::Holds;
    c.quality = Quality::Probe;
  }
  x.claim(c);
  ReducedGrade rr = x.rgr(m, ring_module(x.r));
  auto as_num = [](const ReducedGrade& g) { return g.value ? static_cast<long>(*g.value) : long{1} << 40; };
  const bool le = as_num(rr) <= as_num(rc);
  const bool both_known = rr.value.has_value() && rc.value.has_value();
  x.claim(holds("rgr(M) <= rgr(M,C)", {le, both_known || !le ? Quality::Exact : Quality::Bounded,
                                       rr.to_string() + " vs " + rc.to_string()}));
  if (pd_finite(l)) {
    const bool eq = as_num(rr) == as_num(rc);
    x.claim(holds("rgr(M) = rgr(M,C) when pd lambda M < inf",
                  {eq, both_known ? Quality::Exact : Quality::Bounded, rr.to_string() + " vs " + rc.to_string()}));
  }
}

void check_xtm(Ctx& x) {
  const auto& m = x.M();
  hyp_positive_gc(x);
  const ModulePresentation l = lam(m);
  ReducedGrade rc = x.rgr(m, x.C());
  ReducedGrade rl = x.rgr(l, ring_module(x.r));
  x.hyp("t_M finite", rc.value && rl.value ? Fact::exact(true) : Fact::unknown("rgr(M,C) = " + rc.to_string() +
                                                                               ", rgr(lambda M) = " + rl.to_string()));
  const int t = *rc.value + *rl.value;
  bool violated = false;
  std::size_t checked = 0;
  std::string what;
  for (const auto& p : x.probes()) {
    const int dr = x.depth_r_at(p);
    if (dr > t - 1) continue;
    ++checked;
    if (in_ng(x, m, p)) {
      violated = true;
      what = "G_C-dim of M at " + p.label + " is positive";
      break;
    }
  }
  x.claim(holds("G_C-dim M_p = 0 on X^" + std::to_string(t - 1), sample(violated, checked, what)));
}

void check_th4(Ctx& x) {
  const auto& m = x.M();
  x.hyp("R Cohen-Macaulay", x.ring_cm());
  x.hyp("C semidualizing", x.semidualizing());
  x.hyp("M reduced G_C-perfect", Fact::from(is_reduced_gc_perfect(m, x.C(), x.bound)));
  const ModulePresentation l = lam(m);
  x.hyp("lambda M in A_C", x.in_a(l, x.C()));
  const int n = x.gc_value(m);
  ModulePresentation e = minimalize(ext(m, x.C(), n));
  const int dm = depth_of(m), dl = depth_of(l), de = depth_of(e);
  x.claim(holds("depth M + depth lambda M = depth R + depth Ext^n(M,C)",
                Fact::exact(dm + dl == x.depth_r() + de, std::to_string(dm) + " + " + std::to_string(dl) + " vs " +
                                                             std::to_string(x.depth_r()) + " + " + std::to_string(de))));
}

void check_th7(Ctx& x) {
  const auto& m = x.M();
  hyp_positive_gc(x);
  const int n = x.gc_value(m);
  ReducedGrade rc = x.rgr(m, x.C());
  Fact perfect = Fact::exact(rc.value && *rc.value == n, "rgr(M,C) = " + rc.to_string() + ", G_C-dim = " +
                                                             std::to_string(n));
  if (!rc.value && rc.bound < n) perfect = Fact::unknown("bound below G_C-dim");
  x.claim(equiv("reduced G_C-perfect <=> lambda M satisfies S~_n",
                {{"M reduced G_C-perfect", perfect}, {"lambda M satisfies S~_" + std::to_string(n), x.serre(lam(m), n)}}));
}

void check_cor1(Ctx& x) {
  const auto& m = x.M();
  hyp_linked_cm(x);
  const int n = depth_of(m), d = x.d();
  x.hyp("depth M < d", Fact::exact(n < d, "depth M = " + std::to_string(n)));
  x.hyp("G-dim lambda M finite", x.gdim_lambda(lam(m)));
  x.claim(equiv("Eilenberg-Maclane <=> lambda M satisfies S~_{d-n}",
                {{"M Eilenberg-Maclane", Fact::exact(is_eilenberg_maclane(m))},
                 {"lambda M satisfies S~_" + std::to_string(d - n), x.serre(lam(m), d - n)}}));
}

void check_cor4(Ctx& x) {
  const auto& m = x.M();
  hyp_noncm_linked(x);
  x.hyp("M Eilenberg-Maclane", Fact::exact(is_eilenberg_maclane(m)));
  const ModulePresentation l = lam(m);
  const int d = x.d(), dm = depth_of(m), dl = depth_of(l);
  bool violated = false;
  std::size_t checked = 0;
  std::string what;
  for (const auto& p : x.probes()) {
    if (x.is_max_ideal(p) || !x.non_cm_at(m, p)) continue;
    ++checked;
    const int v = depth_at_prime(l, p);
    if (v + dm <= d) {
      violated = true;
      what = "depth of lambda M at " + p.label + " is " + std::to_string(v);
      break;
    }
  }
  Fact rhs = f_and({Fact::exact(dl + dm == d, std::to_string(dl) + " + " + std::to_string(dm)),
                    sample(violated, checked, what)});
  x.claim(equiv("generalized CM <=> depth identity and probe inequalities",
                {{"M generalized CM", Fact::exact(is_generalized_cm(m))}, {"depth conditions", rhs}}));
}

void check_remark3(Ctx& x) {
  const auto& m = x.M();
  x.hyp("C semidualizing", x.semidualizing());
  IsoVerdict v = is_isomorphic(tensor(transpose(m), x.C()), transpose_wrt(m, x.C()), x.cfg.iso);
  x.claim(holds("Tr M (x) C = Tr_C M", v.resolved() ? Fact::exact(v.isomorphic(), v.note) : Fact::unknown(v.note)));
}

void check_ab(Ctx& x) {
  const auto& m = x.M();
  x.hyp("C semidualizing", x.semidualizing());
  x.hyp("M nonzero", Fact::exact(!m.is_zero()));
  x.hyp("G_C-dim M finite", x.gc_finite(m, x.C()));
  const int r = x.gc_value(m);
  const int b = std::max(x.bound, r + 1);
  int sup = -1;
  for (int i = 0; i <= b; ++i)
    if (!ext_is_zero(m, x.C(), i)) sup = i;
  const bool finite_res = minimal_free_resolution(m, static_cast<std::size_t>(b) + 1).finite;
  const std::string detail = "sup{i : Ext^i(M,C) != 0, i <= " + std::to_string(b) + "} = " + std::to_string(sup) +
                             ", depth R - depth M = " + std::to_string(r);
  Fact eq = sup == r ? Fact{true, finite_res ? Quality::Exact : Quality::Bounded, detail} : Fact::exact(false, detail);
  x.claim(holds("sup{i : Ext^i(M,C) != 0} = depth R - depth M", eq));
  if (r > 0) {
    Fact z = x.gc_zero(syzygy(m, r - 1), x.C());
    x.claim(holds("syzygy " + std::to_string(r - 1) + " has positive G_C-dimension", f_not(z)));
  }
}

void dispatch(Ctx& x) {
  switch (x.rep.id) {
    case TheoremId::THM_MS: return check_ms(x);
    case TheoremId::PROP_T1: return check_t1(x);
    case TheoremId::PROP_P3: return check_p3(x);
    case TheoremId::PROP_T13: return check_t13(x);
    case TheoremId::COR_C2: return check_c2(x);
    case TheoremId::LEM_LEM2: return check_lem2(x);
    case TheoremId::THM_TH5: return check_th5(x);
    case TheoremId::COR_COR7: return check_cor7(x);
    case TheoremId::THM_THEOREM1: return check_theorem1(x);
    case TheoremId::THM_THE1: return check_the1(x);
    case TheoremId::COR_THEOREM3: return check_theorem3(x);
    case TheoremId::THM_PROP_EVEN: return check_even(x);
    case TheoremId::THM_TH1: return check_th1(x);
    case TheoremId::COR_COR5: return check_cor5(x);
    case TheoremId::COR_COR6: return check_cor6(x);
    case TheoremId::THM_COR3: return check_cor3(x);
    case TheoremId::THM_TH2: return check_th2(x);
    case TheoremId::COR_SELF: return check_self(x);
    case TheoremId::THM_TH3: return check_th3(x);
    case TheoremId::THM_TH6: return check_th6(x);
    case TheoremId::PROP_XTM: return check_xtm(x);
    case TheoremId::THM_TH4: return check_th4(x);
    case TheoremId::THM_TH7: return check_th7(x);
    case TheoremId::COR_COR1: return check_cor1(x);
    case TheoremId::COR_COR4: return check_cor4(x);
    case TheoremId::REMARK3_I: return check_remark3(x);
    case TheoremId::G3_AB_FORMULA: return check_ab(x);
  }
}

void finalize(TheoremReport& rep) {
  bool probe_hyp = false, bounded_hyp = false;
  for (const auto& h : rep.hypotheses) {
    if (h.conditional) {
      if (h.state == HypothesisState::ProbeVerified) probe_hyp = true;
      continue;
    }
    if (h.state == HypothesisState::Failed || h.state == HypothesisState::Unknown) {
      rep.verdict = Verdict::Inapplicable;
      rep.note += std::string("hypothesis ") + (h.state == HypothesisState::Failed ? "fails" : "undetermined") +
                  ": " + h.hypothesis + (h.note.empty() ? "" : " (" + h.note + ")") + ". ";
      return;
    }
    probe_hyp |= h.state == HypothesisState::ProbeVerified;
    bounded_hyp |= h.state == HypothesisState::BoundedTrue;
  }
  if (rep.claims.empty()) {
    rep.verdict = Verdict::Inapplicable;
    rep.note += "no claim evaluated. ";
    return;
  }
  const ClaimResult* exact_fail = nullptr;
  const ClaimResult* soft_fail = nullptr;
  bool undetermined = false;
  Quality q = Quality::Exact;
  for (const auto& c : rep.claims) {
    if (c.outcome == ClaimResult::Outcome::Fails) {
      if (c.exact_failure && !exact_fail) exact_fail = &c;
      if (!c.exact_failure && !soft_fail) soft_fail = &c;
    } else if (c.outcome == ClaimResult::Outcome::Undetermined) {
      undetermined = true;
    } else {
      q = worst(q, c.quality);
    }
  }
  if (exact_fail) {
    rep.witness = exact_fail->claim + ": " + exact_fail->detail;
    if (probe_hyp) {
      rep.verdict = Verdict::PartiallyVerified;
      rep.suspected_counterexample = true;
    } else {
      rep.verdict = Verdict::Refuted;
      rep.suspected_counterexample = bounded_hyp;
    }
    return;
  }
  if (soft_fail) {
    rep.witness = soft_fail->claim + ": " + soft_fail->detail;
    rep.verdict = Verdict::PartiallyVerified;
    rep.suspected_counterexample = true;
    return;
  }
  if (undetermined || probe_hyp || q == Quality::Probe || q == Quality::Unknown) {
    rep.verdict = Verdict::PartiallyVerified;
    return;
  }
  rep.verdict = Verdict::Verified;
}

struct ScopedRank {
  Budgets saved = budgets();
  explicit ScopedRank(std::size_t rank) {
    if (rank > saved.max_rank) set_budgets({saved.max_degree, rank});
  }
  ~ScopedRank() { set_budgets(saved); }
};

std::string describe_instance(const Bindings& b) {
  if (!b.label.empty()) return b.label;
  std::ostringstream os;
  if (b.m) os << "M = " << minimalize(*b.m).to_string();
  else if (b.ring) os << "R = " << b.ring->describe();
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------- public API

const std::vector<TheoremId>& all_theorem_ids() {
  static const std::vector<TheoremId> ids = [] {
    std::vector<TheoremId> v;
    for (const auto& i : kIds) v.push_back(i.id);
    return v;
  }();
  return ids;
}

const char* theorem_name(TheoremId id) { return info(id).name; }
const char* theorem_signature(TheoremId id) { return info(id).signature; }

std::optional<TheoremId> theorem_from_name(const std::string& name) {
  for (const auto& i : kIds)
    if (name == i.name) return i.id;
  return std::nullopt;
}

const char* quality_name(Quality q) {
  switch (q) {
    case Quality::Exact: return "Exact";
    case Quality::Bounded: return "Bounded";
    case Quality::Probe: return "Probe";
    case Quality::Unknown: return "Unknown";
  }
  return "?";
}

const char* hypothesis_state_name(HypothesisState s) {
  switch (s) {
    case HypothesisState::Exact: return "Exact";
    case HypothesisState::BoundedTrue: return "BoundedTrue";
    case HypothesisState::ProbeVerified: return "ProbeVerified";
    case HypothesisState::Failed: return "Failed";
    case HypothesisState::Unknown: return "Unknown";
  }
  return "?";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "Verified";
    case Verdict::Refuted: return "Refuted";
    case Verdict::Inapplicable: return "Inapplicable";
    case Verdict::PartiallyVerified: return "PartiallyVerified";
  }
  return "?";
}

Fact Fact::from(const BoundedVerdict& v) {
  switch (v.kind) {
    case BoundedVerdict::Kind::True: return {true, Quality::Exact, v.note};
    case BoundedVerdict::Kind::False: return {false, Quality::Exact, v.note};
    case BoundedVerdict::Kind::TrueUpToBound: return {true, Quality::Bounded, "up to " + std::to_string(v.bound)};
    case BoundedVerdict::Kind::TrueOnProbes: return {true, Quality::Probe, v.note};
    case BoundedVerdict::Kind::Unknown: break;
  }
  return Fact::unknown(v.note);
}

bool TheoremReport::all_hypotheses_exact() const {
  for (const auto& h : hypotheses)
    if (!h.conditional && h.state != HypothesisState::Exact) return false;
  return true;
}

void clear_harness_memo() {
  std::lock_guard<std::mutex> lock(g_memo_mu);
  for (auto& f : memo_clearers()) f();
}

bool is_gorenstein(const GradedRing& r) { return r.invariants().gorenstein; }

bool is_canonical_module(const ModulePresentation& c) {
  const GradedRing& r = c.ring();
  if (!r.invariants().cohen_macaulay) return false;
  return memoize<bool>("canon" + mkey(c), [&] {
    return is_isomorphic_up_to_twist(minimalize(c), canonical_of(r)).isomorphic();
  });
}

TheoremReport check(TheoremId id, const Bindings& b, const HarnessConfig& config) {
  TheoremReport rep;
  rep.id = id;
  const auto start = std::chrono::steady_clock::now();
  ScopedRank scope(config.max_rank);
  rep.instance = describe_instance(b);
  try {
    Ctx x(b, config, rep);
    dispatch(x);
    finalize(rep);
  } catch (const HypothesisStop&) {
    finalize(rep);
  } catch (const MissingBinding&) {
    throw;
  } catch (const BudgetExceeded& e) {
    rep.verdict = Verdict::Inapplicable;
    rep.note += std::string("budget exceeded: ") + e.what() + ". ";
  } catch (const Inapplicable& e) {
    rep.verdict = Verdict::Inapplicable;
    rep.note += std::string(e.what()) + ". ";
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

SuiteResult run_suite(const std::vector<Bindings>& corpus, const std::vector<TheoremId>& ids,
                      const HarnessConfig& config) {
  SuiteResult out;
  for (const auto& b : corpus)
    for (TheoremId id : ids) {
      TheoremReport rep;
      try {
        rep = check(id, b, config);
      } catch (const StructuralError& e) {
        rep.id = id;
        rep.instance = describe_instance(b);
        rep.verdict = Verdict::Inapplicable;
        rep.note = std::string("missing bindings: ") + e.what();
      }
      switch (rep.verdict) {
        case Verdict::Verified: ++out.summary.verified; break;
        case Verdict::Refuted:
          ++out.summary.refuted;
          if (rep.all_hypotheses_exact()) ++out.summary.hard_failures;
          break;
        case Verdict::Inapplicable: ++out.summary.inapplicable; break;
        case Verdict::PartiallyVerified: ++out.summary.partial; break;
      }
      if (rep.suspected_counterexample) ++out.summary.suspected;
      out.reports.push_back(std::move(rep));
    }
  return out;
}

// ---------------------------------------------------------------- corpus

std::vector<GradedRing> builtin_rings() {
  const Field q = Field::rationals();
  auto mk = [&](std::vector<std::string> vars, const std::vector<std::string>& rels) {
    std::vector<Poly> ps;
    for (const auto& s : rels) ps.push_back(parse_poly(q, vars, s));
    return make_ring(q, std::move(vars), ps);
  };
  return {mk({"x", "y"}, {}), mk({"x", "y"}, {"x*y"}), mk({"x", "y", "z"}, {"x*y", "x*z", "y*z"})};
}

namespace {

/// Same module presented with one extra generator equal to the first one.
ModulePresentation nonminimal(const ModulePresentation& m) {
  const std::size_t g = m.num_gens();
  std::vector<int> gens = m.gen_twists();
  gens.push_back(gens.front());
  std::vector<std::vector<Poly>> cols;
  for (std::size_t c = 0; c < m.num_rels(); ++c) {
    auto col = m.matrix().column(c);
    col.push_back(Poly());
    cols.push_back(col);
  }
  std::vector<Poly> extra(g + 1);
  extra[0] = Poly::constant(Scalar(1));
  extra[g] = Poly::constant(Scalar(-1));
  cols.push_back(extra);
  std::vector<int> rels = m.rel_twists();
  rels.push_back(gens.front());
  return ModulePresentation(m.ring(), gens, rels, Matrix::from_columns(g + 1, cols));
}

}  // namespace

std::vector<CorpusEntry> generate_corpus(const GradedRing& r, std::size_t size) {
  std::vector<CorpusEntry> out;
  std::vector<std::string> seen;
  const auto& v = r.variables();
  auto add = [&](const std::string& label, const ModulePresentation& m) {
    if (m.is_zero()) return;
    const std::string key = label.rfind("nonminimal", 0) == 0 ? "nm|" + m.to_string() : minimalize(m).to_string() +
                                                                                         [&] {
                                                                                           std::string t;
                                                                                           for (int a : minimalize(m).gen_twists())
                                                                                             t += "," + std::to_string(a);
                                                                                           return t;
                                                                                         }();
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) return;
    seen.push_back(key);
    out.push_back({label, m});
  };
  auto poly = [&](const std::string& s) { return parse_poly(r.field(), v, s); };
  auto cyc = [&](const std::vector<std::string>& gens) {
    std::vector<Poly> ps;
    for (const auto& s : gens) ps.push_back(poly(s));
    return ModulePresentation::cyclic(r, ps);
  };
  auto ideal_label = [](const std::vector<std::string>& gens) {
    std::string s = "R/(";
    for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? "," : "") + gens[i];
    return s + ")";
  };
  const std::string& a = v[0];
  const std::string& b = v[1];
  std::vector<std::vector<std::string>> ideals = {
      {a}, {b}, {a, b}, {a + "^2"}, {a + "^2", b}, {a + "*" + b}, {a + "^2", a + "*" + b},
      {a + "^2", b + "^2"}, {a, b + "^2"}, {a + "^2", a + "*" + b, b + "^2"}, {a + "-" + b},
      {a + "^2-" + b + "^2"}};
  if (v.size() > 2) {
    const std::string& c = v[2];
    ideals.push_back({c});
    ideals.push_back({a, c});
    ideals.push_back({a + "+" + b + "+" + c});
  }
  std::vector<std::string> all_vars(v.begin(), v.end());
  add("R", ModulePresentation::free(r, {0}));
  add("k", cyc(all_vars));
  for (const auto& i : ideals) add(ideal_label(i), cyc(i));
  const ModulePresentation k = cyc(all_vars);
  const ModulePresentation ra = cyc({a});
  add("Omega k", syzygy(k, 1));
  add("Omega^2 k", syzygy(k, 2));
  add("Omega R/(" + a + "^2," + b + ")", syzygy(cyc({a + "^2", b}), 1));
  add("Tr k", transpose(k));
  add("Tr R/(" + a + ")", transpose(ra));
  add("lambda k", link(k));
  add("lambda R/(" + a + "," + b + "^2)", link(cyc({a, b + "^2"})));
  add("lambda R/(" + a + ")", link(ra));
  add("k + R", direct_sum(k, ModulePresentation::free(r, {0})));
  add("R/(" + a + ") + R/(" + b + ")", direct_sum(ra, cyc({b})));
  add("R/(" + a + ")(1)", twist(ra, 1));
  add("R + R(-1)", ModulePresentation::free(r, {0, 1}));
  add("canonical module", minimalize(canonical_module(r)));
  add("nonminimal R/(" + a + ")", nonminimal(ra));
  add("nonminimal Omega k", nonminimal(syzygy(k, 1)));
  add("nonminimal lambda R/(" + a + ")", nonminimal(link(ra)));
  if (size > 0 && out.size() > size) out.resize(size);
  return out;
}

namespace {

struct IdealPair {
  std::string m, c1, c2;
};

/// Cyclic modules with two Gorenstein ideals that annihilate them, per builtin ring.
std::vector<IdealPair> ideal_pairs(std::size_t ring_index) {
  switch (ring_index) {
    case 0: return {{"x", "x*y", "x^2"}, {"x,y", "x^2,y^2", "x^2,y^3"}, {"x^2", "x^3", "x^2*y"}};
    case 1: return {{"x,y", "x+y", "x-y"}, {"x^2,y", "x^2+y^2", "x^2-y^2"}};
    default: return {};
  }
}

std::vector<Poly> ideal_from(const GradedRing& r, const std::string& csv) {
  std::vector<Poly> out;
  std::stringstream ss(csv);
  std::string g;
  while (std::getline(ss, g, ',')) out.push_back(parse_poly(r.field(), r.variables(), g));
  return out;
}

}  // namespace

std::vector<Bindings> builtin_corpus(bool with_canonical) {
  std::vector<Bindings> out;
  const auto rings = builtin_rings();
  for (std::size_t ri = 0; ri < rings.size(); ++ri) {
    const GradedRing& r = rings[ri];
    const std::string rl = r.describe();
    for (const auto& e : generate_corpus(r)) {
      Bindings b;
      b.label = e.label + " over " + rl;
      b.m = e.module;
      out.push_back(b);
    }
    for (const auto& [m, c1, c2] : ideal_pairs(ri)) {
      Bindings b;
      b.label = "R/(" + m + ") with c1 = (" + c1 + "), c2 = (" + c2 + ") over " + rl;
      b.m = ModulePresentation::cyclic(r, ideal_from(r, m));
      b.ideal = ideal_from(r, c1);
      b.ideal2 = ideal_from(r, c2);
      out.push_back(b);
    }
    if (with_canonical && !r.invariants().gorenstein && r.invariants().cohen_macaulay) {
      ModulePresentation w = minimalize(canonical_module(r));
      for (const auto& e : generate_corpus(r)) {
        Bindings b;
        b.label = e.label + " over " + rl + " with C = omega";
        b.m = e.module;
        b.c = w;
        out.push_back(b);
      }
    }
  }
  return out;
}

}  // namespace linkage
