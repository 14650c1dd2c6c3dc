#include "linkage/linkage.hpp"

namespace linkage {

namespace {

ModulePresentation ring_module(const GradedRing& r) { return ModulePresentation::free(r, {0}); }

bool annihilates(const ModulePresentation& m, const Poly& g) {
  GroebnerBasis ann = annihilator(m);
  const Field& f = m.ring().field();
  return ann.normal_form(vector_from_polys(f, ModuleOrder::ring(), {g})).is_zero();
}

}  // namespace

StabilityResult is_stable(const ModulePresentation& m) {
  StabilityResult out;
  const int b0 = static_cast<int>(minimalize(m).num_gens());
  const int n = static_cast<int>(transpose(transpose(m)).num_gens());
  out.free_rank = b0 - n;
  out.stable = out.free_rank == 0;
  return out;
}

ModulePresentation stable_part(const ModulePresentation& m) { return minimalize(transpose(transpose(m))); }

bool has_free_summand_by_trace(const ModulePresentation& m) {
  ModulePresentation mm = minimalize(m);
  Subquotient h = hom(mm, ring_module(m.ring()));
  for (std::size_t k = 0; k < h.module.num_gens(); ++k)
    for (std::size_t i = 0; i < mm.num_gens(); ++i) {
      const Poly& e = h.generators.at(i, k);
      if (!e.is_zero() && e.is_constant()) return true;
    }
  return false;
}

bool is_first_syzygy(const ModulePresentation& m) {
  ModulePresentation mm = minimalize(m);
  if (mm.num_gens() == 0) return true;
  Subquotient h = hom(mm, ring_module(m.ring()));
  const std::size_t g = mm.num_gens(), k = h.module.num_gens();
  Matrix f(k, g);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t i = 0; i < g; ++i) f.at(a, i) = h.generators.at(i, a);
  std::vector<int> tw;
  for (int d : h.module.gen_twists()) tw.push_back(-d);
  return kernel_of(mm, ModulePresentation::free(m.ring(), tw), f).module.is_zero();
}

LinkageReport is_horizontally_linked(const ModulePresentation& m, const IsoOptions& opts) {
  LinkageReport rep;
  rep.module = m;
  StabilityResult st = is_stable(m);
  rep.stable = st.stable;
  rep.free_rank_stripped = st.free_rank;
  rep.syzygy_test = ext_is_zero(transpose(m), ring_module(m.ring()), 1);
  rep.verdict = rep.stable && rep.syzygy_test;
  try {
    rep.double_link_iso = is_isomorphic(m, lambda(lambda(m)), opts);
  } catch (const BudgetExceeded& e) {
    rep.double_link_iso.kind = IsoVerdict::Kind::Unknown;
    rep.double_link_iso.note = e.what();
  }
  if (rep.double_link_iso.resolved() && rep.double_link_iso.isomorphic() != rep.verdict) {
    rep.fatal = true;
    rep.note = "FATAL: Ext criterion says " + std::string(rep.verdict ? "linked" : "not linked") +
               " but M and lambda^2 M are " + IsoVerdict::kind_name(rep.double_link_iso.kind);
  } else if (!rep.double_link_iso.resolved()) {
    rep.note = "lambda^2 cross-check unresolved: " + rep.double_link_iso.note;
  }
  return rep;
}

ModulePresentation link(const ModulePresentation& m) { return minimalize(lambda(m)); }

IsoVerdict is_self_linked(const ModulePresentation& m, const IsoOptions& opts) {
  return is_isomorphic_up_to_twist(m, lambda(m), opts);
}

IdealLinkVerdict linked_by_ideal(const ModulePresentation& m, const ModulePresentation& n, const std::vector<Poly>& c,
                                 const IsoOptions& opts) {
  require_same_ring(m.ring(), n.ring(), "linked_by_ideal");
  const GradedRing& r = m.ring();
  for (const auto& g : c) {
    if (!annihilates(m, g))
      throw Inapplicable("linked_by_ideal: " + g.to_string(r.variables()) + " does not annihilate M");
    if (!annihilates(n, g))
      throw Inapplicable("linked_by_ideal: " + g.to_string(r.variables()) + " does not annihilate N");
  }
  IdealLinkVerdict out;
  out.quotient = quotient_ring(r, c);
  ModulePresentation mq = minimalize(change_ring(m, out.quotient));
  ModulePresentation nq = minimalize(change_ring(n, out.quotient));
  out.m_to_lambda_n = is_isomorphic_up_to_twist(mq, lambda(nq), opts);
  out.n_to_lambda_m = is_isomorphic_up_to_twist(nq, lambda(mq), opts);
  out.verified = out.m_to_lambda_n.isomorphic() && out.n_to_lambda_m.isomorphic();
  if (!out.verified) {
    out.note = std::string("M vs lambda N: ") + IsoVerdict::kind_name(out.m_to_lambda_n.kind) +
               ", N vs lambda M: " + IsoVerdict::kind_name(out.n_to_lambda_m.kind);
  }
  return out;
}

}  // namespace linkage
