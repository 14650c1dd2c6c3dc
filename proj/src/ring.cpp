#include "linkage/ring.hpp"

#include <set>

#include "linkage/homological.hpp"
#include "linkage/module.hpp"

namespace linkage {

struct RingData {
  Field field = Field::rationals();
  std::vector<std::string> vars;
  std::vector<Poly> ideal_gens;
  GroebnerBasis ideal_gb;
  RingInvariants inv;
  std::string key;
  std::shared_ptr<const RingData> ambient;
};

namespace {

const RingData& data(const std::shared_ptr<const RingData>& d) {
  if (!d) throw StructuralError("use of an uninitialized ring");
  return *d;
}

std::string make_key(const Field& f, const std::vector<std::string>& vars, const GroebnerBasis& gb) {
  std::string k = f.name() + "[";
  for (std::size_t i = 0; i < vars.size(); ++i) k += (i ? "," : "") + vars[i];
  k += "]/(";
  bool first = true;
  for (const auto& g : gb.generators()) {
    if (!first) k += ",";
    first = false;
    k += vector_to_polys(f, g, 1)[0].to_string(vars);
  }
  return k + ")";
}

}  // namespace

const Field& GradedRing::field() const { return data(d_).field; }
int GradedRing::num_vars() const { return static_cast<int>(data(d_).vars.size()); }
const std::vector<std::string>& GradedRing::variables() const { return data(d_).vars; }
const std::vector<Poly>& GradedRing::ideal_generators() const { return data(d_).ideal_gens; }
const GroebnerBasis& GradedRing::ideal_gb() const { return data(d_).ideal_gb; }
const RingInvariants& GradedRing::invariants() const { return data(d_).inv; }
bool GradedRing::is_polynomial_ring() const { return data(d_).ideal_gens.empty(); }
const std::string& GradedRing::key() const { return data(d_).key; }

GradedRing GradedRing::ambient() const {
  if (is_polynomial_ring()) return *this;
  GradedRing s;
  s.d_ = data(d_).ambient;
  return s;
}

Poly GradedRing::reduce(const Poly& p) const {
  if (is_polynomial_ring() || p.is_zero()) return p;
  const Field& f = field();
  FreeVector v = vector_from_polys(f, ModuleOrder::ring(), {p});
  return vector_to_polys(f, ideal_gb().normal_form(std::move(v)), 1)[0];
}

std::string GradedRing::describe() const {
  const auto& d = data(d_);
  std::string s = d.field.name() + "[";
  for (std::size_t i = 0; i < d.vars.size(); ++i) s += (i ? "," : "") + d.vars[i];
  s += "]";
  if (!d.ideal_gens.empty()) {
    s += "/(";
    for (std::size_t i = 0; i < d.ideal_gens.size(); ++i)
      s += (i ? "," : "") + d.ideal_gens[i].to_string(d.vars);
    s += ")";
  }
  return s;
}

bool GradedRing::operator==(const GradedRing& o) const {
  if (d_ == o.d_) return true;
  if (!d_ || !o.d_) return false;
  return d_->key == o.d_->key;
}

void require_same_ring(const GradedRing& a, const GradedRing& b, const char* op) {
  if (a != b) throw StructuralError(std::string(op) + ": modules live over different rings");
}

std::vector<FreeVector> ideal_multiples(const GradedRing& r, const ModuleOrder& order, std::size_t rank,
                                        std::size_t offset) {
  std::vector<FreeVector> out;
  if (r.is_polynomial_ring()) return out;
  const Field& f = r.field();
  for (std::size_t i = 0; i < rank; ++i) {
    for (const auto& g : r.ideal_gb().generators()) {
      std::vector<VecTerm> terms;
      for (const auto& t : g.terms) terms.push_back({t.mon, static_cast<std::uint32_t>(offset + i), t.coef});
      out.push_back(make_vector(f, order, std::move(terms)));
    }
  }
  return out;
}

GradedRing make_ring(const Field& field, std::vector<std::string> variables,
                     const std::vector<Poly>& relations) {
  if (variables.empty()) throw StructuralError("a ring needs at least one variable");
  if (variables.size() > static_cast<std::size_t>(kMaxVars))
    throw StructuralError("at most " + std::to_string(kMaxVars) + " variables are supported");
  std::set<std::string> seen(variables.begin(), variables.end());
  if (seen.size() != variables.size()) throw StructuralError("duplicate variable name");
  const int n = static_cast<int>(variables.size());

  auto sdata = std::make_shared<RingData>();
  sdata->field = field;
  sdata->vars = variables;
  sdata->ideal_gb = GroebnerBasis(field, ModuleOrder::ring(), {}, true);
  sdata->inv = RingInvariants{n, n, 0, true, true};
  sdata->key = make_key(field, variables, sdata->ideal_gb);
  GradedRing s;
  s.d_ = sdata;

  std::vector<FreeVector> vecs;
  std::vector<Poly> rels;
  for (const auto& p : relations) {
    for (const auto& t : p.terms())
      for (int v = n; v < kMaxVars; ++v)
        if (t.mon.exp[v] != 0) throw StructuralError("relation uses an undeclared variable");
    Poly q = Poly::from_terms(field, p.terms());
    if (q.is_zero()) continue;
    if (!q.is_homogeneous()) throw StructuralError("relation " + q.to_string(variables) + " is not homogeneous");
    if (q.degree() == 0) throw StructuralError("relations generate the unit ideal");
    rels.push_back(q);
    vecs.push_back(vector_from_polys(field, ModuleOrder::ring(), {q}));
  }
  if (rels.empty()) return s;

  auto rdata = std::make_shared<RingData>();
  rdata->field = field;
  rdata->vars = variables;
  rdata->ideal_gb = buchberger(field, vecs, ModuleOrder::ring());
  for (auto idx : minimal_generator_indices(s, {0}, vecs)) {
    Poly g = rels[idx];
    rdata->ideal_gens.push_back(scale(field, g, field.inv(g.leading().coef)));
  }
  rdata->key = make_key(field, variables, rdata->ideal_gb);
  rdata->ambient = sdata;

  // invariants through Ext^j_S(S/I, S)
  ModulePresentation quotient = ModulePresentation::cyclic(s, rdata->ideal_gens);
  int jmin = -1, jmax = -1;
  std::vector<ModulePresentation> exts;
  for (int j = 0; j <= n; ++j) {
    exts.push_back(ext_to_ambient(quotient, j));
    if (!exts.back().is_zero()) {
      if (jmin < 0) jmin = j;
      jmax = j;
    }
  }
  if (jmin < 0) throw StructuralError("relations generate the unit ideal");
  RingInvariants inv;
  inv.dim = n - jmin;
  inv.depth = n - jmax;
  inv.codim = jmin;
  inv.cohen_macaulay = jmin == jmax;
  inv.gorenstein = inv.cohen_macaulay && minimalize(exts[jmin]).num_gens() == 1;
  rdata->inv = inv;

  GradedRing r;
  r.d_ = rdata;
  return r;
}

GradedRing quotient_ring(const GradedRing& r, const std::vector<Poly>& ideal) {
  std::vector<Poly> rels = r.ideal_generators();
  for (const auto& p : ideal) rels.push_back(r.reduce(p));
  return make_ring(r.field(), r.variables(), rels);
}

}  // namespace linkage
