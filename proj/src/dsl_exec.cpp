#include <chrono>
#include <map>
#include <sstream>

#include "linkage/dsl.hpp"
#include "linkage/polyparse.hpp"

namespace linkage::dsl {

using Json = nlohmann::ordered_json;

namespace {

struct IntVal {
  long value = 0;
  bool infinite = false;
  bool lower_bound = false;  // value is only known to be >= value
  std::string text;
};

struct BoolVal {
  std::optional<bool> value;  // nullopt: undetermined
  std::string detail;
};

struct TextVal {
  Json json;
  std::string text;
};

using Value = std::variant<ModulePresentation, IntVal, BoolVal, TextVal>;

Json int_json(const IntVal& v) {
  if (v.infinite) return "inf";
  if (v.lower_bound) return ">=" + std::to_string(v.value);
  return v.value;
}

std::string int_text(const IntVal& v) {
  if (v.infinite) return "inf";
  if (v.lower_bound) return ">= " + std::to_string(v.value);
  return std::to_string(v.value);
}

BoolVal from_bounded(const BoundedVerdict& v) {
  BoolVal b;
  if (v.holds()) b.value = true;
  else if (v.failed()) b.value = false;
  b.detail = BoundedVerdict::kind_name(v.kind);
  if (v.kind == BoundedVerdict::Kind::TrueUpToBound) b.detail += " (bound " + std::to_string(v.bound) + ")";
  if (!v.note.empty()) b.detail += ": " + v.note;
  return b;
}

BoolVal from_iso(const IsoVerdict& v) {
  BoolVal b;
  if (v.resolved()) b.value = v.isomorphic();
  b.detail = IsoVerdict::kind_name(v.kind);
  if (!v.note.empty()) b.detail += ": " + v.note;
  return b;
}

/// Outcome of comparing an integer query with a constant; nullopt when the
/// bounded value cannot decide it.
std::optional<bool> compare(const IntVal& v, const std::string& op, long rhs) {
  if (v.infinite) return op == ">" || op == ">=" || op == "!=";
  if (!v.lower_bound) {
    if (op == "==") return v.value == rhs;
    if (op == "!=") return v.value != rhs;
    if (op == "<") return v.value < rhs;
    if (op == "<=") return v.value <= rhs;
    if (op == ">") return v.value > rhs;
    return v.value >= rhs;
  }
  // value is some x >= v.value
  if (op == ">=" && rhs <= v.value) return true;
  if (op == ">" && rhs < v.value) return true;
  if (rhs < v.value) {
    if (op == "==" || op == "<" || op == "<=") return false;
    if (op == "!=") return true;
  }
  return std::nullopt;
}

Field field_from(const std::string& spec) {
  if (spec == "QQ") return Field::rationals();
  std::string digits;
  if (spec.rfind("ZZ/", 0) == 0) digits = spec.substr(3);
  else if (spec.rfind("GF(", 0) == 0 && spec.back() == ')') digits = spec.substr(3, spec.size() - 4);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 9)
    throw StructuralError("unknown field '" + spec + "'");
  const long p = std::stol(digits);
  bool prime = p >= 2;
  for (long d = 2; prime && d * d <= p; ++d)
    if (p % d == 0) prime = false;
  if (!prime) throw StructuralError(spec + " is not a prime field");
  return Field::prime(static_cast<std::uint32_t>(p));
}

std::string field_name(const Field& f) {
  return f.is_rational() ? "QQ" : "ZZ/" + std::to_string(f.characteristic());
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep))
    if (part.find_first_not_of(" \t") != std::string::npos) out.push_back(part);
  return out;
}

class Executor {
 public:
  Executor(const RunConfig& cfg, RunResult& out) : cfg_(cfg), out_(out) {
    if (cfg.field) override_field_ = field_from(*cfg.field);
  }

  void run(const Script& script) {
    const auto start = std::chrono::steady_clock::now();
    for (const auto& st : script.statements) {
      if (cfg_.time_limit > 0 &&
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() > cfg_.time_limit) {
        ++out_.budget_hits;
        out_.results.push_back(
            Json{{"kind", "budget"}, {"name", "time limit"}, {"error", "time limit of " + seconds(cfg_.time_limit) + " s exceeded"}});
        out_.text.push_back("stopped: time limit exceeded");
        return;
      }
      const std::size_t failures = out_.failures;
      std::visit([&](const auto& s) { exec(s); }, st);
      if (cfg_.fail_fast && out_.failures > failures) return;
    }
  }

 private:
  const RunConfig& cfg_;
  RunResult& out_;
  std::optional<Field> override_field_;
  std::map<std::string, GradedRing> rings_;
  std::map<std::string, ModulePresentation> modules_;
  std::map<std::string, std::vector<ProbePrime>> probes_;

  static std::string seconds(double s) {
    std::ostringstream os;
    os.precision(3);
    os << s;
    return os.str();
  }

  const GradedRing& ring_named(const std::string& name) const { return rings_.at(name); }

  Poly poly(const GradedRing& r, const PolyText& p) const { return parse_poly(r.field(), r.variables(), p.text); }

  std::vector<Poly> polys(const GradedRing& r, const std::vector<PolyText>& ps) const {
    std::vector<Poly> out;
    for (const auto& p : ps) out.push_back(poly(r, p));
    return out;
  }

  const std::vector<ProbePrime>& probes_for(const GradedRing& r) {
    auto it = probes_.find(r.key());
    if (it != probes_.end()) return it->second;
    std::vector<ProbePrime> out;
    for (const auto& group : split(cfg_.probe_primes, ';')) {
      try {
        std::vector<Poly> gens;
        for (const auto& g : split(group, ',')) gens.push_back(parse_poly(r.field(), r.variables(), g));
        out.push_back(user_probe_prime(r, std::move(gens), "(" + group + ")"));
      } catch (const std::exception&) {
        // the prime is written in other variables or misses the ring relations
      }
    }
    return probes_.emplace(r.key(), std::move(out)).first->second;
  }

  HarnessConfig harness_config(const GradedRing& r) {
    HarnessConfig h;
    h.bound = cfg_.bound;
    h.n_max = cfg_.n_max;
    h.max_rank = cfg_.max_rank;
    h.extra_probes = probes_for(r);
    h.iso.seed = cfg_.seed;
    return h;
  }

  IsoOptions iso_options() const {
    IsoOptions o;
    o.seed = cfg_.seed;
    return o;
  }

  // ----- expression evaluation

  ModulePresentation module(const Expr& e) {
    Value v = eval(e);
    return std::get<ModulePresentation>(v);
  }

  Value eval(const Expr& e) {
    if (e.kind == Expr::Kind::Name) {
      auto r = rings_.find(e.name);
      if (r != rings_.end()) return ModulePresentation::free(r->second, {0});
      return modules_.at(e.name);
    }
    const std::string& f = e.name;
    auto m = [&](std::size_t k) { return module(e.args[k]); };
    auto n = [&](std::size_t k) { return static_cast<int>(e.args[k].value); };
    // modules
    if (f == "lambda") return link(m(0));
    if (f == "transpose") return minimalize(transpose(m(0)));
    if (f == "transpose_wrt") return minimalize(transpose_wrt(m(0), m(1)));
    if (f == "syzygy") return syzygy(m(0), n(1));
    if (f == "ext") return minimalize(ext(m(0), m(1), n(2)));
    if (f == "tor") return minimalize(tor(m(0), m(1), n(2)));
    if (f == "tensor") return minimalize(tensor(m(0), m(1)));
    if (f == "hom") return minimalize(hom_module(m(0), m(1)));
    if (f == "canonical") return minimalize(canonical_module(ring_named(e.args[0].name)));
    if (f == "dual") return minimalize(dual(m(0)));
    if (f == "pushforward") return minimalize(universal_pushforward(m(0), m(1)).cokernel);
    if (f == "twist") return twist(m(0), n(1));
    if (f == "direct_sum") return direct_sum(m(0), m(1));
    if (f == "minimalize") return minimalize(m(0));
    if (f == "stable_part") return stable_part(m(0));
    // integers
    if (f == "depth") {
      const int d = depth(m(0));
      if (d == kInfiniteDepth) return IntVal{0, true, false, ""};
      return IntVal{d, false, false, ""};
    }
    if (f == "dim") return IntVal{krull_dim(m(0)), false, false, ""};
    if (f == "cc") return IntVal{cc(m(0)), false, false, ""};
    if (f == "num_gens") return IntVal{static_cast<long>(minimalize(m(0)).num_gens()), false, false, ""};
    if (f == "rgr") {
      ReducedGrade g = reduced_grade(m(0), m(1), cfg_.bound);
      if (g.value) return IntVal{*g.value, false, false, ""};
      if (g.infinite_exact) return IntVal{0, true, false, ""};
      return IntVal{g.bound + 1, false, true, ""};
    }
    if (f == "gc_dim") {
      GcDimVerdict g = gc_dim(m(0), m(1), cfg_.bound);
      if (g.finite()) return IntVal{g.value, false, false, ""};
      if (g.kind == GcDimVerdict::Kind::Infinite) return IntVal{0, true, false, ""};
      throw Inapplicable("G_C-dimension undetermined: " + g.note);
    }
    // predicates
    if (f == "is_horizontally_linked") {
      LinkageReport r = is_horizontally_linked(m(0), iso_options());
      return BoolVal{r.verdict, "stable " + std::string(r.stable ? "yes" : "no") + ", Ext^1(Tr M,R) " +
                                    (r.syzygy_test ? "= 0" : "!= 0")};
    }
    if (f == "is_stable") {
      StabilityResult s = is_stable(m(0));
      return BoolVal{s.stable, "free rank " + std::to_string(s.free_rank)};
    }
    if (f == "serre_tilde") {
      ModulePresentation x = m(0);
      return from_bounded(serre_tilde(x, n(1), probes_for(x.ring())));
    }
    if (f == "is_cm") return BoolVal{is_cohen_macaulay(m(0)), ""};
    if (f == "is_mcm") return BoolVal{is_maximal_cm(m(0)), ""};
    if (f == "is_zero") return BoolVal{m(0).is_zero(), ""};
    if (f == "is_eilenberg_maclane") return BoolVal{is_eilenberg_maclane(m(0)), ""};
    if (f == "is_generalized_cm") return BoolVal{is_generalized_cm(m(0)), ""};
    if (f == "in_auslander_class") return from_bounded(in_auslander_class(m(0), m(1), cfg_.bound));
    if (f == "is_semidualizing") {
      SemidualizingCertificate c = is_semidualizing(m(0), cfg_.bound);
      if (!c.homothety_bijective) return BoolVal{false, "homothety is not bijective"};
      return from_bounded(c.ext_vanishing);
    }
    if (f == "iso") return from_iso(is_isomorphic(m(0), m(1), iso_options()));
    if (f == "is_self_linked") return from_iso(is_self_linked(m(0), iso_options()));
    // text
    if (f == "betti") {
      BettiTable t = betti(m(0), static_cast<std::size_t>(std::max(0, n(1))));
      Json rows = Json::array();
      for (const auto& row : t.entries) {
        Json r = Json::object();
        for (const auto& [deg, count] : row) r[std::to_string(deg)] = count;
        rows.push_back(r);
      }
      return TextVal{rows, t.to_string()};
    }
    if (f == "hilbert") {
      const std::string s = m(0).hilbert_series().reduced().to_string();
      return TextVal{s, s};
    }
    throw StructuralError("unknown function '" + f + "'");
  }

  // ----- statements

  void exec(const RingDecl& d) {
    GradedRing r;
    if (d.quotient) {
      const GradedRing& base = rings_.at(d.base);
      r = quotient_ring(base, polys(base, d.relations));
    } else {
      Field f = override_field_ ? *override_field_ : field_from(d.field);
      r = make_ring(f, d.variables, {});
    }
    rings_[d.name] = r;
    const auto& inv = r.invariants();
    Json rel = Json::array();
    for (const auto& g : r.ideal_generators()) rel.push_back(g.to_string(r.variables()));
    out_.declarations.push_back(Json{{"kind", "ring"},
                                     {"name", d.name},
                                     {"value",
                                      {{"description", r.describe()},
                                       {"field", field_name(r.field())},
                                       {"variables", r.variables()},
                                       {"relations", rel},
                                       {"dim", inv.dim},
                                       {"depth", inv.depth},
                                       {"cohen_macaulay", inv.cohen_macaulay},
                                       {"gorenstein", inv.gorenstein}}}});
    out_.text.push_back("ring " + d.name + " = " + r.describe() + ": dim " + std::to_string(inv.dim) + ", depth " +
                        std::to_string(inv.depth) + (inv.cohen_macaulay ? ", CM" : "") +
                        (inv.gorenstein ? ", Gorenstein" : ""));
  }

  void exec(const ModuleDecl& d) {
    const GradedRing& r = rings_.at(d.ring);
    const std::size_t cols = d.rows.empty() ? 0 : d.rows.front().size();
    Matrix mat(d.twists.size(), cols);
    for (std::size_t i = 0; i < d.rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) mat.at(i, j) = r.reduce(poly(r, d.rows[i][j]));
    ModulePresentation m = ModulePresentation::from_matrix(r, d.twists, mat);
    modules_[d.name] = m;
    out_.declarations.push_back(Json{{"kind", "module"}, {"name", d.name}, {"value", module_to_json(m)}});
    out_.text.push_back("module " + d.name + " = " + m.to_string());
  }

  /// Runs f; runtime errors become an error entry on item. Returns false on error.
  template <class F>
  bool guarded(Json& item, std::string& line, F&& f) {
    try {
      f();
      return true;
    } catch (const BudgetExceeded& e) {
      ++out_.budget_hits;
      item["error"] = std::string("budget exceeded: ") + e.what();
      line += ": budget exceeded (" + std::string(e.what()) + ")";
    } catch (const Inapplicable& e) {
      ++out_.inapplicable;
      item["error"] = std::string("inapplicable: ") + e.what();
      line += ": inapplicable (" + std::string(e.what()) + ")";
    } catch (const std::exception& e) {
      ++out_.failures;
      item["error"] = e.what();
      line += ": error (" + std::string(e.what()) + ")";
    }
    return false;
  }

  void exec(const LetStmt& s) {
    Json item{{"kind", "let"}, {"name", s.name}, {"expr", pretty_print(s.expr)}};
    std::string line = "let " + s.name + " = " + pretty_print(s.expr);
    if (guarded(item, line, [&] {
          ModulePresentation m = module(s.expr);
          modules_[s.name] = m;
          item["value"] = module_to_json(m);
          line += "  ->  " + m.to_string();
        })) {
      out_.declarations.push_back(item);
    } else {
      // later statements that use the name report it as undefined
      out_.declarations.push_back(item);
      ++out_.failures;
    }
    out_.text.push_back(line);
  }

  void exec(const AssertStmt& s) {
    std::string name = pretty_print(s.expr);
    if (!s.op.empty()) name += " " + s.op + " " + std::to_string(s.rhs);
    Json item{{"kind", "assert"}, {"name", name}};
    std::string line = "assert " + name;
    guarded(item, line, [&] {
      Value v = eval(s.expr);
      std::optional<bool> outcome;
      std::string detail;
      if (const auto* b = std::get_if<BoolVal>(&v)) {
        outcome = b->value;
        detail = b->detail;
      } else {
        const auto& iv = std::get<IntVal>(v);
        outcome = compare(iv, s.op, s.rhs);
        detail = s.expr.name + " = " + int_text(iv);
      }
      item["value"] = outcome ? Json(*outcome) : Json(nullptr);
      item["detail"] = detail;
      if (!outcome) {
        ++out_.inapplicable;
        line += ": UNDETERMINED (" + detail + ")";
      } else if (*outcome) {
        line += ": passed";
        if (!detail.empty()) line += " (" + detail + ")";
      } else {
        ++out_.failures;
        line += ": FAILED (" + detail + ")";
      }
    });
    out_.results.push_back(item);
    out_.text.push_back(line);
  }

  void exec(const PrintStmt& s) {
    const std::string name = pretty_print(s.expr);
    Json item{{"kind", "invariant"}, {"name", name}};
    std::string line = name;
    guarded(item, line, [&] {
      Value v = eval(s.expr);
      if (const auto* m = std::get_if<ModulePresentation>(&v)) {
        item["kind"] = "module";
        item["value"] = module_to_json(*m);
        line += " = " + m->to_string();
      } else if (const auto* i = std::get_if<IntVal>(&v)) {
        item["value"] = int_json(*i);
        line += " = " + int_text(*i);
      } else if (const auto* b = std::get_if<BoolVal>(&v)) {
        item["kind"] = "predicate";
        item["value"] = b->value ? Json(*b->value) : Json(nullptr);
        item["detail"] = b->detail;
        line += " = " + std::string(b->value ? (*b->value ? "true" : "false") : "undetermined");
        if (!b->detail.empty()) line += " (" + b->detail + ")";
      } else {
        const auto& t = std::get<TextVal>(v);
        item["value"] = t.json;
        line += " =\n" + t.text;
      }
    });
    out_.results.push_back(item);
    out_.text.push_back(line);
  }

  void exec(const CheckStmt& s) {
    std::string name = s.theorem + "(";
    for (std::size_t i = 0; i < s.bindings.size(); ++i)
      name += (i ? ", " : "") + s.bindings[i].key + "=" + pretty_print(s.bindings[i].value);
    name += ")";
    Json item{{"kind", "check"}, {"name", name}};
    std::string line = "check " + name;
    guarded(item, line, [&] {
      Bindings b;
      b.label = name;
      std::optional<GradedRing> ring;
      for (const auto& bd : s.bindings) {
        if (bd.key == "R") ring = rings_.at(bd.value.name);
        else if (bd.key == "n") b.n = static_cast<int>(bd.value.value);
        else if (bd.value.kind != Expr::Kind::PolyList) {
          ModulePresentation m = module(bd.value);
          ring = m.ring();
          if (bd.key == "M") b.m = m;
          else if (bd.key == "M1") b.m1 = m;
          else if (bd.key == "M2") b.m2 = m;
          else b.c = m;
        }
      }
      b.ring = ring;
      for (const auto& bd : s.bindings) {
        if (bd.value.kind != Expr::Kind::PolyList) continue;
        std::vector<Poly> ps = polys(*ring, bd.value.polys);
        if (bd.key == "J" || bd.key == "c2") b.ideal2 = ps;
        else b.ideal = ps;
      }
      const TheoremId id = *theorem_from_name(s.theorem);
      TheoremReport rep = check(id, b, harness_config(*ring));
      item["report"] = report_to_json(rep);
      line += ": " + std::string(verdict_name(rep.verdict));
      if (rep.suspected_counterexample) line += " (suspected counterexample)";
      line += " [" + seconds(rep.seconds) + " s]";
      for (const auto& h : rep.hypotheses)
        line += "\n    hypothesis " + h.hypothesis + ": " + hypothesis_state_name(h.state) +
                (h.conditional ? " (conditional)" : "") + (h.note.empty() ? "" : " - " + h.note);
      for (const auto& c : rep.claims)
        line += "\n    claim " + c.claim + ": " +
                (c.outcome == ClaimResult::Outcome::Holds
                     ? std::string("holds (") + quality_name(c.quality) + ")"
                     : c.outcome == ClaimResult::Outcome::Fails ? std::string("FAILS") : std::string("undetermined")) +
                " - " + c.detail;
      if (!rep.note.empty()) line += "\n    note: " + rep.note;
      tally(rep);
    });
    out_.results.push_back(item);
    out_.text.push_back(line);
  }

  void tally(const TheoremReport& rep) {
    if (rep.verdict == Verdict::Refuted) ++out_.failures;
    if (rep.verdict == Verdict::Inapplicable) {
      ++out_.inapplicable;
      if (rep.note.find("budget exceeded") != std::string::npos) ++out_.budget_hits;
    }
  }

  void exec(const SuiteStmt& s) {
    const std::string name = pretty_print(Statement{s});
    Json item{{"kind", "suite"}, {"name", name.substr(0, name.size() - 1)}};
    std::string line = item["name"].get<std::string>();
    guarded(item, line, [&] {
      const GradedRing& r = rings_.at(s.ring);
      std::vector<Bindings> corpus;
      for (auto& e : generate_corpus(r, static_cast<std::size_t>(s.size))) {
        Bindings b;
        b.label = e.label;
        b.m = std::move(e.module);
        corpus.push_back(std::move(b));
      }
      std::vector<TheoremId> ids;
      for (const auto& t : s.theorems) ids.push_back(*theorem_from_name(t));
      if (ids.empty()) ids = all_theorem_ids();
      SuiteResult res = run_suite(corpus, ids, harness_config(r));
      Json reports = Json::array();
      for (const auto& rep : res.reports) reports.push_back(report_to_json(rep));
      item["report"] = Json{{"summary", summary_to_json(res.summary)}, {"reports", reports}};
      const auto& sm = res.summary;
      line += ": " + std::to_string(sm.verified) + " Verified, " + std::to_string(sm.refuted) + " Refuted, " +
              std::to_string(sm.partial) + " PartiallyVerified, " + std::to_string(sm.inapplicable) +
              " Inapplicable, " + std::to_string(sm.suspected) + " suspected";
      bool budget = false;
      for (const auto& rep : res.reports) {
        if (rep.verdict == Verdict::Refuted)
          line += "\n    Refuted " + std::string(theorem_name(rep.id)) + " on " + rep.instance + ": " + rep.witness;
        if (rep.verdict == Verdict::Inapplicable && rep.note.find("budget exceeded") != std::string::npos) budget = true;
      }
      if (sm.refuted > 0) ++out_.failures;
      if (sm.inapplicable > 0) ++out_.inapplicable;
      if (budget) ++out_.budget_hits;
    });
    out_.results.push_back(item);
    out_.text.push_back(line);
  }
};

struct ScopedBudgets {
  Budgets saved = budgets();
  explicit ScopedBudgets(const RunConfig& c) { set_budgets({c.max_degree, c.max_rank}); }
  ~ScopedBudgets() { set_budgets(saved); }
};

}  // namespace

Json config_to_json(const RunConfig& c) {
  return Json{{"field", c.field ? Json(*c.field) : Json(nullptr)},
              {"bound", c.bound},
              {"n_max", c.n_max},
              {"probe_primes", c.probe_primes},
              {"max_degree", c.max_degree},
              {"max_rank", c.max_rank},
              {"time_limit", c.time_limit},
              {"fail_fast", c.fail_fast},
              {"strict", c.strict},
              {"seed", c.seed}};
}

RunResult execute(const Script& script, const RunConfig& config) {
  RunResult out;
  out.config = config_to_json(config);
  ScopedBudgets scope(config);
  Executor(config, out).run(script);
  return out;
}

int exit_code(const RunResult& r, bool strict) {
  if (r.failures > 0) return 1;
  if (r.budget_hits > 0) return 3;
  if (strict && r.inapplicable > 0) return 4;
  return 0;
}

std::string report_json(const RunResult& r) {
  Json j{{"version", kVersion}, {"config", r.config}, {"declarations", r.declarations}, {"results", r.results}};
  return j.dump(2) + "\n";
}

Json module_to_json(const ModulePresentation& m) {
  const auto& vars = m.ring().variables();
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.num_gens(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.num_rels(); ++j) row.push_back(m.matrix().at(i, j).to_string(vars));
    rows.push_back(row);
  }
  return Json{{"ring", m.ring().describe()},
              {"gen_twists", m.gen_twists()},
              {"rel_twists", m.rel_twists()},
              {"matrix", rows}};
}

Json report_to_json(const TheoremReport& r) {
  Json hyps = Json::array();
  for (const auto& h : r.hypotheses) {
    Json j{{"hypothesis", h.hypothesis}, {"state", hypothesis_state_name(h.state)}, {"conditional", h.conditional}};
    if (h.state == HypothesisState::BoundedTrue) j["bound"] = h.bound;
    if (!h.probes.empty()) j["probes"] = h.probes;
    j["note"] = h.note;
    hyps.push_back(j);
  }
  Json claims = Json::array();
  for (const auto& c : r.claims) {
    const char* outcome = c.outcome == ClaimResult::Outcome::Holds   ? "Holds"
                          : c.outcome == ClaimResult::Outcome::Fails ? "Fails"
                                                                     : "Undetermined";
    claims.push_back(Json{{"claim", c.claim},
                          {"outcome", outcome},
                          {"quality", quality_name(c.quality)},
                          {"exact_failure", c.exact_failure},
                          {"detail", c.detail}});
  }
  return Json{{"id", theorem_name(r.id)},
              {"instance", r.instance},
              {"verdict", verdict_name(r.verdict)},
              {"suspected_counterexample", r.suspected_counterexample},
              {"witness", r.witness},
              {"hypothesis_status", hyps},
              {"claims", claims},
              {"note", r.note}};
}

Json summary_to_json(const SuiteSummary& s) {
  return Json{{"verified", s.verified},       {"refuted", s.refuted},     {"inapplicable", s.inapplicable},
              {"partial", s.partial},         {"suspected", s.suspected}, {"hard_failures", s.hard_failures},
              {"passed", s.passed()}};
}

}  // namespace linkage::dsl
