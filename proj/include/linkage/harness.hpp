#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linkage/linkage.hpp"

namespace linkage {

enum class TheoremId {
  THM_MS,
  PROP_T1,
  PROP_P3,
  PROP_T13,
  COR_C2,
  LEM_LEM2,
  THM_TH5,
  COR_COR7,
  THM_THEOREM1,
  THM_THE1,
  COR_THEOREM3,
  THM_PROP_EVEN,
  THM_TH1,
  COR_COR5,
  COR_COR6,
  THM_COR3,
  THM_TH2,
  COR_SELF,
  THM_TH3,
  THM_TH6,
  PROP_XTM,
  THM_TH4,
  THM_TH7,
  COR_COR1,
  COR_COR4,
  REMARK3_I,
  G3_AB_FORMULA,
};

const std::vector<TheoremId>& all_theorem_ids();
const char* theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(const std::string& name);
/// Bindings the check reads, e.g. "M, C, n".
const char* theorem_signature(TheoremId id);

/// Named inputs of a check. C defaults to R; n defaults to 1..config.n_max.
struct Bindings {
  std::string label;
  /// Ring for checks bound only to ideals; otherwise the ring of M.
  std::optional<GradedRing> ring;
  std::optional<ModulePresentation> m;
  std::optional<ModulePresentation> m1;
  std::optional<ModulePresentation> m2;
  std::optional<ModulePresentation> c;
  std::optional<int> n;
  std::vector<Poly> ideal;   // I, a, c or c1 depending on the check
  std::vector<Poly> ideal2;  // J or c2
};

struct HarnessConfig {
  int bound = -1;  // -1: 2(n + 1)
  int n_max = 3;
  std::size_t max_rank = 2048;
  std::vector<ProbePrime> extra_probes;
  IsoOptions iso;
};

/// Certainty of a computed truth value.
enum class Quality { Exact, Bounded, Probe, Unknown };
const char* quality_name(Quality q);

struct Fact {
  bool value = false;
  Quality quality = Quality::Unknown;
  std::string note;

  static Fact exact(bool v, std::string note = {}) { return {v, Quality::Exact, std::move(note)}; }
  static Fact unknown(std::string note = {}) { return {false, Quality::Unknown, std::move(note)}; }
  static Fact from(const BoundedVerdict& v);
  bool known() const { return quality != Quality::Unknown; }
};

enum class HypothesisState { Exact, BoundedTrue, ProbeVerified, Failed, Unknown };
const char* hypothesis_state_name(HypothesisState s);

struct HypothesisStatus {
  std::string hypothesis;
  /// Guards only part of the conclusion; a failure skips that part.
  bool conditional = false;
  HypothesisState state = HypothesisState::Unknown;
  int bound = 0;
  std::vector<std::string> probes;
  std::string note;
};

struct ClaimResult {
  std::string claim;
  enum class Outcome { Holds, Fails, Undetermined } outcome = Outcome::Undetermined;
  Quality quality = Quality::Unknown;
  bool exact_failure = false;
  std::string detail;
};

enum class Verdict { Verified, Refuted, Inapplicable, PartiallyVerified };
const char* verdict_name(Verdict v);

struct TheoremReport {
  TheoremId id = TheoremId::THM_MS;
  std::string instance;
  std::vector<HypothesisStatus> hypotheses;
  std::vector<ClaimResult> claims;
  Verdict verdict = Verdict::Inapplicable;
  /// Refuted or failing claim that rests on bounded or probe-based evidence.
  bool suspected_counterexample = false;
  std::string witness;
  std::string note;
  double seconds = 0;

  bool all_hypotheses_exact() const;
};

/// Evaluates the hypotheses, then the conclusion. Throws StructuralError when a
/// required binding is missing.
TheoremReport check(TheoremId id, const Bindings& b, const HarnessConfig& config = {});

struct SuiteSummary {
  std::size_t verified = 0;
  std::size_t refuted = 0;
  std::size_t inapplicable = 0;
  std::size_t partial = 0;
  std::size_t suspected = 0;
  /// Refuted reports whose hypotheses are all exact.
  std::size_t hard_failures = 0;
  bool passed() const { return hard_failures == 0; }
};

struct SuiteResult {
  std::vector<TheoremReport> reports;
  SuiteSummary summary;
};

SuiteResult run_suite(const std::vector<Bindings>& corpus, const std::vector<TheoremId>& ids,
                      const HarnessConfig& config = {});

struct CorpusEntry {
  std::string label;
  ModulePresentation module;
};

/// Deterministic family of modules over r; size caps the number of entries
/// (0 means all of them).
std::vector<CorpusEntry> generate_corpus(const GradedRing& r, std::size_t size = 0);
/// The three corpus rings QQ[x,y], QQ[x,y]/(xy), QQ[x,y,z]/(xy,xz,yz).
std::vector<GradedRing> builtin_rings();
/// Corpus entries over the builtin rings as bindings; ring 3 entries are also
/// paired with C = omega when with_canonical is set.
std::vector<Bindings> builtin_corpus(bool with_canonical = true);

/// Drops memoized per-module values (linked modules, G_C-dimensions, ...).
void clear_harness_memo();

/// R Gorenstein: Cohen-Macaulay with a cyclic canonical module.
bool is_gorenstein(const GradedRing& r);
/// C is isomorphic to a twist of the canonical module of a Cohen-Macaulay ring.
bool is_canonical_module(const ModulePresentation& c);

}  // namespace linkage
