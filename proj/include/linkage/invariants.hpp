#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linkage/homological.hpp"

namespace linkage {

/// Depth of the zero module and of modules that vanish at a prime.
inline constexpr int kInfiniteDepth = 1 << 20;

/// Default bound 2(n + 1) for "for all i > 0" vanishing claims.
int default_bound(const GradedRing& r);

/// Honest result of a claim over infinitely many indices or primes.
struct BoundedVerdict {
  enum class Kind { True, False, TrueUpToBound, TrueOnProbes, Unknown };
  Kind kind = Kind::Unknown;
  int witness = -1;  // failing index or probe position for False
  int bound = 0;     // bound used by TrueUpToBound
  std::string note;

  bool holds() const { return kind == Kind::True || kind == Kind::TrueUpToBound || kind == Kind::TrueOnProbes; }
  bool failed() const { return kind == Kind::False; }
  static const char* kind_name(Kind k);
  static BoundedVerdict exact(bool value, std::string note = {});
};

/// Homogeneous prime used to sample "for all p in Spec R" statements.
struct ProbePrime {
  std::vector<Poly> generators;
  std::string label;
  /// Variable-subset prime: the indices of its variables.
  std::optional<std::vector<int>> variables;
  int height = 0;
  bool user_supplied = false;
};

/// All primes generated by subsets of the variables that contain the ideal of R.
std::vector<ProbePrime> default_probe_primes(const GradedRing& r);
/// A user prime given by homogeneous generators; contains I is checked, primality is trusted.
ProbePrime user_probe_prime(const GradedRing& r, std::vector<Poly> generators, std::string label);
/// Membership of f in the prime.
bool prime_contains(const GradedRing& r, const ProbePrime& p, const Poly& f);

/// Ext^j_S(M, S) for j = 0..n, memoized per module.
const std::vector<ModulePresentation>& ambient_ext_profile(const ModulePresentation& m);
/// { j : Ext^j_S(M, S) != 0 }.
std::vector<int> ambient_ext_indices(const ModulePresentation& m);

int depth(const ModulePresentation& m);
/// -1 for the zero module.
int krull_dim(const ModulePresentation& m);
/// { n - j : Ext^j_S(M, S) != 0 } in increasing order.
std::vector<int> local_cohomology_degrees(const ModulePresentation& m);
/// Largest i < dim M with H^i_m(M) != 0. Throws Inapplicable for CM modules.
int cc(const ModulePresentation& m);
bool is_cohen_macaulay(const ModulePresentation& m);
/// depth M = dim R; the zero module counts as maximal Cohen-Macaulay.
bool is_maximal_cm(const ModulePresentation& m);

struct GradeResult {
  std::optional<int> value;  // nullopt: no nonvanishing Ext up to the bound
  bool exact = true;
  int bound = 0;
};
/// Grade of a nonzero module: dim R - dim M over CM rings, else a bounded Ext search.
GradeResult grade_module(const ModulePresentation& m, int bound = -1);

struct ReducedGrade {
  std::optional<int> value;  // nullopt: Ext^i(M, C) = 0 for 1 <= i <= bound
  int bound = 0;
  bool infinite_exact = false;  // M has a finite resolution of length <= bound
  std::string to_string() const;
};
ReducedGrade reduced_grade(const ModulePresentation& m, const ModulePresentation& c, int bound = -1);

/// Ext^i(M, N) = 0 for lo <= i <= hi. Exact when the resolution of M stops.
BoundedVerdict ext_vanishes(const ModulePresentation& m, const ModulePresentation& n, int lo, int hi);

/// depth_{R_p}(M_p); kInfiniteDepth when M_p = 0.
int depth_at_prime(const ModulePresentation& m, const ProbePrime& p);
/// dim M_p; -1 when M_p = 0.
int dim_at_prime(const ModulePresentation& m, const ProbePrime& p);
/// Drops the memoized Ext profiles.
void clear_invariant_memo();

/// Serre's condition S~_k. Exact over CM rings, probe-based otherwise.
BoundedVerdict serre_tilde(const ModulePresentation& m, int k, const std::vector<ProbePrime>& extra_probes = {});

struct SemidualizingCertificate {
  ModulePresentation c;
  IsoVerdict homothety_witness;  // R versus Hom(C, C)
  bool homothety_bijective = false;
  BoundedVerdict ext_vanishing;
  bool valid() const { return homothety_bijective && !ext_vanishing.failed(); }
};
SemidualizingCertificate is_semidualizing(const ModulePresentation& c, int bound = -1);

/// Ext^c_S(R, S) shifted so that the canonical module of S is S(-n), over R.
ModulePresentation canonical_module(const GradedRing& r);

/// Natural map mu: M -> Hom(C, M (x) C) on minimal generators, with its verdict.
struct AuslanderMap {
  ModulePresentation source;  // minimalize(M)
  ModulePresentation target;  // Hom(C, M (x) C)
  Matrix matrix;
  bool isomorphism = false;
};
AuslanderMap auslander_map(const ModulePresentation& m, const ModulePresentation& c);
/// Membership in the Auslander class A_C up to the bound. Throws Inapplicable
/// when C is not semidualizing.
BoundedVerdict in_auslander_class(const ModulePresentation& m, const ModulePresentation& c, int bound = -1);

struct GcDimVerdict {
  enum class Kind { Zero, Finite, Infinite, PositiveUnknown };
  Kind kind = Kind::PositiveUnknown;
  int value = 0;  // G_C-dimension for Zero / Finite
  int bound = 0;
  std::string note;

  bool finite() const { return kind == Kind::Zero || kind == Kind::Finite; }
  static const char* kind_name(Kind k);
};
/// Totally C-reflexive test: C-reflexive and Ext^i(M, C) = Ext^i(M^C, C) = 0 up to the bound.
BoundedVerdict gc_dim_zero(const ModulePresentation& m, const ModulePresentation& c, int bound = -1);
GcDimVerdict gc_dim(const ModulePresentation& m, const ModulePresentation& c, int bound = -1);

BoundedVerdict is_gc_perfect(const GradedRing& r, const std::vector<Poly>& ideal, const ModulePresentation& c,
                             int bound = -1);
BoundedVerdict is_gc_gorenstein(const GradedRing& r, const std::vector<Poly>& ideal, const ModulePresentation& c,
                                int bound = -1);
/// M re-presented over another ring with the same ambient polynomial ring.
ModulePresentation change_ring(const ModulePresentation& m, const GradedRing& r);
/// K = Ext^{gr I}(R/I, C) over R/I with its certificate.
std::pair<ModulePresentation, SemidualizingCertificate> induced_semidualizing(const GradedRing& r,
                                                                              const std::vector<Poly>& ideal,
                                                                              const ModulePresentation& c,
                                                                              int bound = -1);

/// (finite length, length).
std::pair<bool, std::optional<std::int64_t>> is_finite_length(const ModulePresentation& m);
/// m in Ass(M), decided by Hom(k, M) != 0.
bool m_in_ass(const ModulePresentation& m);
bool is_eilenberg_maclane(const ModulePresentation& m);
bool is_generalized_cm(const ModulePresentation& m);
BoundedVerdict is_reduced_gc_perfect(const ModulePresentation& m, const ModulePresentation& c, int bound = -1);

/// Largest n <= bound with Ext^i(Tr M, R) = 0 for 1 <= i <= n.
int n_torsionfree_degree(const ModulePresentation& m, int bound = -1);

}  // namespace linkage
