#pragma once

#include <string>
#include <vector>

#include "linkage/invariants.hpp"

namespace linkage {

struct StabilityResult {
  bool stable = false;
  /// beta_0(M) minus the number of generators of Tr Tr M.
  int free_rank = 0;
};

/// Free summands detected through Tr Tr M on minimal presentations.
StabilityResult is_stable(const ModulePresentation& m);
/// Tr Tr M, minimalized.
ModulePresentation stable_part(const ModulePresentation& m);

/// Trace ideal criterion: M has a free summand iff some f in M^* maps some
/// minimal generator to a unit. Independent of the transpose.
bool has_free_summand_by_trace(const ModulePresentation& m);
/// M -> R^m built from generators of M^* is injective (M is a first syzygy).
bool is_first_syzygy(const ModulePresentation& m);

struct LinkageReport {
  ModulePresentation module;
  bool stable = false;
  int free_rank_stripped = 0;
  bool syzygy_test = false;  // Ext^1(Tr M, R) = 0
  IsoVerdict double_link_iso;  // M versus lambda^2 M
  bool verdict = false;
  /// A resolved disagreement between the verdict and the lambda^2 test.
  bool fatal = false;
  std::string note;
};

/// Horizontal linkage: stable and Ext^1(Tr M, R) = 0, cross-checked with M = lambda^2 M.
LinkageReport is_horizontally_linked(const ModulePresentation& m, const IsoOptions& opts = {});

/// lambda M with a minimal presentation.
ModulePresentation link(const ModulePresentation& m);
/// M versus lambda M, up to a twist.
IsoVerdict is_self_linked(const ModulePresentation& m, const IsoOptions& opts = {});

struct IdealLinkVerdict {
  bool verified = false;
  GradedRing quotient;
  IsoVerdict m_to_lambda_n;  // M versus lambda N over R/c, up to twist
  IsoVerdict n_to_lambda_m;
  std::string note;
};
/// M ~_c N: both are R/c-modules and they are horizontally linked over R/c.
/// Throws Inapplicable when c does not annihilate both modules.
IdealLinkVerdict linked_by_ideal(const ModulePresentation& m, const ModulePresentation& n, const std::vector<Poly>& c,
                                 const IsoOptions& opts = {});

}  // namespace linkage
