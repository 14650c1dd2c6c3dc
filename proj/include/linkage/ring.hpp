#pragma once

#include <memory>
#include <string>
#include <vector>

#include "linkage/field.hpp"
#include "linkage/groebner.hpp"
#include "linkage/poly.hpp"

namespace linkage {

struct RingInvariants {
  int dim = 0;
  int depth = 0;
  int codim = 0;
  bool cohen_macaulay = true;
  bool gorenstein = true;
};

struct RingData;

/// Standard graded quotient k[x_1..x_n]/I. Cheap to copy; all copies share
/// one immutable description.
class GradedRing {
 public:
  GradedRing() = default;

  const Field& field() const;
  int num_vars() const;
  const std::vector<std::string>& variables() const;
  /// Minimal homogeneous generators of I.
  const std::vector<Poly>& ideal_generators() const;
  /// Reduced Gröbner basis of I (rank 1).
  const GroebnerBasis& ideal_gb() const;
  const RingInvariants& invariants() const;
  bool is_polynomial_ring() const;
  /// S = k[x_1..x_n] for this ring (itself when I = 0).
  GradedRing ambient() const;

  /// Normal form of p modulo I.
  Poly reduce(const Poly& p) const;
  /// Stable textual identity: field, variables and the reduced GB of I.
  const std::string& key() const;

  std::string describe() const;
  bool valid() const { return static_cast<bool>(d_); }

  bool operator==(const GradedRing& o) const;
  bool operator!=(const GradedRing& o) const { return !(*this == o); }

 private:
  friend GradedRing make_ring(const Field&, std::vector<std::string>, const std::vector<Poly>&);
  std::shared_ptr<const RingData> d_;
};

/// Builds the ring and its invariants (dim, depth, CM and Gorenstein flags)
/// through Ext^j_S(R, S). Throws StructuralError for inhomogeneous or
/// improper ideals.
GradedRing make_ring(const Field& field, std::vector<std::string> variables,
                     const std::vector<Poly>& relations);

/// Quotient R/J as a new ring (J given by generators in R).
GradedRing quotient_ring(const GradedRing& r, const std::vector<Poly>& ideal);

/// Throws StructuralError if the two rings differ.
void require_same_ring(const GradedRing& a, const GradedRing& b, const char* op);

/// Vectors g*e_i for g in GB(I) and i < rank: the contraction generators
/// appended to every submodule computation over R.
std::vector<FreeVector> ideal_multiples(const GradedRing& r, const ModuleOrder& order, std::size_t rank,
                                        std::size_t offset = 0);

}  // namespace linkage
