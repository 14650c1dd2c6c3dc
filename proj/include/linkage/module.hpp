#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "linkage/groebner.hpp"
#include "linkage/hilbert.hpp"
#include "linkage/ring.hpp"

namespace linkage {

/// Dense matrix of polynomials, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Poly& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Poly& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Poly> column(std::size_t j) const;
  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<Poly>>& cols);
  static Matrix identity(std::size_t n);
  Matrix transposed() const;
  bool is_zero() const;

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> data_;
};

/// Product reduced modulo the ring's ideal.
Matrix multiply(const GradedRing& r, const Matrix& a, const Matrix& b);
/// [a | b]
Matrix hconcat(const Matrix& a, const Matrix& b);
/// Block diagonal.
Matrix block_diagonal(const Matrix& a, const Matrix& b);

/// Finitely generated graded module coker(matrix: F_1 -> F_0). Rows are
/// generators with degrees gen_twists; columns are relations with degrees
/// rel_twists; entry (i, j) is homogeneous of degree rel[j] - gen[i].
class ModulePresentation {
 public:
  ModulePresentation() = default;
  ModulePresentation(GradedRing ring, std::vector<int> gen_twists, std::vector<int> rel_twists,
                     Matrix matrix);

  static ModulePresentation free(const GradedRing& r, std::vector<int> gen_twists);
  static ModulePresentation zero(const GradedRing& r) { return free(r, {}); }
  /// R/J for an ideal J given by homogeneous generators.
  static ModulePresentation cyclic(const GradedRing& r, const std::vector<Poly>& ideal, int twist = 0);
  /// Presentation with relation degrees read off the entries. Zero columns
  /// are dropped; inhomogeneous columns throw StructuralError.
  static ModulePresentation from_matrix(const GradedRing& r, std::vector<int> gen_twists, const Matrix& matrix);

  const GradedRing& ring() const { return ring_; }
  const std::vector<int>& gen_twists() const { return gen_twists_; }
  const std::vector<int>& rel_twists() const { return rel_twists_; }
  const Matrix& matrix() const { return matrix_; }
  std::size_t num_gens() const { return gen_twists_.size(); }
  std::size_t num_rels() const { return rel_twists_.size(); }

  ModuleOrder order() const { return ModuleOrder(gen_twists_); }
  /// Reduced GB of the relation submodule plus I * F_0, in F_0.
  const GroebnerBasis& relation_gb() const;
  const HilbertSeries& hilbert_series() const;
  /// True when the module is zero.
  bool is_zero() const;

  /// Columns as vectors of F_0.
  FreeVector relation_vector(std::size_t j) const;

  std::string to_string() const;

 private:
  struct Lazy;
  GradedRing ring_;
  std::vector<int> gen_twists_;
  std::vector<int> rel_twists_;
  Matrix matrix_;
  std::shared_ptr<Lazy> lazy_;
};

/// Result of minimalization: the new presentation plus, for every original
/// generator, its expression in the new generators (columns of `projection`,
/// a num_gens(new) x num_gens(old) matrix).
struct Minimalized {
  ModulePresentation module;
  Matrix projection;
  std::vector<std::size_t> kept;
};

Minimalized minimalize_with_map(const ModulePresentation& m);
ModulePresentation minimalize(const ModulePresentation& m);
bool is_minimal(const ModulePresentation& m);

/// Indices of a subset of `vectors` minimally generating
/// (span(vectors) + span(base) + I*F) / (span(base) + I*F) in the free module
/// with the given twists. Scans by degree, then input order.
std::vector<std::size_t> minimal_generator_indices(const GradedRing& r, const std::vector<int>& twists,
                                                   const std::vector<FreeVector>& vectors,
                                                   const std::vector<FreeVector>& base = {});

/// Generators of ker(A: F_cols -> F_rows) over R, minimal and in a canonical
/// order. Returns columns together with their degrees.
struct Kernel {
  std::vector<std::vector<Poly>> columns;
  std::vector<int> twists;
};
Kernel syzygies(const GradedRing& r, const Matrix& a, const std::vector<int>& row_twists,
                const std::vector<int>& col_twists, std::size_t max_rank = 0);

/// M(a): generators of degree d move to degree d - a.
ModulePresentation twist(const ModulePresentation& m, int a);
ModulePresentation direct_sum(const ModulePresentation& m, const ModulePresentation& n);

/// Minimal graded free resolution F_L -> ... -> F_0 -> M.
struct Resolution {
  GradedRing ring;
  std::vector<std::vector<int>> twists;  // twists[i] = degrees of the basis of F_i
  std::vector<Matrix> maps;              // maps[i] = d_{i+1}: F_{i+1} -> F_i
  bool minimal = true;
  /// True when the resolution provably stops (next kernel is zero).
  bool finite = false;

  std::size_t length() const { return maps.size(); }
  std::size_t rank(std::size_t i) const { return i < twists.size() ? twists[i].size() : 0; }
};

Resolution minimal_free_resolution(const ModulePresentation& m, std::size_t length);

/// beta_{i,j}: entries[i] maps internal degree j to the count.
struct BettiTable {
  std::vector<std::vector<std::pair<int, std::size_t>>> entries;
  std::size_t total(std::size_t i) const;
  std::size_t at(std::size_t i, int j) const;
  bool operator==(const BettiTable& o) const { return entries == o.entries; }
  std::string to_string() const;
};

BettiTable betti(const ModulePresentation& m, std::size_t length);
BettiTable betti_of(const Resolution& r);

/// Outcome of an isomorphism test with a verifiable witness.
struct IsoVerdict {
  enum class Kind { Isomorphic, NotIsomorphic, Unknown };
  Kind kind = Kind::Unknown;
  /// Degree-0 maps between the minimalized modules, phi: M -> N and psi: N -> M
  /// with psi*phi = id and phi*psi = id modulo relations.
  Matrix forward;
  Matrix backward;
  std::string note;
  /// Twist a with M isomorphic to N(a) for the up-to-twist variant.
  int shift = 0;

  bool isomorphic() const { return kind == Kind::Isomorphic; }
  bool resolved() const { return kind != Kind::Unknown; }
  static const char* kind_name(Kind k);
};

struct IsoOptions {
  std::uint64_t seed = 0x5eed;
  int random_trials = 24;
};

IsoVerdict is_isomorphic(const ModulePresentation& m, const ModulePresentation& n,
                         const IsoOptions& opts = {});
/// Searches for a with M isomorphic to N(a) (a read off the lowest generator degree).
IsoVerdict is_isomorphic_up_to_twist(const ModulePresentation& m, const ModulePresentation& n,
                                     const IsoOptions& opts = {});

/// Basis of Hom(M, N)_0 as matrices (num_gens(N) x num_gens(M)) over the given
/// presentations (not minimalized).
std::vector<Matrix> degree_zero_homs(const ModulePresentation& m, const ModulePresentation& n);

/// Checks that `phi` (num_gens(n) x num_gens(m)) defines a homomorphism M -> N
/// homogeneous of the given degree.
bool is_homomorphism(const ModulePresentation& m, const ModulePresentation& n, const Matrix& phi, int degree = 0);

/// Annihilator ideal of M as a reduced GB (rank 1) over S containing I.
GroebnerBasis annihilator(const ModulePresentation& m);
/// Minimal generators of ann(M) as ring elements.
std::vector<Poly> annihilator_generators(const ModulePresentation& m);

/// Fault injection for negative-control tests: when set, transpose skips the
/// minimalization of its input presentation.
void set_fault_skip_minimalize(bool on);
bool fault_skip_minimalize();

}  // namespace linkage
