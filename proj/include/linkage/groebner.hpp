#pragma once

#include <climits>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "linkage/field.hpp"
#include "linkage/monomial.hpp"
#include "linkage/poly.hpp"

namespace linkage {

inline constexpr int kDefaultMaxDegree = 24;
inline constexpr std::size_t kDefaultMaxRank = 512;

/// Process-wide size guards. A negative degree or zero rank argument in the
/// calls below means "use these".
struct Budgets {
  int max_degree = -1;
  std::size_t max_rank = kDefaultMaxRank;
};
Budgets budgets();
void set_budgets(const Budgets& b);

struct VecTerm {
  Monomial mon;
  std::uint32_t comp = 0;
  Scalar coef;
};

/// Sparse element of a free module S^r. Terms are sorted by decreasing
/// ModuleOrder; all routines below assume the vector was built for the order
/// they are handed.
struct FreeVector {
  std::vector<VecTerm> terms;

  bool is_zero() const { return terms.empty(); }
  const VecTerm& leading() const { return terms.front(); }
  std::size_t size() const { return terms.size(); }
  bool operator==(const FreeVector& o) const;
};

/// Monomial order on free-module terms. Terms compare first by weighted
/// degree deg(m) + twist(comp), then by elimination block (higher block is
/// larger), then by the ring order on monomials, then by position with the
/// lower index larger. For homogeneous vectors this is TOP(grevlex) refined by
/// the blocks, which is an elimination order for the higher blocks.
class ModuleOrder {
 public:
  enum class Kind { GrevLex, Lex };

  ModuleOrder() = default;
  explicit ModuleOrder(std::vector<int> twists, std::vector<int> blocks = {},
                       Kind kind = Kind::GrevLex);

  static ModuleOrder ring(Kind kind = Kind::GrevLex) { return ModuleOrder({0}, {}, kind); }

  std::size_t rank() const { return twists_.size(); }
  Kind kind() const { return kind_; }
  int twist(std::uint32_t c) const { return twists_[c]; }
  const std::vector<int>& twists() const { return twists_; }
  int block(std::uint32_t c) const { return blocks_.empty() ? 0 : blocks_[c]; }

  int weighted_degree(const Monomial& m, std::uint32_t c) const { return m.degree() + twists_[c]; }

  int compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const {
    int wa = a.degree() + twists_[ca];
    int wb = b.degree() + twists_[cb];
    if (wa != wb) return wa > wb ? 1 : -1;
    if (!blocks_.empty() && blocks_[ca] != blocks_[cb]) return blocks_[ca] > blocks_[cb] ? 1 : -1;
    int c = kind_ == Kind::GrevLex ? grevlex_compare(a, b) : lex_compare(a, b);
    if (c != 0) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }

 private:
  std::vector<int> twists_;
  std::vector<int> blocks_;
  Kind kind_ = Kind::GrevLex;
};

// Free-vector arithmetic under a fixed order.
FreeVector make_vector(const Field& f, const ModuleOrder& ord, std::vector<VecTerm> terms);
FreeVector vector_from_polys(const Field& f, const ModuleOrder& ord, const std::vector<Poly>& comps);
std::vector<Poly> vector_to_polys(const Field& f, const FreeVector& v, std::size_t rank);
FreeVector vec_add(const Field& f, const ModuleOrder& ord, const FreeVector& a, const FreeVector& b);
/// a - c * m * b
FreeVector vec_sub_mul(const Field& f, const ModuleOrder& ord, const FreeVector& a,
                       const FreeVector& b, const Monomial& m, const Scalar& c);
FreeVector vec_scale(const Field& f, const FreeVector& a, const Scalar& c);
void make_monic(const Field& f, FreeVector& v);
/// Weighted degree of the leading term; -1 for zero.
int vec_degree(const ModuleOrder& ord, const FreeVector& v);
bool vec_is_homogeneous(const ModuleOrder& ord, const FreeVector& v);

/// A Gröbner basis of a submodule of S^r for a fixed order.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(Field field, ModuleOrder order, std::vector<FreeVector> elements, bool reduced);

  const Field& field() const { return field_; }
  const ModuleOrder& order() const { return order_; }
  const std::vector<FreeVector>& generators() const { return elements_; }
  bool reduced() const { return reduced_; }
  std::size_t size() const { return elements_.size(); }

  /// Unique remainder of f modulo the basis (full reduction).
  FreeVector normal_form(FreeVector f) const;
  bool contains(const FreeVector& f) const { return normal_form(f).is_zero(); }

  /// Leading monomials of the basis elements lying in component c.
  std::vector<Monomial> leading_monomials(std::uint32_t c) const;

 private:
  Field field_ = Field::rationals();
  ModuleOrder order_;
  std::vector<FreeVector> elements_;
  std::vector<std::vector<int>> by_comp_;
  bool reduced_ = false;
};

/// Incremental homogeneous Buchberger engine (normal selection strategy,
/// Gebauer-Möller pair criteria). Generators may be added between calls to
/// complete(); after complete(d) the basis is correct through degree d.
/// Degrees more than max_degree above the smallest twist raise BudgetExceeded.
class GroebnerEngine {
 public:
  GroebnerEngine(Field field, ModuleOrder order, int max_degree = -1);

  void add_generator(FreeVector v);
  void complete(int up_to_degree = INT_MAX);

  /// Full reduction against the current basis; exact for vectors of degree at
  /// most the completed degree.
  FreeVector reduce(FreeVector v) const;

  /// Minimal, interreduced, monic basis sorted by increasing leading term.
  GroebnerBasis reduced_basis() const;
  std::vector<FreeVector> active_elements() const;

  const Field& field() const { return field_; }
  const ModuleOrder& order() const { return order_; }

 private:
  struct Element {
    FreeVector v;
    int degree = 0;
    bool active = true;
  };
  struct Pair {
    int degree;
    int i;
    int j;
    Monomial lcm;
    bool operator<(const Pair& o) const {
      if (degree != o.degree) return degree < o.degree;
      if (j != o.j) return j < o.j;
      return i < o.i;
    }
  };

  void insert(FreeVector v);
  FreeVector s_vector(const Pair& p) const;
  FreeVector reduce_skip(FreeVector v, int skip) const;

  Field field_;
  ModuleOrder order_;
  int max_degree_;
  int base_degree_;
  bool product_criterion_;
  std::vector<Element> elems_;
  std::vector<std::vector<int>> active_by_comp_;
  std::set<Pair> pairs_;
  std::multimap<int, FreeVector> pending_;
};

/// Reduced Gröbner basis of the submodule generated by `generators`.
GroebnerBasis buchberger(const Field& f, const std::vector<FreeVector>& generators,
                         const ModuleOrder& order, int max_degree = -1);

/// Remainder of f modulo G. Throws StructuralError on rank mismatch.
FreeVector normal_form(const FreeVector& f, const GroebnerBasis& g);

/// Generators of the kernel of S^m -> S^r, e_j -> vectors[j], over the
/// polynomial ring (no quotient). `twists` are the degrees of the basis of
/// S^r; each vector must be homogeneous.
std::vector<FreeVector> syzygy_basis(const Field& f, const std::vector<FreeVector>& vectors,
                                     const std::vector<int>& twists,
                                     int max_degree = -1);

}  // namespace linkage
