#pragma once

#include <string>
#include <vector>

#include "linkage/field.hpp"
#include "linkage/monomial.hpp"

namespace linkage {

struct PolyTerm {
  Monomial mon;
  Scalar coef;
};

/// Polynomial in k[x_1..x_n]: terms sorted by decreasing grevlex order, no
/// zero coefficients. The field is supplied by the caller on every
/// arithmetic operation.
class Poly {
 public:
  Poly() = default;
  static Poly constant(const Scalar& c);
  static Poly variable(int i);
  static Poly term(const Monomial& m, const Scalar& c);

  bool is_zero() const { return terms_.empty(); }
  /// Degree of the leading term, -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.front().mon.degree(); }
  bool is_homogeneous() const;
  bool is_constant() const { return terms_.size() == 1 && terms_.front().mon.is_one(); }
  const PolyTerm& leading() const { return terms_.front(); }
  const std::vector<PolyTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Takes ownership of unsorted terms; combines duplicates and drops zeros.
  static Poly from_terms(const Field& f, std::vector<PolyTerm> terms);

  /// Constant coefficient (0 if none).
  Scalar constant_term() const;

  std::string to_string(const std::vector<std::string>& names) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

 private:
  std::vector<PolyTerm> terms_;
  friend Poly add(const Field&, const Poly&, const Poly&);
  friend Poly sub(const Field&, const Poly&, const Poly&);
  friend Poly scale(const Field&, const Poly&, const Scalar&);
  friend Poly mul_term(const Field&, const Poly&, const Monomial&, const Scalar&);
};

Poly add(const Field& f, const Poly& a, const Poly& b);
Poly sub(const Field& f, const Poly& a, const Poly& b);
Poly neg(const Field& f, const Poly& a);
Poly scale(const Field& f, const Poly& a, const Scalar& c);
Poly mul_term(const Field& f, const Poly& a, const Monomial& m, const Scalar& c);
Poly mul(const Field& f, const Poly& a, const Poly& b);

}  // namespace linkage
