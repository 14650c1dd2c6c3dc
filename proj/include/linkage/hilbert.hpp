#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linkage/monomial.hpp"

namespace linkage {

/// Laurent polynomial with int64 coefficients: sum c[i] t^(low + i).
/// Arithmetic throws BudgetExceeded on overflow.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(int exponent, std::int64_t coef = 1);

  bool is_zero() const { return coefs_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coefs_.size()) - 1; }
  std::int64_t coef(int exponent) const;
  std::int64_t value_at_one() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly shifted(int k) const;
  bool operator==(const LaurentPoly& o) const { return low_ == o.low_ && coefs_ == o.coefs_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  /// Divides by (1 - t) if exact; returns false otherwise.
  bool divide_one_minus_t(LaurentPoly& quotient) const;

  std::string to_string() const;
  const std::vector<std::int64_t>& coefficients() const { return coefs_; }

 private:
  void trim();
  int low_ = 0;
  std::vector<std::int64_t> coefs_;
};

/// Hilbert series numerator(t) / (1 - t)^denominator_power.
struct HilbertSeries {
  LaurentPoly numerator;
  int denominator_power = 0;

  /// Cancels common (1 - t) factors; afterwards denominator_power is the
  /// Krull dimension of the module (or the numerator is zero).
  HilbertSeries reduced() const;
  /// Krull dimension; -1 for the zero module.
  int dimension() const;
  /// dim_k M_d.
  std::int64_t value(int d) const;
  /// Vector-space dimension when the module has finite length.
  std::int64_t length() const;
  bool is_zero() const { return numerator.is_zero(); }

  HilbertSeries operator+(const HilbertSeries& o) const;
  HilbertSeries operator-(const HilbertSeries& o) const;
  HilbertSeries shifted(int k) const { return {numerator.shifted(k), denominator_power}; }
  /// Equality as rational functions.
  bool operator==(const HilbertSeries& o) const;
  bool operator!=(const HilbertSeries& o) const { return !(*this == o); }

  std::string to_string() const;
};

/// Numerator N with HS(S/J) = N / (1 - t)^n for the monomial ideal J.
LaurentPoly monomial_ideal_numerator(std::vector<Monomial> gens);

/// Removes generators divisible by others and duplicates.
std::vector<Monomial> minimize_monomials(std::vector<Monomial> gens);

}  // namespace linkage
