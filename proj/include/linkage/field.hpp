#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace linkage {

using Scalar = mpq_class;

/// Raised when an operation receives structurally incompatible inputs
/// (rank mismatch, ring mismatch, malformed presentation).
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a degree or rank budget is exceeded. Never accompanied by a
/// partial answer.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation's mathematical precondition fails.
class Inapplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coefficient field: exact rationals or Z/p. Elements of Z/p are stored as
/// integers in [0, p) inside an mpq_class so both fields share one scalar type.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }

  Scalar from_int(long v) const;
  Scalar from_rational(const mpq_class& q) const;
  Scalar normalize(Scalar a) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar div(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;

  static bool is_zero(const Scalar& a) { return sgn(a) == 0; }
  static bool is_one(const Scalar& a) { return a == 1; }

  std::string name() const;

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  void reduce_mod(Scalar& a) const;

  std::uint32_t p_;
};

std::string scalar_to_string(const Scalar& a);

}  // namespace linkage
