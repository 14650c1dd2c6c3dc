#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace linkage {

inline constexpr int kMaxVars = 8;
inline constexpr int kMaxExponent = 127;

/// Exponent vector in at most kMaxVars variables. Unused slots stay zero, so
/// monomials of rings with fewer variables compare and hash consistently.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> exp{};
  std::uint16_t deg = 0;

  static Monomial one() { return {}; }
  static Monomial variable(int i);
  static Monomial from_exponents(const std::vector<int>& e);

  int degree() const { return deg; }
  bool is_one() const { return deg == 0; }

  bool divides(const Monomial& other) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (exp[i] > other.exp[i]) return false;
    return true;
  }

  bool coprime(const Monomial& other) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (exp[i] != 0 && other.exp[i] != 0) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const;
  /// Requires o | *this.
  Monomial operator/(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return exp == o.exp; }
  bool operator!=(const Monomial& o) const { return exp != o.exp; }

  std::string to_string(const std::vector<std::string>& names) const;
  std::size_t hash() const;
};

/// Graded reverse lexicographic comparison: >0 when a > b.
inline int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
  for (int i = kMaxVars - 1; i >= 0; --i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
  }
  return 0;
}

/// Pure lexicographic comparison with x_0 > x_1 > ...
inline int lex_compare(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
  }
  return 0;
}

/// All monomials of total degree d in the first nvars variables, in
/// decreasing grevlex order.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace linkage
