#include "linkage/monomial.hpp"

#include <algorithm>

#include "linkage/field.hpp"

namespace linkage {

Monomial Monomial::variable(int i) {
  if (i < 0 || i >= kMaxVars) throw StructuralError("variable index out of range");
  Monomial m;
  m.exp[i] = 1;
  m.deg = 1;
  return m;
}

Monomial Monomial::from_exponents(const std::vector<int>& e) {
  if (e.size() > static_cast<std::size_t>(kMaxVars)) throw StructuralError("too many variables");
  Monomial m;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] > kMaxExponent) throw StructuralError("exponent out of range");
    m.exp[i] = static_cast<std::uint8_t>(e[i]);
    m.deg = static_cast<std::uint16_t>(m.deg + e[i]);
  }
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    int e = exp[i] + o.exp[i];
    if (e > kMaxExponent) throw BudgetExceeded("exponent overflow");
    r.exp[i] = static_cast<std::uint8_t>(e);
  }
  r.deg = static_cast<std::uint16_t>(deg + o.deg);
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint8_t>(exp[i] - o.exp[i]);
  r.deg = static_cast<std::uint16_t>(deg - o.deg);
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r;
  int d = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    r.exp[i] = exp[i] > o.exp[i] ? exp[i] : o.exp[i];
    d += r.exp[i];
  }
  r.deg = static_cast<std::uint16_t>(d);
  return r;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  if (deg == 0) return "1";
  std::string out;
  for (int i = 0; i < kMaxVars; ++i) {
    if (exp[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i);
    if (exp[i] > 1) out += "^" + std::to_string(exp[i]);
  }
  return out;
}

namespace {

void enumerate(int var, int nvars, int left, Monomial& cur, std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    cur.exp[var] = static_cast<std::uint8_t>(left);
    out.push_back(cur);
    cur.exp[var] = 0;
    return;
  }
  for (int e = left; e >= 0; --e) {
    cur.exp[var] = static_cast<std::uint8_t>(e);
    enumerate(var + 1, nvars, left - e, cur, out);
  }
  cur.exp[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  if (d < 0 || nvars <= 0) return out;
  if (d > kMaxExponent) throw BudgetExceeded("degree exceeds exponent range");
  Monomial cur;
  cur.deg = static_cast<std::uint16_t>(d);
  enumerate(0, nvars, d, cur, out);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) > 0; });
  return out;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (auto e : exp) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace linkage
