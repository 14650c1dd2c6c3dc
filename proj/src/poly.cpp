#include "linkage/poly.hpp"

#include <algorithm>
#include <unordered_map>

namespace linkage {

Poly Poly::constant(const Scalar& c) {
  Poly p;
  if (!Field::is_zero(c)) p.terms_.push_back({Monomial::one(), c});
  return p;
}

Poly Poly::variable(int i) {
  Poly p;
  p.terms_.push_back({Monomial::variable(i), Scalar(1)});
  return p;
}

Poly Poly::term(const Monomial& m, const Scalar& c) {
  Poly p;
  if (!Field::is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

bool Poly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mon.degree() != terms_.front().mon.degree()) return false;
  return true;
}

Scalar Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mon.is_one()) return terms_.back().coef;
  return Scalar(0);
}

Poly Poly::from_terms(const Field& f, std::vector<PolyTerm> terms) {
  std::sort(terms.begin(), terms.end(), [](const PolyTerm& a, const PolyTerm& b) {
    return grevlex_compare(a.mon, b.mon) > 0;
  });
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mon == t.mon) {
      p.terms_.back().coef = f.add(p.terms_.back().coef, t.coef);
      if (Field::is_zero(p.terms_.back().coef)) p.terms_.pop_back();
    } else if (!Field::is_zero(t.coef)) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.coef;
    bool negative = c < 0;
    if (negative) c = -c;
    if (!first) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    first = false;
    if (t.mon.is_one()) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + "*";
      out += t.mon.to_string(names);
    }
  }
  return out;
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mon != o.terms_[i].mon || terms_[i].coef != o.terms_[i].coef) return false;
  return true;
}

Poly add(const Field& f, const Poly& a, const Poly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Poly r;
  std::vector<PolyTerm> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    int c;
    if (i == a.terms_.size()) c = -1;
    else if (j == b.terms_.size()) c = 1;
    else c = grevlex_compare(a.terms_[i].mon, b.terms_[j].mon);
    if (c > 0) out.push_back(a.terms_[i++]);
    else if (c < 0) out.push_back(b.terms_[j++]);
    else {
      Scalar s = f.add(a.terms_[i].coef, b.terms_[j].coef);
      if (!Field::is_zero(s)) out.push_back({a.terms_[i].mon, std::move(s)});
      ++i;
      ++j;
    }
  }
  r.terms_ = std::move(out);
  return r;
}

Poly sub(const Field& f, const Poly& a, const Poly& b) {
  if (b.is_zero()) return a;
  Poly r;
  std::vector<PolyTerm> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    int c;
    if (i == a.terms_.size()) c = -1;
    else if (j == b.terms_.size()) c = 1;
    else c = grevlex_compare(a.terms_[i].mon, b.terms_[j].mon);
    if (c > 0) out.push_back(a.terms_[i++]);
    else if (c < 0) {
      out.push_back({b.terms_[j].mon, f.neg(b.terms_[j].coef)});
      ++j;
    } else {
      Scalar s = f.sub(a.terms_[i].coef, b.terms_[j].coef);
      if (!Field::is_zero(s)) out.push_back({a.terms_[i].mon, std::move(s)});
      ++i;
      ++j;
    }
  }
  r.terms_ = std::move(out);
  return r;
}

Poly neg(const Field& f, const Poly& a) { return scale(f, a, f.from_int(-1)); }

Poly scale(const Field& f, const Poly& a, const Scalar& c) {
  Poly r;
  if (Field::is_zero(c)) return r;
  r.terms_.reserve(a.terms_.size());
  for (const auto& t : a.terms_) r.terms_.push_back({t.mon, f.mul(t.coef, c)});
  return r;
}

Poly mul_term(const Field& f, const Poly& a, const Monomial& m, const Scalar& c) {
  Poly r;
  if (Field::is_zero(c)) return r;
  r.terms_.reserve(a.terms_.size());
  for (const auto& t : a.terms_) r.terms_.push_back({t.mon * m, f.mul(t.coef, c)});
  return r;
}

Poly mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.size() == 1) return mul_term(f, b, a.leading().mon, a.leading().coef);
  if (b.size() == 1) return mul_term(f, a, b.leading().mon, b.leading().coef);
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) {
      Monomial m = s.mon * t.mon;
      auto it = acc.find(m);
      Scalar prod = f.mul(s.coef, t.coef);
      if (it == acc.end()) acc.emplace(m, std::move(prod));
      else it->second = f.add(it->second, prod);
    }
  std::vector<PolyTerm> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!Field::is_zero(c)) terms.push_back({m, std::move(c)});
  return Poly::from_terms(f, std::move(terms));
}

}  // namespace linkage
