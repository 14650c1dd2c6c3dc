#include "linkage/hilbert.hpp"

#include <algorithm>

#include "linkage/field.hpp"

namespace linkage {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw BudgetExceeded("Hilbert series coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw BudgetExceeded("Hilbert series coefficient overflow");
  return r;
}

}  // namespace

LaurentPoly LaurentPoly::monomial(int exponent, std::int64_t coef) {
  LaurentPoly p;
  if (coef != 0) {
    p.low_ = exponent;
    p.coefs_ = {coef};
  }
  return p;
}

void LaurentPoly::trim() {
  while (!coefs_.empty() && coefs_.back() == 0) coefs_.pop_back();
  std::size_t lead = 0;
  while (lead < coefs_.size() && coefs_[lead] == 0) ++lead;
  if (lead > 0) {
    coefs_.erase(coefs_.begin(), coefs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (coefs_.empty()) low_ = 0;
}

std::int64_t LaurentPoly::coef(int e) const {
  if (coefs_.empty() || e < low_ || e > high()) return 0;
  return coefs_[static_cast<std::size_t>(e - low_)];
}

std::int64_t LaurentPoly::value_at_one() const {
  std::int64_t s = 0;
  for (auto c : coefs_) s = checked_add(s, c);
  return s;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  LaurentPoly r;
  r.low_ = std::min(low_, o.low_);
  int hi = std::max(high(), o.high());
  r.coefs_.assign(static_cast<std::size_t>(hi - r.low_ + 1), 0);
  for (std::size_t i = 0; i < coefs_.size(); ++i) r.coefs_[i + (low_ - r.low_)] = coefs_[i];
  for (std::size_t i = 0; i < o.coefs_.size(); ++i) {
    auto& slot = r.coefs_[i + (o.low_ - r.low_)];
    slot = checked_add(slot, o.coefs_[i]);
  }
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly neg = o;
  for (auto& c : neg.coefs_) c = checked_mul(c, -1);
  return *this + neg;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  LaurentPoly r;
  r.low_ = low_ + o.low_;
  r.coefs_.assign(coefs_.size() + o.coefs_.size() - 1, 0);
  for (std::size_t i = 0; i < coefs_.size(); ++i)
    for (std::size_t j = 0; j < o.coefs_.size(); ++j)
      r.coefs_[i + j] = checked_add(r.coefs_[i + j], checked_mul(coefs_[i], o.coefs_[j]));
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

bool LaurentPoly::divide_one_minus_t(LaurentPoly& q) const {
  if (is_zero()) {
    q = {};
    return true;
  }
  // p = (1 - t) q  <=>  q_i = sum_{j <= i} p_j
  if (value_at_one() != 0) return false;
  q.low_ = low_;
  q.coefs_.assign(coefs_.size() - 1, 0);
  std::int64_t run = 0;
  for (std::size_t i = 0; i + 1 < coefs_.size(); ++i) {
    run = checked_add(run, coefs_[i]);
    q.coefs_[i] = run;
  }
  q.trim();
  return true;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coefs_.size(); ++i) {
    std::int64_t c = coefs_[i];
    if (c == 0) continue;
    int e = low_ + static_cast<int>(i);
    std::int64_t a = c < 0 ? -c : c;
    if (out.empty()) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    if (e == 0) out += std::to_string(a);
    else {
      if (a != 1) out += std::to_string(a) + "*";
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

HilbertSeries HilbertSeries::reduced() const {
  HilbertSeries r = *this;
  if (r.numerator.is_zero()) {
    r.denominator_power = 0;
    return r;
  }
  LaurentPoly q;
  while (r.denominator_power > 0 && r.numerator.divide_one_minus_t(q)) {
    r.numerator = q;
    --r.denominator_power;
  }
  return r;
}

int HilbertSeries::dimension() const {
  if (numerator.is_zero()) return -1;
  return reduced().denominator_power;
}

std::int64_t HilbertSeries::value(int d) const {
  // coefficient of t^d in N(t) * sum_k C(k + p - 1, p - 1) t^k
  std::int64_t total = 0;
  if (numerator.is_zero()) return 0;
  const int p = denominator_power;
  for (int e = numerator.low(); e <= std::min(d, numerator.high()); ++e) {
    std::int64_t c = numerator.coef(e);
    if (c == 0) continue;
    int k = d - e;
    std::int64_t binom;
    if (p == 0) binom = k == 0 ? 1 : 0;
    else {
      binom = 1;
      for (int i = 1; i <= p - 1; ++i) binom = checked_mul(binom, k + i) / i;
    }
    total = checked_add(total, checked_mul(c, binom));
  }
  return total;
}

std::int64_t HilbertSeries::length() const {
  HilbertSeries r = reduced();
  if (r.denominator_power > 0) throw Inapplicable("module does not have finite length");
  return r.numerator.value_at_one();
}

namespace {

LaurentPoly one_minus_t_power(int k) {
  LaurentPoly r = LaurentPoly::monomial(0);
  LaurentPoly f = LaurentPoly::monomial(0) - LaurentPoly::monomial(1);
  for (int i = 0; i < k; ++i) r = r * f;
  return r;
}

}  // namespace

HilbertSeries HilbertSeries::operator+(const HilbertSeries& o) const {
  int p = std::max(denominator_power, o.denominator_power);
  LaurentPoly a = numerator * one_minus_t_power(p - denominator_power);
  LaurentPoly b = o.numerator * one_minus_t_power(p - o.denominator_power);
  return HilbertSeries{a + b, p}.reduced();
}

HilbertSeries HilbertSeries::operator-(const HilbertSeries& o) const {
  return *this + HilbertSeries{LaurentPoly() - o.numerator, o.denominator_power};
}

bool HilbertSeries::operator==(const HilbertSeries& o) const {
  HilbertSeries a = reduced(), b = o.reduced();
  return a.denominator_power == b.denominator_power && a.numerator == b.numerator;
}

std::string HilbertSeries::to_string() const {
  HilbertSeries r = reduced();
  std::string num = "(" + r.numerator.to_string() + ")";
  if (r.denominator_power == 0) return num;
  return num + "/(1 - t)^" + std::to_string(r.denominator_power);
}

std::vector<Monomial> minimize_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return grevlex_compare(a, b) < 0;
  });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

namespace {

LaurentPoly numerator_rec(std::vector<Monomial> gens) {
  if (gens.empty()) return LaurentPoly::monomial(0);
  for (const auto& g : gens)
    if (g.is_one()) return {};
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!gens[i].coprime(gens[j])) {
        coprime = false;
        break;
      }
  if (coprime) {
    LaurentPoly r = LaurentPoly::monomial(0);
    for (const auto& g : gens) r = r * (LaurentPoly::monomial(0) - LaurentPoly::monomial(g.degree()));
    return r;
  }
  // pivot on the variable occurring in the most generators among non-coprime ones
  int best = -1, best_count = 0;
  for (int v = 0; v < kMaxVars; ++v) {
    int count = 0;
    for (const auto& g : gens)
      if (g.exp[v] > 0) ++count;
    if (count > best_count) {
      best_count = count;
      best = v;
    }
  }
  Monomial x = Monomial::variable(best);
  std::vector<Monomial> plus = gens;
  plus.push_back(x);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) colon.push_back(x.divides(g) ? g / x : g);
  return numerator_rec(minimize_monomials(std::move(plus))) +
         numerator_rec(minimize_monomials(std::move(colon))).shifted(1);
}

}  // namespace

LaurentPoly monomial_ideal_numerator(std::vector<Monomial> gens) {
  return numerator_rec(minimize_monomials(std::move(gens)));
}

}  // namespace linkage
