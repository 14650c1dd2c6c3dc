#include "linkage/polyparse.hpp"

#include <cctype>

namespace linkage {

namespace {

class PolyParser {
 public:
  PolyParser(const Field& f, const std::vector<std::string>& vars, std::string_view s) : f_(f), vars_(vars), s_(s) {}

  Poly run() {
    skip();
    if (pos_ == s_.size()) throw ParseError(pos_, "expected a polynomial");
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  Poly expr() {
    Poly acc;
    bool first = true;
    while (true) {
      bool negate = false;
      if (at('+') || at('-')) {
        negate = s_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      Poly t = term();
      acc = negate ? sub(f_, acc, t) : add(f_, acc, t);
      first = false;
      if (!at('+') && !at('-')) break;
    }
    return acc;
  }

  Poly term() {
    Poly acc = power();
    while (true) {
      if (at('*')) {
        ++pos_;
        acc = mul(f_, acc, power());
      } else if (at('/')) {
        std::size_t where = pos_++;
        Poly d = power();
        if (!d.is_constant() || Field::is_zero(d.leading().coef))
          throw ParseError(where, "division is only allowed by a nonzero constant");
        acc = scale(f_, acc, f_.inv(d.leading().coef));
      } else if (starts_factor()) {
        acc = mul(f_, acc, power());
      } else {
        return acc;
      }
    }
  }

  Poly power() {
    Poly base = atom();
    if (!at('^')) return base;
    ++pos_;
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(pos_, "expected an exponent");
    if (pos_ - start > 3) throw ParseError(start, "exponent too large");
    int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
    if (e > kMaxExponent) throw ParseError(start, "exponent too large");
    Poly out = Poly::constant(Scalar(1));
    for (int i = 0; i < e; ++i) out = mul(f_, out, base);
    return out;
  }

  Poly atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError(pos_, "expected a number, variable or '('");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!at(')')) throw ParseError(pos_, "expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Scalar v(mpz_class(std::string(s_.substr(start, pos_ - start))));
      return Poly::constant(f_.from_rational(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return Poly::variable(static_cast<int>(i));
      // allow juxtaposed single-letter variables such as "xy"
      Poly out = Poly::constant(Scalar(1));
      for (std::size_t k = 0; k < name.size(); ++k) {
        std::string one(1, name[k]);
        std::size_t idx = vars_.size();
        for (std::size_t i = 0; i < vars_.size(); ++i)
          if (vars_[i] == one) idx = i;
        if (idx == vars_.size()) throw ParseError(start, "unknown variable '" + name + "'");
        out = mul(f_, out, Poly::variable(static_cast<int>(idx)));
      }
      return out;
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  const Field& f_;
  const std::vector<std::string>& vars_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const Field& f, const std::vector<std::string>& vars, std::string_view text) {
  return PolyParser(f, vars, text).run();
}

}  // namespace linkage
