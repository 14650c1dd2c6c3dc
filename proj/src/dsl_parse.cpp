#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "linkage/dsl.hpp"
#include "linkage/polyparse.hpp"

namespace linkage::dsl {

namespace {

std::string format_error(SourcePos pos, const std::string& message, const std::vector<std::string>& expected) {
  std::string s = "line " + std::to_string(pos.line) + ", column " + std::to_string(pos.col) + ": " + message;
  if (!expected.empty()) {
    s += "; expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) s += (i ? ", " : "") + expected[i];
  }
  return s;
}

}  // namespace

DslError::DslError(SourcePos pos, const std::string& message, std::vector<std::string> expected)
    : std::runtime_error(format_error(pos, message, expected)),
      pos_(pos),
      message_(message),
      expected_(std::move(expected)) {}

namespace {

// ---------------------------------------------------------------- lexer

struct Token {
  enum class Kind { Ident, Int, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  std::size_t offset = 0;
  std::size_t end = 0;
  SourcePos pos;
};

std::string describe(const Token& t) {
  if (t.kind == Token::Kind::End) return "end of input";
  return "'" + t.text + "'";
}

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t;
    t.offset = i;
    t.pos = {line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      t.kind = Token::Kind::Ident;
      t.text = src.substr(i, j - i);
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Token::Kind::Int;
      t.text = src.substr(i, j - i);
      advance(j - i);
    } else {
      static const char* two[] = {"==", "!=", "<=", ">="};
      t.kind = Token::Kind::Punct;
      for (const char* p : two)
        if (src.compare(i, 2, p) == 0) t.text = p;
      if (t.text.empty()) {
        if (std::string("()[],;=<>+-*/^").find(c) == std::string::npos)
          throw DslError(t.pos, std::string("unexpected character '") +
                                    (static_cast<unsigned char>(c) < 0x80 ? std::string(1, c) : std::string("non-ASCII")) +
                                    "'");
        t.text = std::string(1, c);
      }
      advance(t.text.size());
    }
    t.end = i;
    out.push_back(std::move(t));
  }
  Token end;
  end.offset = end.end = src.size();
  end.pos = {line, col};
  out.push_back(end);
  return out;
}

// ---------------------------------------------------------------- signatures

enum class Ty { Module, Int, Bool, Text };

struct Signature {
  const char* name;
  const char* args;  // 'M' module, 'R' ring, 'I' integer
  Ty result;
};

const Signature kFunctions[] = {
    {"lambda", "M", Ty::Module},
    {"transpose", "M", Ty::Module},
    {"transpose_wrt", "MM", Ty::Module},
    {"syzygy", "MI", Ty::Module},
    {"ext", "MMI", Ty::Module},
    {"tor", "MMI", Ty::Module},
    {"tensor", "MM", Ty::Module},
    {"hom", "MM", Ty::Module},
    {"canonical", "R", Ty::Module},
    {"dual", "M", Ty::Module},
    {"pushforward", "MM", Ty::Module},
    {"twist", "MI", Ty::Module},
    {"direct_sum", "MM", Ty::Module},
    {"minimalize", "M", Ty::Module},
    {"stable_part", "M", Ty::Module},
    {"depth", "M", Ty::Int},
    {"dim", "M", Ty::Int},
    {"rgr", "MM", Ty::Int},
    {"cc", "M", Ty::Int},
    {"gc_dim", "MM", Ty::Int},
    {"num_gens", "M", Ty::Int},
    {"is_horizontally_linked", "M", Ty::Bool},
    {"is_stable", "M", Ty::Bool},
    {"serre_tilde", "MI", Ty::Bool},
    {"is_cm", "M", Ty::Bool},
    {"is_mcm", "M", Ty::Bool},
    {"in_auslander_class", "MM", Ty::Bool},
    {"is_semidualizing", "M", Ty::Bool},
    {"iso", "MM", Ty::Bool},
    {"is_self_linked", "M", Ty::Bool},
    {"is_eilenberg_maclane", "M", Ty::Bool},
    {"is_generalized_cm", "M", Ty::Bool},
    {"is_zero", "M", Ty::Bool},
    {"betti", "MI", Ty::Text},
    {"hilbert", "M", Ty::Text},
};

const Signature* find_function(const std::string& name) {
  for (const auto& s : kFunctions)
    if (name == s.name) return &s;
  return nullptr;
}

std::vector<std::string> names_of(Ty t) {
  std::vector<std::string> out;
  for (const auto& s : kFunctions)
    if (s.result == t) out.push_back(s.name);
  return out;
}

const std::set<std::string> kModuleKeys = {"M", "M1", "M2", "C"};
const std::set<std::string> kIdealKeys = {"I", "J", "a", "c", "c1", "c2"};

/// Binding keys a theorem accepts, read off its signature.
std::set<std::string> allowed_keys(TheoremId id) {
  std::set<std::string> out = {"R"};
  const std::string sig = theorem_signature(id);
  std::string word;
  auto flush = [&] {
    if (!word.empty() && word != "or" && word != "optional") out.insert(word);
    word.clear();
  };
  for (char ch : sig) {
    if (std::isalnum(static_cast<unsigned char>(ch))) word += ch;
    else flush();
  }
  flush();
  return out;
}

std::string collapse_ws(const std::string& s) {
  std::string out;
  bool space = false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      space = !out.empty();
      continue;
    }
    if (space) out += ' ';
    space = false;
    out += c;
  }
  return out;
}

// ---------------------------------------------------------------- parser

struct RingSym {
  Field field = Field::rationals();
  std::vector<std::string> vars;
};

struct Typed {
  Ty ty;
  std::string ring;
};

class Parser {
 public:
  explicit Parser(const std::string& src) : src_(src), toks_(lex(src)) {}

  Script run() {
    Script s;
    while (peek().kind != Token::Kind::End) s.statements.push_back(statement());
    return s;
  }

 private:
  const std::string& src_;
  std::vector<Token> toks_;
  std::size_t i_ = 0;
  std::map<std::string, RingSym> rings_;
  std::map<std::string, std::string> modules_;  // module name -> ring name

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(i_ + k, toks_.size() - 1)]; }
  const Token& next() {
    const Token& t = toks_[i_];
    if (i_ + 1 < toks_.size()) ++i_;
    return t;
  }
  bool at(const std::string& text) const {
    const Token& t = peek();
    return (t.kind == Token::Kind::Punct || t.kind == Token::Kind::Ident) && t.text == text;
  }
  [[noreturn]] void fail(const Token& t, const std::string& what, std::vector<std::string> expected = {}) const {
    throw DslError(t.pos, what, std::move(expected));
  }
  [[noreturn]] void unexpected(std::vector<std::string> expected) const {
    fail(peek(), "unexpected " + describe(peek()), std::move(expected));
  }
  const Token& expect(const std::string& text) {
    if (!at(text)) unexpected({"'" + text + "'"});
    return next();
  }
  const Token& ident(const char* what) {
    if (peek().kind != Token::Kind::Ident) unexpected({what});
    return next();
  }
  long integer(bool allow_negative = false) {
    bool neg = false;
    if (allow_negative && at("-")) {
      next();
      neg = true;
    }
    if (peek().kind != Token::Kind::Int) unexpected({"integer"});
    const Token& t = next();
    if (t.text.size() > 9) fail(t, "integer " + t.text + " is too large");
    const long v = std::stol(t.text);
    return neg ? -v : v;
  }
  void fresh_name(const Token& t) {
    if (rings_.count(t.text) || modules_.count(t.text)) fail(t, "name '" + t.text + "' is already declared");
  }
  const RingSym& ring_ref(const Token& t) {
    auto it = rings_.find(t.text);
    if (it == rings_.end()) {
      if (modules_.count(t.text)) fail(t, "'" + t.text + "' is a module, not a ring");
      fail(t, "unknown ring '" + t.text + "'");
    }
    return it->second;
  }

  Statement statement() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Ident) {
      if (t.text == "ring") return ring_decl();
      if (t.text == "module") return module_decl();
      if (t.text == "let") return let_stmt();
      if (t.text == "assert") return assert_stmt();
      if (t.text == "print") return print_stmt();
      if (t.text == "check") return check_stmt();
      if (t.text == "suite") return suite_stmt();
    }
    unexpected({"'ring'", "'module'", "'let'", "'assert'", "'print'", "'check'", "'suite'"});
  }

  // ----- polynomials

  /// Consumes a polynomial up to ',' or a closing bracket at depth zero.
  PolyText poly_text(const RingSym& ring) {
    const Token& first = peek();
    int depth = 0;
    std::size_t start = first.offset, end = first.offset;
    while (true) {
      const Token& t = peek();
      if (t.kind == Token::Kind::End || t.text == ";") break;
      if (depth == 0 && t.kind == Token::Kind::Punct && (t.text == "," || t.text == "]" || t.text == ")")) break;
      if (t.text == "(") ++depth;
      if (t.text == ")") --depth;
      end = t.end;
      next();
    }
    if (end == start) unexpected({"polynomial"});
    const std::string raw = src_.substr(start, end - start);
    Poly p;
    try {
      p = parse_poly(ring.field, ring.vars, raw);
    } catch (const ParseError& e) {
      SourcePos pos = first.pos;
      for (std::size_t k = 0; k < e.offset() && k < raw.size(); ++k) {
        if (raw[k] == '\n') {
          ++pos.line;
          pos.col = 1;
        } else {
          ++pos.col;
        }
      }
      throw DslError(pos, std::string(e.what()) + " in polynomial \"" + collapse_ws(raw) + "\"");
    } catch (const std::exception& e) {
      throw DslError(first.pos, std::string(e.what()) + " in polynomial \"" + collapse_ws(raw) + "\"");
    }
    if (!p.is_homogeneous()) {
      const int d = p.degree();
      for (const auto& term : p.terms())
        if (term.mon.degree() != d)
          throw DslError(first.pos, "polynomial \"" + collapse_ws(raw) + "\" is not homogeneous: monomial " +
                                        Poly::term(term.mon, Scalar(1)).to_string(ring.vars) + " has degree " +
                                        std::to_string(term.mon.degree()) + ", expected " + std::to_string(d));
    }
    last_poly_ = p;
    return {collapse_ws(raw), first.pos};
  }
  Poly last_poly_;

  std::vector<PolyText> poly_list(const RingSym& ring) {
    std::vector<PolyText> out;
    expect("[");
    if (at("]")) {
      next();
      return out;
    }
    while (true) {
      out.push_back(poly_text(ring));
      if (at(",")) {
        next();
        continue;
      }
      if (at("]")) {
        next();
        return out;
      }
      unexpected({"','", "']'"});
    }
  }

  // ----- declarations

  std::string field_spec(Field& f) {
    const Token& t = ident("field");
    if (t.text == "QQ") {
      f = Field::rationals();
      return "QQ";
    }
    long p = 0;
    if (t.text == "ZZ") {
      expect("/");
      p = integer();
    } else if (t.text == "GF") {
      expect("(");
      p = integer();
      expect(")");
    } else {
      fail(t, "unknown field '" + t.text + "'", {"'QQ'", "'ZZ/p'", "'GF(p)'"});
    }
    bool prime = p >= 2;
    for (long d = 2; prime && d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime || p > 2147483647L) fail(t, std::to_string(p) + " is not a supported prime");
    f = Field::prime(static_cast<std::uint32_t>(p));
    return "ZZ/" + std::to_string(p);
  }

  RingDecl ring_decl() {
    RingDecl d;
    d.pos = next().pos;
    const Token& name = ident("ring name");
    fresh_name(name);
    d.name = name.text;
    expect("=");
    RingSym sym;
    const Token& kind = ident("'poly' or 'quotient'");
    if (kind.text == "poly") {
      expect("(");
      d.field = field_spec(sym.field);
      while (at(",")) {
        next();
        const Token& v = ident("variable name");
        if (std::find(d.variables.begin(), d.variables.end(), v.text) != d.variables.end())
          fail(v, "variable '" + v.text + "' is repeated");
        d.variables.push_back(v.text);
      }
      if (d.variables.empty()) fail(peek(), "a polynomial ring needs at least one variable", {"','"});
      if (d.variables.size() > static_cast<std::size_t>(kMaxVars))
        fail(kind, "at most " + std::to_string(kMaxVars) + " variables are supported");
      expect(")");
      sym.vars = d.variables;
    } else if (kind.text == "quotient") {
      d.quotient = true;
      expect("(");
      const Token& base = ident("ring name");
      sym = ring_ref(base);
      d.base = base.text;
      expect(",");
      d.relations = poly_list(sym);
      expect(")");
    } else {
      fail(kind, "unexpected " + describe(kind), {"'poly'", "'quotient'"});
    }
    expect(";");
    rings_[d.name] = sym;
    return d;
  }

  ModuleDecl module_decl() {
    ModuleDecl d;
    d.pos = next().pos;
    const Token& name = ident("module name");
    fresh_name(name);
    d.name = name.text;
    expect("=");
    const Token& kw = ident("'coker'");
    if (kw.text != "coker") fail(kw, "unexpected " + describe(kw), {"'coker'"});
    expect("(");
    const Token& rt = ident("ring name");
    const RingSym& ring = ring_ref(rt);
    d.ring = rt.text;
    expect(",");
    if (!at("twists")) unexpected({"'twists'"});
    next();
    expect("=");
    expect("[");
    while (!at("]")) {
      d.twists.push_back(static_cast<int>(integer(true)));
      if (at(",")) next();
      else if (!at("]")) unexpected({"','", "']'"});
    }
    next();
    if (d.twists.empty()) fail(peek(), "a module needs at least one generator twist");
    expect(",");
    if (!at("matrix")) unexpected({"'matrix'"});
    next();
    expect("=");
    const Token& open = expect("[");
    std::vector<std::vector<Poly>> values;
    while (!at("]")) {
      const Token& row_start = peek();
      expect("[");
      std::vector<PolyText> row;
      std::vector<Poly> vals;
      while (!at("]")) {
        row.push_back(poly_text(ring));
        vals.push_back(last_poly_);
        if (at(",")) next();
        else if (!at("]")) unexpected({"','", "']'"});
      }
      next();
      if (!d.rows.empty() && row.size() != d.rows.front().size())
        fail(row_start, "row has " + std::to_string(row.size()) + " entries, expected " +
                            std::to_string(d.rows.front().size()));
      d.rows.push_back(std::move(row));
      values.push_back(std::move(vals));
      if (at(",")) next();
      else if (!at("]")) unexpected({"','", "']'"});
    }
    next();
    if (!d.rows.empty() && d.rows.size() != d.twists.size())
      fail(open, "matrix has " + std::to_string(d.rows.size()) + " rows but there are " +
                     std::to_string(d.twists.size()) + " generator twists");
    const std::size_t cols = d.rows.empty() ? 0 : d.rows.front().size();
    for (std::size_t j = 0; j < cols; ++j) {
      std::optional<int> deg;
      for (std::size_t i = 0; i < d.rows.size(); ++i) {
        const Poly& p = values[i][j];
        if (p.is_zero()) continue;
        const int dj = p.degree() + d.twists[i];
        if (deg && *deg != dj)
          throw DslError(d.rows[i][j].pos, "entry \"" + d.rows[i][j].text + "\" gives column " + std::to_string(j + 1) +
                                               " degree " + std::to_string(dj) + ", but an earlier entry gives " +
                                               std::to_string(*deg));
        deg = dj;
      }
    }
    expect(")");
    expect(";");
    modules_[d.name] = d.ring;
    return d;
  }

  // ----- expressions

  Expr expr() {
    const Token& t = peek();
    Expr e;
    e.pos = t.pos;
    if (t.kind == Token::Kind::Int || t.text == "-") {
      e.kind = Expr::Kind::Int;
      e.value = integer(true);
      return e;
    }
    if (t.kind != Token::Kind::Ident) unexpected({"expression"});
    next();
    e.name = t.text;
    if (!at("(")) {
      e.kind = Expr::Kind::Name;
      return e;
    }
    e.kind = Expr::Kind::Call;
    next();
    while (!at(")")) {
      e.args.push_back(expr());
      if (at(",")) next();
      else if (!at(")")) unexpected({"','", "')'"});
    }
    next();
    return e;
  }

  /// Type of e; ring-valued names count as the free module of rank one.
  Typed type_of(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Int: return {Ty::Int, ""};
      case Expr::Kind::PolyList: return {Ty::Text, ""};
      case Expr::Kind::Name: {
        if (rings_.count(e.name)) return {Ty::Module, e.name};
        auto it = modules_.find(e.name);
        if (it == modules_.end()) throw DslError(e.pos, "unknown name '" + e.name + "'");
        return {Ty::Module, it->second};
      }
      case Expr::Kind::Call: break;
    }
    const Signature* sig = find_function(e.name);
    if (!sig) throw DslError(e.pos, "unknown function '" + e.name + "'");
    const std::string args = sig->args;
    if (e.args.size() != args.size())
      throw DslError(e.pos, std::string(sig->name) + " takes " + std::to_string(args.size()) + " argument" +
                                (args.size() == 1 ? "" : "s") + ", got " + std::to_string(e.args.size()));
    std::string ring;
    const Expr* ring_from = nullptr;
    for (std::size_t k = 0; k < args.size(); ++k) {
      const Expr& a = e.args[k];
      if (args[k] == 'I') {
        if (a.kind != Expr::Kind::Int) throw DslError(a.pos, "argument " + std::to_string(k + 1) + " of " + e.name + " must be an integer");
        continue;
      }
      if (args[k] == 'R') {
        if (a.kind != Expr::Kind::Name || !rings_.count(a.name))
          throw DslError(a.pos, "argument " + std::to_string(k + 1) + " of " + e.name + " must be a ring name");
        ring = a.name;
        continue;
      }
      Typed ta = type_of(a);
      if (ta.ty != Ty::Module)
        throw DslError(a.pos, "argument " + std::to_string(k + 1) + " of " + e.name + " must be a module");
      if (ring_from && ta.ring != ring)
        throw DslError(a.pos, "ring mismatch in " + e.name + ": " + pretty_print(a) + " is over " + ta.ring + " but " +
                                  pretty_print(*ring_from) + " is over " + ring);
      ring = ta.ring;
      ring_from = &a;
    }
    return {sig->result, ring};
  }

  Expr typed_expr(Ty want, const char* what) {
    const Token& t = peek();
    Expr e = expr();
    Typed ty = type_of(e);
    if (ty.ty != want) {
      std::vector<std::string> exp;
      for (const auto& n : names_of(want)) exp.push_back("'" + n + "(...)'");
      throw DslError(t.pos, std::string("expected ") + what, want == Ty::Module ? std::vector<std::string>{} : exp);
    }
    return e;
  }

  LetStmt let_stmt() {
    LetStmt s;
    s.pos = next().pos;
    const Token& name = ident("name");
    fresh_name(name);
    s.name = name.text;
    expect("=");
    s.expr = typed_expr(Ty::Module, "a module expression");
    expect(";");
    modules_[s.name] = type_of(s.expr).ring;
    return s;
  }

  AssertStmt assert_stmt() {
    AssertStmt s;
    s.pos = next().pos;
    const Token& t = peek();
    s.expr = expr();
    const Ty ty = type_of(s.expr).ty;
    if (ty == Ty::Bool) {
      expect(";");
      return s;
    }
    if (ty != Ty::Int) {
      std::vector<std::string> exp;
      for (const auto& n : names_of(Ty::Bool)) exp.push_back("'" + n + "(...)'");
      for (const auto& n : names_of(Ty::Int)) exp.push_back("'" + n + "(...)'");
      throw DslError(t.pos, "expected a predicate or an integer query", exp);
    }
    static const std::vector<std::string> ops = {"==", "!=", "<=", ">=", "<", ">"};
    if (peek().kind != Token::Kind::Punct || std::find(ops.begin(), ops.end(), peek().text) == ops.end())
      unexpected({"'=='", "'!='", "'<='", "'>='", "'<'", "'>'"});
    s.op = next().text;
    s.rhs = integer(true);
    expect(";");
    return s;
  }

  PrintStmt print_stmt() {
    PrintStmt s;
    s.pos = next().pos;
    s.expr = expr();
    type_of(s.expr);
    expect(";");
    return s;
  }

  CheckStmt check_stmt() {
    CheckStmt s;
    s.pos = next().pos;
    const Token& id = ident("theorem id");
    auto tid = theorem_from_name(id.text);
    if (!tid) {
      std::vector<std::string> exp;
      for (TheoremId x : all_theorem_ids()) exp.push_back(theorem_name(x));
      fail(id, "unknown theorem '" + id.text + "'", exp);
    }
    s.theorem = id.text;
    const std::set<std::string> keys = allowed_keys(*tid);
    expect("(");
    std::vector<std::pair<const Token*, std::size_t>> ideal_slots;
    std::string ring;
    while (!at(")")) {
      const Token& key = ident("binding name");
      if (!keys.count(key.text)) {
        std::vector<std::string> exp(keys.begin(), keys.end());
        fail(key, "'" + key.text + "' is not a binding of " + s.theorem, exp);
      }
      for (const auto& b : s.bindings)
        if (b.key == key.text) fail(key, "binding '" + key.text + "' is repeated");
      expect("=");
      Binding b;
      b.key = key.text;
      if (key.text == "n") {
        b.value.kind = Expr::Kind::Int;
        b.value.pos = peek().pos;
        b.value.value = integer();
        if (b.value.value < 1) fail(key, "n must be positive");
      } else if (key.text == "R") {
        const Token& rt = ident("ring name");
        ring_ref(rt);
        b.value.kind = Expr::Kind::Name;
        b.value.name = rt.text;
        b.value.pos = rt.pos;
        ring = rt.text;
      } else if (kIdealKeys.count(key.text)) {
        // parsed once the ring is known
        b.value.kind = Expr::Kind::PolyList;
        b.value.pos = peek().pos;
        ideal_slots.push_back({&key, s.bindings.size()});
        ideal_tokens_.push_back(i_);
        skip_bracketed();
      } else {
        b.value = typed_expr(Ty::Module, "a module expression");
        const std::string r = type_of(b.value).ring;
        if (!ring.empty() && r != ring)
          throw DslError(b.value.pos, "binding " + key.text + " is over " + r + " but other bindings are over " + ring);
        ring = r;
      }
      s.bindings.push_back(std::move(b));
      if (at(",")) next();
      else if (!at(")")) unexpected({"','", "')'"});
    }
    const std::size_t close = i_;
    for (std::size_t k = 0; k < ideal_slots.size(); ++k) {
      if (ring.empty()) fail(*ideal_slots[k].first, "ideal bindings need an M or R binding to fix the ring");
      i_ = ideal_tokens_[k];
      s.bindings[ideal_slots[k].second].value.polys = poly_list(rings_.at(ring));
    }
    ideal_tokens_.clear();
    i_ = close;
    next();
    expect(";");
    return s;
  }
  std::vector<std::size_t> ideal_tokens_;

  void skip_bracketed() {
    expect("[");
    int depth = 1;
    while (depth > 0) {
      const Token& t = peek();
      if (t.kind == Token::Kind::End) unexpected({"']'"});
      if (t.text == "[") ++depth;
      if (t.text == "]") --depth;
      next();
    }
  }

  SuiteStmt suite_stmt() {
    SuiteStmt s;
    s.pos = next().pos;
    expect("[");
    while (!at("]")) {
      const Token& id = ident("theorem id");
      if (!theorem_from_name(id.text)) fail(id, "unknown theorem '" + id.text + "'");
      s.theorems.push_back(id.text);
      if (at(",")) next();
    }
    next();
    if (!at("on")) unexpected({"'on'"});
    next();
    if (!at("corpus")) unexpected({"'corpus'"});
    next();
    expect("(");
    const Token& rt = ident("ring name");
    ring_ref(rt);
    s.ring = rt.text;
    expect(",");
    const Token& st = peek();
    s.size = integer();
    if (s.size < 1) fail(st, "corpus size must be positive");
    expect(")");
    expect(";");
    return s;
  }
};

std::string join_polys(const std::vector<PolyText>& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + ps[i].text;
  return s;
}

}  // namespace

Script parse(const std::string& source) { return Parser(source).run(); }

std::string pretty_print(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Name: return e.name;
    case Expr::Kind::Int: return std::to_string(e.value);
    case Expr::Kind::PolyList: return "[" + join_polys(e.polys) + "]";
    case Expr::Kind::Call: break;
  }
  std::string s = e.name + "(";
  for (std::size_t i = 0; i < e.args.size(); ++i) s += (i ? ", " : "") + pretty_print(e.args[i]);
  return s + ")";
}

namespace {

struct Printer {
  std::string operator()(const RingDecl& d) const {
    if (d.quotient) return "ring " + d.name + " = quotient(" + d.base + ", [" + join_polys(d.relations) + "]);";
    std::string s = "ring " + d.name + " = poly(" + d.field;
    for (const auto& v : d.variables) s += ", " + v;
    return s + ");";
  }
  std::string operator()(const ModuleDecl& d) const {
    std::string s = "module " + d.name + " = coker(" + d.ring + ", twists=[";
    for (std::size_t i = 0; i < d.twists.size(); ++i) s += (i ? ", " : "") + std::to_string(d.twists[i]);
    s += "], matrix=[";
    for (std::size_t i = 0; i < d.rows.size(); ++i) s += std::string(i ? ", " : "") + "[" + join_polys(d.rows[i]) + "]";
    return s + "]);";
  }
  std::string operator()(const LetStmt& s) const { return "let " + s.name + " = " + pretty_print(s.expr) + ";"; }
  std::string operator()(const AssertStmt& s) const {
    std::string out = "assert " + pretty_print(s.expr);
    if (!s.op.empty()) out += " " + s.op + " " + std::to_string(s.rhs);
    return out + ";";
  }
  std::string operator()(const PrintStmt& s) const { return "print " + pretty_print(s.expr) + ";"; }
  std::string operator()(const CheckStmt& s) const {
    std::string out = "check " + s.theorem + "(";
    for (std::size_t i = 0; i < s.bindings.size(); ++i)
      out += (i ? ", " : "") + s.bindings[i].key + "=" + pretty_print(s.bindings[i].value);
    return out + ");";
  }
  std::string operator()(const SuiteStmt& s) const {
    std::string out = "suite [";
    for (std::size_t i = 0; i < s.theorems.size(); ++i) out += (i ? " " : "") + s.theorems[i];
    return out + "] on corpus(" + s.ring + ", " + std::to_string(s.size) + ");";
  }
};

}  // namespace

std::string pretty_print(const Script& s) {
  std::string out;
  for (const auto& st : s.statements) out += std::visit(Printer{}, st) + "\n";
  return out;
}

std::string pretty_print(const Statement& s) { return std::visit(Printer{}, s); }

bool is_declaration(const Statement& s) {
  return std::holds_alternative<RingDecl>(s) || std::holds_alternative<ModuleDecl>(s) ||
         std::holds_alternative<LetStmt>(s);
}

}  // namespace linkage::dsl
