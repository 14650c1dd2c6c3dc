#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "linkage/harness.hpp"

namespace linkage::dsl {

/// Line and column (1-based). Positions never take part in AST equality.
struct SourcePos {
  int line = 1;
  int col = 1;
  bool operator==(const SourcePos&) const { return true; }
};

/// Diagnostic raised by parse(): position, message and the expected tokens.
class DslError : public std::runtime_error {
 public:
  DslError(SourcePos pos, const std::string& message, std::vector<std::string> expected = {});
  SourcePos pos() const { return pos_; }
  const std::string& message() const { return message_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  SourcePos pos_;
  std::string message_;
  std::vector<std::string> expected_;
};

/// Polynomial source text with whitespace runs collapsed.
struct PolyText {
  std::string text;
  SourcePos pos;
  bool operator==(const PolyText&) const = default;
};

struct Expr {
  enum class Kind { Name, Int, Call, PolyList };
  Kind kind = Kind::Name;
  std::string name;  // Name and Call
  long value = 0;    // Int
  std::vector<Expr> args;
  std::vector<PolyText> polys;
  SourcePos pos;
  bool operator==(const Expr&) const = default;
};

struct RingDecl {
  std::string name;
  bool quotient = false;
  std::string field;  // poly(): "QQ" or "ZZ/p"
  std::vector<std::string> variables;
  std::string base;  // quotient()
  std::vector<PolyText> relations;
  SourcePos pos;
  bool operator==(const RingDecl&) const = default;
};

struct ModuleDecl {
  std::string name;
  std::string ring;
  std::vector<int> twists;
  std::vector<std::vector<PolyText>> rows;
  SourcePos pos;
  bool operator==(const ModuleDecl&) const = default;
};

struct LetStmt {
  std::string name;
  Expr expr;
  SourcePos pos;
  bool operator==(const LetStmt&) const = default;
};

/// Either a predicate (op empty) or an integer query compared with rhs.
struct AssertStmt {
  Expr expr;
  std::string op;
  long rhs = 0;
  SourcePos pos;
  bool operator==(const AssertStmt&) const = default;
};

struct PrintStmt {
  Expr expr;
  SourcePos pos;
  bool operator==(const PrintStmt&) const = default;
};

struct Binding {
  std::string key;
  Expr value;
  bool operator==(const Binding&) const = default;
};

struct CheckStmt {
  std::string theorem;
  std::vector<Binding> bindings;
  SourcePos pos;
  bool operator==(const CheckStmt&) const = default;
};

/// An empty theorem list means every theorem.
struct SuiteStmt {
  std::vector<std::string> theorems;
  std::string ring;
  long size = 0;
  SourcePos pos;
  bool operator==(const SuiteStmt&) const = default;
};

using Statement = std::variant<RingDecl, ModuleDecl, LetStmt, AssertStmt, PrintStmt, CheckStmt, SuiteStmt>;

struct Script {
  std::vector<Statement> statements;
  bool operator==(const Script&) const = default;
};

/// Parses and type-checks a script: names are declared before use and unique,
/// polynomials parse and are homogeneous, matrix columns have one degree, and
/// module arguments share a ring.
Script parse(const std::string& source);

std::string pretty_print(const Script& s);
std::string pretty_print(const Expr& e);
/// One statement without the trailing newline.
std::string pretty_print(const Statement& s);

/// True for ring, module and let statements.
bool is_declaration(const Statement& s);

struct RunConfig {
  std::optional<std::string> field;  // replaces the field of every poly() ring
  int bound = -1;                    // -1: 2(n + 1)
  int n_max = 3;
  std::string probe_primes;  // "x,y;y,z": extra probe primes by generators
  int max_degree = 24;
  std::size_t max_rank = 2048;
  double time_limit = 0;  // seconds for the whole run, 0 for none
  bool fail_fast = false;
  bool strict = false;
  std::uint64_t seed = 0x5eed;
};

nlohmann::ordered_json config_to_json(const RunConfig& c);

struct RunResult {
  nlohmann::ordered_json config;
  nlohmann::ordered_json declarations = nlohmann::ordered_json::array();
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  std::size_t failures = 0;      // failed asserts, Refuted reports, runtime errors
  std::size_t budget_hits = 0;   // BudgetExceeded anywhere, including time
  std::size_t inapplicable = 0;  // Inapplicable reports or undecidable asserts
  /// Human-readable lines, one per result; may contain timings.
  std::vector<std::string> text;
};

RunResult execute(const Script& script, const RunConfig& config = {});

/// 0 ok or partial, 1 failure, 3 budget exceeded, 4 inapplicable under strict.
/// Parse errors (2) never reach a RunResult.
int exit_code(const RunResult& r, bool strict);

inline constexpr const char* kVersion = "0.1.0";

/// Stable-order JSON: version, config, declarations, results.
std::string report_json(const RunResult& r);

nlohmann::ordered_json module_to_json(const ModulePresentation& m);
/// Report without timings, so equal inputs serialize identically.
nlohmann::ordered_json report_to_json(const TheoremReport& r);
nlohmann::ordered_json summary_to_json(const SuiteSummary& s);

}  // namespace linkage::dsl
