#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "linkage/poly.hpp"

namespace linkage {

/// Syntax error at a byte offset of the parsed text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& msg) : std::runtime_error(msg), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses sums of terms such as "3/2*x^2*y - y z + 1" over the given field.
/// Juxtaposition multiplies; "^" takes a non-negative integer exponent.
Poly parse_poly(const Field& f, const std::vector<std::string>& vars, std::string_view text);

}  // namespace linkage
