#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "arrkit/multipoly.hpp"

namespace arrkit {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }
  /// Message without the position prefix.
  const std::string& detail() const { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

/// Parses
///   expr     := ['-'] term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := base ('^' uint)?
///   base     := 'x' | 'y' | 'z' | 'w' | rational | '(' expr ')'
///   rational := int ('/' uint)?
/// where w is zeta_n. A leading sign is accepted so that printed
/// polynomials parse back.
MultiPoly parse_poly(const std::string& text, int order);

}  // namespace arrkit
