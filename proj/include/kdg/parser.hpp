#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "kdg/polynomial.hpp"

namespace kdg {

/// Syntax or name error in a polynomial expression; `position` is a 0-based
/// character offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses an expression in the grammar
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := INT | VAR ('^' INT)? | '(' expr ')'
/// with an optional leading sign on expr and on parenthesised groups. Integer
/// literals are reduced into the ring's field; fractions are not accepted.
Polynomial parse_poly(std::string_view text, const RingPtr& ring);

}  // namespace kdg
