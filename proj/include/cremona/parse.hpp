#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cremona/polynomial.hpp"

namespace cremona {

// Grammar:
//   expression := ['+'|'-'] term (('+'|'-') term)*
//   term       := factor ('*' factor)*
//   factor     := base ('^' uint)?
//   base       := integer ['/' integer] | variable | '(' expression ')'
// Whitespace between tokens is ignored; implicit multiplication is rejected.
// The optional leading sign and the integer/integer literal exist so that
// every rational polynomial has a printable, re-parsable form.
QPoly parse_poly(std::string_view text, std::span<const std::string> vars);

// Splits "x,y,z" into names and validates each as an identifier.
std::vector<std::string> parse_var_list(std::string_view text);

template <class K>
std::string to_string(const Polynomial<K>& p, std::span<const std::string> vars);

// Default names x0, x1, ...
std::vector<std::string> default_var_names(int nvars);

}  // namespace cremona
