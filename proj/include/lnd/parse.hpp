#ifndef LND_PARSE_HPP
#define LND_PARSE_HPP

#include <string>

#include "lnd/polynomial.hpp"

namespace lnd {

// Parses the ASCII expression grammar:
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := atom ('^' uint)*
//   atom    := rational | variable | '(' expr ')'
//   rational := uint ['/' uint]
// parse(render(p)) == p on canonical forms.
Polynomial parse(const std::string& text, const RingPtr& ring);

}  // namespace lnd

#endif
