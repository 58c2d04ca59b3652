#pragma once

#include <stdexcept>
#include <string>

#include "bondsem/term.hpp"

namespace bondsem {

struct ParseError : std::runtime_error {
  ParseError(int line, int col, const std::string& what)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" + std::to_string(col) +
                           ": " + what),
        line(line),
        col(col) {}
  int line, col;
};

/// Grammar: term := 'id(' nat ')' | 'sigma(' nat ',' nat ')' | IDENT
///               | term ';' term | term '+' term | '(' term ')'
/// ';' is diagrammatic order (left happens first) and binds looser than '+'.
/// Identifiers resolve against the signature; arity errors are reported at
/// the offending ';'.
Term parse_dsl(const std::string& text, const Signature& sig);

/// Prints a term in the DSL syntax; parse_dsl(print_dsl(t)) == t.
std::string print_dsl(const Term& t);

}  // namespace bondsem
