#ifndef REVSYM_PARSE_HPP
#define REVSYM_PARSE_HPP

#include <string>
#include <utility>

#include "revsym/signature.hpp"
#include "revsym/term.hpp"

namespace revsym {

// Parsing session. Variable sorts are inferred from signature positions and
// `name:sort` annotations; unconstrained variables default to list. When
// allow_new_symbols is set, identifiers applied to arguments that are not in
// the catalogue are admitted and registered with their inferred signature
// (argument count and sorts fixed by first use).
class Parser {
 public:
  explicit Parser(Signature sig = builtin_signature(), bool allow_new_symbols = false);

  Formula parse_formula(const std::string& text);

  // Parses `LHS == RHS`, sharing variables (and their inferred sorts)
  // between the two sides. Relational operators inside the sides produce
  // bool-sorted "="/leq applications.
  std::pair<Term, Term> parse_equation(const std::string& text);

  const Signature& signature() const { return sig_; }

 private:
  Signature sig_;
  bool allow_new_;
};

// One-shot strict parse against a fixed signature.
Formula parse_formula(const std::string& text, const Signature& sig);

}  // namespace revsym

#endif  // REVSYM_PARSE_HPP
