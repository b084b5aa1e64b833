#ifndef REVSYM_SORT_HPP
#define REVSYM_SORT_HPP

#include <optional>
#include <stdexcept>
#include <string>

namespace revsym {

// Base sorts. List is the only sort the reversal symmetry acts on;
// Elem, Nat and Bool are fixed pointwise.
enum class Sort { Elem, List, Nat, Bool };

inline const char* sort_name(Sort s) {
  switch (s) {
    case Sort::Elem: return "elem";
    case Sort::List: return "list";
    case Sort::Nat: return "nat";
    case Sort::Bool: return "bool";
  }
  return "?";
}

inline std::optional<Sort> sort_from_name(const std::string& name) {
  if (name == "elem") return Sort::Elem;
  if (name == "list") return Sort::List;
  if (name == "nat") return Sort::Nat;
  if (name == "bool") return Sort::Bool;
  return std::nullopt;
}

// Base class for everything this library throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed concrete syntax; positions are 1-based.
struct ParseError : Error {
  ParseError(const std::string& msg, int line, int col)
      : Error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"),
        line(line),
        col(col) {}
  int line;
  int col;
};

// Arity or sort clash, or an inference that cannot be resolved.
struct SortError : Error {
  using Error::Error;
};

// A term was evaluated under a valuation missing one of its free variables.
struct UnboundVariable : Error {
  using Error::Error;
};

}  // namespace revsym

#endif  // REVSYM_SORT_HPP
