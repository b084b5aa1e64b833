#ifndef REVSYM_SIGNATURE_HPP
#define REVSYM_SIGNATURE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "revsym/sort.hpp"
#include "revsym/term.hpp"

namespace revsym {

struct OpSig {
  std::vector<Sort> arg_sorts;
  Sort result;
};

// Symbol catalogue. Starts from the builtin list vocabulary; user symbols
// may be added but existing entries never change.
class Signature {
 public:
  bool has(const std::string& symbol) const { return table_.count(symbol) != 0; }
  const OpSig& at(const std::string& symbol) const;

  // Adds a new symbol. Re-adding with the identical signature is a no-op;
  // any other clash throws SortError.
  void add(const std::string& symbol, OpSig sig);

  // Checks arity and argument sorts against the catalogue and builds the
  // application with the declared result sort. The reserved symbol "=" is
  // accepted for any pair of equal-sorted arguments.
  Term apply(const std::string& symbol, std::vector<Term> args) const;

  const std::map<std::string, OpSig>& table() const { return table_; }

 private:
  std::map<std::string, OpSig> table_;
};

// Decimal numerals double as Elem and Nat literals; the parser resolves
// which from context.
bool is_numeral(const std::string& symbol);
Term numeral(long long value, Sort sort);

// Builtin symbol names.
namespace sym {
inline constexpr const char* nil = "nil";
inline constexpr const char* cons = "cons";
inline constexpr const char* snoc = "snoc";
inline constexpr const char* append = "append";
inline constexpr const char* rev = "rev";
inline constexpr const char* hd = "hd";
inline constexpr const char* last = "last";
inline constexpr const char* length = "length";
inline constexpr const char* prefix = "prefix";
inline constexpr const char* suffix = "suffix";
inline constexpr const char* left_quotient = "left_quotient";
inline constexpr const char* right_quotient = "right_quotient";
inline constexpr const char* leq = "leq";
}  // namespace sym

// The fixed builtin catalogue:
//   nil : list                      rev : list -> list
//   cons : elem x list -> list      hd, last : list -> elem
//   snoc : list x elem -> list      length : list -> nat
//   append : list x list -> list    prefix, suffix : list x list -> bool
//   left_quotient, right_quotient : list x list -> list
//   leq : nat x nat -> bool
const Signature& builtin_signature();

}  // namespace revsym

#endif  // REVSYM_SIGNATURE_HPP
