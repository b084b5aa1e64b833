#ifndef REVSYM_TERM_HPP
#define REVSYM_TERM_HPP

#include <map>
#include <string>
#include <vector>

#include "revsym/sort.hpp"

namespace revsym {

// First-order term: a sorted variable or an application of a catalogued
// symbol. Values are immutable after construction and freely shareable.
//
// Equality on lists appears inside rewrite rules as an ordinary application
// of the reserved symbol "=" (both argument sorts equal, result Bool); in
// formulas the same concept is the Eq node.
class Term {
 public:
  static constexpr const char* kEq = "=";

  static Term variable(std::string name, Sort sort);
  static Term application(std::string symbol, std::vector<Term> args, Sort result_sort);

  bool is_variable() const { return is_var_; }
  bool is_application() const { return !is_var_; }
  // Variable name or application symbol.
  const std::string& head() const { return head_; }
  Sort sort() const { return sort_; }
  const std::vector<Term>& args() const { return args_; }

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }

  // Unambiguous serialization, used for hashing and cycle detection.
  void dump(std::string& out) const;
  std::string dump() const;

 private:
  Term() = default;
  bool is_var_ = false;
  std::string head_;
  Sort sort_ = Sort::List;
  std::vector<Term> args_;
};

// Formulas are a layer above Bool-sorted terms; quantifiers never occur
// inside term arguments.
class Formula {
 public:
  enum class Kind { Atom, Eq, Not, And, Or, Implies, Exists, Forall };

  static Formula atom(Term t);
  static Formula eq(Term lhs, Term rhs);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula exists(std::string var, Sort sort, Formula body);
  static Formula forall(std::string var, Sort sort, Formula body);

  Kind kind() const { return kind_; }
  bool is_quantifier() const { return kind_ == Kind::Exists || kind_ == Kind::Forall; }
  bool is_binary() const {
    return kind_ == Kind::And || kind_ == Kind::Or || kind_ == Kind::Implies;
  }

  // Atom payload.
  const Term& term() const { return terms_[0]; }
  // Eq payload.
  const Term& eq_lhs() const { return terms_[0]; }
  const Term& eq_rhs() const { return terms_[1]; }
  // Connective / quantifier payload.
  const Formula& lhs() const { return subs_[0]; }
  const Formula& rhs() const { return subs_[1]; }
  const Formula& body() const { return subs_[0]; }
  const std::string& binder() const { return binder_; }
  Sort binder_sort() const { return binder_sort_; }

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

  void dump(std::string& out) const;
  std::string dump() const;

 private:
  Formula() = default;
  Kind kind_ = Kind::Atom;
  std::vector<Term> terms_;
  std::vector<Formula> subs_;
  std::string binder_;
  Sort binder_sort_ = Sort::List;
};

// Free variables with their sorts, keyed by name. In a well-sorted formula
// every free name carries exactly one sort.
using VarSorts = std::map<std::string, Sort>;

VarSorts free_vars(const Term& t);
VarSorts free_vars(const Formula& f);

// Simultaneous capture-avoiding substitution. Bound variables are renamed
// (prime suffixing) only when a replacement would otherwise be captured.
// Throws SortError if a replacement's sort differs from its variable's.
using Binding = std::map<std::string, Term>;

Term substitute(const Term& t, const Binding& binding);
Formula substitute(const Formula& f, const Binding& binding);

// Identical up to consistent renaming of bound variables.
bool alpha_equal(const Term& a, const Term& b);
bool alpha_equal(const Formula& a, const Formula& b);

}  // namespace revsym

#endif  // REVSYM_TERM_HPP
