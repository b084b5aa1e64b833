#ifndef REVSYM_EVAL_HPP
#define REVSYM_EVAL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "revsym/sort.hpp"
#include "revsym/term.hpp"

namespace revsym {

// Concrete value over the finite domains. Lists hold elements of the
// active alphabet 0..k-1; intermediate results may grow past the length
// bound L (quantifier ranges are bounded, computed values are not).
struct Value {
  Sort sort = Sort::List;
  bool boolean = false;
  std::int64_t number = 0;                // Elem or Nat payload
  std::vector<std::int64_t> list;

  static Value elem(std::int64_t e) { return {Sort::Elem, false, e, {}}; }
  static Value nat(std::int64_t n) { return {Sort::Nat, false, n, {}}; }
  static Value boolean_value(bool b) { return {Sort::Bool, b, 0, {}}; }
  static Value list_value(std::vector<std::int64_t> xs) {
    return {Sort::List, false, 0, std::move(xs)};
  }

  bool operator==(const Value& o) const {
    return sort == o.sort && boolean == o.boolean && number == o.number && list == o.list;
  }
  bool operator!=(const Value& o) const { return !(*this == o); }

  std::string to_string() const;
};

// Small-scope bounds: alphabet size k, list length bound L for quantifier
// and valuation ranges, nat bound N (defaults to 2*L so lengths of appended
// bounded lists stay in range).
struct DomainParams {
  int k = 2;
  int L = 3;
  int N = -1;  // -1: use 2*L

  int nat_bound() const { return N < 0 ? 2 * L : N; }
};

// Variable assignment, keyed by name.
using Valuation = std::map<std::string, Value>;

std::string valuation_to_string(const Valuation& v);

// Reverses list values, fixes everything else.
Value rev_value(const Value& v);

// Standard semantics over finite domains. Totalization: hd [] = last [] = 0;
// left_quotient u v = [] when u is not a prefix of v; right_quotient u v =
// rev (left_quotient (rev v) (rev u)).
Value eval_term(const Term& t, const Valuation& env, const DomainParams& p);

// Classical two-valued semantics; quantifiers range over the bounded domain
// of their sort (elem 0..k-1, list length <= L, nat 0..N, bool both).
bool eval_formula(const Formula& f, const Valuation& env, const DomainParams& p);

// All lists of length <= L over alphabet 0..k-1 in shortlex order.
const std::vector<std::vector<std::int64_t>>& bounded_lists(const DomainParams& p);

}  // namespace revsym

#endif  // REVSYM_EVAL_HPP
