#include "revsym/signature.hpp"

#include <cctype>

namespace revsym {

const OpSig& Signature::at(const std::string& symbol) const {
  auto it = table_.find(symbol);
  if (it == table_.end()) throw SortError("unknown symbol '" + symbol + "'");
  return it->second;
}

void Signature::add(const std::string& symbol, OpSig sig) {
  auto it = table_.find(symbol);
  if (it != table_.end()) {
    if (it->second.arg_sorts != sig.arg_sorts || it->second.result != sig.result)
      throw SortError("symbol '" + symbol + "' redeclared with a different signature");
    return;
  }
  table_.emplace(symbol, std::move(sig));
}

Term Signature::apply(const std::string& symbol, std::vector<Term> args) const {
  if (symbol == Term::kEq) {
    if (args.size() != 2)
      throw SortError("'=' expects 2 arguments, got " + std::to_string(args.size()));
    if (args[0].sort() != args[1].sort())
      throw SortError(std::string("'=' relates equal sorts only, got ") +
                      sort_name(args[0].sort()) + " and " + sort_name(args[1].sort()));
    return Term::application(Term::kEq, std::move(args), Sort::Bool);
  }
  if (is_numeral(symbol)) {
    if (!args.empty()) throw SortError("numeral '" + symbol + "' takes no arguments");
    // Callers resolve the Elem/Nat choice before reaching here.
    throw SortError("numeral '" + symbol + "' needs a sort from context");
  }
  const OpSig& sig = at(symbol);
  if (sig.arg_sorts.size() != args.size())
    throw SortError("symbol '" + symbol + "' expects " + std::to_string(sig.arg_sorts.size()) +
                    " arguments, got " + std::to_string(args.size()));
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i].sort() != sig.arg_sorts[i])
      throw SortError("argument " + std::to_string(i + 1) + " of '" + symbol + "' has sort " +
                      sort_name(args[i].sort()) + ", expected " + sort_name(sig.arg_sorts[i]));
  }
  return Term::application(symbol, std::move(args), sig.result);
}

bool is_numeral(const std::string& symbol) {
  if (symbol.empty()) return false;
  for (char c : symbol)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Term numeral(long long value, Sort sort) {
  if (sort != Sort::Elem && sort != Sort::Nat)
    throw SortError("numerals are elem- or nat-sorted");
  return Term::application(std::to_string(value), {}, sort);
}

const Signature& builtin_signature() {
  static const Signature sig = [] {
    Signature s;
    s.add(sym::nil, {{}, Sort::List});
    s.add(sym::cons, {{Sort::Elem, Sort::List}, Sort::List});
    s.add(sym::snoc, {{Sort::List, Sort::Elem}, Sort::List});
    s.add(sym::append, {{Sort::List, Sort::List}, Sort::List});
    s.add(sym::rev, {{Sort::List}, Sort::List});
    s.add(sym::hd, {{Sort::List}, Sort::Elem});
    s.add(sym::last, {{Sort::List}, Sort::Elem});
    s.add(sym::length, {{Sort::List}, Sort::Nat});
    s.add(sym::prefix, {{Sort::List, Sort::List}, Sort::Bool});
    s.add(sym::suffix, {{Sort::List, Sort::List}, Sort::Bool});
    s.add(sym::left_quotient, {{Sort::List, Sort::List}, Sort::List});
    s.add(sym::right_quotient, {{Sort::List, Sort::List}, Sort::List});
    s.add(sym::leq, {{Sort::Nat, Sort::Nat}, Sort::Bool});
    return s;
  }();
  return sig;
}

}  // namespace revsym
