#include "revsym/eval.hpp"

#include <algorithm>
#include <mutex>

#include "revsym/signature.hpp"

namespace revsym {

std::string Value::to_string() const {
  switch (sort) {
    case Sort::Bool:
      return boolean ? "true" : "false";
    case Sort::Elem:
    case Sort::Nat:
      return std::to_string(number);
    case Sort::List: {
      std::string out = "[";
      for (size_t i = 0; i < list.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(list[i]);
      }
      out += ']';
      return out;
    }
  }
  return "?";
}

std::string valuation_to_string(const Valuation& v) {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, value] : v) {
    if (!first) out += ", ";
    first = false;
    out += name;
    out += '=';
    out += value.to_string();
  }
  out += '}';
  return out;
}

Value rev_value(const Value& v) {
  if (v.sort != Sort::List) return v;
  Value out = v;
  std::reverse(out.list.begin(), out.list.end());
  return out;
}

namespace {

bool is_list_prefix(const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& v) {
  return u.size() <= v.size() && std::equal(u.begin(), u.end(), v.begin());
}

}  // namespace

Value eval_term(const Term& t, const Valuation& env, const DomainParams& p) {
  if (t.is_variable()) {
    auto it = env.find(t.head());
    if (it == env.end() || it->second.sort != t.sort())
      throw UnboundVariable("no " + std::string(sort_name(t.sort())) + " value bound for '" +
                            t.head() + "'");
    return it->second;
  }
  const std::string& h = t.head();
  if (is_numeral(h)) return t.sort() == Sort::Elem ? Value::elem(std::stoll(h)) : Value::nat(std::stoll(h));

  std::vector<Value> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(eval_term(a, env, p));

  if (h == Term::kEq) return Value::boolean_value(args[0] == args[1]);
  if (h == sym::nil) return Value::list_value({});
  if (h == sym::cons) {
    std::vector<std::int64_t> out;
    out.reserve(args[1].list.size() + 1);
    out.push_back(args[0].number);
    out.insert(out.end(), args[1].list.begin(), args[1].list.end());
    return Value::list_value(std::move(out));
  }
  if (h == sym::snoc) {
    std::vector<std::int64_t> out = args[0].list;
    out.push_back(args[1].number);
    return Value::list_value(std::move(out));
  }
  if (h == sym::append) {
    std::vector<std::int64_t> out = args[0].list;
    out.insert(out.end(), args[1].list.begin(), args[1].list.end());
    return Value::list_value(std::move(out));
  }
  if (h == sym::rev) {
    std::vector<std::int64_t> out = args[0].list;
    std::reverse(out.begin(), out.end());
    return Value::list_value(std::move(out));
  }
  if (h == sym::hd) return Value::elem(args[0].list.empty() ? 0 : args[0].list.front());
  if (h == sym::last) return Value::elem(args[0].list.empty() ? 0 : args[0].list.back());
  if (h == sym::length) return Value::nat(static_cast<std::int64_t>(args[0].list.size()));
  if (h == sym::prefix) return Value::boolean_value(is_list_prefix(args[0].list, args[1].list));
  if (h == sym::suffix) {
    const auto& u = args[0].list;
    const auto& v = args[1].list;
    return Value::boolean_value(u.size() <= v.size() &&
                                std::equal(u.rbegin(), u.rend(), v.rbegin()));
  }
  if (h == sym::left_quotient) {
    const auto& u = args[0].list;
    const auto& v = args[1].list;
    if (!is_list_prefix(u, v)) return Value::list_value({});
    return Value::list_value({v.begin() + static_cast<std::ptrdiff_t>(u.size()), v.end()});
  }
  if (h == sym::right_quotient) {
    // rev (left_quotient (rev v) (rev u))
    std::vector<std::int64_t> rv = args[1].list, ru = args[0].list;
    std::reverse(rv.begin(), rv.end());
    std::reverse(ru.begin(), ru.end());
    if (!is_list_prefix(rv, ru)) return Value::list_value({});
    std::vector<std::int64_t> z{ru.begin() + static_cast<std::ptrdiff_t>(rv.size()), ru.end()};
    std::reverse(z.begin(), z.end());
    return Value::list_value(std::move(z));
  }
  if (h == sym::leq) return Value::boolean_value(args[0].number <= args[1].number);
  throw UnboundVariable("symbol '" + h + "' has no evaluation semantics");
}

const std::vector<std::vector<std::int64_t>>& bounded_lists(const DomainParams& p) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<std::vector<std::int64_t>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p.k, p.L);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::vector<std::vector<std::int64_t>> all;
  std::vector<std::vector<std::int64_t>> layer{{}};
  all.push_back({});
  for (int len = 1; len <= p.L; ++len) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& w : layer) {
      for (int a = 0; a < p.k; ++a) {
        auto v = w;
        v.push_back(a);
        next.push_back(std::move(v));
      }
    }
    for (const auto& v : next) all.push_back(v);
    layer = std::move(next);
  }
  return cache.emplace(key, std::move(all)).first->second;
}

namespace {

template <typename Fn>
bool any_in_domain(Sort sort, const DomainParams& p, Fn&& fn) {
  switch (sort) {
    case Sort::Elem:
      for (int a = 0; a < p.k; ++a)
        if (fn(Value::elem(a))) return true;
      return false;
    case Sort::List:
      for (const auto& xs : bounded_lists(p))
        if (fn(Value::list_value(xs))) return true;
      return false;
    case Sort::Nat:
      for (int n = 0; n <= p.nat_bound(); ++n)
        if (fn(Value::nat(n))) return true;
      return false;
    case Sort::Bool:
      return fn(Value::boolean_value(false)) || fn(Value::boolean_value(true));
  }
  return false;
}

}  // namespace

bool eval_formula(const Formula& f, const Valuation& env, const DomainParams& p) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      Value v = eval_term(f.term(), env, p);
      if (v.sort != Sort::Bool) throw SortError("atom is not bool-sorted");
      return v.boolean;
    }
    case Formula::Kind::Eq:
      return eval_term(f.eq_lhs(), env, p) == eval_term(f.eq_rhs(), env, p);
    case Formula::Kind::Not:
      return !eval_formula(f.body(), env, p);
    case Formula::Kind::And:
      return eval_formula(f.lhs(), env, p) && eval_formula(f.rhs(), env, p);
    case Formula::Kind::Or:
      return eval_formula(f.lhs(), env, p) || eval_formula(f.rhs(), env, p);
    case Formula::Kind::Implies:
      return !eval_formula(f.lhs(), env, p) || eval_formula(f.rhs(), env, p);
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      Valuation inner = env;
      bool exists = f.kind() == Formula::Kind::Exists;
      bool found = any_in_domain(f.binder_sort(), p, [&](Value v) {
        inner[f.binder()] = std::move(v);
        bool b = eval_formula(f.body(), inner, p);
        return exists ? b : !b;
      });
      return exists ? found : !found;
    }
  }
  return false;  // unreachable
}

}  // namespace revsym
