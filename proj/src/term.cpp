#include "revsym/term.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace revsym {

Term Term::variable(std::string name, Sort sort) {
  Term t;
  t.is_var_ = true;
  t.head_ = std::move(name);
  t.sort_ = sort;
  return t;
}

Term Term::application(std::string symbol, std::vector<Term> args, Sort result_sort) {
  Term t;
  t.is_var_ = false;
  t.head_ = std::move(symbol);
  t.sort_ = result_sort;
  t.args_ = std::move(args);
  return t;
}

bool Term::operator==(const Term& other) const {
  return is_var_ == other.is_var_ && sort_ == other.sort_ && head_ == other.head_ &&
         args_ == other.args_;
}

void Term::dump(std::string& out) const {
  out += is_var_ ? 'v' : 'a';
  out += head_;
  out += ':';
  out += sort_name(sort_);
  if (!args_.empty()) {
    out += '(';
    for (size_t i = 0; i < args_.size(); ++i) {
      if (i) out += ',';
      args_[i].dump(out);
    }
    out += ')';
  }
}

std::string Term::dump() const {
  std::string out;
  dump(out);
  return out;
}

Formula Formula::atom(Term t) {
  Formula f;
  f.kind_ = Kind::Atom;
  f.terms_.push_back(std::move(t));
  return f;
}

Formula Formula::eq(Term lhs, Term rhs) {
  Formula f;
  f.kind_ = Kind::Eq;
  f.terms_.push_back(std::move(lhs));
  f.terms_.push_back(std::move(rhs));
  return f;
}

Formula Formula::negation(Formula f) {
  Formula r;
  r.kind_ = Kind::Not;
  r.subs_.push_back(std::move(f));
  return r;
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  Formula r;
  r.kind_ = Kind::And;
  r.subs_.push_back(std::move(lhs));
  r.subs_.push_back(std::move(rhs));
  return r;
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  Formula r;
  r.kind_ = Kind::Or;
  r.subs_.push_back(std::move(lhs));
  r.subs_.push_back(std::move(rhs));
  return r;
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  Formula r;
  r.kind_ = Kind::Implies;
  r.subs_.push_back(std::move(lhs));
  r.subs_.push_back(std::move(rhs));
  return r;
}

Formula Formula::exists(std::string var, Sort sort, Formula body) {
  Formula r;
  r.kind_ = Kind::Exists;
  r.binder_ = std::move(var);
  r.binder_sort_ = sort;
  r.subs_.push_back(std::move(body));
  return r;
}

Formula Formula::forall(std::string var, Sort sort, Formula body) {
  Formula r;
  r.kind_ = Kind::Forall;
  r.binder_ = std::move(var);
  r.binder_sort_ = sort;
  r.subs_.push_back(std::move(body));
  return r;
}

bool Formula::operator==(const Formula& other) const {
  return kind_ == other.kind_ && binder_ == other.binder_ && binder_sort_ == other.binder_sort_ &&
         terms_ == other.terms_ && subs_ == other.subs_;
}

void Formula::dump(std::string& out) const {
  switch (kind_) {
    case Kind::Atom:
      out += "A(";
      terms_[0].dump(out);
      out += ')';
      return;
    case Kind::Eq:
      out += "E(";
      terms_[0].dump(out);
      out += ',';
      terms_[1].dump(out);
      out += ')';
      return;
    case Kind::Not:
      out += "N(";
      subs_[0].dump(out);
      out += ')';
      return;
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
      out += kind_ == Kind::And ? "C(" : kind_ == Kind::Or ? "D(" : "I(";
      subs_[0].dump(out);
      out += ',';
      subs_[1].dump(out);
      out += ')';
      return;
    case Kind::Exists:
    case Kind::Forall:
      out += kind_ == Kind::Exists ? "X(" : "U(";
      out += binder_;
      out += ':';
      out += sort_name(binder_sort_);
      out += ',';
      subs_[0].dump(out);
      out += ')';
      return;
  }
}

std::string Formula::dump() const {
  std::string out;
  dump(out);
  return out;
}

// ---------------------------------------------------------------------------
// Free variables

static void collect_free(const Term& t, const std::set<std::string>& bound, VarSorts& out) {
  if (t.is_variable()) {
    if (!bound.count(t.head())) out.emplace(t.head(), t.sort());
    return;
  }
  for (const Term& a : t.args()) collect_free(a, bound, out);
}

static void collect_free(const Formula& f, std::set<std::string>& bound, VarSorts& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      collect_free(f.term(), bound, out);
      return;
    case Formula::Kind::Eq:
      collect_free(f.eq_lhs(), bound, out);
      collect_free(f.eq_rhs(), bound, out);
      return;
    case Formula::Kind::Not:
      collect_free(f.body(), bound, out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      collect_free(f.lhs(), bound, out);
      collect_free(f.rhs(), bound, out);
      return;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      bool was_bound = bound.count(f.binder()) != 0;
      bound.insert(f.binder());
      collect_free(f.body(), bound, out);
      if (!was_bound) bound.erase(f.binder());
      return;
    }
  }
}

VarSorts free_vars(const Term& t) {
  VarSorts out;
  std::set<std::string> bound;
  collect_free(t, bound, out);
  return out;
}

VarSorts free_vars(const Formula& f) {
  VarSorts out;
  std::set<std::string> bound;
  collect_free(f, bound, out);
  return out;
}

// ---------------------------------------------------------------------------
// Substitution

Term substitute(const Term& t, const Binding& binding) {
  if (t.is_variable()) {
    auto it = binding.find(t.head());
    if (it == binding.end()) return t;
    if (it->second.sort() != t.sort())
      throw SortError("substitution replaces '" + t.head() + "' (" + sort_name(t.sort()) +
                      ") with a term of sort " + sort_name(it->second.sort()));
    return it->second;
  }
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(substitute(a, binding));
  return Term::application(t.head(), std::move(args), t.sort());
}

static bool name_used(const Term& t, const std::string& name) {
  if (t.is_variable()) return t.head() == name;
  return std::any_of(t.args().begin(), t.args().end(),
                     [&](const Term& a) { return name_used(a, name); });
}

static std::string fresh_name(std::string base, const Binding& binding, const VarSorts& body_free) {
  // Prime-suffix until the name clashes with nothing in scope.
  for (;;) {
    base += '\'';
    bool clash = body_free.count(base) || binding.count(base);
    if (!clash) {
      for (const auto& [_, replacement] : binding)
        if (name_used(replacement, base)) clash = true;
    }
    if (!clash) return base;
  }
}

Formula substitute(const Formula& f, const Binding& binding) {
  if (binding.empty()) return f;
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return Formula::atom(substitute(f.term(), binding));
    case Formula::Kind::Eq:
      return Formula::eq(substitute(f.eq_lhs(), binding), substitute(f.eq_rhs(), binding));
    case Formula::Kind::Not:
      return Formula::negation(substitute(f.body(), binding));
    case Formula::Kind::And:
      return Formula::conjunction(substitute(f.lhs(), binding), substitute(f.rhs(), binding));
    case Formula::Kind::Or:
      return Formula::disjunction(substitute(f.lhs(), binding), substitute(f.rhs(), binding));
    case Formula::Kind::Implies:
      return Formula::implication(substitute(f.lhs(), binding), substitute(f.rhs(), binding));
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      Binding inner = binding;
      inner.erase(f.binder());  // binder shadows

      VarSorts body_free = free_vars(f.body());
      // Capture check: does any replacement that will actually be inserted
      // mention the binder name free?
      bool capture = false;
      for (const auto& [var, replacement] : inner) {
        if (!body_free.count(var)) continue;
        if (name_used(replacement, f.binder())) {
          capture = true;
          break;
        }
      }
      std::string binder = f.binder();
      Formula body = f.body();
      if (capture) {
        binder = fresh_name(binder, inner, body_free);
        Binding rename{{f.binder(), Term::variable(binder, f.binder_sort())}};
        body = substitute(body, rename);
      }
      body = substitute(body, inner);
      return f.kind() == Formula::Kind::Exists
                 ? Formula::exists(std::move(binder), f.binder_sort(), std::move(body))
                 : Formula::forall(std::move(binder), f.binder_sort(), std::move(body));
    }
  }
  return f;  // unreachable
}

// ---------------------------------------------------------------------------
// Alpha equivalence

namespace {

// Bound names are mapped to binder depth; free names compare literally.
struct AlphaEnv {
  std::vector<std::pair<std::string, std::string>> pairs;  // (left name, right name)

  bool matches(const std::string& l, const std::string& r) const {
    for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
      if (it->first == l || it->second == r) return it->first == l && it->second == r;
    }
    return l == r;  // both free
  }
};

bool alpha_term(const Term& a, const Term& b, const AlphaEnv& env) {
  if (a.is_variable() != b.is_variable() || a.sort() != b.sort()) return false;
  if (a.is_variable()) return env.matches(a.head(), b.head());
  if (a.head() != b.head() || a.args().size() != b.args().size()) return false;
  for (size_t i = 0; i < a.args().size(); ++i)
    if (!alpha_term(a.args()[i], b.args()[i], env)) return false;
  return true;
}

bool alpha_formula(const Formula& a, const Formula& b, AlphaEnv& env) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Atom:
      return alpha_term(a.term(), b.term(), env);
    case Formula::Kind::Eq:
      return alpha_term(a.eq_lhs(), b.eq_lhs(), env) && alpha_term(a.eq_rhs(), b.eq_rhs(), env);
    case Formula::Kind::Not:
      return alpha_formula(a.body(), b.body(), env);
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      return alpha_formula(a.lhs(), b.lhs(), env) && alpha_formula(a.rhs(), b.rhs(), env);
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      if (a.binder_sort() != b.binder_sort()) return false;
      env.pairs.emplace_back(a.binder(), b.binder());
      bool ok = alpha_formula(a.body(), b.body(), env);
      env.pairs.pop_back();
      return ok;
    }
  }
  return false;  // unreachable
}

}  // namespace

bool alpha_equal(const Term& a, const Term& b) {
  AlphaEnv env;
  return alpha_term(a, b, env);
}

bool alpha_equal(const Formula& a, const Formula& b) {
  AlphaEnv env;
  return alpha_formula(a, b, env);
}

}  // namespace revsym
