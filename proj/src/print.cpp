#include "revsym/print.hpp"

#include <set>

#include "revsym/signature.hpp"

namespace revsym {

namespace {

// Term levels: 0 relational (= <=), 1 infix (# @, shared right-assoc level),
// 2 application, 3 atomic.
constexpr int kRel = 0;
constexpr int kInfix = 1;
constexpr int kApp = 2;
constexpr int kAtomic = 3;

struct PrintState {
  std::set<std::string> annotated;              // free names already annotated
  std::vector<std::string> bound;               // binder stack
  bool is_bound(const std::string& n) const {
    for (auto it = bound.rbegin(); it != bound.rend(); ++it)
      if (*it == n) return true;
    return false;
  }
};

bool is_literal_spine(const Term& t) {
  const Term* cur = &t;
  while (cur->is_application() && cur->head() == sym::cons) cur = &cur->args()[1];
  return cur->is_application() && cur->head() == sym::nil;
}

void print_term(const Term& t, int min_level, std::string& out, PrintState& st);

void print_var(const Term& t, std::string& out, PrintState& st) {
  out += t.head();
  if (t.sort() != Sort::List && !st.is_bound(t.head()) && st.annotated.insert(t.head()).second) {
    out += ':';
    out += sort_name(t.sort());
  }
}

void print_term(const Term& t, int min_level, std::string& out, PrintState& st) {
  if (t.is_variable()) {
    print_var(t, out, st);
    return;
  }
  const std::string& h = t.head();
  if (is_numeral(h)) {
    out += h;
    return;
  }
  if (h == sym::nil) {
    out += "[]";
    return;
  }
  if (h == sym::cons && is_literal_spine(t)) {
    out += '[';
    const Term* cur = &t;
    bool first = true;
    while (cur->head() == sym::cons) {
      if (!first) out += ',';
      first = false;
      print_term(cur->args()[0], kInfix, out, st);
      cur = &cur->args()[1];
    }
    out += ']';
    return;
  }
  if (h == sym::cons || h == sym::append) {
    bool parens = min_level > kInfix;
    if (parens) out += '(';
    print_term(t.args()[0], kApp, out, st);
    out += h == sym::cons ? " # " : " @ ";
    print_term(t.args()[1], kInfix, out, st);
    if (parens) out += ')';
    return;
  }
  if (h == Term::kEq || h == sym::leq) {
    bool parens = min_level > kRel;
    if (parens) out += '(';
    print_term(t.args()[0], kInfix, out, st);
    out += h == sym::leq ? " <= " : " = ";
    print_term(t.args()[1], kInfix, out, st);
    if (parens) out += ')';
    return;
  }
  // Prefix application.
  if (t.args().empty()) {
    out += h;
    return;
  }
  bool parens = min_level > kApp;
  if (parens) out += '(';
  out += h;
  for (const Term& a : t.args()) {
    out += ' ';
    print_term(a, kAtomic, out, st);
  }
  if (parens) out += ')';
}

// Formula levels: 1 implies, 2 or, 3 and, 4 not / quantifier, 5 atom.
bool right_spine_has_quantifier(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      return true;
    case Formula::Kind::Not:
      return right_spine_has_quantifier(f.body());
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      return right_spine_has_quantifier(f.rhs());
    default:
      return false;
  }
}

int formula_level(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Implies: return 1;
    case Formula::Kind::Or: return 2;
    case Formula::Kind::And: return 3;
    case Formula::Kind::Not:
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: return 4;
    default: return 5;
  }
}

void print_formula(const Formula& f, int min_level, bool tail, std::string& out, PrintState& st) {
  bool parens = formula_level(f) < min_level || (!tail && right_spine_has_quantifier(f));
  if (parens) {
    out += '(';
    min_level = 1;
    tail = true;
  }
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      const Term& t = f.term();
      print_term(t, t.is_application() && t.head() == sym::leq ? kRel : kApp, out, st);
      break;
    }
    case Formula::Kind::Eq:
      print_term(f.eq_lhs(), kInfix, out, st);
      out += " = ";
      print_term(f.eq_rhs(), kInfix, out, st);
      break;
    case Formula::Kind::Not:
      if (f.body().kind() == Formula::Kind::Eq) {
        print_term(f.body().eq_lhs(), kInfix, out, st);
        out += " ~= ";
        print_term(f.body().eq_rhs(), kInfix, out, st);
      } else {
        out += "~ ";
        print_formula(f.body(), 4, tail, out, st);
      }
      break;
    case Formula::Kind::And:
      print_formula(f.lhs(), 4, false, out, st);
      out += " /\\ ";
      print_formula(f.rhs(), 3, tail, out, st);
      break;
    case Formula::Kind::Or:
      print_formula(f.lhs(), 3, false, out, st);
      out += " \\/ ";
      print_formula(f.rhs(), 2, tail, out, st);
      break;
    case Formula::Kind::Implies:
      print_formula(f.lhs(), 2, false, out, st);
      out += " ==> ";
      print_formula(f.rhs(), 1, tail, out, st);
      break;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      out += f.kind() == Formula::Kind::Exists ? "EX " : "ALL ";
      out += f.binder();
      if (f.binder_sort() != Sort::List) {
        out += ':';
        out += sort_name(f.binder_sort());
      }
      out += ". ";
      st.bound.push_back(f.binder());
      print_formula(f.body(), 1, tail, out, st);
      st.bound.pop_back();
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string print(const Formula& f) {
  std::string out;
  PrintState st;
  print_formula(f, 1, true, out, st);
  return out;
}

std::string print(const Term& t) {
  std::string out;
  PrintState st;
  print_term(t, kRel, out, st);
  return out;
}

}  // namespace revsym
