#include "revsym/parse.hpp"

#include <cassert>
#include <cctype>
#include <optional>
#include <vector>

namespace revsym {

namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class Tok {
  Ident, Num, LParen, RParen, LBracket, RBracket, Comma, Dot, Colon,
  Cons, Append, Eq, EqEq, Arrow, Neq, Leq, And, Or, Not, End
};

struct Token {
  Tok kind;
  std::string text;
  long long num = 0;
  int line = 1;
  int col = 1;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Num: return "numeral";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Colon: return "':'";
    case Tok::Cons: return "'#'";
    case Tok::Append: return "'@'";
    case Tok::Eq: return "'='";
    case Tok::EqEq: return "'=='";
    case Tok::Arrow: return "'==>'";
    case Tok::Neq: return "'~='";
    case Tok::Leq: return "'<='";
    case Tok::And: return "'/\\'";
    case Tok::Or: return "'\\/'";
    case Tok::Not: return "'~'";
    case Tok::End: return "end of input";
  }
  return "?";
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto advance = [&](size_t n) {
    for (size_t j = 0; j < n; ++j) {
      if (text[i + j] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += n;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#' && col == 1) {  // full-line comment; '#' elsewhere is cons
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    auto two = text.substr(i, 2);
    auto three = text.substr(i, 3);
    if (three == "==>") {
      t.kind = Tok::Arrow;
      advance(3);
    } else if (two == "==") {
      t.kind = Tok::EqEq;
      advance(2);
    } else if (two == "~=") {
      t.kind = Tok::Neq;
      advance(2);
    } else if (two == "<=") {
      t.kind = Tok::Leq;
      advance(2);
    } else if (two == "/\\") {
      t.kind = Tok::And;
      advance(2);
    } else if (two == "\\/") {
      t.kind = Tok::Or;
      advance(2);
    } else if (c == '=') {
      t.kind = Tok::Eq;
      advance(1);
    } else if (c == '~') {
      t.kind = Tok::Not;
      advance(1);
    } else if (c == '(') {
      t.kind = Tok::LParen;
      advance(1);
    } else if (c == ')') {
      t.kind = Tok::RParen;
      advance(1);
    } else if (c == '[') {
      t.kind = Tok::LBracket;
      advance(1);
    } else if (c == ']') {
      t.kind = Tok::RBracket;
      advance(1);
    } else if (c == ',') {
      t.kind = Tok::Comma;
      advance(1);
    } else if (c == '.') {
      t.kind = Tok::Dot;
      advance(1);
    } else if (c == ':') {
      t.kind = Tok::Colon;
      advance(1);
    } else if (c == '#') {
      t.kind = Tok::Cons;
      advance(1);
    } else if (c == '@') {
      t.kind = Tok::Append;
      advance(1);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      t.kind = Tok::Num;
      t.text = text.substr(i, j - i);
      t.num = std::stoll(t.text);
      advance(j - i);
    } else if (ident_start(c)) {
      size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      t.kind = Tok::Ident;
      t.text = text.substr(i, j - i);
      advance(j - i);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Tok::End;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

// ---------------------------------------------------------------------------
// Raw syntax trees (sorts not yet resolved)

struct RawTerm {
  enum class K { Var, Num, App, ListLit };
  K k = K::Var;
  std::string name;
  long long num = 0;
  std::vector<RawTerm> args;
  std::optional<Sort> annot;
  int line = 1, col = 1;
  int slot = -1;
};

struct RawFormula {
  enum class K { Atom, Eq, Not, And, Or, Implies, Exists, Forall };
  K k = K::Atom;
  std::vector<RawTerm> terms;
  std::vector<RawFormula> subs;
  std::string binder;
  std::optional<Sort> binder_annot;
  int binder_slot = -1;
};

// A parenthesized group can turn out to be a formula or a term; keep both
// possibilities until an operator decides.
struct FT {
  std::optional<RawFormula> f;
  std::optional<RawTerm> t;
  int line = 1, col = 1;

  static FT formula(RawFormula rf, int line, int col) {
    FT r;
    r.f = std::move(rf);
    r.line = line;
    r.col = col;
    return r;
  }
  static FT term(RawTerm rt) {
    FT r;
    r.line = rt.line;
    r.col = rt.col;
    r.t = std::move(rt);
    return r;
  }
};

// ---------------------------------------------------------------------------
// Sort inference

constexpr unsigned kMaskElem = 1, kMaskList = 2, kMaskNat = 4, kMaskBool = 8, kMaskAll = 15;

unsigned sort_mask(Sort s) {
  switch (s) {
    case Sort::Elem: return kMaskElem;
    case Sort::List: return kMaskList;
    case Sort::Nat: return kMaskNat;
    case Sort::Bool: return kMaskBool;
  }
  return 0;
}

std::string mask_names(unsigned m) {
  std::string out;
  for (Sort s : {Sort::Elem, Sort::List, Sort::Nat, Sort::Bool}) {
    if (m & sort_mask(s)) {
      if (!out.empty()) out += '/';
      out += sort_name(s);
    }
  }
  return out.empty() ? "none" : out;
}

class SortSolver {
 public:
  int fresh(unsigned mask) {
    parent_.push_back(static_cast<int>(parent_.size()));
    mask_.push_back(mask);
    return static_cast<int>(parent_.size()) - 1;
  }

  int find(int s) {
    while (parent_[s] != s) s = parent_[s] = parent_[parent_[s]];
    return s;
  }

  void restrict_slot(int s, unsigned mask, const std::string& what) {
    s = find(s);
    unsigned m = mask_[s] & mask;
    if (m == 0)
      throw SortError("sort clash at " + what + ": " + mask_names(mask_[s]) +
                      " vs " + mask_names(mask));
    mask_[s] = m;
  }

  void merge(int a, int b, const std::string& what) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    unsigned m = mask_[a] & mask_[b];
    if (m == 0)
      throw SortError("sort clash at " + what + ": " + mask_names(mask_[a]) + " vs " +
                      mask_names(mask_[b]));
    parent_[b] = a;
    mask_[a] = m;
  }

  // Single possibility wins; a completely unconstrained slot is a list
  // variable; anything in between is an unresolved ambiguity.
  Sort resolve(int s, const std::string& what) {
    s = find(s);
    unsigned m = mask_[s];
    switch (m) {
      case kMaskElem: return Sort::Elem;
      case kMaskList: return Sort::List;
      case kMaskNat: return Sort::Nat;
      case kMaskBool: return Sort::Bool;
      case kMaskAll: return Sort::List;
      default:
        throw SortError("ambiguous sort for " + what + " (could be " + mask_names(m) + ")");
    }
  }

 private:
  std::vector<int> parent_;
  std::vector<unsigned> mask_;
};

// ---------------------------------------------------------------------------
// Parser proper

class Session {
 public:
  Session(Signature& sig, bool allow_new, const std::string& text)
      : sig_(sig), allow_new_(allow_new), toks_(tokenize(text)) {}

  Formula formula() {
    FT ft = parse_ft();
    expect(Tok::End);
    RawFormula raw = coerce_formula(std::move(ft));
    constrain(raw);
    register_new_symbols();
    return build(raw);
  }

  std::pair<Term, Term> equation() {
    FT l = parse_ft();
    expect(Tok::EqEq);
    FT r = parse_ft();
    expect(Tok::End);
    RawTerm lt = coerce_term(std::move(l));
    RawTerm rt = coerce_term(std::move(r));
    constrain_term(lt);
    constrain_term(rt);
    solver_.merge(lt.slot, rt.slot, "rule equation sides");
    register_new_symbols();
    return {build_term(lt), build_term(rt)};
  }

 private:
  // -- token plumbing
  const Token& peek(size_t ahead = 0) const {
    size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    next();
    return true;
  }
  void expect(Tok k) {
    if (peek().kind != k)
      throw ParseError(std::string("expected ") + tok_name(k) + ", found " +
                           tok_name(peek().kind),
                       peek().line, peek().col);
    next();
  }
  [[noreturn]] void fail(const std::string& msg, const Token& at) const {
    throw ParseError(msg, at.line, at.col);
  }

  bool is_keyword(const Token& t, const char* kw) const {
    return t.kind == Tok::Ident && t.text == kw;
  }

  // -- grammar
  FT parse_ft() {  // ==> level, right-assoc
    FT l = parse_or();
    int line = l.line, col = l.col;
    if (accept(Tok::Arrow)) {
      FT r = parse_ft();
      RawFormula f;
      f.k = RawFormula::K::Implies;
      f.subs.push_back(coerce_formula(std::move(l)));
      f.subs.push_back(coerce_formula(std::move(r)));
      return FT::formula(std::move(f), line, col);
    }
    return l;
  }

  FT parse_or() {
    FT l = parse_and();
    int line = l.line, col = l.col;
    if (accept(Tok::Or)) {
      FT r = parse_or();
      RawFormula f;
      f.k = RawFormula::K::Or;
      f.subs.push_back(coerce_formula(std::move(l)));
      f.subs.push_back(coerce_formula(std::move(r)));
      return FT::formula(std::move(f), line, col);
    }
    return l;
  }

  FT parse_and() {
    FT l = parse_unary();
    int line = l.line, col = l.col;
    if (accept(Tok::And)) {
      FT r = parse_and();
      RawFormula f;
      f.k = RawFormula::K::And;
      f.subs.push_back(coerce_formula(std::move(l)));
      f.subs.push_back(coerce_formula(std::move(r)));
      return FT::formula(std::move(f), line, col);
    }
    return l;
  }

  FT parse_unary() {
    const Token& t = peek();
    if (accept(Tok::Not)) {
      RawFormula f;
      f.k = RawFormula::K::Not;
      f.subs.push_back(coerce_formula(parse_unary()));
      return FT::formula(std::move(f), t.line, t.col);
    }
    if (is_keyword(t, "EX") || is_keyword(t, "ALL")) {
      bool ex = t.text == "EX";
      next();
      if (peek().kind != Tok::Ident) fail("expected bound variable name", peek());
      Token name = next();
      RawFormula f;
      f.k = ex ? RawFormula::K::Exists : RawFormula::K::Forall;
      f.binder = name.text;
      if (accept(Tok::Colon)) f.binder_annot = parse_sort_name();
      expect(Tok::Dot);
      f.subs.push_back(coerce_formula(parse_ft()));  // body extends maximally right
      return FT::formula(std::move(f), t.line, t.col);
    }
    return parse_rel();
  }

  FT parse_rel() {
    FT l = parse_infix();
    Tok k = peek().kind;
    if (k == Tok::Eq || k == Tok::Neq || k == Tok::Leq) {
      next();
      FT r = parse_infix();
      int line = l.line, col = l.col;
      RawTerm lt = coerce_term(std::move(l));
      RawTerm rt = coerce_term(std::move(r));
      if (k == Tok::Leq) {
        RawTerm app;
        app.k = RawTerm::K::App;
        app.name = sym::leq;
        app.line = lt.line;
        app.col = lt.col;
        app.args.push_back(std::move(lt));
        app.args.push_back(std::move(rt));
        RawFormula f;
        f.k = RawFormula::K::Atom;
        f.terms.push_back(std::move(app));
        return FT::formula(std::move(f), line, col);
      }
      RawFormula eq;
      eq.k = RawFormula::K::Eq;
      eq.terms.push_back(std::move(lt));
      eq.terms.push_back(std::move(rt));
      if (k == Tok::Eq) return FT::formula(std::move(eq), line, col);
      RawFormula f;
      f.k = RawFormula::K::Not;
      f.subs.push_back(std::move(eq));
      return FT::formula(std::move(f), line, col);
    }
    return l;
  }

  FT parse_infix() {  // # and @ share one right-assoc level
    FT l = parse_app();
    Tok k = peek().kind;
    if (k == Tok::Cons || k == Tok::Append) {
      next();
      FT r = parse_infix();
      RawTerm app;
      app.k = RawTerm::K::App;
      app.name = k == Tok::Cons ? sym::cons : sym::append;
      RawTerm lt = coerce_term(std::move(l));
      app.line = lt.line;
      app.col = lt.col;
      app.args.push_back(std::move(lt));
      app.args.push_back(coerce_term(std::move(r)));
      return FT::term(std::move(app));
    }
    return l;
  }

  bool starts_atomic(const Token& t) const {
    if (t.kind == Tok::Num || t.kind == Tok::LParen || t.kind == Tok::LBracket) return true;
    return t.kind == Tok::Ident && t.text != "EX" && t.text != "ALL";
  }

  FT parse_app() {
    const Token& t = peek();
    if (t.kind == Tok::Ident && !is_keyword(t, "EX") && !is_keyword(t, "ALL")) {
      if (sig_.has(t.text)) {
        const OpSig& os = sig_.at(t.text);
        if (!os.arg_sorts.empty()) {
          Token head = next();
          RawTerm app;
          app.k = RawTerm::K::App;
          app.name = head.text;
          app.line = head.line;
          app.col = head.col;
          for (size_t i = 0; i < os.arg_sorts.size(); ++i) {
            if (!starts_atomic(peek()))
              throw SortError("symbol '" + head.text + "' expects " +
                              std::to_string(os.arg_sorts.size()) + " arguments (line " +
                              std::to_string(peek().line) + ", column " +
                              std::to_string(peek().col) + ")");
            app.args.push_back(coerce_term(parse_atomic()));
          }
          return FT::term(std::move(app));
        }
        // 0-ary catalogued symbol
        Token head = next();
        RawTerm app;
        app.k = RawTerm::K::App;
        app.name = head.text;
        app.line = head.line;
        app.col = head.col;
        return FT::term(std::move(app));
      }
      // Unknown identifier: an application if arguments follow, else a
      // variable (handled by parse_atomic, including annotations).
      if (starts_atomic(peek(1))) {
        if (!allow_new_)
          throw SortError("unknown symbol '" + t.text + "' (line " + std::to_string(t.line) +
                          ", column " + std::to_string(t.col) + ")");
        Token head = next();
        RawTerm app;
        app.k = RawTerm::K::App;
        app.name = head.text;
        app.line = head.line;
        app.col = head.col;
        while (starts_atomic(peek())) app.args.push_back(coerce_term(parse_atomic()));
        return FT::term(std::move(app));
      }
    }
    return parse_atomic();
  }

  FT parse_atomic() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Num: {
        Token n = next();
        RawTerm r;
        r.k = RawTerm::K::Num;
        r.num = n.num;
        r.line = n.line;
        r.col = n.col;
        return FT::term(std::move(r));
      }
      case Tok::LBracket: {
        Token open = next();
        RawTerm r;
        r.line = open.line;
        r.col = open.col;
        if (accept(Tok::RBracket)) {
          r.k = RawTerm::K::App;
          r.name = sym::nil;
          return FT::term(std::move(r));
        }
        r.k = RawTerm::K::ListLit;
        for (;;) {
          r.args.push_back(coerce_term(parse_infix()));
          if (accept(Tok::RBracket)) break;
          expect(Tok::Comma);
        }
        return FT::term(std::move(r));
      }
      case Tok::LParen: {
        next();
        FT inner = parse_ft();
        expect(Tok::RParen);
        return inner;
      }
      case Tok::Ident: {
        if (is_keyword(t, "EX") || is_keyword(t, "ALL"))
          fail("quantifier not allowed here; parenthesize", t);
        if (sig_.has(t.text) && !sig_.at(t.text).arg_sorts.empty())
          fail("symbol '" + t.text + "' expects arguments; parenthesize the application", t);
        Token name = next();
        RawTerm r;
        r.k = sig_.has(name.text) ? RawTerm::K::App : RawTerm::K::Var;
        r.name = name.text;
        r.line = name.line;
        r.col = name.col;
        if (r.k == RawTerm::K::Var && accept(Tok::Colon)) r.annot = parse_sort_name();
        return FT::term(std::move(r));
      }
      default:
        fail(std::string("expected a term, found ") + tok_name(t.kind), t);
    }
  }

  Sort parse_sort_name() {
    if (peek().kind != Tok::Ident) fail("expected sort name after ':'", peek());
    Token t = next();
    auto s = sort_from_name(t.text);
    if (!s) fail("unknown sort '" + t.text + "' (elem, list, nat or bool)", t);
    return *s;
  }

  // -- coercions
  RawFormula coerce_formula(FT ft) {
    if (ft.f) return std::move(*ft.f);
    RawFormula f;
    f.k = RawFormula::K::Atom;
    f.terms.push_back(std::move(*ft.t));
    return f;
  }

  RawTerm coerce_term(FT ft) {
    if (ft.t) return std::move(*ft.t);
    RawFormula& f = *ft.f;
    if (f.k == RawFormula::K::Eq) {
      RawTerm app;
      app.k = RawTerm::K::App;
      app.name = Term::kEq;
      app.line = ft.line;
      app.col = ft.col;
      app.args.push_back(std::move(f.terms[0]));
      app.args.push_back(std::move(f.terms[1]));
      return app;
    }
    if (f.k == RawFormula::K::Atom) return std::move(f.terms[0]);
    throw ParseError("expected a term, found a formula", ft.line, ft.col);
  }

  // -- constraints
  struct PendingSymbol {
    std::vector<int> arg_slots;
    int result_slot = -1;
  };

  std::string at(const RawTerm& t) const {
    return "line " + std::to_string(t.line) + ", column " + std::to_string(t.col);
  }

  int var_slot(const std::string& name) {
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it)
      if (it->first == name) return it->second;
    auto it = free_.find(name);
    if (it != free_.end()) return it->second;
    int s = solver_.fresh(kMaskAll);
    free_.emplace(name, s);
    return s;
  }

  void constrain_term(RawTerm& t) {
    switch (t.k) {
      case RawTerm::K::Var:
        t.slot = var_slot(t.name);
        if (t.annot)
          solver_.restrict_slot(t.slot, sort_mask(*t.annot), "'" + t.name + "' (" + at(t) + ")");
        return;
      case RawTerm::K::Num:
        t.slot = solver_.fresh(kMaskElem | kMaskNat);
        return;
      case RawTerm::K::ListLit:
        for (RawTerm& e : t.args) {
          constrain_term(e);
          solver_.restrict_slot(e.slot, kMaskElem, "list element (" + at(e) + ")");
        }
        t.slot = solver_.fresh(kMaskList);
        return;
      case RawTerm::K::App:
        break;
    }
    for (RawTerm& a : t.args) constrain_term(a);
    if (t.name == Term::kEq) {
      solver_.merge(t.args[0].slot, t.args[1].slot, "'=' (" + at(t) + ")");
      t.slot = solver_.fresh(kMaskBool);
      return;
    }
    if (sig_.has(t.name)) {
      const OpSig& os = sig_.at(t.name);
      if (os.arg_sorts.size() != t.args.size())
        throw SortError("symbol '" + t.name + "' expects " + std::to_string(os.arg_sorts.size()) +
                        " arguments, got " + std::to_string(t.args.size()) + " (" + at(t) + ")");
      for (size_t i = 0; i < t.args.size(); ++i)
        solver_.restrict_slot(t.args[i].slot, sort_mask(os.arg_sorts[i]),
                              "argument " + std::to_string(i + 1) + " of '" + t.name + "' (" +
                                  at(t.args[i]) + ")");
      t.slot = solver_.fresh(sort_mask(os.result));
      return;
    }
    // new symbol: shape fixed by first use
    auto [it, inserted] = pending_.try_emplace(t.name);
    PendingSymbol& ps = it->second;
    if (inserted) {
      for (size_t i = 0; i < t.args.size(); ++i) ps.arg_slots.push_back(solver_.fresh(kMaskAll));
      ps.result_slot = solver_.fresh(kMaskAll);
    } else if (ps.arg_slots.size() != t.args.size()) {
      throw SortError("symbol '" + t.name + "' used with " + std::to_string(t.args.size()) +
                      " arguments but previously with " + std::to_string(ps.arg_slots.size()) +
                      " (" + at(t) + ")");
    }
    for (size_t i = 0; i < t.args.size(); ++i)
      solver_.merge(t.args[i].slot, ps.arg_slots[i],
                    "argument " + std::to_string(i + 1) + " of '" + t.name + "' (" + at(t) + ")");
    t.slot = ps.result_slot;
  }

  void constrain(RawFormula& f) {
    switch (f.k) {
      case RawFormula::K::Atom:
        constrain_term(f.terms[0]);
        solver_.restrict_slot(f.terms[0].slot, kMaskBool,
                              "atom (" + at(f.terms[0]) + ")");
        return;
      case RawFormula::K::Eq:
        constrain_term(f.terms[0]);
        constrain_term(f.terms[1]);
        solver_.merge(f.terms[0].slot, f.terms[1].slot, "'=' (" + at(f.terms[0]) + ")");
        return;
      case RawFormula::K::Not:
        constrain(f.subs[0]);
        return;
      case RawFormula::K::And:
      case RawFormula::K::Or:
      case RawFormula::K::Implies:
        constrain(f.subs[0]);
        constrain(f.subs[1]);
        return;
      case RawFormula::K::Exists:
      case RawFormula::K::Forall: {
        f.binder_slot = solver_.fresh(f.binder_annot ? sort_mask(*f.binder_annot) : kMaskAll);
        bound_.emplace_back(f.binder, f.binder_slot);
        constrain(f.subs[0]);
        bound_.pop_back();
        return;
      }
    }
  }

  // -- typed construction
  Term build_term(const RawTerm& t) {
    switch (t.k) {
      case RawTerm::K::Var:
        return Term::variable(t.name, solver_.resolve(t.slot, "'" + t.name + "' (" + at(t) + ")"));
      case RawTerm::K::Num:
        return numeral(t.num, solver_.resolve(t.slot, "numeral " + std::to_string(t.num) + " (" +
                                                          at(t) + ")"));
      case RawTerm::K::ListLit: {
        Term spine = Term::application(sym::nil, {}, Sort::List);
        for (auto it = t.args.rbegin(); it != t.args.rend(); ++it)
          spine = Term::application(sym::cons, {build_term(*it), std::move(spine)}, Sort::List);
        return spine;
      }
      case RawTerm::K::App:
        break;
    }
    std::vector<Term> args;
    args.reserve(t.args.size());
    for (const RawTerm& a : t.args) args.push_back(build_term(a));
    if (t.name == Term::kEq)
      return Term::application(Term::kEq, std::move(args), Sort::Bool);
    if (sig_.has(t.name)) return sig_.apply(t.name, std::move(args));
    Sort result = solver_.resolve(t.slot, "result of '" + t.name + "' (" + at(t) + ")");
    return Term::application(t.name, std::move(args), result);
  }

  Formula build(const RawFormula& f) {
    switch (f.k) {
      case RawFormula::K::Atom:
        return Formula::atom(build_term(f.terms[0]));
      case RawFormula::K::Eq:
        return Formula::eq(build_term(f.terms[0]), build_term(f.terms[1]));
      case RawFormula::K::Not:
        return Formula::negation(build(f.subs[0]));
      case RawFormula::K::And:
        return Formula::conjunction(build(f.subs[0]), build(f.subs[1]));
      case RawFormula::K::Or:
        return Formula::disjunction(build(f.subs[0]), build(f.subs[1]));
      case RawFormula::K::Implies:
        return Formula::implication(build(f.subs[0]), build(f.subs[1]));
      case RawFormula::K::Exists:
      case RawFormula::K::Forall: {
        Sort s = solver_.resolve(f.binder_slot, "binder '" + f.binder + "'");
        Formula body = build(f.subs[0]);
        return f.k == RawFormula::K::Exists ? Formula::exists(f.binder, s, std::move(body))
                                            : Formula::forall(f.binder, s, std::move(body));
      }
    }
    throw ParseError("internal: unhandled formula", 1, 1);
  }

  void register_new_symbols() {
    for (auto& [name, ps] : pending_) {
      OpSig os;
      for (size_t i = 0; i < ps.arg_slots.size(); ++i)
        os.arg_sorts.push_back(
            solver_.resolve(ps.arg_slots[i], "argument " + std::to_string(i + 1) + " of '" +
                                                 name + "'"));
      os.result = solver_.resolve(ps.result_slot, "result of '" + name + "'");
      sig_.add(name, std::move(os));
    }
  }

  Signature& sig_;
  bool allow_new_;
  std::vector<Token> toks_;
  size_t pos_ = 0;
  SortSolver solver_;
  std::map<std::string, int> free_;
  std::vector<std::pair<std::string, int>> bound_;
  std::map<std::string, PendingSymbol> pending_;
};

}  // namespace

Parser::Parser(Signature sig, bool allow_new_symbols)
    : sig_(std::move(sig)), allow_new_(allow_new_symbols) {}

Formula Parser::parse_formula(const std::string& text) {
  Session s(sig_, allow_new_, text);
  return s.formula();
}

std::pair<Term, Term> Parser::parse_equation(const std::string& text) {
  Session s(sig_, allow_new_, text);
  return s.equation();
}

Formula parse_formula(const std::string& text, const Signature& sig) {
  Signature copy = sig;
  Session s(copy, false, text);
  return s.formula();
}

}  // namespace revsym
