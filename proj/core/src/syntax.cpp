#include "godel/syntax.hpp"

#include <cctype>
#include <functional>

#include "godel/errors.hpp"

namespace godel {

// Sorts and terms.

SortExpr SortExpr::fun(std::vector<SortExpr> dom, SortExpr cod, bool simplify) {
  if (simplify && dom.empty()) return cod;
  SortExpr s;
  s.kind = Kind::fun;
  s.dom = std::move(dom);
  s.cod.push_back(std::move(cod));
  return s;
}

std::string to_string(const SortExpr& s) {
  switch (s.kind) {
    case SortExpr::Kind::base:
    case SortExpr::Kind::boolean:
      return s.name;
    case SortExpr::Kind::fun: {
      std::string out = s.codomain().is_fun() ? "(" + to_string(s.codomain()) + ")" : to_string(s.codomain());
      out += "^";
      if (s.dom.size() == 1 && !s.dom[0].is_fun()) return out + to_string(s.dom[0]);
      out += "(";
      for (std::size_t i = 0; i < s.dom.size(); ++i) out += (i ? "," : "") + to_string(s.dom[i]);
      return out + ")";
    }
  }
  return "?";
}

std::string to_string(const Term& t) {
  if (t.args.empty()) return t.name;
  std::string out = t.name + "(";
  for (std::size_t i = 0; i < t.args.size(); ++i) out += (i ? ", " : "") + to_string(t.args[i]);
  return out + ")";
}

// Formula constructors.

Formula Formula::atom(std::string rel, std::vector<Term> args) {
  Formula f;
  f.op = Op::atom;
  f.name = std::move(rel);
  f.args = std::move(args);
  return f;
}

Formula Formula::bottom() {
  Formula f;
  f.op = Op::bottom;
  return f;
}

namespace {

Formula binary(Op op, Formula a, Formula b) {
  Formula f;
  f.op = op;
  f.kids.push_back(std::move(a));
  f.kids.push_back(std::move(b));
  return f;
}

Formula quantifier(Op op, std::string var, SortExpr sort, Formula body) {
  Formula f;
  f.op = op;
  f.name = std::move(var);
  f.sort = std::move(sort);
  f.kids.push_back(std::move(body));
  return f;
}

}  // namespace

Formula Formula::conj(Formula a, Formula b) { return binary(Op::conj, std::move(a), std::move(b)); }
Formula Formula::disj(Formula a, Formula b) { return binary(Op::disj, std::move(a), std::move(b)); }
Formula Formula::impl(Formula a, Formula b) { return binary(Op::impl, std::move(a), std::move(b)); }
Formula Formula::exists(std::string var, SortExpr sort, Formula body) {
  return quantifier(Op::exists, std::move(var), std::move(sort), std::move(body));
}
Formula Formula::forall(std::string var, SortExpr sort, Formula body) {
  return quantifier(Op::forall, std::move(var), std::move(sort), std::move(body));
}

Formula DialForm::to_formula() const {
  Formula f = matrix;
  for (std::size_t i = counters.size(); i-- > 0;) f = Formula::forall(counters[i].name, counters[i].sort, std::move(f));
  for (std::size_t i = witnesses.size(); i-- > 0;)
    f = Formula::exists(witnesses[i].name, witnesses[i].sort, std::move(f));
  return f;
}

// Lexer and parser.

namespace {

enum class Tok { ident, lparen, rparen, comma, colon, dot, tilde, amp, bar, arrow, caret, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '*';
}

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      out.push_back({Tok::ident, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back({Tok::arrow, "->", i});
      i += 2;
      continue;
    }
    Tok k;
    switch (c) {
      case '(':
        k = Tok::lparen;
        break;
      case ')':
        k = Tok::rparen;
        break;
      case ',':
        k = Tok::comma;
        break;
      case ':':
        k = Tok::colon;
        break;
      case '.':
        k = Tok::dot;
        break;
      case '~':
        k = Tok::tilde;
        break;
      case '&':
        k = Tok::amp;
        break;
      case '|':
        k = Tok::bar;
        break;
      case '^':
        k = Tok::caret;
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({k, std::string(1, c), i});
    ++i;
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  Formula formula() {
    Formula l = disjunction();
    if (peek().kind == Tok::arrow) {
      next();
      return Formula::impl(std::move(l), formula());
    }
    return l;
  }

  SortExpr sort() {
    SortExpr s = sort_atom();
    while (peek().kind == Tok::caret) {
      next();
      s = SortExpr::fun(domain(), std::move(s), false);
    }
    return s;
  }

  void expect_end() {
    if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "'");
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& next() { return toks_[i_++]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, peek().pos); }
  void expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    next();
  }
  bool keyword(const char* kw) const { return peek().kind == Tok::ident && peek().text == kw; }

  Formula disjunction() {
    Formula f = conjunction();
    while (peek().kind == Tok::bar) {
      next();
      f = Formula::disj(std::move(f), conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (peek().kind == Tok::amp) {
      next();
      f = Formula::conj(std::move(f), unary());
    }
    return f;
  }

  Formula unary() {
    if (peek().kind == Tok::tilde) {
      next();
      return Formula::neg(unary());
    }
    if (peek().kind == Tok::lparen) {
      next();
      Formula f = formula();
      expect(Tok::rparen, "')'");
      return f;
    }
    if (keyword("forall") || keyword("exists")) return quant();
    if (keyword("true")) {
      next();
      return Formula::top();
    }
    if (keyword("false")) {
      next();
      return Formula::bottom();
    }
    if (peek().kind != Tok::ident) fail("expected a formula");
    std::string rel = next().text;
    if (peek().kind != Tok::lparen) fail("expected '(' after relation symbol " + rel);
    return Formula::atom(std::move(rel), arguments());
  }

  Formula quant() {
    const bool all = next().text == "forall";
    std::vector<Binder> bs;
    do {
      if (!bs.empty()) next();
      if (peek().kind != Tok::ident || reserved(peek().text)) fail("expected a variable");
      std::string v = next().text;
      expect(Tok::colon, "':'");
      bs.push_back({std::move(v), sort()});
    } while (peek().kind == Tok::comma);
    expect(Tok::dot, "'.'");
    Formula body = disjunction();
    for (std::size_t k = bs.size(); k-- > 0;)
      body = all ? Formula::forall(bs[k].name, bs[k].sort, std::move(body))
                 : Formula::exists(bs[k].name, bs[k].sort, std::move(body));
    return body;
  }

  std::vector<Term> arguments() {
    expect(Tok::lparen, "'('");
    std::vector<Term> args;
    args.push_back(term());
    while (peek().kind == Tok::comma) {
      next();
      args.push_back(term());
    }
    expect(Tok::rparen, "')'");
    return args;
  }

  Term term() {
    if (peek().kind != Tok::ident || reserved(peek().text)) fail("expected a term");
    Term t{next().text, {}};
    if (peek().kind == Tok::lparen) t.args = arguments();
    return t;
  }

  SortExpr sort_atom() {
    if (peek().kind == Tok::lparen) {
      next();
      SortExpr s = sort();
      expect(Tok::rparen, "')'");
      return s;
    }
    if (peek().kind != Tok::ident || reserved(peek().text)) fail("expected a sort");
    std::string n = next().text;
    return n == "Bool" ? SortExpr::boolean() : SortExpr::base(std::move(n));
  }

  std::vector<SortExpr> domain() {
    if (peek().kind != Tok::lparen) return {sort_atom()};
    next();
    std::vector<SortExpr> d;
    if (peek().kind != Tok::rparen) {
      d.push_back(sort());
      while (peek().kind == Tok::comma) {
        next();
        d.push_back(sort());
      }
    }
    expect(Tok::rparen, "')'");
    return d;
  }

  static bool reserved(const std::string& s) {
    return s == "forall" || s == "exists" || s == "true" || s == "false";
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

Formula parse_formula(const std::string& text) {
  Parser p(text);
  Formula f = p.formula();
  p.expect_end();
  f = alpha_normalise(f);
  infer_signature(f);
  return f;
}

SortExpr parse_sort(const std::string& text) {
  Parser p(text);
  SortExpr s = p.sort();
  p.expect_end();
  return s;
}

// Printer.

namespace {

enum class Ctx { top, imp_left, imp_right, or_left, or_right, and_left, and_right, unary, quant_body };

std::string print(const Formula& f, Ctx ctx) {
  auto wrap = [](bool parens, std::string s) { return parens ? "(" + s + ")" : s; };
  switch (f.op) {
    case Op::atom: {
      std::string out = f.name + "(";
      for (std::size_t i = 0; i < f.args.size(); ++i) out += (i ? ", " : "") + to_string(f.args[i]);
      return out + ")";
    }
    case Op::top:
      return "true";
    case Op::bottom:
      return "false";
    case Op::impl:
      if (f.is_negation()) return "~" + print(f.kids[0], Ctx::unary);
      return wrap(ctx != Ctx::top && ctx != Ctx::imp_right,
                  print(f.kids[0], Ctx::imp_left) + " -> " + print(f.kids[1], Ctx::imp_right));
    case Op::disj:
      return wrap(ctx == Ctx::or_right || ctx == Ctx::and_left || ctx == Ctx::and_right || ctx == Ctx::unary,
                  print(f.kids[0], Ctx::or_left) + " | " + print(f.kids[1], Ctx::or_right));
    case Op::conj:
      return wrap(ctx == Ctx::and_right || ctx == Ctx::unary,
                  print(f.kids[0], Ctx::and_left) + " & " + print(f.kids[1], Ctx::and_right));
    case Op::exists:
    case Op::forall:
      // The body stops only at "->", so anything else following needs the parentheses.
      return wrap(ctx != Ctx::top && ctx != Ctx::imp_left && ctx != Ctx::imp_right && ctx != Ctx::quant_body,
                  std::string(f.op == Op::forall ? "forall " : "exists ") + f.name + ":" + to_string(f.sort) + ". " +
                      print(f.kids[0], Ctx::quant_body));
  }
  return "?";
}

std::string binders(const std::vector<Binder>& bs) {
  std::string out;
  for (std::size_t i = 0; i < bs.size(); ++i) out += (i ? ", " : "") + bs[i].name + ":" + to_string(bs[i].sort);
  return out;
}

}  // namespace

std::string to_string(const Formula& f) { return print(f, Ctx::top); }

std::string to_string(const DialForm& d) {
  std::string out;
  if (!d.witnesses.empty()) out += "exists " + binders(d.witnesses) + ". ";
  if (!d.counters.empty()) out += "forall " + binders(d.counters) + ". ";
  return out + print(d.matrix, out.empty() ? Ctx::top : Ctx::quant_body);
}

// Variables.

namespace {

void term_names(const Term& t, std::set<std::string>& out) {
  out.insert(t.name);
  for (const Term& a : t.args) term_names(a, out);
}

void all_names(const Formula& f, std::set<std::string>& out) {
  if (f.op == Op::atom) {
    out.insert(f.name);
    for (const Term& t : f.args) term_names(t, out);
  }
  if (f.is_quantifier()) out.insert(f.name);
  for (const Formula& k : f.kids) all_names(k, out);
}

void free_in_term(const Term& t, const std::set<std::string>& bound, std::set<std::string>& out) {
  if (t.args.empty() && !bound.count(t.name)) out.insert(t.name);
  for (const Term& a : t.args) free_in_term(a, bound, out);
}

void free_in(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  if (f.op == Op::atom)
    for (const Term& t : f.args) free_in_term(t, bound, out);
  if (f.is_quantifier()) {
    const bool fresh = bound.insert(f.name).second;
    free_in(f.kids[0], bound, out);
    if (fresh) bound.erase(f.name);
    return;
  }
  for (const Formula& k : f.kids) free_in(k, bound, out);
}

Term rename_term(const Term& t, const std::map<std::string, std::string>& m) {
  Term out{t.name, {}};
  if (auto it = m.find(t.name); it != m.end()) out.name = it->second;
  for (const Term& a : t.args) out.args.push_back(rename_term(a, m));
  return out;
}

Formula rename(const Formula& f, std::map<std::string, std::string> m, std::set<std::string>& used) {
  Formula out = f;
  if (f.op == Op::atom) {
    for (Term& t : out.args) t = rename_term(t, m);
    return out;
  }
  if (f.is_quantifier()) {
    std::string n = f.name;
    if (used.count(n)) {
      std::size_t k = 1;
      while (used.count(f.name + "_" + std::to_string(k))) ++k;
      n = f.name + "_" + std::to_string(k);
    }
    used.insert(n);
    m[f.name] = n;
    out.name = n;
    out.kids[0] = rename(f.kids[0], m, used);
    return out;
  }
  for (Formula& k : out.kids) k = rename(k, m, used);
  return out;
}

}  // namespace

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> bound, out;
  free_in(f, bound, out);
  return out;
}

Formula alpha_normalise(const Formula& f) {
  std::set<std::string> used = free_variables(f);
  return rename(f, {}, used);
}

bool has_quantifier(const Formula& f) {
  if (f.is_quantifier()) return true;
  for (const Formula& k : f.kids)
    if (has_quantifier(k)) return true;
  return false;
}

// Sort inference.

namespace {

class Inference {
 public:
  Signature run(const Formula& f) {
    visit(f);
    Signature sig;
    for (const auto& [r, args] : rels_) {
      auto& out = sig.relations[r];
      for (const SortExpr& s : args) out.push_back(name(s));
    }
    for (const auto& [g, fs] : funs_) {
      auto& out = sig.functions[g];
      for (const SortExpr& s : fs.first) out.args.push_back(name(s));
      out.result = name(fs.second);
    }
    for (const auto& [v, s] : free_) sig.free[v] = name(s);
    collect(f, sig.sorts);
    for (const auto& [r, args] : sig.relations)
      for (const std::string& s : args) add_sort(s, sig.sorts);
    for (const auto& [g, fs] : sig.functions) {
      for (const std::string& s : fs.args) add_sort(s, sig.sorts);
      add_sort(fs.result, sig.sorts);
    }
    return sig;
  }

 private:
  static bool is_meta(const SortExpr& s) { return s.kind == SortExpr::Kind::base && !s.name.empty() && s.name[0] == '?'; }

  SortExpr meta() { return SortExpr::base("?" + std::to_string(next_++)); }

  SortExpr resolve(SortExpr s) const {
    while (is_meta(s)) {
      auto it = bind_.find(s.name);
      if (it == bind_.end()) break;
      s = it->second;
    }
    if (s.is_fun()) {
      for (SortExpr& d : s.dom) d = resolve(d);
      s.cod[0] = resolve(s.cod[0]);
    }
    return s;
  }

  void unify(const SortExpr& x, const SortExpr& y, const std::string& where) {
    const SortExpr a = resolve(x), b = resolve(y);
    if (a == b) return;
    if (is_meta(a)) {
      bind_[a.name] = b;
      return;
    }
    if (is_meta(b)) {
      bind_[b.name] = a;
      return;
    }
    if (a.kind != b.kind || a.name != b.name || a.dom.size() != b.dom.size())
      throw SortError(where + ": sort " + to_string(a) + " does not match " + to_string(b));
    for (std::size_t i = 0; i < a.dom.size(); ++i) unify(a.dom[i], b.dom[i], where);
    if (a.is_fun()) unify(a.codomain(), b.codomain(), where);
  }

  std::string name(const SortExpr& s) const { return to_string(resolve(s)); }

  static void add_sort(const std::string& s, std::set<std::string>& out) {
    if (!s.empty() && s[0] != '?' && s != "Bool") out.insert(s);
  }
  static void base_sorts(const SortExpr& s, std::set<std::string>& out) {
    if (s.kind == SortExpr::Kind::base) add_sort(s.name, out);
    for (const SortExpr& d : s.dom) base_sorts(d, out);
    for (const SortExpr& c : s.cod) base_sorts(c, out);
  }
  static void collect(const Formula& f, std::set<std::string>& out) {
    if (f.is_quantifier()) base_sorts(f.sort, out);
    for (const Formula& k : f.kids) collect(k, out);
  }

  SortExpr term(const Term& t) {
    if (auto it = scope_.find(t.name); it != scope_.end() && !it->second.empty()) {
      SortExpr s = it->second.back();
      std::size_t i = 0;
      while (i < t.args.size()) {
        s = resolve(s);
        if (!s.is_fun()) throw SortError("variable " + t.name + " is applied to too many arguments");
        if (t.args.size() - i < s.dom.size())
          throw SortError("variable " + t.name + " is applied to too few arguments");
        for (const SortExpr& d : s.dom) unify(d, term(t.args[i++]), "argument of " + t.name);
        s = s.codomain();
      }
      return s;
    }
    if (t.args.empty()) {
      auto [it, fresh] = free_.try_emplace(t.name, SortExpr{});
      if (fresh) it->second = meta();
      return it->second;
    }
    auto it = funs_.find(t.name);
    if (it == funs_.end()) {
      std::vector<SortExpr> args;
      for (std::size_t i = 0; i < t.args.size(); ++i) args.push_back(meta());
      it = funs_.emplace(t.name, std::make_pair(std::move(args), meta())).first;
    }
    if (it->second.first.size() != t.args.size())
      throw SortError("function " + t.name + " is used with " + std::to_string(t.args.size()) + " and " +
                      std::to_string(it->second.first.size()) + " arguments");
    for (std::size_t i = 0; i < t.args.size(); ++i) {
      const SortExpr want = it->second.first[i];
      unify(want, term(t.args[i]), "argument " + std::to_string(i + 1) + " of " + t.name);
    }
    return funs_.at(t.name).second;
  }

  void visit(const Formula& f) {
    switch (f.op) {
      case Op::atom: {
        if (f.name == kIsZero || f.name == kIsOne) {
          if (f.args.size() != 1) throw SortError(f.name + " takes one argument");
          unify(SortExpr::boolean(), term(f.args[0]), f.name);
          return;
        }
        auto it = rels_.find(f.name);
        if (it == rels_.end()) {
          std::vector<SortExpr> args;
          for (std::size_t i = 0; i < f.args.size(); ++i) args.push_back(meta());
          it = rels_.emplace(f.name, std::move(args)).first;
        }
        if (it->second.size() != f.args.size())
          throw SortError("relation " + f.name + " is used with " + std::to_string(f.args.size()) + " and " +
                          std::to_string(it->second.size()) + " arguments");
        for (std::size_t i = 0; i < f.args.size(); ++i) {
          const SortExpr want = rels_.at(f.name)[i];
          unify(want, term(f.args[i]), "argument " + std::to_string(i + 1) + " of " + f.name);
        }
        return;
      }
      case Op::exists:
      case Op::forall:
        scope_[f.name].push_back(f.sort);
        visit(f.kids[0]);
        scope_[f.name].pop_back();
        return;
      default:
        for (const Formula& k : f.kids) visit(k);
    }
  }

  std::size_t next_ = 0;
  std::map<std::string, SortExpr> bind_;
  std::map<std::string, std::vector<SortExpr>> scope_;
  std::map<std::string, SortExpr> free_;
  std::map<std::string, std::vector<SortExpr>> rels_;
  std::map<std::string, std::pair<std::vector<SortExpr>, SortExpr>> funs_;
};

}  // namespace

Signature infer_signature(const Formula& f) { return Inference().run(f); }

// Translation.

namespace {

/// Replaces every occurrence of the variable old, applied or not, by
/// fresh(prefix..., original arguments...).
Term apply_prefix(const Term& t, const std::string& old, const std::string& fresh, const std::vector<Term>& prefix) {
  Term out{t.name, {}};
  if (t.name == old) {
    out.name = fresh;
    out.args = prefix;
  }
  for (const Term& a : t.args) out.args.push_back(apply_prefix(a, old, fresh, prefix));
  return out;
}

Formula substitute(const Formula& f, const std::string& old, const std::string& fresh, const std::vector<Term>& prefix) {
  Formula out = f;
  if (f.op == Op::atom)
    for (Term& t : out.args) t = apply_prefix(t, old, fresh, prefix);
  for (Formula& k : out.kids) k = substitute(k, old, fresh, prefix);
  return out;
}

class Translator {
 public:
  Translator(const Formula& f, bool simplify) : simplify_(simplify) { all_names(f, used_); }

  DialForm run(const Formula& f) {
    switch (f.op) {
      case Op::atom:
      case Op::top:
      case Op::bottom:
        return {{}, {}, f};
      case Op::conj: {
        DialForm a = run(f.kids[0]), b = run(f.kids[1]);
        append(a.witnesses, b.witnesses);
        append(a.counters, b.counters);
        a.matrix = Formula::conj(std::move(a.matrix), std::move(b.matrix));
        return a;
      }
      case Op::disj: {
        DialForm a = run(f.kids[0]), b = run(f.kids[1]);
        const std::string z = fresh("z");
        DialForm out;
        out.witnesses.push_back({z, SortExpr::boolean()});
        append(out.witnesses, a.witnesses);
        append(out.witnesses, b.witnesses);
        out.counters = a.counters;
        append(out.counters, b.counters);
        out.matrix = Formula::conj(Formula::impl(Formula::atom(kIsZero, {Term::var(z)}), std::move(a.matrix)),
                                   Formula::impl(Formula::atom(kIsOne, {Term::var(z)}), std::move(b.matrix)));
        return out;
      }
      case Op::exists: {
        DialForm a = run(f.kids[0]);
        a.witnesses.insert(a.witnesses.begin(), {f.name, f.sort});
        return a;
      }
      case Op::forall: {
        DialForm a = run(f.kids[0]);
        const std::vector<Term> z{Term::var(f.name)};
        for (Binder& w : a.witnesses) {
          w.sort = SortExpr::fun({f.sort}, w.sort, simplify_);
          a.matrix = substitute(a.matrix, w.name, w.name, z);
        }
        a.counters.insert(a.counters.begin(), {f.name, f.sort});
        return a;
      }
      case Op::impl:
        return implication(run(f.kids[0]), run(f.kids[1]));
    }
    return {};
  }

 private:
  // (exists u. forall x. psi) -> (exists v. forall y. phi) becomes
  // exists v', x*. forall u, y. psi(u, x*(u, y)) -> phi(v'(u), y).
  DialForm implication(DialForm psi, DialForm phi) {
    DialForm out;
    std::vector<Term> us, uys;
    std::vector<SortExpr> u_sorts, uy_sorts;
    for (const Binder& b : psi.witnesses) {
      us.push_back(Term::var(b.name));
      u_sorts.push_back(b.sort);
    }
    uys = us;
    uy_sorts = u_sorts;
    for (const Binder& b : phi.counters) {
      uys.push_back(Term::var(b.name));
      uy_sorts.push_back(b.sort);
    }
    Formula right = phi.matrix;
    for (const Binder& v : phi.witnesses) {
      out.witnesses.push_back({v.name, SortExpr::fun(u_sorts, v.sort, simplify_)});
      right = substitute(right, v.name, v.name, us);
    }
    Formula left = psi.matrix;
    for (const Binder& x : psi.counters) {
      const std::string star = fresh(x.name + "*");
      out.witnesses.push_back({star, SortExpr::fun(uy_sorts, x.sort, simplify_)});
      left = substitute(left, x.name, star, uys);
    }
    out.counters = psi.witnesses;
    append(out.counters, phi.counters);
    out.matrix = Formula::impl(std::move(left), std::move(right));
    return out;
  }

  static void append(std::vector<Binder>& to, const std::vector<Binder>& from) {
    to.insert(to.end(), from.begin(), from.end());
  }

  std::string fresh(const std::string& base) {
    std::string n = base;
    for (std::size_t k = 1; used_.count(n); ++k) n = base + std::to_string(k);
    used_.insert(n);
    return n;
  }

  bool simplify_;
  std::set<std::string> used_;
};

}  // namespace

DialForm dialectica_translate(const Formula& f, bool simplify) { return Translator(f, simplify).run(f); }

// JSON.

json to_json(const SortExpr& s) { return to_string(s); }

json to_json(const Formula& f) { return to_string(f); }

json to_json(const DialForm& d) {
  json w = json::array(), c = json::array();
  for (const Binder& b : d.witnesses) w.push_back({{"name", b.name}, {"sort", to_string(b.sort)}});
  for (const Binder& b : d.counters) c.push_back({{"name", b.name}, {"sort", to_string(b.sort)}});
  return {{"witnesses", w}, {"counters", c}, {"matrix", to_string(d.matrix)}, {"text", to_string(d)}};
}

}  // namespace godel
