#ifndef GODEL_SYNTAX_HPP
#define GODEL_SYNTAX_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "godel/report.hpp"

namespace godel {

/// A sort: a named base sort, the two-element decision sort, or a function sort
/// cod^(dom...). Function sorts stay symbolic until a model gives sizes.
struct SortExpr {
  enum class Kind { base, boolean, fun };
  Kind kind = Kind::base;
  std::string name;
  std::vector<SortExpr> dom;
  std::vector<SortExpr> cod;  // exactly one entry for fun

  static SortExpr base(std::string n) { return {Kind::base, std::move(n), {}, {}}; }
  static SortExpr boolean() { return {Kind::boolean, "Bool", {}, {}}; }
  /// cod^(dom...); with simplify set an empty domain gives cod itself.
  static SortExpr fun(std::vector<SortExpr> dom, SortExpr cod, bool simplify = true);

  bool is_fun() const { return kind == Kind::fun; }
  const SortExpr& codomain() const { return cod.front(); }

  friend bool operator==(const SortExpr&, const SortExpr&) = default;
  friend auto operator<=>(const SortExpr&, const SortExpr&) = default;
};

std::string to_string(const SortExpr& s);

/// A variable or an applied function symbol. Applying a function-sorted variable to
/// arguments consumes them one domain list at a time.
struct Term {
  std::string name;
  std::vector<Term> args;

  static Term var(std::string n) { return {std::move(n), {}}; }
  friend bool operator==(const Term&, const Term&) = default;
};

std::string to_string(const Term& t);

enum class Op { atom, top, bottom, conj, disj, impl, exists, forall };

/// Formula AST. Atoms carry a relation name and terms; quantifiers a variable, its sort and
/// one child; connectives two children. Negation is implication into bottom.
struct Formula {
  Op op = Op::top;
  std::string name;
  SortExpr sort;
  std::vector<Term> args;
  std::vector<Formula> kids;

  static Formula atom(std::string rel, std::vector<Term> args);
  static Formula top() { return {}; }
  static Formula bottom();
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula impl(Formula a, Formula b);
  static Formula neg(Formula a) { return impl(std::move(a), bottom()); }
  static Formula exists(std::string var, SortExpr sort, Formula body);
  static Formula forall(std::string var, SortExpr sort, Formula body);

  bool is_quantifier() const { return op == Op::exists || op == Op::forall; }
  bool is_negation() const { return op == Op::impl && kids[1].op == Op::bottom; }

  friend bool operator==(const Formula&, const Formula&) = default;
};

/// Reserved atoms of the disjunction clause, on the decision sort.
inline constexpr const char* kIsZero = "is0";
inline constexpr const char* kIsOne = "is1";

struct Binder {
  std::string name;
  SortExpr sort;
  friend bool operator==(const Binder&, const Binder&) = default;
};

/// exists witnesses. forall counters. matrix, with a quantifier-free matrix.
struct DialForm {
  std::vector<Binder> witnesses;
  std::vector<Binder> counters;
  Formula matrix;

  /// The prenex formula it stands for.
  Formula to_formula() const;
  friend bool operator==(const DialForm&, const DialForm&) = default;
};

/// Parses the grammar below and alpha-normalises the result. A quantifier body extends as
/// far as it can without crossing "->", and "->" associates to the right.
///   formula := or ["->" formula]
///   or      := and {"|" and}
///   and     := unary {"&" unary}
///   unary   := "~" unary | quant | "true" | "false" | atom | "(" formula ")"
///   quant   := ("forall" | "exists") binder {"," binder} "." or
///   binder  := ident ":" sort
///   atom    := ident "(" term {"," term} ")"
///   term    := ident ["(" term {"," term} ")"]
///   sort    := sortatom {"^" domain}
///   domain  := sortatom | "(" [sort {"," sort}] ")"
/// Throws ParseError with the offending position and SortError for ill-sorted input.
Formula parse_formula(const std::string& text);
SortExpr parse_sort(const std::string& text);

std::string to_string(const Formula& f);
/// "exists w:S, ... . forall x:T, ... . matrix"; empty tuples are left out.
std::string to_string(const DialForm& d);

/// Renames bound variables apart from each other and from the free variables.
Formula alpha_normalise(const Formula& f);
std::set<std::string> free_variables(const Formula& f);
bool has_quantifier(const Formula& f);

/// Argument and result sorts of every symbol, inferred from use. Throws SortError when a
/// symbol is used at two sorts or two arities.
struct Signature {
  std::map<std::string, std::vector<std::string>> relations;
  struct Function {
    std::vector<std::string> args;
    std::string result;
    friend bool operator==(const Function&, const Function&) = default;
  };
  std::map<std::string, Function> functions;
  std::set<std::string> sorts;
  /// Sorts inferred for free variables.
  std::map<std::string, std::string> free;
};
Signature infer_signature(const Formula& f);

/// The clause-wise translation into prenex form. With simplify unset, function sorts with
/// an empty domain are kept as S^().
DialForm dialectica_translate(const Formula& f, bool simplify = true);

json to_json(const SortExpr& s);
json to_json(const Formula& f);
json to_json(const DialForm& d);

}  // namespace godel

#endif  // GODEL_SYNTAX_HPP
