#ifndef GODEL_MODEL_HPP
#define GODEL_MODEL_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "godel/finbase.hpp"
#include "godel/report.hpp"
#include "godel/subset.hpp"
#include "godel/syntax.hpp"

namespace godel {

/// A finite structure. Function tables and relation tuples index argument tuples in the
/// left-nested product order, so the tuple (a, b) of A x B is a * |B| + b.
struct Model {
  struct Function {
    std::vector<std::string> args;
    std::string result;
    std::vector<Index> table;
    friend bool operator==(const Function&, const Function&) = default;
  };
  struct Relation {
    std::vector<std::string> args;
    std::set<std::vector<Index>> tuples;
    friend bool operator==(const Relation&, const Relation&) = default;
  };

  std::map<std::string, std::size_t> sorts;
  std::map<std::string, Function> functions;
  std::map<std::string, Relation> relations;

  /// Reads {"sorts": {...}, "functions": {...}, "relations": {...}} and checks arities,
  /// table lengths and ranges. Throws SortError on malformed input.
  static Model from_json(const json& j);
  json to_json() const;
  void validate() const;

  friend bool operator==(const Model&, const Model&) = default;
};

/// Values of free variables.
using Env = std::map<std::string, Index>;

/// Interprets formulas in a model. Function sorts are read as exponentials of the model's
/// carriers; a value of sort C^(B1,...,Bn) is the code of a table on B1 x ... x Bn.
class Evaluator {
 public:
  /// Values of bound and free variables together with their sorts.
  using TypedEnv = std::map<std::string, std::pair<Index, SortExpr>>;

  /// cap bounds the size of every function sort met; larger ones raise CapExceeded. budget
  /// bounds the context sizes of the doctrine evaluation.
  Evaluator(const Model& m, std::size_t cap, std::size_t budget = 1'000'000);

  std::size_t size(const SortExpr& s) const;

  /// Truth computed in the subset doctrine: each subformula becomes a subset of its
  /// context, quantifiers are images and dual images along projections.
  bool eval(const Formula& f, const Env& env = {}) const;
  /// Truth by direct recursion on the formula with an explicit assignment.
  bool tarski(const Formula& f, const Env& env = {}) const;

  /// Direct truth under a typed assignment; the assignment is restored on return.
  bool holds(const Formula& f, TypedEnv& env) const;
  /// The typed assignment of f's free variables, with sorts inferred from f.
  TypedEnv typed(const Formula& f, const Env& env) const;

  const Model& model() const { return m_; }
  std::size_t cap() const { return cap_; }

 private:
  struct Var {
    std::string name;
    SortExpr sort;
  };
  using Context = std::vector<Var>;

  Subset interpret(const Formula& f, const Context& ctx) const;
  FinMap term_map(const Term& t, const Context& ctx, FinSet gamma) const;
  Index term_value(const Term& t, const TypedEnv& env) const;

  const Model& m_;
  std::size_t cap_;
  std::size_t budget_;
  BaseCat base_;
};

/// Outcome of comparing a formula with its translation in one model.
struct WitnessCheck {
  DialForm dial;
  bool phi = false;          // subset-doctrine value of the formula
  bool phi_tarski = false;   // direct value of the formula
  bool dial_value = false;   // subset-doctrine value of the prenex translation
  bool dial_tarski = false;  // direct value of the prenex translation
  /// First witness tuple, in lexicographic order, for which every counter tuple satisfies
  /// the matrix.
  std::optional<std::vector<Index>> witness;
  std::size_t candidates = 0;

  bool agree() const {
    return phi == phi_tarski && phi == dial_value && phi == dial_tarski && phi == witness.has_value();
  }
  Report to_report(const std::string& name) const;
};

/// Translates f, evaluates both sides and searches for a witness. Throws CapExceeded,
/// BudgetExceeded (more than budget witness or counter tuples) and UnboundSymbol.
WitnessCheck verify_witness(const Formula& f, const Model& m, std::size_t cap, std::size_t budget = 1'000'000,
                            const Env& env = {});

/// Calls fn on every model of the signature with each base sort of size 1..max_carrier,
/// every relation and every function table. Throws BudgetExceeded past budget models.
std::size_t for_each_model(const Signature& sig, std::size_t max_carrier, std::size_t budget,
                           const std::function<void(const Model&)>& fn);

struct CorpusSweep {
  std::size_t formulas = 0;
  std::size_t pairs = 0;
  std::size_t skipped = 0;  // models where some function sort exceeds the cap
  std::size_t disagreements = 0;
  Report report;
};

/// verify_witness over every formula and every model of its signature.
CorpusSweep sweep_corpus(const std::vector<std::string>& corpus, std::size_t max_carrier, std::size_t cap,
                         std::size_t budget = 1'000'000);

/// Non-empty, non-comment lines ("#" starts a comment) of a corpus file.
std::vector<std::string> read_corpus(const std::string& path);

}  // namespace godel

#endif  // GODEL_MODEL_HPP
