#ifndef GODEL_PRINCIPLES_HPP
#define GODEL_PRINCIPLES_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "godel/doctrine.hpp"
#include "godel/errors.hpp"
#include "godel/freeness.hpp"

namespace godel {

enum class Rule { ip, mmp, mp, choice, counterexample };
enum class Principle { ip, ip_star, mmp, mp };

inline const char* to_string(Rule r) {
  switch (r) {
    case Rule::ip:
      return "ip-rule";
    case Rule::mmp:
      return "mmp-rule";
    case Rule::mp:
      return "mp-rule";
    case Rule::choice:
      return "choice";
    case Rule::counterexample:
      return "counterexample";
  }
  return "?";
}

inline const char* to_string(Principle p) {
  switch (p) {
    case Principle::ip:
      return "ip";
    case Principle::ip_star:
      return "ip-star";
    case Principle::mmp:
      return "mmp";
    case Principle::mp:
      return "mp";
  }
  return "?";
}

/// Which predicates an instance sweep visits. All statements checked here are invariant
/// under fiber equivalence, so classes already cover every element up to equivalence.
enum class Scope { classes, elements };

template <class D>
concept HasArrowWitness = requires(const D& d, const typename D::Element& x) { d.witness(x, x); };

namespace detail {

inline json witness_json(const FinMap& f) { return f.table(); }
template <class W>
json witness_json(const W& w) {
  return to_json(w);
}

inline std::string inst_id(const std::string& head, std::initializer_list<std::pair<const char*, std::size_t>> parts) {
  std::string s = head;
  for (const auto& [k, v] : parts) s += "/" + std::string(k) + "=" + std::to_string(v);
  return s;
}

}  // namespace detail

/// Rule, principle, Skolemisation and implication checks over the fibers of a doctrine.
/// Heyting structure comes from Logic, which enumerates fibers when the doctrine has no
/// closed form.
template <Doctrine D>
class PrincipleChecker {
 public:
  using E = typename D::Element;

  struct RuleOutcome {
    bool premise = false;
    std::optional<FinMap> term;
    bool conclusion = false;
    bool ok() const { return !premise || (term.has_value() && conclusion); }
    friend bool operator==(const RuleOutcome&, const RuleOutcome&) = default;
  };

  PrincipleChecker(const FreenessDetector<D>& F, Scope scope = Scope::classes)
      : F_(&F), L_(&F.logic()), w_(F.window()), scope_(scope) {}

  const Logic<D>& logic() const { return *L_; }

  /// Element ids visited in fiber a: class representatives or every listed element.
  std::vector<std::size_t> instances(FinSet a) const {
    const auto& t = L_->fiber(a);
    std::vector<std::size_t> ids;
    if (scope_ == Scope::classes)
      for (std::size_t c = 0; c < t.class_count(); ++c) ids.push_back(t.rep_id(c));
    else
      for (std::size_t k = 0; k < t.size(); ++k) ids.push_back(k);
    return ids;
  }
  const E& element(FinSet a, std::size_t id) const { return L_->fiber(a).elements()[id]; }

  // Side conditions and closure hypotheses, checked in-window.

  void require_bottom_quantifier_free() const {
    for (FinSet a : w_.contexts()) {
      FreenessVerdict v = F_->quantifier_free(a, L_->bottom(a));
      if (!v.free)
        throw SideConditionFailed("bottom is not quantifier-free over context " + std::to_string(a.size) + ": " +
                                  v.to_json().dump());
    }
  }
  void require_top_existential_free() const {
    for (FinSet a : w_.contexts()) {
      FreenessVerdict v = F_->existential_free(a, L_->top(a));
      if (!v.free)
        throw SideConditionFailed("top is not existential-free over context " + std::to_string(a.size) + ": " +
                                  v.to_json().dump());
    }
  }
  /// Existential-free elements closed under meet (op = meet) or implication.
  void require_closure(HeytingOp op) const {
    const D& d = L_->doctrine();
    for (FinSet a : w_.contexts()) {
      const auto& t = L_->fiber(a);
      std::vector<std::size_t> free;
      for (std::size_t c = 0; c < t.class_count(); ++c)
        if (F_->existential_free(a, t.rep(c)).free) free.push_back(c);
      for (std::size_t x : free)
        for (std::size_t y : free) {
          const E r = L_->heyting(a, op, {t.rep(x), t.rep(y)});
          if (!F_->existential_free(a, r).free)
            throw ClosureHypothesisFailed(
                std::string("existential-free elements are not closed under ") +
                (op == HeytingOp::meet ? "conjunction" : "implication") + ": " +
                json{{"context", a.size}, {"x", d.describe(t.rep(x))}, {"y", d.describe(t.rep(y))}}.dump());
        }
    }
  }

  // Single instances. Context a, quantified sort b, pi : a x b -> a.

  RuleOutcome ip_rule(FinSet a, FinSet b, const E& alpha, const E& beta) const {
    RuleOutcome o;
    o.premise = top_leq(a, L_->impl(a, alpha, L_->exists_proj(a, b, beta)));
    if (!o.premise) return o;
    o.term = find_term(a, b, [&](const FinMap& s) { return top_leq(a, L_->impl(a, alpha, L_->reindex(s, beta))); });
    o.conclusion = top_leq(a, L_->exists_proj(a, b, L_->impl(ab(a, b), pi_star(a, b, alpha), beta)));
    return o;
  }
  RuleOutcome mmp_rule(FinSet a, FinSet b, const E& beta_d, const E& alpha) const {
    RuleOutcome o;
    o.premise = top_leq(a, L_->impl(a, L_->forall_proj(a, b, alpha), beta_d));
    if (!o.premise) return o;
    o.term = find_term(a, b, [&](const FinMap& s) { return top_leq(a, L_->impl(a, L_->reindex(s, alpha), beta_d)); });
    o.conclusion = top_leq(a, L_->exists_proj(a, b, L_->impl(ab(a, b), alpha, pi_star(a, b, beta_d))));
    return o;
  }
  RuleOutcome mp_rule(FinSet a, FinSet b, const E& alpha_d) const {
    RuleOutcome o;
    o.premise = top_leq(a, L_->neg(a, L_->forall_proj(a, b, alpha_d)));
    if (!o.premise) return o;
    o.term = find_term(a, b, [&](const FinMap& s) { return top_leq(a, L_->neg(a, L_->reindex(s, alpha_d))); });
    o.conclusion = top_leq(a, L_->exists_proj(a, b, L_->neg(ab(a, b), alpha_d)));
    return o;
  }
  RuleOutcome choice_rule(FinSet a, FinSet b, const E& alpha) const {
    RuleOutcome o;
    o.premise = top_leq(a, L_->exists_proj(a, b, alpha));
    if (!o.premise) return o;
    o.term = find_term(a, b, [&](const FinMap& s) { return top_leq(a, L_->reindex(s, alpha)); });
    o.conclusion = o.term.has_value();
    return o;
  }
  RuleOutcome counterexample_rule(FinSet a, FinSet b, const E& alpha) const {
    RuleOutcome o;
    o.premise = L_->leq(a, L_->forall_proj(a, b, alpha), L_->bottom(a));
    if (!o.premise) return o;
    o.term = find_term(a, b, [&](const FinMap& s) { return L_->leq(a, L_->reindex(s, alpha), L_->bottom(a)); });
    o.conclusion = o.term.has_value();
    return o;
  }

  bool ip_principle(FinSet a, FinSet b, const E& alpha, const E& beta) const {
    const E lhs = L_->impl(a, alpha, L_->exists_proj(a, b, beta));
    const E rhs = L_->exists_proj(a, b, L_->impl(ab(a, b), pi_star(a, b, alpha), beta));
    return top_leq(a, L_->impl(a, lhs, rhs));
  }
  bool mmp_principle(FinSet a, FinSet b, const E& beta_d, const E& alpha) const {
    const E lhs = L_->impl(a, L_->forall_proj(a, b, alpha), beta_d);
    const E rhs = L_->exists_proj(a, b, L_->impl(ab(a, b), alpha, pi_star(a, b, beta_d)));
    return top_leq(a, L_->impl(a, lhs, rhs));
  }
  bool mp_principle(FinSet a, FinSet b, const E& alpha_d) const {
    const E lhs = L_->neg(a, L_->forall_proj(a, b, alpha_d));
    const E rhs = L_->exists_proj(a, b, L_->neg(ab(a, b), alpha_d));
    return top_leq(a, L_->impl(a, lhs, rhs));
  }
  /// Empty context; alpha_d over A, beta over B x C with b the outer variable:
  /// (forall a. alpha_d -> exists b. forall c. beta) -> exists b. (forall a. alpha_d -> forall c. beta).
  bool ip_star_principle(FinSet a, FinSet b, FinSet c, const E& alpha_d, const E& beta) const {
    const FinSet one{1};
    const E theta = L_->forall_proj(one, a, alpha_d);
    const E eta = L_->forall_proj(b, c, beta);
    const E lhs = L_->impl(one, theta, L_->exists_proj(one, b, eta));
    const E rhs = L_->exists_proj(one, b, L_->impl(b, pi_star(one, b, theta), eta));
    return top_leq(one, L_->impl(one, lhs, rhs));
  }

  // Sweeps.

  /// Every in-window instance of the rule; throws SideConditionFailed before sweeping.
  Report rule(Rule which, const Only& only = {}) const {
    if (which == Rule::mp || which == Rule::counterexample) require_bottom_quantifier_free();
    if (which == Rule::choice) require_top_existential_free();
    const D& d = L_->doctrine();
    Report r(to_string(which));
    json witnesses = json::array();
    std::size_t n = 0, premises = 0;
    auto record = [&](const std::string& id, const RuleOutcome& o, json data) {
      ++n;
      if (!o.premise) return;
      ++premises;
      if (!o.ok()) {
        r.fail(id, o.term ? "term found but the conclusion does not hold" : "premise holds but no term exists",
               std::move(data));
        return;
      }
      witnesses.push_back({{"instance", id}, {"term", o.term->table()}});
    };
    for (FinSet a : w_.contexts())
      for (FinSet b : w_.sorts()) {
        const FinSet ab_{a.size * b.size};
        if (!r.ok()) break;
        switch (which) {
          case Rule::ip:
            for (std::size_t x : instances(a)) {
              if (!F_->existential_free(a, element(a, x)).free) continue;
              for (std::size_t y : instances(ab_)) {
                const auto id = detail::inst_id("ip-rule", {{"A", a.size}, {"B", b.size}, {"alpha", x}, {"beta", y}});
                if (!only.selects([&] { return id; })) continue;
                record(id, ip_rule(a, b, element(a, x), element(ab_, y)),
                       {{"alpha", d.describe(element(a, x))}, {"beta", d.describe(element(ab_, y))}});
              }
            }
            break;
          case Rule::mmp:
            for (std::size_t x : instances(a)) {
              if (!F_->quantifier_free(a, element(a, x)).free) continue;
              for (std::size_t y : instances(ab_)) {
                if (!F_->existential_free(ab_, element(ab_, y)).free) continue;
                const auto id = detail::inst_id("mmp-rule", {{"A", a.size}, {"B", b.size}, {"beta", x}, {"alpha", y}});
                if (!only.selects([&] { return id; })) continue;
                record(id, mmp_rule(a, b, element(a, x), element(ab_, y)),
                       {{"beta_d", d.describe(element(a, x))}, {"alpha", d.describe(element(ab_, y))}});
              }
            }
            break;
          case Rule::mp:
            for (std::size_t y : instances(ab_)) {
              if (!F_->quantifier_free(ab_, element(ab_, y)).free) continue;
              const auto id = detail::inst_id("mp-rule", {{"A", a.size}, {"B", b.size}, {"alpha", y}});
              if (!only.selects([&] { return id; })) continue;
              const RuleOutcome o = mp_rule(a, b, element(ab_, y));
              // The Markov rule is the modified one with beta_d replaced by bottom.
              const RuleOutcome m = mmp_rule(a, b, L_->bottom(a), element(ab_, y));
              if (!(o == m)) {
                r.fail(id, "Markov rule disagrees with the modified rule at bottom",
                       {{"alpha", d.describe(element(ab_, y))}});
                break;
              }
              record(id, o, {{"alpha_d", d.describe(element(ab_, y))}});
            }
            break;
          case Rule::choice:
            for (std::size_t y : instances(ab_)) {
              if (!F_->existential_free(ab_, element(ab_, y)).free) continue;
              const auto id = detail::inst_id("choice", {{"A", a.size}, {"B", b.size}, {"alpha", y}});
              if (!only.selects([&] { return id; })) continue;
              record(id, choice_rule(a, b, element(ab_, y)), {{"alpha", d.describe(element(ab_, y))}});
            }
            break;
          case Rule::counterexample:
            for (std::size_t y : instances(ab_)) {
              const auto id = detail::inst_id("counterexample", {{"A", a.size}, {"B", b.size}, {"alpha", y}});
              if (!only.selects([&] { return id; })) continue;
              record(id, counterexample_rule(a, b, element(ab_, y)), {{"alpha", d.describe(element(ab_, y))}});
            }
            break;
        }
      }
    finish(r, n);
    r.detail["premises_holding"] = premises;
    r.detail["witnesses"] = std::move(witnesses);
    return r;
  }

  /// Every in-window instance of the principle, after its closure hypotheses. Throws
  /// ClosureHypothesisFailed or SideConditionFailed before sweeping.
  Report principle(Principle which, const Only& only = {}) const {
    switch (which) {
      case Principle::ip:
      case Principle::ip_star:
        require_closure(HeytingOp::meet);
        break;
      case Principle::mmp:
        require_closure(HeytingOp::impl);
        break;
      case Principle::mp:
        require_closure(HeytingOp::impl);
        require_bottom_quantifier_free();
        break;
    }
    const D& d = L_->doctrine();
    Report r(to_string(which));
    std::size_t n = 0, rule_checked = 0;
    auto record = [&](const std::string& id, bool holds, json data) {
      ++n;
      if (!holds) r.fail(id, "principle fails", std::move(data));
    };
    if (which == Principle::ip_star) {
      for (FinSet a : w_.sorts())
        for (FinSet b : w_.sorts())
          for (FinSet c : w_.sorts())
            for (std::size_t x : instances(a)) {
              if (!r.ok()) break;
              if (!F_->quantifier_free(a, element(a, x)).free) continue;
              const FinSet bc{b.size * c.size};
              for (std::size_t y : instances(bc)) {
                const auto id = detail::inst_id(
                    "ip-star", {{"A", a.size}, {"B", b.size}, {"C", c.size}, {"alpha", x}, {"beta", y}});
                if (!only.selects([&] { return id; })) continue;
                record(id, ip_star_principle(a, b, c, element(a, x), element(bc, y)),
                       {{"alpha_d", d.describe(element(a, x))}, {"beta", d.describe(element(bc, y))}});
              }
            }
      finish(r, n);
      return r;
    }
    for (FinSet a : w_.contexts())
      for (FinSet b : w_.sorts()) {
        const FinSet ab_{a.size * b.size};
        if (!r.ok()) break;
        if (which == Principle::mp) {
          for (std::size_t y : instances(ab_)) {
            if (!F_->quantifier_free(ab_, element(ab_, y)).free) continue;
            const auto id = detail::inst_id("mp", {{"A", a.size}, {"B", b.size}, {"alpha", y}});
            if (!only.selects([&] { return id; })) continue;
            record(id, mp_principle(a, b, element(ab_, y)), {{"alpha_d", d.describe(element(ab_, y))}});
          }
          continue;
        }
        const bool ip = which == Principle::ip;
        for (std::size_t x : instances(a)) {
          const E& ex = element(a, x);
          if (ip ? !F_->existential_free(a, ex).free : !F_->quantifier_free(a, ex).free) continue;
          for (std::size_t y : instances(ab_)) {
            const E& ey = element(ab_, y);
            if (!ip && !F_->existential_free(ab_, ey).free) continue;
            const auto id = detail::inst_id(to_string(which), {{"A", a.size}, {"B", b.size}, {"x", x}, {"y", y}});
            if (!only.selects([&] { return id; })) continue;
            const bool holds = ip ? ip_principle(a, b, ex, ey) : mmp_principle(a, b, ex, ey);
            record(id, holds, {{"x", d.describe(ex)}, {"y", d.describe(ey)}});
            if (holds) {
              // A principle that holds on an instance yields the rule on that instance.
              const RuleOutcome o = ip ? ip_rule(a, b, ex, ey) : mmp_rule(a, b, ex, ey);
              ++rule_checked;
              if (!o.ok()) r.fail(id, "principle holds but the rule fails on the same instance");
            }
          }
        }
      }
    finish(r, n);
    r.detail["rule_coherence_checks"] = rule_checked;
    return r;
  }

  /// The step between "forall x. psi -> phi" and "exists x. (psi -> phi)" for quantifier-free
  /// psi over A x X and phi over A, under two readings. The modified reading checks the
  /// equivalence outright. The Markov reading checks the Markov instance for psi and not phi,
  /// and the double-negation stability of phi that turns it into the step.
  Report chain_step(const Only& only = {}) const {
    Report root("chain-step");
    Report mmp("mmp-reading"), mp("mp-reading");
    std::size_t n = 0, stable = 0;
    const D& d = L_->doctrine();
    for (FinSet a : w_.contexts())
      for (FinSet x : w_.sorts()) {
        const FinSet ax{a.size * x.size};
        for (std::size_t p : instances(ax)) {
          const E& psi = element(ax, p);
          if (!F_->quantifier_free(ax, psi).free) continue;
          for (std::size_t q : instances(a)) {
            const E& phi = element(a, q);
            if (!F_->quantifier_free(a, phi).free) continue;
            const auto id = detail::inst_id("chain-step", {{"A", a.size}, {"X", x.size}, {"psi", p}, {"phi", q}});
            if (!only.selects([&] { return id; })) continue;
            ++n;
            const E four = L_->impl(a, L_->forall_proj(a, x, psi), phi);
            const E five = L_->exists_proj(a, x, L_->impl(ax, psi, pi_star(a, x, phi)));
            const json data = {{"psi", d.describe(psi)}, {"phi", d.describe(phi)}};
            if (mmp.ok() && !L_->equiv(a, four, five)) mmp.fail(id, "step is not an equivalence", data);
            const E theta = L_->meet(ax, psi, L_->neg(ax, pi_star(a, x, phi)));
            const bool markov = mp_principle(a, x, theta);
            const bool dn = L_->equiv(a, L_->neg(a, L_->neg(a, phi)), phi);
            stable += dn ? 1 : 0;
            if (mp.ok() && !(markov && dn && L_->equiv(a, four, five)))
              mp.fail(id, markov ? "quantifier-free phi is not double-negation stable" : "Markov instance fails",
                      data);
          }
        }
      }
    mmp.detail["instances"] = n;
    mp.detail["instances"] = n;
    mp.detail["double_negation_stable"] = stable;
    root.add(std::move(mmp));
    root.add(std::move(mp));
    root.detail["window"] = w_.to_string();
    return root;
  }

  /// forall b. exists c. alpha and exists f : C^B. forall b. alpha(a, b, ev(f, b)) as a fiber
  /// equivalence, both directions decided by the order and witnessed when the doctrine
  /// exposes witnesses. Throws CapExceeded when C^B is past the base cap.
  Report skolemise(FinSet a, FinSet b, FinSet c, const E& alpha) const {
    const D& d = L_->doctrine();
    const Exponential ex = d.base().exponential(b, c);
    const FinSet e = ex.object;
    std::vector<Index> table(a.size * e.size * b.size);
    for (Index ai = 0; ai < a.size; ++ai)
      for (Index f = 0; f < e.size; ++f)
        for (Index bi = 0; bi < b.size; ++bi)
          table[(ai * e.size + f) * b.size + bi] = (ai * b.size + bi) * c.size + ex.eval(f * b.size + bi);
    const FinSet aeb{table.size()};
    const FinMap ev_map(aeb, FinSet{a.size * b.size * c.size}, std::move(table));
    const E lhs = L_->forall_proj(a, b, L_->exists_proj(ab(a, b), c, alpha));
    const E rhs = L_->exists_proj(a, e, L_->forall_proj(ab(a, e), b, L_->reindex(ev_map, alpha)));
    Report r("skolemise");
    r.detail["alpha"] = d.describe(alpha);
    r.detail["exponential"] = e.size;
    r.detail["lhs"] = d.describe(lhs);
    r.detail["rhs"] = d.describe(rhs);
    const std::string id = "skolemise/A=" + std::to_string(a.size) + "/B=" + std::to_string(b.size) +
                           "/C=" + std::to_string(c.size);
    if constexpr (HasArrowWitness<D>) {
      const auto there = d.witness(lhs, rhs);
      const auto back = d.witness(rhs, lhs);
      if (there) r.detail["lhs_to_rhs"] = detail::witness_json(*there);
      if (back) r.detail["rhs_to_lhs"] = detail::witness_json(*back);
      if (!there || !back || !L_->leq(a, lhs, rhs) || !L_->leq(a, rhs, lhs))
        r.fail(id, !there ? "no witness for the forward direction" : "no witness for the backward direction");
    } else if (!L_->leq(a, lhs, rhs) || !L_->leq(a, rhs, lhs)) {
      r.fail(id, L_->leq(a, lhs, rhs) ? "backward direction fails" : "forward direction fails");
    }
    return r;
  }

  /// Skolemisation over A in contexts, B and C in sorts, every listed alpha over A x B x C.
  Report skolemisation(const Only& only = {}) const {
    Report root("skolemisation");
    std::size_t n = 0;
    json outside = json::array();
    for (FinSet a : w_.contexts())
      for (FinSet b : w_.sorts())
        for (FinSet c : w_.sorts()) {
          if (!L_->doctrine().base().has_exponential(b, c)) {
            outside.push_back({b.size, c.size});
            continue;
          }
          const FinSet abc{a.size * b.size * c.size};
          for (std::size_t x : instances(abc)) {
            const auto id = detail::inst_id("skolemisation", {{"A", a.size}, {"B", b.size}, {"C", c.size}, {"alpha", x}});
            if (!only.selects([&] { return id; })) continue;
            ++n;
            try {
              Report s = skolemise(a, b, c, element(abc, x));
              if (!s.ok()) {
                root.fail(id, s.detail["message"].get<std::string>(), s.detail);
                return root;
              }
            } catch (const CapExceeded& e) {
              root.fail(id, e.what());
              return root;
            }
          }
        }
    root.detail["instances"] = n;
    root.detail["window"] = w_.to_string();
    if (!outside.empty()) root.detail["exponentials_outside_cap"] = std::move(outside);
    return root;
  }

  /// Over context I: (exists u. forall x. psi_d) -> (exists v. forall y. phi_d) against
  /// exists f0 : V^U, f1 : X^(U x Y). forall u, y. psi_d(i, u, f1(u, y)) -> phi_d(i, f0(u), y).
  /// The i-dependence of f0 and f1 lives in the context. Throws CapExceeded when an
  /// exponential or the matrix context is past the window.
  Report implication_equivalence(FinSet i, FinSet u, FinSet x, const E& psi, FinSet v, FinSet y,
                                 const E& phi) const {
    const D& d = L_->doctrine();
    const BaseCat& base = d.base();
    const Exponential e0 = base.exponential(u, v);
    const Exponential e1 = base.exponential(FinSet{u.size * y.size}, x);
    const FinSet ff{e0.object.size * e1.object.size};
    const FinSet k{i.size * ff.size};
    const FinSet uy{u.size * y.size};
    const FinSet body{k.size * uy.size};
    if (body.size > w_.max_body) throw CapExceeded(body.size, w_.max_body);
    std::vector<Index> tp(body.size), tf(body.size);
    for (Index ii = 0; ii < i.size; ++ii)
      for (Index f0 = 0; f0 < e0.object.size; ++f0)
        for (Index f1 = 0; f1 < e1.object.size; ++f1)
          for (Index ui = 0; ui < u.size; ++ui)
            for (Index yi = 0; yi < y.size; ++yi) {
              const Index kk = ((ii * e0.object.size + f0) * e1.object.size + f1) * uy.size + ui * y.size + yi;
              const Index xi = e1.eval(f1 * uy.size + ui * y.size + yi);
              const Index vi = e0.eval(f0 * u.size + ui);
              tp[kk] = (ii * u.size + ui) * x.size + xi;
              tf[kk] = (ii * v.size + vi) * y.size + yi;
            }
    const FinMap mpsi(body, FinSet{i.size * u.size * x.size}, std::move(tp));
    const FinMap mphi(body, FinSet{i.size * v.size * y.size}, std::move(tf));
    const E gamma = L_->impl(body, L_->reindex(mpsi, psi), L_->reindex(mphi, phi));
    const E rhs = L_->exists_proj(i, ff, L_->forall_proj(k, uy, gamma));
    const E lhs = L_->impl(i, prenex(i, u, x, psi), prenex(i, v, y, phi));
    Report r("implication-equivalence");
    r.detail["lhs"] = d.describe(lhs);
    r.detail["rhs"] = d.describe(rhs);
    r.detail["f_sorts"] = {e0.object.size, e1.object.size};
    const bool there = L_->leq(i, lhs, rhs), back = L_->leq(i, rhs, lhs);
    if (!there || !back) r.fail("implication-equivalence", there ? "backward direction fails" : "forward direction fails");
    r.detail["top_entails_lhs"] = top_leq(i, lhs);
    return r;
  }

  /// exists u. forall x. gamma for gamma over I x U x X.
  E prenex(FinSet i, FinSet u, FinSet x, const E& gamma) const {
    return L_->exists_proj(i, u, L_->forall_proj(FinSet{i.size * u.size}, x, gamma));
  }

  /// Sweeps implication_equivalence over quantifier-free psi and phi where the matrix fits
  /// the window, and cross-checks "top entails the implication" against the existence of
  /// an (f0, f1) pair. Shapes past the window are counted, not run.
  Report implication_equivalences(const Only& only = {}) const {
    require_closure(HeytingOp::impl);
    require_closure(HeytingOp::meet);
    require_bottom_quantifier_free();
    Report r("implication-equivalence");
    std::size_t n = 0, skipped = 0;
    for (FinSet i : w_.sorts())
      for (FinSet u : w_.sorts())
        for (FinSet x : w_.sorts())
          for (FinSet v : w_.sorts())
            for (FinSet y : w_.sorts()) {
              const FinSet iux{i.size * u.size * x.size}, ivy{i.size * v.size * y.size};
              const BaseCat& base = L_->doctrine().base();
              if (!base.has_exponential(u, v) || !base.has_exponential(FinSet{u.size * y.size}, x)) {
                ++skipped;
                continue;
              }
              const std::size_t body = i.size * base.exponential_object(u, v).size *
                                       base.exponential_object(FinSet{u.size * y.size}, x).size * u.size * y.size;
              if (body > w_.max_body || iux.size > w_.max_body || ivy.size > w_.max_body) {
                ++skipped;
                continue;
              }
              for (std::size_t p : instances(iux)) {
                if (!F_->quantifier_free(iux, element(iux, p)).free) continue;
                for (std::size_t q : instances(ivy)) {
                  if (!F_->quantifier_free(ivy, element(ivy, q)).free) continue;
                  const auto id = detail::inst_id("implication-equivalence", {{"I", i.size},
                                                                               {"U", u.size},
                                                                               {"X", x.size},
                                                                               {"V", v.size},
                                                                               {"Y", y.size},
                                                                               {"psi", p},
                                                                               {"phi", q}});
                  if (!only.selects([&] { return id; })) continue;
                  ++n;
                  Report s = implication_equivalence(i, u, x, element(iux, p), v, y, element(ivy, q));
                  const bool pair = find_dialectica_pair(i, u, x, element(iux, p), v, y, element(ivy, q)).has_value();
                  if (!s.ok()) {
                    r.fail(id, s.detail["message"].get<std::string>(), s.detail);
                    return r;
                  }
                  if (s.detail["top_entails_lhs"].get<bool>() != pair) {
                    r.fail(id, "implication decision disagrees with witness extraction", s.detail);
                    return r;
                  }
                }
              }
            }
    r.detail["instances"] = n;
    r.detail["shapes_outside_window"] = skipped;
    r.detail["window"] = w_.to_string();
    return r;
  }

  /// Lexicographically least (f0 : I x U -> V, f1 : I x U x Y -> X), f0 first, with
  /// psi_d(i, u, f1(i, u, y)) <= phi_d(i, f0(i, u), y), found by exhaustive search through
  /// reindexing and the fiber order.
  std::optional<std::pair<FinMap, FinMap>> find_dialectica_pair(FinSet i, FinSet u, FinSet x, const E& psi, FinSet v,
                                                                FinSet y, const E& phi) const {
    const BaseCat& base = L_->doctrine().base();
    const FinSet iu{i.size * u.size}, iuy{i.size * u.size * y.size};
    std::vector<std::pair<FinMap, E>> psis;
    for (const FinMap& f1 : base.enumerate_maps(iuy, x)) psis.emplace_back(f1, L_->reindex(psi_map(iu, x, y, f1), psi));
    for (const FinMap& f0 : base.enumerate_maps(iu, v)) {
      const E ph = L_->reindex(phi_map(i, u, v, y, f0), phi);
      for (const auto& [f1, ps] : psis)
        if (L_->leq(iuy, ps, ph)) return std::make_pair(f0, f1);
    }
    return std::nullopt;
  }

  /// (i, u, y) -> (i, u, f1(i, u, y)).
  static FinMap psi_map(FinSet iu, FinSet x, FinSet y, const FinMap& f1) {
    std::vector<Index> t(f1.dom().size);
    for (Index k = 0; k < t.size(); ++k) t[k] = (k / y.size) * x.size + f1(k);
    return FinMap(f1.dom(), FinSet{iu.size * x.size}, std::move(t));
  }
  /// (i, u, y) -> (i, f0(i, u), y).
  static FinMap phi_map(FinSet i, FinSet u, FinSet v, FinSet y, const FinMap& f0) {
    const std::size_t iu = f0.dom().size;
    std::vector<Index> t(iu * y.size);
    for (Index k = 0; k < iu; ++k)
      for (Index yi = 0; yi < y.size; ++yi) t[k * y.size + yi] = ((k / u.size) * v.size + f0(k)) * y.size + yi;
    return FinMap(FinSet{iu * y.size}, FinSet{i.size * v.size * y.size}, std::move(t));
  }

 private:
  static FinSet ab(FinSet a, FinSet b) { return FinSet{a.size * b.size}; }
  E pi_star(FinSet a, FinSet b, const E& e) const { return L_->reindex(projection(a, b), e); }
  bool top_leq(FinSet a, const E& e) const { return L_->leq(a, L_->top(a), e); }

  /// Least g : a -> b in lexicographic order such that ok(<1, g>) holds. ok is the
  /// substituted conclusion itself, so a returned term is validated by construction.
  template <class P>
  std::optional<FinMap> find_term(FinSet a, FinSet b, P ok) const {
    for (const FinMap& g : L_->doctrine().base().enumerate_maps(a, b)) {
      const FinMap s = pairing(FinMap::identity(a), g);
      if (ok(s)) return g;
    }
    return std::nullopt;
  }

  void finish(Report& r, std::size_t n) const {
    r.detail["instances"] = n;
    r.detail["window"] = w_.to_string();
    r.detail["scope"] = scope_ == Scope::classes ? "classes" : "elements";
    r.detail["verdict"] = r.ok() ? "holds" : "fails";
  }

  const FreenessDetector<D>* F_;
  const Logic<D>* L_;
  Window w_;
  Scope scope_;
};

template <class D>
concept HasArrowCertify = requires(const D& d, const typename D::Element& x, const DialArrowWitness& w) {
  { d.certify(x, x, w) } -> std::convertible_to<bool>;
};

/// For every shape (I, U, X, V, Y) over the given carriers and every pair of quantifier-free
/// classes psi over I x U x X and phi over I x V x Y: the sequent
/// exists u. forall x. psi |- exists v. forall y. phi, decided by the fiber order, agrees with
/// the existence of an (f0, f1) pair, decided by exhaustive search through reindexing.
/// Found pairs are also certified by the doctrine when it can certify arrow witnesses.
template <Doctrine D>
Report check_dialectica_extraction(const PrincipleChecker<D>& C, const FreenessDetector<D>& F,
                                   const std::vector<std::size_t>& carriers, const Only& only = {}) {
  using E = typename D::Element;
  const Logic<D>& L = C.logic();
  const D& d = L.doctrine();
  const BaseCat& base = d.base();
  Report r("dialectica-extraction");
  std::size_t n = 0, holding = 0, certified = 0;
  auto qf_classes = [&](FinSet a) {
    std::vector<E> out;
    const auto& t = L.fiber(a);
    for (std::size_t c = 0; c < t.class_count(); ++c)
      if (F.quantifier_free(a, t.rep(c)).free) out.push_back(t.rep(c));
    return out;
  };
  for (std::size_t i : carriers)
    for (std::size_t u : carriers)
      for (std::size_t x : carriers)
        for (std::size_t v : carriers)
          for (std::size_t y : carriers) {
            const FinSet I{i}, U{u}, X{x}, V{v}, Y{y};
            const FinSet iu{i * u}, iuy{i * u * y};
            const std::vector<E> psis = qf_classes(FinSet{i * u * x});
            const std::vector<E> phis = qf_classes(FinSet{i * v * y});
            const std::vector<FinMap> f0s = base.enumerate_maps(iu, V).to_vector();
            const std::vector<FinMap> f1s = base.enumerate_maps(iuy, X).to_vector();
            // Reindexings shared by all pairs of the shape.
            std::vector<std::vector<E>> rpsi(psis.size()), rphi(phis.size());
            for (std::size_t p = 0; p < psis.size(); ++p)
              for (const FinMap& f1 : f1s)
                rpsi[p].push_back(L.reindex(PrincipleChecker<D>::psi_map(iu, X, Y, f1), psis[p]));
            for (std::size_t q = 0; q < phis.size(); ++q)
              for (const FinMap& f0 : f0s)
                rphi[q].push_back(L.reindex(PrincipleChecker<D>::phi_map(I, U, V, Y, f0), phis[q]));
            for (std::size_t p = 0; p < psis.size(); ++p) {
              const E lhs = C.prenex(I, U, X, psis[p]);
              for (std::size_t q = 0; q < phis.size(); ++q) {
                const auto id = detail::inst_id(
                    "dialectica-extraction", {{"I", i}, {"U", u}, {"X", x}, {"V", v}, {"Y", y}, {"psi", p}, {"phi", q}});
                if (!only.selects([&] { return id; })) continue;
                ++n;
                const bool sequent = L.leq(I, lhs, C.prenex(I, V, Y, phis[q]));
                std::optional<std::pair<std::size_t, std::size_t>> pair;
                for (std::size_t a = 0; a < f0s.size() && !pair; ++a)
                  for (std::size_t b = 0; b < f1s.size(); ++b)
                    if (L.leq(iuy, rpsi[p][b], rphi[q][a])) {
                      pair = {a, b};
                      break;
                    }
                const json data = {{"psi", d.describe(psis[p])}, {"phi", d.describe(phis[q])}};
                if (sequent != pair.has_value()) {
                  r.fail(id, sequent ? "sequent holds but no (f0, f1) pair exists" : "a pair exists but the sequent fails",
                         data);
                  r.detail["instances"] = n;
                  return r;
                }
                if (!pair) continue;
                ++holding;
                if constexpr (HasArrowCertify<D>) {
                  const DialArrowWitness w{f0s[pair->first], f1s[pair->second]};
                  if (!d.certify(lhs, C.prenex(I, V, Y, phis[q]), w)) {
                    r.fail(id, "extracted pair does not certify the sequent", data);
                    r.detail["instances"] = n;
                    return r;
                  }
                  ++certified;
                }
              }
            }
          }
  r.detail["instances"] = n;
  r.detail["sequents_holding"] = holding;
  r.detail["pairs_certified"] = certified;
  r.detail["carriers"] = carriers;
  return r;
}

/// Runs a rule or principle sweep, turning a failed side condition or closure hypothesis
/// into a skipped report that names it.
template <class F>
Report guarded(const std::string& name, F run) {
  try {
    return run();
  } catch (const ClosureHypothesisFailed& e) {
    Report r(name);
    r.status = Status::skipped;
    r.detail["verdict"] = "hypothesis-fails";
    r.detail["message"] = e.what();
    return r;
  } catch (const SideConditionFailed& e) {
    Report r(name);
    r.status = Status::skipped;
    r.detail["verdict"] = "side-condition-fails";
    r.detail["message"] = e.what();
    return r;
  }
}

}  // namespace godel

#endif  // GODEL_PRINCIPLES_HPP
