#ifndef GODEL_FREENESS_HPP
#define GODEL_FREENESS_HPP

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "godel/completion.hpp"
#include "godel/doctrine.hpp"

namespace godel {

/// A not_free verdict names the reindexing f, the sort B and the predicate beta for which
/// no term exists. A free verdict is only claimed for the window it records.
struct FreenessVerdict {
  bool free = true;
  std::optional<FinMap> along;
  std::optional<std::size_t> sort;
  json beta;
  std::string window;

  json to_json() const {
    json j = {{"status", free ? "free" : "not_free"}, {"window", window}};
    if (along) j["along"] = map_id(*along);
    if (sort) j["sort"] = *sort;
    if (!beta.is_null()) j["beta"] = beta;
    return j;
  }
};

enum class Freeness { existential, universal, universal_relative };

/// Splitting and freeness detectors over a window. Verdicts are cached per fiber class,
/// so they are computed once per class however many reindexings land in it.
template <Doctrine D>
class FreenessDetector {
 public:
  using E = typename D::Element;

  FreenessDetector(const Logic<D>& L, Window w) : L_(&L), w_(w) {}

  const Logic<D>& logic() const { return *L_; }
  const Window& window() const { return w_; }

  /// For every B and beta in P(A x B) with alpha <= exists_pi beta, some g : A -> B has
  /// alpha <= beta(a, g(a)).
  FreenessVerdict existential_splitting(FinSet a, const E& alpha) const {
    return cached(Freeness::existential, a, alpha, [&] { return splitting(Freeness::existential, a, alpha); });
  }
  /// Dually: forall_pi beta <= alpha forces beta(a, g(a)) <= alpha for some g. With
  /// relative set, beta ranges over existential-free elements only.
  FreenessVerdict universal_splitting(FinSet a, const E& alpha, bool relative = false) const {
    const Freeness k = relative ? Freeness::universal_relative : Freeness::universal;
    return cached(k, a, alpha, [&] { return splitting(k, a, alpha); });
  }

  /// Every reindexing along f : A' -> A with A' in the window contexts is a splitting.
  FreenessVerdict existential_free(FinSet a, const E& alpha) const { return free(Freeness::existential, a, alpha); }
  FreenessVerdict universal_free(FinSet a, const E& alpha) const { return free(Freeness::universal, a, alpha); }
  /// Universal-free inside the sub-doctrine of existential-free elements.
  FreenessVerdict universal_free_relative(FinSet a, const E& alpha) const {
    return free(Freeness::universal_relative, a, alpha);
  }
  /// Existential-free, and universal-free relative to the existential-free elements.
  FreenessVerdict quantifier_free(FinSet a, const E& alpha) const {
    FreenessVerdict v = existential_free(a, alpha);
    if (!v.free) return v;
    return universal_free_relative(a, alpha);
  }

 private:
  template <class F>
  FreenessVerdict cached(Freeness k, FinSet a, const E& alpha, F compute) const {
    std::optional<std::size_t> c;
    if (a.size <= w_.cap) c = L_->fiber(a).classify(alpha);
    if (!c) return compute();
    const auto key = std::make_tuple(static_cast<int>(k), a.size, *c);
    {
      std::lock_guard<std::mutex> lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    FreenessVerdict v = compute();
    std::lock_guard<std::mutex> lock(mutex_);
    cache_.emplace(key, v);
    return v;
  }

  FreenessVerdict splitting(Freeness k, FinSet a, const E& alpha) const {
    const D& d = L_->doctrine();
    const BaseCat& base = d.base();
    FreenessVerdict v;
    v.window = w_.to_string();
    for (FinSet b : w_.sorts()) {
      const FinSet ab{a.size * b.size};
      const auto& t = L_->fiber(ab);
      for (std::size_t c = 0; c < t.class_count(); ++c) {
        const E& beta = t.rep(c);
        if (k == Freeness::universal_relative && !existential_free(ab, beta).free) continue;
        const bool premise = k == Freeness::existential ? L_->leq(a, alpha, L_->exists_proj(a, b, beta))
                                                        : L_->leq(a, L_->forall_proj(a, b, beta), alpha);
        if (!premise) continue;
        bool found = false;
        for (const FinMap& g : base.enumerate_maps(a, b)) {
          const E inst = L_->reindex(pairing(FinMap::identity(a), g), beta);
          if (k == Freeness::existential ? L_->leq(a, alpha, inst) : L_->leq(a, inst, alpha)) {
            found = true;
            break;
          }
        }
        if (!found) {
          v.free = false;
          v.sort = b.size;
          v.beta = d.describe(beta);
          return v;
        }
      }
    }
    return v;
  }

  FreenessVerdict free(Freeness k, FinSet a, const E& alpha) const {
    const BaseCat& base = L_->doctrine().base();
    for (FinSet a2 : w_.contexts())
      for (const FinMap& f : base.enumerate_maps(a2, a)) {
        const E e = L_->reindex(f, alpha);
        FreenessVerdict v = k == Freeness::existential ? existential_splitting(a2, e)
                                                       : universal_splitting(a2, e, k == Freeness::universal_relative);
        if (!v.free) {
          v.along = f;
          return v;
        }
      }
    FreenessVerdict ok;
    ok.window = w_.to_string();
    return ok;
  }

  const Logic<D>* L_;
  Window w_;
  mutable std::mutex mutex_;
  mutable std::map<std::tuple<int, std::size_t, std::size_t>, FreenessVerdict> cache_;
};

namespace detail {

inline std::string ctx_id(const std::string& prefix, std::size_t a, std::size_t c) {
  return prefix + "/A=" + std::to_string(a) + "/class=" + std::to_string(c);
}

}  // namespace detail

/// For every window class alpha of P(I): the smallest sort A and first existential-free
/// beta in P(I x A) with alpha equivalent to exists_pi beta.
template <Doctrine D>
Report check_enough_existential_free(const FreenessDetector<D>& F, const Only& only = {}) {
  const Logic<D>& L = F.logic();
  Report r("enough-existential-free");
  json covers = json::array();
  if (!L.capabilities().exists) {
    r.fail("enough-existential-free", "doctrine has no existential quantifier");
    return r;
  }
  for (FinSet i : F.window().contexts()) {
    const auto& t = L.fiber(i);
    for (std::size_t c = 0; c < t.class_count() && r.ok(); ++c) {
      const std::string id = detail::ctx_id("enough-existential-free", i.size, c);
      if (!only.selects([&] { return id; })) continue;
      bool found = false;
      for (FinSet a : F.window().sorts()) {
        const FinSet ia{i.size * a.size};
        const auto& tb = L.fiber(ia);
        for (std::size_t cb = 0; cb < tb.class_count() && !found; ++cb) {
          const auto& beta = tb.rep(cb);
          if (!L.equiv(i, t.rep(c), L.exists_proj(i, a, beta))) continue;
          if (!F.existential_free(ia, beta).free) continue;
          found = true;
          covers.push_back({{"context", i.size}, {"class", c}, {"sort", a.size}, {"beta", L.doctrine().describe(beta)}});
        }
        if (found) break;
      }
      if (!found) r.fail(id, "no existential-free cover in the window", {{"alpha", L.doctrine().describe(t.rep(c))}});
    }
  }
  r.detail["covers"] = std::move(covers);
  r.detail["window"] = F.window().to_string();
  return r;
}

/// Skolem doctrine clauses: exponentials, both quantifiers, enough existential-free
/// elements, and existential-free elements stable under forall along projections.
template <Doctrine D>
Report check_skolem_doctrine(const FreenessDetector<D>& F, const Only& only = {}) {
  const Logic<D>& L = F.logic();
  const Window& w = F.window();
  Report root("skolem-doctrine");
  root.detail["doctrine"] = L.doctrine().name();
  root.detail["window"] = w.to_string();
  {
    Report r("cartesian-closed");
    json outside = json::array();
    std::size_t within = 0;
    for (FinSet b : w.contexts())
      for (FinSet c : w.contexts()) {
        if (L.doctrine().base().has_exponential(b, c))
          ++within;
        else
          outside.push_back({b.size, c.size});
      }
    r.detail["pairs_within_cap"] = within;
    r.detail["exponential_cap"] = L.doctrine().base().size_cap();
    if (!outside.empty()) {
      r.detail["window_limited"] = true;
      r.detail["pairs_outside_cap"] = std::move(outside);
    }
    root.add(std::move(r));
  }
  {
    Report r("quantifiers");
    const Capabilities caps = L.capabilities();
    r.detail["exists"] = caps.exists;
    r.detail["forall"] = caps.forall;
    if (!caps.exists || !caps.forall)
      r.fail("skolem-doctrine/quantifiers", caps.exists ? "doctrine has no universal quantifier"
                                                        : "doctrine has no existential quantifier");
    root.add(std::move(r));
  }
  const bool quantifiers = root.ok();
  if (!quantifiers) return root;
  root.add(check_enough_existential_free(F, only));
  {
    Report r("forall-stability");
    std::size_t n = 0;
    for (FinSet i : w.contexts())
      for (FinSet a : w.sorts()) {
        const FinSet ia{i.size * a.size};
        const auto& t = L.fiber(ia);
        for (std::size_t c = 0; c < t.class_count() && r.ok(); ++c) {
          const std::string id = "forall-stability/I=" + std::to_string(i.size) + "/A=" + std::to_string(a.size) +
                                 "/class=" + std::to_string(c);
          if (!only.selects([&] { return id; })) continue;
          if (!F.existential_free(ia, t.rep(c)).free) continue;
          ++n;
          const auto q = L.forall_proj(i, a, t.rep(c));
          FreenessVerdict v = F.existential_free(i, q);
          if (!v.free)
            r.fail(id, "forall of an existential-free element is not existential-free",
                   {{"alpha", L.doctrine().describe(t.rep(c))}, {"verdict", v.to_json()}});
        }
      }
    r.detail["instances"] = n;
    root.add(std::move(r));
  }
  return root;
}

/// A quantifier-free (U, X, gamma) with alpha equivalent to exists u. forall x. gamma.
template <class E>
struct PrenexCover {
  FinSet witness;
  FinSet counter;
  E gamma;
};

template <class D>
concept HasPrenexHint = requires(const D& d, FinSet i, const typename D::Element& e) { d.prenex_hint(i, e); };

template <Doctrine D>
std::optional<PrenexCover<typename D::Element>> find_prenex_cover(const FreenessDetector<D>& F, FinSet i,
                                                                   const typename D::Element& alpha) {
  const Logic<D>& L = F.logic();
  const Window& w = F.window();
  if constexpr (HasPrenexHint<D>) {
    auto [u, x, g] = L.doctrine().prenex_hint(i, alpha);
    const FinSet iux{i.size * u.size * x.size};
    if (iux.size <= w.max_body && F.quantifier_free(iux, g).free) return PrenexCover<typename D::Element>{u, x, g};
  }
  for (FinSet u : w.sorts())
    for (FinSet x : w.sorts()) {
      const FinSet iux{i.size * u.size * x.size};
      if (iux.size > w.max_body) continue;
      const auto& t = L.fiber(iux);
      for (std::size_t c = 0; c < t.class_count(); ++c) {
        const auto& g = t.rep(c);
        const auto s = L.exists_proj(i, u, L.forall_proj(FinSet{i.size * u.size}, x, g));
        if (!L.equiv(i, alpha, s)) continue;
        if (!F.quantifier_free(iux, g).free) continue;
        return PrenexCover<typename D::Element>{u, x, g};
      }
    }
  return std::nullopt;
}

/// Skolem clauses, enough universal-free elements among the existential-free ones, and a
/// prenex cover for every listed element, each re-checked by two order queries.
template <Doctrine D>
Report check_godel_doctrine(const FreenessDetector<D>& F, const Only& only = {}) {
  const Logic<D>& L = F.logic();
  const Window& w = F.window();
  const D& d = L.doctrine();
  Report root = check_skolem_doctrine(F, only);
  root.name = "godel-doctrine";
  if (!root.ok()) return root;
  {
    Report r("enough-universal-free-in-existential-free");
    json covers = json::array();
    for (FinSet i : w.contexts()) {
      const auto& t = L.fiber(i);
      for (std::size_t c = 0; c < t.class_count() && r.ok(); ++c) {
        const std::string id = detail::ctx_id(r.name, i.size, c);
        if (!only.selects([&] { return id; })) continue;
        if (!F.existential_free(i, t.rep(c)).free) continue;
        bool found = false;
        for (FinSet a : w.sorts()) {
          const FinSet ia{i.size * a.size};
          const auto& tb = L.fiber(ia);
          for (std::size_t cb = 0; cb < tb.class_count() && !found; ++cb) {
            const auto& beta = tb.rep(cb);
            if (!L.equiv(i, t.rep(c), L.forall_proj(i, a, beta))) continue;
            if (!F.quantifier_free(ia, beta).free) continue;
            found = true;
            covers.push_back({{"context", i.size}, {"class", c}, {"sort", a.size}, {"beta", d.describe(beta)}});
          }
          if (found) break;
        }
        if (!found) r.fail(id, "no quantifier-free universal cover in the window", {{"alpha", d.describe(t.rep(c))}});
      }
    }
    r.detail["covers"] = std::move(covers);
    root.add(std::move(r));
  }
  {
    Report r("prenex-cover");
    json covers = json::array();
    std::size_t elements = 0, checks = 0;
    for (FinSet i : w.contexts()) {
      const auto& t = L.fiber(i);
      std::vector<std::optional<PrenexCover<typename D::Element>>> by_class(t.class_count());
      std::vector<bool> searched(t.class_count(), false);
      for (std::size_t k = 0; k < t.size() && r.ok(); ++k) {
        const std::string id = "prenex-cover/I=" + std::to_string(i.size) + "/x=" + std::to_string(k);
        if (!only.selects([&] { return id; })) continue;
        std::size_t c = t.class_of(k);
        if constexpr (HasPrenexHint<D>) {
          // Hints are per element, so every element gets its own slot.
          if (by_class.size() < t.size()) {
            by_class.assign(t.size(), std::nullopt);
            searched.assign(t.size(), false);
          }
          c = k;
        }
        if (!searched[c]) {
          searched[c] = true;
          by_class[c] = find_prenex_cover(F, i, t.elements()[HasPrenexHint<D> ? k : t.rep_id(c)]);
          if (by_class[c])
            covers.push_back({{"context", i.size},
                              {HasPrenexHint<D> ? "element" : "class", c},
                              {"U", by_class[c]->witness.size},
                              {"X", by_class[c]->counter.size},
                              {"gamma", d.describe(by_class[c]->gamma)}});
        }
        ++elements;
        if (!by_class[c]) {
          r.fail(id, "no prenex cover in the window", {{"alpha", d.describe(t.elements()[k])}});
          break;
        }
        const auto& cov = *by_class[c];
        const auto s =
            L.exists_proj(i, cov.witness, L.forall_proj(FinSet{i.size * cov.witness.size}, cov.counter, cov.gamma));
        checks += 2;
        if (!L.leq(i, t.elements()[k], s) || !L.leq(i, s, t.elements()[k]))
          r.fail(id, "prenex cover does not re-check", {{"alpha", d.describe(t.elements()[k])}});
      }
    }
    r.detail["elements"] = elements;
    r.detail["order_checks"] = checks;
    r.detail["covers"] = std::move(covers);
    root.add(std::move(r));
  }
  return root;
}

/// In P^E, an element is existential-free exactly when it is equivalent to an embedded
/// element of P; dually in P^A with universal-free. Every listed element is compared.
template <Doctrine P>
Report check_freeness_characterisation(const P& p, const Window& w, const Only& only = {}) {
  Report root("freeness-characterisation");
  root.detail["window"] = w.to_string();
  auto run = [&](auto& completion, bool existential) {
    using C = std::decay_t<decltype(completion)>;
    Logic<C> L(completion);
    FreenessDetector<C> F(L, w);
    Report r(existential ? "existential" : "universal");
    std::size_t n = 0, free_count = 0;
    for (FinSet a : w.contexts()) {
      const auto& t = L.fiber(a);
      const auto base_fiber = p.fiber(a);
      for (std::size_t k = 0; k < t.size(); ++k) {
        const std::string id = "freeness-characterisation/" + r.name + "/A=" + std::to_string(a.size) + "/x=" +
                               std::to_string(k);
        if (!only.selects([&] { return id; })) continue;
        ++n;
        const auto& x = t.elements()[k];
        const FreenessVerdict v = existential ? F.existential_free(a, x) : F.universal_free(a, x);
        bool embedded = false;
        for (const auto& s : base_fiber)
          if (L.equiv(a, x, completion.embed(a, s))) {
            embedded = true;
            break;
          }
        free_count += v.free ? 1 : 0;
        if (v.free != embedded) {
          r.fail(id, v.free ? "detector says free but the element is not equivalent to an embedded one"
                            : "detector says not free but the element is equivalent to an embedded one",
                 {{"x", completion.describe(x)}, {"verdict", v.to_json()}});
          break;
        }
      }
    }
    r.detail["elements"] = n;
    r.detail["free"] = free_count;
    r.detail["not_free"] = n - free_count;
    root.add(std::move(r));
  };
  ExCompletion<P> ex(p, w);
  run(ex, true);
  UnCompletion<P> un(p, w);
  run(un, false);
  return root;
}

}  // namespace godel

#endif  // GODEL_FREENESS_HPP
