#ifndef GODEL_TRIPOS_HPP
#define GODEL_TRIPOS_HPP

#include <optional>
#include <string>
#include <vector>

#include "godel/doctrine.hpp"

namespace godel {

/// The map from the left-nested product of sizes to the product of the picked factors.
inline FinMap select_factors(const std::vector<std::size_t>& sizes, const std::vector<std::size_t>& picks) {
  std::size_t n = 1, m = 1;
  for (std::size_t s : sizes) n *= s;
  for (std::size_t p : picks) m *= sizes[p];
  std::vector<Index> table(n);
  std::vector<Index> digits(sizes.size());
  for (Index k = 0; k < n; ++k) {
    Index r = k;
    for (std::size_t d = sizes.size(); d-- > 0;) {
      digits[d] = r % sizes[d];
      r /= sizes[d];
    }
    Index out = 0;
    for (std::size_t p : picks) out = out * sizes[p] + digits[p];
    table[k] = out;
  }
  return FinMap(FinSet{n}, FinSet{m}, std::move(table));
}

/// delta_A as the existential image of top along the diagonal.
template <Doctrine P>
typename P::Element diagonal_predicate(const Logic<P>& L, FinSet a) {
  return L.exists_along(diagonal(a), L.top(a));
}

// Comprehension completion.

template <class E>
struct ComprehensionObject {
  FinSet carrier;
  E pred;
};

/// Objects (A, alpha); arrows the base maps f with alpha <= P_f beta. The fiber over
/// (A, alpha) is the down-set of alpha, and reindexing along f : (B, beta) -> (A, alpha)
/// is P_f gamma meet beta.
template <Doctrine P>
class ComprehensionCompletion {
 public:
  using E = typename P::Element;
  using Object = ComprehensionObject<E>;

  explicit ComprehensionCompletion(const Logic<P>& L) : L_(&L) {}

  bool is_arrow(const Object& a, const Object& b, const FinMap& f) const {
    return f.dom() == a.carrier && f.cod() == b.carrier && L_->leq(a.carrier, a.pred, L_->reindex(f, b.pred));
  }
  std::vector<FinMap> arrows(const Object& a, const Object& b) const {
    std::vector<FinMap> out;
    for (const FinMap& f : L_->doctrine().base().enumerate_maps(a.carrier, b.carrier))
      if (is_arrow(a, b, f)) out.push_back(f);
    return out;
  }
  std::vector<E> fiber(const Object& a) const {
    std::vector<E> out;
    for (const E& g : L_->fiber(a.carrier).elements())
      if (L_->leq(a.carrier, g, a.pred)) out.push_back(g);
    return out;
  }
  /// f : (B, beta) -> (A, alpha), gamma in the fiber over (A, alpha).
  E reindex(const FinMap& f, const Object& dom, const E& gamma) const {
    return L_->meet(dom.carrier, L_->reindex(f, gamma), dom.pred);
  }

 private:
  const Logic<P>* L_;
};

/// Extensional reflection of the comprehension completion: maps f, g : (A, alpha) ->
/// (B, beta) are identified when alpha <= P_<f,g>(delta_B). That is top <= f = g in the
/// fiber over (A, alpha), since beta already holds along f and g there. With only_top the
/// objects are (A, top), which is the reflection of the base category.
template <Doctrine P>
class PredicateCategory {
 public:
  using E = typename P::Element;
  using Object = ComprehensionObject<E>;
  using Arrow = FinMap;

  PredicateCategory(const Logic<P>& L, std::size_t cap, bool only_top = false) : L_(&L), G_(L) {
    for (std::size_t a = 0; a <= cap; ++a) {
      const FinSet A{a};
      if (only_top)
        objects_.push_back({A, L.top(A)});
      else
        for (const E& e : L.fiber(A).elements()) objects_.push_back({A, e});
    }
    homs_.resize(objects_.size() * objects_.size());
    for (std::size_t i = 0; i < objects_.size(); ++i)
      for (std::size_t j = 0; j < objects_.size(); ++j) {
        auto& hom = homs_[i * objects_.size() + j];
        for (const FinMap& f : G_.arrows(objects_[i], objects_[j])) {
          bool seen = false;
          for (const FinMap& g : hom)
            if (equivalent(i, j, f, g)) {
              seen = true;
              break;
            }
          if (!seen) hom.push_back(f);
        }
      }
  }

  std::string name() const { return "pred"; }
  std::size_t object_count() const { return objects_.size(); }
  const Object& object(std::size_t i) const { return objects_[i]; }
  const std::vector<Arrow>& arrows(std::size_t i, std::size_t j) const { return homs_[i * objects_.size() + j]; }
  Arrow identity(std::size_t i) const { return FinMap::identity(objects_[i].carrier); }
  /// g after f, for f : i -> j and g : j -> k.
  Arrow compose(std::size_t, std::size_t, std::size_t, const Arrow& f, const Arrow& g) const {
    return godel::compose(g, f);
  }
  bool is_arrow(std::size_t i, std::size_t j, const Arrow& f) const { return G_.is_arrow(objects_[i], objects_[j], f); }
  bool equivalent(std::size_t i, std::size_t j, const Arrow& f, const Arrow& g) const {
    const FinSet b = objects_[j].carrier;
    return L_->leq(objects_[i].carrier, objects_[i].pred, L_->reindex(pairing(f, g), diagonal_predicate(*L_, b)));
  }
  json describe_object(std::size_t i) const {
    return {{"carrier", objects_[i].carrier.size}, {"pred", L_->doctrine().describe(objects_[i].pred)}};
  }
  json describe_arrow(const Arrow& f) const { return f.table(); }

 private:
  const Logic<P>* L_;
  ComprehensionCompletion<P> G_;
  std::vector<Object> objects_;
  std::vector<std::vector<Arrow>> homs_;
};

// Tripos-to-topos.

template <class E>
struct PerObject {
  FinSet carrier;
  E rel;
};

/// Objects: partial equivalence relations rho over carriers up to cap. Arrows: the
/// functional relations, listed by least fiber id per class, where phi and phi' are
/// identified when they agree under rho(a, a). Composition is exists b. phi(a, b) meet
/// psi(b, c); the identity of (A, rho) is rho.
template <Doctrine P>
class TriposToTopos {
 public:
  using E = typename P::Element;
  using Object = PerObject<E>;
  using Arrow = E;

  TriposToTopos(const Logic<P>& L, std::size_t cap) : L_(&L) {
    for (std::size_t a = 0; a <= cap; ++a) {
      const FinSet A{a}, AA{a * a};
      for (const E& r : L.fiber(AA).elements())
        if (is_per(A, r)) objects_.push_back({A, r});
    }
    homs_.resize(objects_.size() * objects_.size());
    for (std::size_t i = 0; i < objects_.size(); ++i)
      for (std::size_t j = 0; j < objects_.size(); ++j) {
        auto& hom = homs_[i * objects_.size() + j];
        const FinSet ab{objects_[i].carrier.size * objects_[j].carrier.size};
        for (const E& phi : L.fiber(ab).elements()) {
          if (!is_arrow(i, j, phi)) continue;
          bool seen = false;
          for (const E& g : hom)
            if (equivalent(i, j, phi, g)) {
              seen = true;
              break;
            }
          if (!seen) hom.push_back(phi);
        }
      }
  }

  std::string name() const { return "tripos-to-topos"; }
  std::size_t object_count() const { return objects_.size(); }
  const Object& object(std::size_t i) const { return objects_[i]; }
  const std::vector<Arrow>& arrows(std::size_t i, std::size_t j) const { return homs_[i * objects_.size() + j]; }
  Arrow identity(std::size_t i) const { return objects_[i].rel; }

  /// Symmetric and transitive, as fiber inequalities.
  bool is_per(FinSet a, const E& r) const {
    const std::size_t n = a.size;
    const FinSet aaa{n * n * n};
    if (!L_->leq(FinSet{n * n}, r, L_->reindex(select_factors({n, n}, {1, 0}), r))) return false;
    const E r12 = L_->reindex(select_factors({n, n, n}, {0, 1}), r);
    const E r23 = L_->reindex(select_factors({n, n, n}, {1, 2}), r);
    const E r13 = L_->reindex(select_factors({n, n, n}, {0, 2}), r);
    return L_->leq(aaa, L_->meet(aaa, r12, r23), r13);
  }

  /// The five arrow conditions; returns the number of the first failing one, or 0.
  int failing_condition(std::size_t i, std::size_t j, const E& phi) const {
    const std::size_t a = objects_[i].carrier.size, b = objects_[j].carrier.size;
    const E& rho = objects_[i].rel;
    const E& sigma = objects_[j].rel;
    const FinSet ab{a * b}, aab{a * a * b}, abb{a * b * b};
    // 1. phi(a, b) meet rho(a, a) |- sigma(b, b)
    const E rho_aa = L_->reindex(select_factors({a, b}, {0, 0}), rho);
    const E sigma_bb = L_->reindex(select_factors({a, b}, {1, 1}), sigma);
    if (!L_->leq(ab, L_->meet(ab, phi, rho_aa), sigma_bb)) return 1;
    // 2. rho(a1, a2) meet phi(a1, b) |- phi(a2, b)
    {
      const std::vector<std::size_t> s{a, a, b};
      const E lhs = L_->meet(aab, L_->reindex(select_factors(s, {0, 1}), rho), L_->reindex(select_factors(s, {0, 2}), phi));
      if (!L_->leq(aab, lhs, L_->reindex(select_factors(s, {1, 2}), phi))) return 2;
    }
    const std::vector<std::size_t> s{a, b, b};
    const E phi1 = L_->reindex(select_factors(s, {0, 1}), phi);
    const E phi2 = L_->reindex(select_factors(s, {0, 2}), phi);
    const E sig12 = L_->reindex(select_factors(s, {1, 2}), sigma);
    // 3. sigma(b1, b2) meet phi(a, b1) |- phi(a, b2)
    if (!L_->leq(abb, L_->meet(abb, sig12, phi1), phi2)) return 3;
    // 4. phi(a, b1) meet phi(a, b2) |- sigma(b1, b2)
    if (!L_->leq(abb, L_->meet(abb, phi1, phi2), sig12)) return 4;
    // 5. rho(a, a) |- exists b. phi(a, b)
    const E rho_diag = L_->reindex(diagonal(FinSet{a}), rho);
    if (!L_->leq(FinSet{a}, rho_diag, L_->exists_proj(FinSet{a}, FinSet{b}, phi))) return 5;
    return 0;
  }
  bool is_arrow(std::size_t i, std::size_t j, const E& phi) const { return failing_condition(i, j, phi) == 0; }

  /// phi meet rho(a, a) and phi' meet rho(a, a) are equivalent.
  bool equivalent(std::size_t i, std::size_t j, const E& phi, const E& psi) const {
    const std::size_t a = objects_[i].carrier.size, b = objects_[j].carrier.size;
    const FinSet ab{a * b};
    const E rho_aa = L_->reindex(select_factors({a, b}, {0, 0}), objects_[i].rel);
    return L_->equiv(ab, L_->meet(ab, phi, rho_aa), L_->meet(ab, psi, rho_aa));
  }

  /// psi after phi, for phi : i -> j and psi : j -> k, computed over A x C x B.
  Arrow compose(std::size_t i, std::size_t j, std::size_t k, const Arrow& phi, const Arrow& psi) const {
    return compose_with(i, j, k, phi, psi, true);
  }
  /// With meet false the conjunction is dropped, leaving exists b. phi(a, b).
  Arrow compose_with(std::size_t i, std::size_t j, std::size_t k, const Arrow& phi, const Arrow& psi,
                     bool meet) const {
    const std::size_t a = objects_[i].carrier.size, b = objects_[j].carrier.size, c = objects_[k].carrier.size;
    const std::vector<std::size_t> s{a, c, b};
    const FinSet acb{a * c * b};
    const E l = L_->reindex(select_factors(s, {0, 2}), phi);
    const E body = meet ? L_->meet(acb, l, L_->reindex(select_factors(s, {2, 1}), psi)) : l;
    return L_->exists_proj(FinSet{a * c}, FinSet{b}, body);
  }

  json describe_object(std::size_t i) const {
    return {{"carrier", objects_[i].carrier.size}, {"rel", L_->doctrine().describe(objects_[i].rel)}};
  }
  json describe_arrow(const Arrow& phi) const { return L_->doctrine().describe(phi); }

 private:
  const Logic<P>* L_;
  std::vector<Object> objects_;
  std::vector<std::vector<Arrow>> homs_;
};

/// The same category with composition replaced; for mutation tests.
template <class C, class F>
struct WithComposition {
  const C* base;
  F fn;
  using Arrow = typename C::Arrow;
  std::string name() const { return base->name() + "-mutated"; }
  std::size_t object_count() const { return base->object_count(); }
  const std::vector<Arrow>& arrows(std::size_t i, std::size_t j) const { return base->arrows(i, j); }
  Arrow identity(std::size_t i) const { return base->identity(i); }
  Arrow compose(std::size_t i, std::size_t j, std::size_t k, const Arrow& f, const Arrow& g) const {
    return fn(i, j, k, f, g);
  }
  bool is_arrow(std::size_t i, std::size_t j, const Arrow& f) const { return base->is_arrow(i, j, f); }
  bool equivalent(std::size_t i, std::size_t j, const Arrow& f, const Arrow& g) const {
    return base->equivalent(i, j, f, g);
  }
  json describe_object(std::size_t i) const { return base->describe_object(i); }
  json describe_arrow(const Arrow& f) const { return base->describe_arrow(f); }
};

template <class C>
concept FiniteCategory = requires(const C& c, std::size_t i, const typename C::Arrow& f) {
  { c.object_count() } -> std::convertible_to<std::size_t>;
  c.arrows(i, i);
  c.identity(i);
  c.compose(i, i, i, f, f);
  { c.is_arrow(i, i, f) } -> std::convertible_to<bool>;
  { c.equivalent(i, i, f, f) } -> std::convertible_to<bool>;
};

/// Identities are arrows, composites are arrows, identity and associativity laws hold up
/// to arrow equivalence, over every listed arrow, pair and triple.
template <FiniteCategory C>
Report check_category_laws(const C& c, const Only& only = {}) {
  Report r(c.name() + "/category-laws");
  const std::size_t n = c.object_count();
  std::size_t arrows = 0, pairs = 0, triples = 0;
  auto fail = [&](const std::string& id, const std::string& msg, json data) {
    r.fail(id, msg, std::move(data));
  };
  for (std::size_t i = 0; i < n && r.ok(); ++i) {
    const std::string id = "identity/" + std::to_string(i);
    if (only.selects([&] { return id; }) && !c.is_arrow(i, i, c.identity(i)))
      fail(id, "identity is not an arrow", {{"object", c.describe_object(i)}});
    for (std::size_t j = 0; j < n && r.ok(); ++j)
      for (std::size_t x = 0; x < c.arrows(i, j).size() && r.ok(); ++x) {
        const auto& f = c.arrows(i, j)[x];
        ++arrows;
        const std::string fid = "unit/" + std::to_string(i) + "," + std::to_string(j) + "/" + std::to_string(x);
        if (!only.selects([&] { return fid; })) continue;
        if (!c.equivalent(i, j, c.compose(i, i, j, c.identity(i), f), f) ||
            !c.equivalent(i, j, c.compose(i, j, j, f, c.identity(j)), f))
          fail(fid, "identity law fails", {{"source", c.describe_object(i)}, {"target", c.describe_object(j)},
                                           {"arrow", c.describe_arrow(f)}});
      }
  }
  for (std::size_t i = 0; i < n && r.ok(); ++i)
    for (std::size_t j = 0; j < n && r.ok(); ++j)
      for (std::size_t k = 0; k < n && r.ok(); ++k)
        for (std::size_t x = 0; x < c.arrows(i, j).size() && r.ok(); ++x)
          for (std::size_t y = 0; y < c.arrows(j, k).size() && r.ok(); ++y) {
            const auto& f = c.arrows(i, j)[x];
            const auto& g = c.arrows(j, k)[y];
            const auto gf = c.compose(i, j, k, f, g);
            ++pairs;
            const std::string pid = "composite/" + std::to_string(i) + "," + std::to_string(j) + "," +
                                    std::to_string(k) + "/" + std::to_string(x) + "," + std::to_string(y);
            if (only.selects([&] { return pid; }) && !c.is_arrow(i, k, gf)) {
              fail(pid, "composite is not an arrow", {{"f", c.describe_arrow(f)}, {"g", c.describe_arrow(g)}});
              break;
            }
            for (std::size_t l = 0; l < n && r.ok(); ++l)
              for (std::size_t z = 0; z < c.arrows(k, l).size(); ++z) {
                const auto& h = c.arrows(k, l)[z];
                ++triples;
                const std::string tid = "assoc/" + std::to_string(i) + "," + std::to_string(j) + "," +
                                        std::to_string(k) + "," + std::to_string(l) + "/" + std::to_string(x) + "," +
                                        std::to_string(y) + "," + std::to_string(z);
                if (!only.selects([&] { return tid; })) continue;
                const auto left = c.compose(i, k, l, gf, h);
                const auto right = c.compose(i, j, l, f, c.compose(j, k, l, g, h));
                if (!c.equivalent(i, l, left, right)) {
                  fail(tid, "associativity fails",
                       {{"f", c.describe_arrow(f)}, {"g", c.describe_arrow(g)}, {"h", c.describe_arrow(h)}});
                  break;
                }
              }
          }
  r.detail["objects"] = n;
  r.detail["arrows"] = arrows;
  r.detail["composable_pairs"] = pairs;
  r.detail["composable_triples"] = triples;
  return r;
}

/// Objects with exactly one arrow from every object, up to equivalence.
template <FiniteCategory C>
std::vector<std::size_t> terminal_objects(const C& c) {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < c.object_count(); ++t) {
    bool ok = true;
    for (std::size_t i = 0; i < c.object_count() && ok; ++i) ok = c.arrows(i, t).size() == 1;
    if (ok) out.push_back(t);
  }
  return out;
}

/// For objects x and y, the first (p, p1, p2) in listing order with a unique mediating
/// arrow for every cone from a listed object, if one exists in the window.
template <FiniteCategory C>
std::optional<std::size_t> binary_product(const C& c, std::size_t x, std::size_t y) {
  const std::size_t n = c.object_count();
  for (std::size_t p = 0; p < n; ++p)
    for (const auto& p1 : c.arrows(p, x))
      for (const auto& p2 : c.arrows(p, y)) {
        bool ok = true;
        for (std::size_t z = 0; z < n && ok; ++z)
          for (const auto& f : c.arrows(z, x)) {
            if (!ok) break;
            for (const auto& g : c.arrows(z, y)) {
              std::size_t mediating = 0;
              for (const auto& h : c.arrows(z, p))
                if (c.equivalent(z, x, c.compose(z, p, x, h, p1), f) && c.equivalent(z, y, c.compose(z, p, y, h, p2), g))
                  ++mediating;
              if (mediating != 1) {
                ok = false;
                break;
              }
            }
          }
        if (ok) return p;
      }
  return std::nullopt;
}

/// Terminal object and the binary products found in the window.
template <FiniteCategory C>
Report check_small_limits(const C& c) {
  Report r(c.name() + "/small-limits");
  const auto t = terminal_objects(c);
  r.detail["terminal_objects"] = t.size();
  if (!t.empty()) r.detail["terminal"] = c.describe_object(t.front());
  std::size_t found = 0, missing = 0;
  for (std::size_t x = 0; x < c.object_count(); ++x)
    for (std::size_t y = x; y < c.object_count(); ++y) (binary_product(c, x, y) ? found : missing) += 1;
  r.detail["binary_products_in_window"] = found;
  r.detail["binary_products_outside_window"] = missing;
  return r;
}

}  // namespace godel

#endif  // GODEL_TRIPOS_HPP
