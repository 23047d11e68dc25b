#ifndef GODEL_COMPLETION_HPP
#define GODEL_COMPLETION_HPP

#include <optional>
#include <tuple>
#include <string>
#include <vector>

#include "godel/doctrine.hpp"
#include "godel/subset_doctrine.hpp"

namespace godel {

/// automatic uses entrywise witness search when the base doctrine is pointwise;
/// exhaustive always enumerates whole function tables.
enum class SearchMode { automatic, exhaustive };

/// (A, B, alpha) with alpha in P(A x B).
template <class E>
struct ExObj {
  FinSet ctx;
  FinSet aux;
  E body;
  friend bool operator==(const ExObj&, const ExObj&) = default;
  friend auto operator<=>(const ExObj&, const ExObj&) = default;
};

/// Same shape as ExObj, read universally.
template <class E>
struct UnObj {
  FinSet ctx;
  FinSet aux;
  E body;
  friend bool operator==(const UnObj&, const UnObj&) = default;
  friend auto operator<=>(const UnObj&, const UnObj&) = default;
};

/// (I, U, X, alpha) with alpha in P(I x U x X).
template <class E>
struct DialObj {
  FinSet ctx;
  FinSet witness;
  FinSet counter;
  E body;
  friend bool operator==(const DialObj&, const DialObj&) = default;
  friend auto operator<=>(const DialObj&, const DialObj&) = default;
};

/// f0 : I x U -> V and f1 : I x U x Y -> X.
struct DialArrowWitness {
  FinMap f0;
  FinMap f1;
  friend bool operator==(const DialArrowWitness&, const DialArrowWitness&) = default;
};

inline json to_json(const DialArrowWitness& w) {
  return {{"f0", w.f0.table()}, {"f1", w.f1.table()}};
}

namespace detail {

// Product sizes are small; overflow is excluded by the window before any listing.
inline std::size_t mul(std::size_t a, std::size_t b) { return a * b; }

inline std::size_t search_space(std::size_t cod, std::size_t dom, std::size_t budget) {
  return map_count(FinSet{dom}, FinSet{cod}, budget);
}

template <class P>
bool holds(const typename P::Element& e, Index i) {
  return P::holds(e, i);
}

}  // namespace detail

/// The existential completion P^E: order witnessed by f : A x B -> C with
/// alpha(a, b) <= beta(a, f(a, b)).
template <Doctrine P>
class ExCompletion {
 public:
  using BaseElement = typename P::Element;
  using Element = ExObj<BaseElement>;

  ExCompletion(P p, Window w, SearchMode mode = SearchMode::automatic) : p_(std::move(p)), w_(w), mode_(mode) {}

  std::string name() const { return "ex(" + p_.name() + ")"; }
  const BaseCat& base() const { return p_.base(); }
  const P& inner() const { return p_; }
  const Window& window() const { return w_; }
  Capabilities capabilities() const { return {true, false, true, false}; }

  std::vector<Element> fiber(FinSet a) const {
    std::vector<Element> out;
    for (FinSet b : w_.sorts()) {
      const std::size_t n = detail::mul(a.size, b.size);
      if (n > w_.max_body) continue;
      for (auto& e : p_.fiber(FinSet{n})) out.push_back(Element{a, b, std::move(e)});
    }
    return out;
  }

  bool leq(FinSet, const Element& x, const Element& y) const { return witness(x, y).has_value(); }

  Element reindex(const FinMap& g, const Element& x) const {
    return {g.dom(), x.aux, p_.reindex(cross(g, FinMap::identity(x.aux)), x.body)};
  }

  /// Exists along A x B -> A: the quantified sort joins the auxiliary sort.
  Element exists_proj(FinSet a, FinSet b, const Element& x) const {
    return {a, FinSet{b.size * x.aux.size}, x.body};
  }

  json describe(const Element& x) const {
    return {{"ctx", x.ctx.size}, {"aux", x.aux.size}, {"body", p_.describe(x.body)}};
  }

  Element embed(FinSet a, const BaseElement& alpha) const { return {a, FinSet{1}, alpha}; }

  std::size_t search_space(const Element& x, const Element& y) const {
    return detail::search_space(y.aux.size, x.ctx.size * x.aux.size, p_.base().budget());
  }

  /// Lexicographically least f certifying x <= y.
  std::optional<FinMap> witness(const Element& x, const Element& y) const {
    const std::size_t B = x.aux.size, C = y.aux.size;
    const FinSet ab{x.ctx.size * B};
    if constexpr (is_pointwise_v<P>) {
      if (mode_ == SearchMode::automatic) {
        if (C == 0 && ab.size > 0) return std::nullopt;
        std::vector<Index> t(ab.size, 0);
        for (Index k = 0; k < ab.size; ++k) {
          if (!detail::holds<P>(x.body, k)) continue;
          const Index a = k / B;
          Index c = 0;
          while (c < C && !detail::holds<P>(y.body, a * C + c)) ++c;
          if (c == C) return std::nullopt;
          t[k] = c;
        }
        return FinMap(ab, FinSet{C}, std::move(t));
      }
    }
    for (const FinMap& f : p_.base().enumerate_maps(ab, FinSet{C}))
      if (certify(x, y, f)) return f;
    return std::nullopt;
  }

  bool certify(const Element& x, const Element& y, const FinMap& f) const {
    const std::size_t B = x.aux.size, C = y.aux.size;
    const FinSet ab{x.ctx.size * B};
    if (f.dom() != ab || f.cod() != FinSet{C} || x.ctx != y.ctx) return false;
    std::vector<Index> m(ab.size);
    for (Index k = 0; k < ab.size; ++k) m[k] = (k / B) * C + f(k);
    return p_.leq(ab, x.body, p_.reindex(FinMap(ab, FinSet{x.ctx.size * C}, std::move(m)), y.body));
  }

  FinMap identity_witness(const Element& x) const {
    const std::size_t n = x.ctx.size * x.aux.size;
    std::vector<Index> t(n);
    for (Index k = 0; k < n; ++k) t[k] = k % x.aux.size;
    return FinMap(FinSet{n}, x.aux, std::move(t));
  }

  /// Witness of x <= z from f : x <= y and g : y <= z.
  FinMap compose_witness(const Element& x, const Element& y, const Element& z, const FinMap& f,
                         const FinMap& g) const {
    const std::size_t B = x.aux.size, C = y.aux.size;
    const std::size_t n = x.ctx.size * B;
    std::vector<Index> t(n);
    for (Index k = 0; k < n; ++k) t[k] = g((k / B) * C + f(k));
    return FinMap(FinSet{n}, z.aux, std::move(t));
  }

 private:
  P p_;
  Window w_;
  SearchMode mode_;
};

/// The universal completion P^A: order witnessed by g : A x C -> B with
/// alpha(a, g(a, c)) <= beta(a, c).
template <Doctrine P>
class UnCompletion {
 public:
  using BaseElement = typename P::Element;
  using Element = UnObj<BaseElement>;

  UnCompletion(P p, Window w, SearchMode mode = SearchMode::automatic) : p_(std::move(p)), w_(w), mode_(mode) {}

  std::string name() const { return "un(" + p_.name() + ")"; }
  const BaseCat& base() const { return p_.base(); }
  const P& inner() const { return p_; }
  const Window& window() const { return w_; }
  Capabilities capabilities() const { return {false, true, true, false}; }

  std::vector<Element> fiber(FinSet a) const {
    std::vector<Element> out;
    for (FinSet b : w_.sorts()) {
      const std::size_t n = detail::mul(a.size, b.size);
      if (n > w_.max_body) continue;
      for (auto& e : p_.fiber(FinSet{n})) out.push_back(Element{a, b, std::move(e)});
    }
    return out;
  }

  bool leq(FinSet, const Element& x, const Element& y) const { return witness(x, y).has_value(); }

  Element reindex(const FinMap& g, const Element& x) const {
    return {g.dom(), x.aux, p_.reindex(cross(g, FinMap::identity(x.aux)), x.body)};
  }

  Element forall_proj(FinSet a, FinSet b, const Element& x) const {
    return {a, FinSet{b.size * x.aux.size}, x.body};
  }

  json describe(const Element& x) const {
    return {{"ctx", x.ctx.size}, {"aux", x.aux.size}, {"body", p_.describe(x.body)}};
  }

  Element embed(FinSet a, const BaseElement& alpha) const { return {a, FinSet{1}, alpha}; }

  std::size_t search_space(const Element& x, const Element& y) const {
    return detail::search_space(x.aux.size, x.ctx.size * y.aux.size, p_.base().budget());
  }

  std::optional<FinMap> witness(const Element& x, const Element& y) const {
    const std::size_t B = x.aux.size, C = y.aux.size;
    const FinSet ac{x.ctx.size * C};
    if constexpr (is_pointwise_v<P>) {
      if (mode_ == SearchMode::automatic) {
        if (B == 0 && ac.size > 0) return std::nullopt;
        std::vector<Index> t(ac.size, 0);
        for (Index k = 0; k < ac.size; ++k) {
          if (detail::holds<P>(y.body, k)) continue;
          const Index a = k / C;
          Index b = 0;
          while (b < B && detail::holds<P>(x.body, a * B + b)) ++b;
          if (b == B) return std::nullopt;
          t[k] = b;
        }
        return FinMap(ac, FinSet{B}, std::move(t));
      }
    }
    for (const FinMap& g : p_.base().enumerate_maps(ac, FinSet{B}))
      if (certify(x, y, g)) return g;
    return std::nullopt;
  }

  bool certify(const Element& x, const Element& y, const FinMap& g) const {
    const std::size_t B = x.aux.size, C = y.aux.size;
    const FinSet ac{x.ctx.size * C};
    if (g.dom() != ac || g.cod() != FinSet{B} || x.ctx != y.ctx) return false;
    std::vector<Index> m(ac.size);
    for (Index k = 0; k < ac.size; ++k) m[k] = (k / C) * B + g(k);
    return p_.leq(ac, p_.reindex(FinMap(ac, FinSet{x.ctx.size * B}, std::move(m)), x.body), y.body);
  }

  FinMap identity_witness(const Element& x) const {
    const std::size_t n = x.ctx.size * x.aux.size;
    std::vector<Index> t(n);
    for (Index k = 0; k < n; ++k) t[k] = k % x.aux.size;
    return FinMap(FinSet{n}, x.aux, std::move(t));
  }

  /// Witness of x <= z from f : x <= y (A x C -> B) and g : y <= z (A x D -> C).
  FinMap compose_witness(const Element& x, const Element& y, const Element& z, const FinMap& f,
                         const FinMap& g) const {
    const std::size_t C = y.aux.size, D = z.aux.size;
    const std::size_t n = x.ctx.size * D;
    std::vector<Index> t(n);
    for (Index k = 0; k < n; ++k) t[k] = f((k / D) * C + g(k));
    return FinMap(FinSet{n}, x.aux, std::move(t));
  }

 private:
  P p_;
  Window w_;
  SearchMode mode_;
};

/// The Dialectica completion: (I,U,X,alpha) <= (I,V,Y,beta) iff some (f0, f1) has
/// alpha(i, u, f1(i,u,y)) <= beta(i, f0(i,u), y).
template <Doctrine P>
class DialCompletion {
 public:
  using BaseElement = typename P::Element;
  using Element = DialObj<BaseElement>;

  DialCompletion(P p, Window w, SearchMode mode = SearchMode::automatic) : p_(std::move(p)), w_(w), mode_(mode) {}

  std::string name() const { return "dial(" + p_.name() + ")"; }
  const BaseCat& base() const { return p_.base(); }
  const P& inner() const { return p_; }
  const Window& window() const { return w_; }
  SearchMode mode() const { return mode_; }
  Capabilities capabilities() const { return {true, true, true, false}; }

  std::vector<Element> fiber(FinSet i) const {
    std::vector<Element> out;
    for (FinSet u : w_.sorts()) {
      if (i.size * u.size > w_.max_body) continue;
      for (FinSet x : w_.sorts()) {
        const std::size_t n = i.size * u.size * x.size;
        if (n > w_.max_body) continue;
        for (auto& e : p_.fiber(FinSet{n})) out.push_back(Element{i, u, x, std::move(e)});
      }
    }
    return out;
  }

  bool leq(FinSet, const Element& x, const Element& y) const { return witness(x, y).has_value(); }

  Element reindex(const FinMap& g, const Element& x) const {
    const FinMap m = cross(cross(g, FinMap::identity(x.witness)), FinMap::identity(x.counter));
    return {g.dom(), x.witness, x.counter, p_.reindex(m, x.body)};
  }

  /// Exists along I x A -> I: (I, A x U, X, alpha).
  Element exists_proj(FinSet i, FinSet a, const Element& x) const {
    return {i, FinSet{a.size * x.witness.size}, x.counter, x.body};
  }

  /// Forall along I x A -> I: (I, U^A, A x X, alpha(i, a, ev(w, a), x)). Throws CapExceeded
  /// when U^A is not in the base.
  Element forall_proj(FinSet i, FinSet a, const Element& x) const {
    const std::size_t U = x.witness.size, X = x.counter.size, A = a.size;
    const FinSet e = p_.base().exponential_object(a, x.witness);
    const std::size_t ax = A * X;
    const FinSet dom{i.size * e.size * ax};
    std::vector<Index> m(dom.size);
    for (Index ii = 0; ii < i.size; ++ii)
      for (Index w = 0; w < e.size; ++w)
        for (Index aa = 0; aa < A; ++aa)
          for (Index xx = 0; xx < X; ++xx)
            m[(ii * e.size + w) * ax + aa * X + xx] = ((ii * A + aa) * U + apply_code(w, aa, A, U)) * X + xx;
    return {i, e, FinSet{ax}, p_.reindex(FinMap(dom, FinSet{i.size * A * U * X}, std::move(m)), x.body)};
  }

  json describe(const Element& x) const {
    return {{"ctx", x.ctx.size}, {"U", x.witness.size}, {"X", x.counter.size}, {"body", p_.describe(x.body)}};
  }

  /// (I, 1, 1, alpha).
  Element embed(FinSet i, const BaseElement& alpha) const { return {i, FinSet{1}, FinSet{1}, alpha}; }

  /// The element's own shape: x is exists u. forall x. of its embedded body.
  std::tuple<FinSet, FinSet, Element> prenex_hint(FinSet, const Element& x) const {
    return {x.witness, x.counter, embed(FinSet{x.ctx.size * x.witness.size * x.counter.size}, x.body)};
  }

  /// Number of (f0, f1) pairs the exhaustive search visits at most.
  std::size_t search_space(const Element& x, const Element& y) const {
    const std::size_t iu = x.ctx.size * x.witness.size;
    const std::size_t budget = p_.base().budget();
    const std::size_t n0 = detail::search_space(y.witness.size, iu, budget);
    const std::size_t n1 = detail::search_space(x.counter.size, iu * y.counter.size, budget);
    if (n0 != 0 && n1 > budget / n0) throw BudgetExceeded(n0 * n1, budget);
    return n0 * n1;
  }

  /// Lexicographically least (f0, f1), ordered by f0 first.
  std::optional<DialArrowWitness> witness(const Element& x, const Element& y) const {
    if constexpr (is_pointwise_v<P>)
      if (mode_ == SearchMode::automatic) return pointwise_witness(x, y);
    return exhaustive_witness(x, y);
  }

  std::optional<DialArrowWitness> exhaustive_witness(const Element& x, const Element& y) const {
    const std::size_t U = x.witness.size, X = x.counter.size, V = y.witness.size, Y = y.counter.size;
    const FinSet iu{x.ctx.size * U};
    search_space(x, y);
    for (const FinMap& f0 : p_.base().enumerate_maps(iu, FinSet{V}))
      for (const FinMap& f1 : p_.base().enumerate_maps(FinSet{iu.size * Y}, FinSet{X})) {
        DialArrowWitness w{f0, f1};
        if (certify(x, y, w)) return w;
      }
    return std::nullopt;
  }

  bool certify(const Element& x, const Element& y, const DialArrowWitness& w) const {
    const std::size_t I = x.ctx.size, U = x.witness.size, X = x.counter.size, V = y.witness.size,
                      Y = y.counter.size;
    const FinSet iu{I * U}, iuy{I * U * Y};
    if (x.ctx != y.ctx || w.f0.dom() != iu || w.f0.cod() != y.witness || w.f1.dom() != iuy ||
        w.f1.cod() != x.counter)
      return false;
    std::vector<Index> m1(iuy.size), m2(iuy.size);
    for (Index k = 0; k < iu.size; ++k)
      for (Index yy = 0; yy < Y; ++yy) {
        const Index j = k * Y + yy;
        m1[j] = k * X + w.f1(j);
        m2[j] = ((k / U) * V + w.f0(k)) * Y + yy;
      }
    const auto lhs = p_.reindex(FinMap(iuy, FinSet{I * U * X}, std::move(m1)), x.body);
    const auto rhs = p_.reindex(FinMap(iuy, FinSet{I * V * Y}, std::move(m2)), y.body);
    return p_.leq(iuy, lhs, rhs);
  }

  DialArrowWitness identity_witness(const Element& x) const {
    const std::size_t U = x.witness.size, X = x.counter.size;
    const std::size_t iu = x.ctx.size * U;
    std::vector<Index> t0(iu), t1(iu * X);
    for (Index k = 0; k < iu; ++k) {
      t0[k] = k % U;
      for (Index xx = 0; xx < X; ++xx) t1[k * X + xx] = xx;
    }
    return {FinMap(FinSet{iu}, x.witness, std::move(t0)), FinMap(FinSet{iu * X}, x.counter, std::move(t1))};
  }

  /// h0(i,u) = g0(i, f0(i,u)); h1(i,u,z) = f1(i, u, g1(i, f0(i,u), z)).
  DialArrowWitness compose_witness(const Element& x, const Element& y, const Element& z, const DialArrowWitness& f,
                                   const DialArrowWitness& g) const {
    const std::size_t U = x.witness.size, V = y.witness.size, Y = y.counter.size, Z = z.counter.size;
    const std::size_t iu = x.ctx.size * U;
    std::vector<Index> h0(iu), h1(iu * Z);
    for (Index k = 0; k < iu; ++k) {
      const Index iv = (k / U) * V + f.f0(k);
      h0[k] = g.f0(iv);
      for (Index zz = 0; zz < Z; ++zz) h1[k * Z + zz] = f.f1(k * Y + g.f1(iv * Z + zz));
    }
    return {FinMap(FinSet{iu}, z.witness, std::move(h0)), FinMap(FinSet{iu * Z}, x.counter, std::move(h1))};
  }

 private:
  std::optional<DialArrowWitness> pointwise_witness(const Element& x, const Element& y) const {
    const std::size_t U = x.witness.size, X = x.counter.size, V = y.witness.size, Y = y.counter.size;
    const std::size_t iu = x.ctx.size * U;
    std::vector<Index> t0(iu, 0), t1(iu * Y, 0);
    // Least x answering counter y against the choice v, or X when there is none.
    auto answer = [&](Index k, Index v, Index yy) {
      const Index b = ((k / U) * V + v) * Y + yy;
      const bool concl = detail::holds<P>(y.body, b);
      for (Index xx = 0; xx < X; ++xx)
        if (concl || !detail::holds<P>(x.body, k * X + xx)) return xx;
      return X;
    };
    for (Index k = 0; k < iu; ++k) {
      Index v = 0;
      for (; v < V; ++v) {
        bool ok = true;
        for (Index yy = 0; yy < Y && ok; ++yy) ok = answer(k, v, yy) < X;
        if (ok) break;
      }
      if (v == V) return std::nullopt;
      t0[k] = v;
      for (Index yy = 0; yy < Y; ++yy) t1[k * Y + yy] = answer(k, v, yy);
    }
    return DialArrowWitness{FinMap(FinSet{iu}, y.witness, std::move(t0)),
                            FinMap(FinSet{iu * Y}, x.counter, std::move(t1))};
  }

  P p_;
  Window w_;
  SearchMode mode_;
};

/// P with every fiber order reversed; quantifiers swap roles.
template <Doctrine P>
class Opposite {
 public:
  using Element = typename P::Element;

  explicit Opposite(P p) : p_(std::move(p)) {}

  std::string name() const { return "op(" + p_.name() + ")"; }
  const BaseCat& base() const { return p_.base(); }
  Capabilities capabilities() const {
    Capabilities c = p_.capabilities();
    std::swap(c.exists, c.forall);
    return c;
  }
  std::vector<Element> fiber(FinSet a) const { return p_.fiber(a); }
  bool leq(FinSet a, const Element& x, const Element& y) const { return p_.leq(a, y, x); }
  Element reindex(const FinMap& f, const Element& x) const { return p_.reindex(f, x); }
  json describe(const Element& x) const { return p_.describe(x); }

 private:
  P p_;
};

/// Dial(P) against (P^A)^E over every context in the window: the map
/// (I,U,X,alpha) -> (I, U, (I x U, X, alpha)) must be a bijection of listings, preserve
/// and reflect the order, and commute with reindexing.
template <Doctrine P>
Report dial_iso_check(const P& p, const Window& w, const Only& only = {}) {
  using E = typename P::Element;
  DialCompletion<P> dial(p, w);
  UnCompletion<P> un(p, w);
  ExCompletion<UnCompletion<P>> exun(un, w);
  auto phi = [](const DialObj<E>& x) {
    return ExObj<UnObj<E>>{x.ctx, x.witness, UnObj<E>{FinSet{x.ctx.size * x.witness.size}, x.counter, x.body}};
  };
  Report root("dial-iso");
  root.detail["window"] = w.to_string();
  std::size_t pairs = 0, elements = 0;
  for (FinSet i : w.contexts()) {
    Report r("fiber/" + std::to_string(i.size));
    const auto xs = dial.fiber(i);
    const auto ys = exun.fiber(i);
    elements += xs.size();
    r.detail["elements"] = xs.size();
    if (xs.size() != ys.size()) {
      r.fail(r.name + "/listing", "fiber listings differ in size", {{"dial", xs.size()}, {"ex-un", ys.size()}});
      root.add(std::move(r));
      continue;
    }
    for (std::size_t k = 0; k < xs.size() && r.ok(); ++k)
      if (!(phi(xs[k]) == ys[k])) r.fail(r.name + "/listing/" + std::to_string(k), "map is not a bijection of listings");
    std::size_t n = 0;
    for (std::size_t a = 0; a < xs.size() && r.ok(); ++a)
      for (std::size_t b = 0; b < xs.size(); ++b) {
        auto id = [&] { return r.name + "/x=" + std::to_string(a) + "/y=" + std::to_string(b); };
        if (!only.selects(id)) continue;
        ++n;
        const bool lhs = dial.leq(i, xs[a], xs[b]);
        const bool rhs = exun.leq(i, ys[a], ys[b]);
        if (lhs != rhs) {
          r.fail(id(), lhs ? "order not preserved" : "order not reflected",
                 {{"x", dial.describe(xs[a])}, {"y", dial.describe(xs[b])}});
          break;
        }
      }
    pairs += n;
    r.detail["pairs"] = n;
    root.add(std::move(r));
  }
  Report nat("naturality");
  std::size_t checked = 0;
  for (FinSet j : w.contexts())
    for (FinSet i : w.contexts()) {
      if (!nat.ok()) break;
      const auto xs = dial.fiber(i);
      for (const FinMap& g : p.base().enumerate_maps(j, i)) {
        for (std::size_t k = 0; k < xs.size(); ++k) {
          auto id = [&] { return "naturality/g=" + map_id(g) + "/x=" + std::to_string(k); };
          if (!only.selects(id)) continue;
          ++checked;
          if (!(phi(dial.reindex(g, xs[k])) == exun.reindex(g, phi(xs[k])))) {
            nat.fail(id(), "map does not commute with reindexing", {{"x", dial.describe(xs[k])}});
            break;
          }
        }
        if (!nat.ok()) break;
      }
    }
  nat.detail["instances"] = checked;
  root.add(std::move(nat));
  root.detail["elements"] = elements;
  root.detail["pairs"] = pairs;
  return root;
}

/// The universal completion of P against the existential completion of P^op, with the
/// order reversed: x <= y in P^A iff y <= x in (P^op)^E.
template <Doctrine P>
Report duality_check(const P& p, const Window& w) {
  UnCompletion<P> un(p, w);
  ExCompletion<Opposite<P>> exop(Opposite<P>(p), w);
  Report r("un-ex-duality");
  r.detail["window"] = w.to_string();
  std::size_t n = 0;
  for (FinSet a : w.contexts()) {
    const auto xs = un.fiber(a);
    for (std::size_t i = 0; i < xs.size() && r.ok(); ++i)
      for (std::size_t j = 0; j < xs.size(); ++j) {
        ++n;
        const auto& x = xs[i];
        const auto& y = xs[j];
        const ExObj<typename P::Element> oy{y.ctx, y.aux, y.body}, ox{x.ctx, x.aux, x.body};
        if (un.leq(a, x, y) != exop.leq(a, oy, ox)) {
          r.fail("un-ex-duality/A=" + std::to_string(a.size) + "/x=" + std::to_string(i) + "/y=" + std::to_string(j),
                 "universal order differs from the reversed existential order of the opposite doctrine",
                 {{"x", un.describe(x)}, {"y", un.describe(y)}});
          break;
        }
      }
  }
  r.detail["instances"] = n;
  return r;
}

/// Reflexivity through identity witnesses and transitivity through composed witnesses,
/// each certified by the completion's own certify.
template <class C>
Report check_completion_preorder(const C& c, const Window& w) {
  Report r("preorder/" + c.name());
  std::size_t refl = 0, trans = 0;
  for (FinSet a : w.contexts()) {
    const auto xs = c.fiber(a);
    for (std::size_t i = 0; i < xs.size() && r.ok(); ++i) {
      ++refl;
      if (!c.certify(xs[i], xs[i], c.identity_witness(xs[i]))) {
        r.fail("preorder/reflexivity/A=" + std::to_string(a.size) + "/x=" + std::to_string(i),
               "identity witness does not certify x <= x", {{"x", c.describe(xs[i])}});
        break;
      }
    }
    const std::size_t n = xs.size();
    std::vector<decltype(c.witness(xs.front(), xs.front()))> ws(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) ws[i * n + j] = c.witness(xs[i], xs[j]);
    for (std::size_t i = 0; i < n && r.ok(); ++i)
      for (std::size_t j = 0; j < n && r.ok(); ++j) {
        if (!ws[i * n + j]) continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (!ws[j * n + k]) continue;
          ++trans;
          const auto h = c.compose_witness(xs[i], xs[j], xs[k], *ws[i * n + j], *ws[j * n + k]);
          if (!c.certify(xs[i], xs[k], h)) {
            r.fail("preorder/transitivity/A=" + std::to_string(a.size) + "/x=" + std::to_string(i) +
                       "/y=" + std::to_string(j) + "/z=" + std::to_string(k),
                   "composed witness does not certify x <= z",
                   {{"x", c.describe(xs[i])}, {"y", c.describe(xs[j])}, {"z", c.describe(xs[k])}});
            break;
          }
        }
      }
  }
  r.detail["reflexivity"] = refl;
  r.detail["transitivity"] = trans;
  return r;
}

}  // namespace godel

#endif  // GODEL_COMPLETION_HPP
