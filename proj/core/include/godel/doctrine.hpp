#ifndef GODEL_DOCTRINE_HPP
#define GODEL_DOCTRINE_HPP

#include <concepts>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "godel/errors.hpp"
#include "godel/finbase.hpp"
#include "godel/report.hpp"

namespace godel {

struct Capabilities {
  bool exists = false;
  bool forall = false;
  bool heyting = false;
  bool equality = false;

  json to_json() const {
    return {{"exists", exists}, {"forall", forall}, {"heyting", heyting}, {"equality", equality}};
  }
};

/// An indexed finite preorder over skeletal finite sets. fiber(A) lists the elements of
/// P(A) in the doctrine's window in a fixed order; leq is the fiber preorder.
template <class D>
concept Doctrine = requires(const D& d, FinSet a, const FinMap& f, const typename D::Element& e) {
  typename D::Element;
  { d.name() } -> std::convertible_to<std::string>;
  { d.base() } -> std::convertible_to<const BaseCat&>;
  { d.capabilities() } -> std::same_as<Capabilities>;
  { d.fiber(a) } -> std::same_as<std::vector<typename D::Element>>;
  { d.leq(a, e, e) } -> std::same_as<bool>;
  { d.reindex(f, e) } -> std::same_as<typename D::Element>;
  { d.describe(e) } -> std::same_as<json>;
};

// Optional fast paths a doctrine may supply.
template <class D>
concept HasExistsProj = requires(const D& d, FinSet a, const typename D::Element& e) {
  { d.exists_proj(a, a, e) } -> std::same_as<typename D::Element>;
};
template <class D>
concept HasForallProj = requires(const D& d, FinSet a, const typename D::Element& e) {
  { d.forall_proj(a, a, e) } -> std::same_as<typename D::Element>;
};
template <class D>
concept HasExistsAlong = requires(const D& d, const FinMap& f, const typename D::Element& e) {
  { d.exists_along(f, e) } -> std::same_as<typename D::Element>;
};
template <class D>
concept HasForallAlong = requires(const D& d, const FinMap& f, const typename D::Element& e) {
  { d.forall_along(f, e) } -> std::same_as<typename D::Element>;
};
template <class D>
concept HasHeyting = requires(const D& d, FinSet a, const typename D::Element& e) {
  { d.top(a) } -> std::same_as<typename D::Element>;
  { d.bottom(a) } -> std::same_as<typename D::Element>;
  { d.meet(a, e, e) } -> std::same_as<typename D::Element>;
  { d.join(a, e, e) } -> std::same_as<typename D::Element>;
  { d.impl(a, e, e) } -> std::same_as<typename D::Element>;
};
/// Doctrines given by finite tables only know the objects up to some size.
template <class D>
concept HasMaxObject = requires(const D& d) {
  { d.max_object() } -> std::convertible_to<std::size_t>;
};
template <class D>
concept HasEquality = requires(const D& d, FinSet a) {
  { d.equality(a) } -> std::same_as<typename D::Element>;
};

enum class HeytingOp { meet, join, impl, top, bot };
enum class Quantifier { exists, forall };

/// The window of one fiber with its equivalence classes. Representatives are the
/// lowest-id members; lattice bounds are searched among classes and memoised.
template <Doctrine D>
class FiberTable {
 public:
  using E = typename D::Element;

  FiberTable(const D& d, FinSet ctx) : d_(&d), ctx_(ctx), elements_(d.fiber(ctx)) { build(); }

  FinSet context() const { return ctx_; }
  const std::vector<E>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t class_count() const { return reps_.size(); }
  std::size_t class_of(std::size_t id) const { return class_of_[id]; }
  std::size_t rep_id(std::size_t c) const { return reps_[c]; }
  const E& rep(std::size_t c) const { return elements_[reps_[c]]; }
  bool class_leq(std::size_t c1, std::size_t c2) const { return order_[c1 * reps_.size() + c2]; }

  /// Class of an arbitrary element of P(ctx), or nullopt when it matches no class.
  std::optional<std::size_t> classify(const E& e) const {
    if (auto it = index_.find(e); it != index_.end()) return class_of_[it->second];
    for (std::size_t c = 0; c < reps_.size(); ++c)
      if (d_->leq(ctx_, e, rep(c)) && d_->leq(ctx_, rep(c), e)) return c;
    return std::nullopt;
  }
  std::optional<std::size_t> id_of(const E& e) const {
    if (auto it = index_.find(e); it != index_.end()) return it->second;
    return std::nullopt;
  }

  std::optional<std::size_t> top() const { return greatest(all_classes()); }
  std::optional<std::size_t> bottom() const { return least(all_classes()); }

  std::optional<std::size_t> meet(std::size_t c1, std::size_t c2) const {
    return memo(meet_memo_, c1, c2, [&] {
      std::vector<std::size_t> lower;
      for (std::size_t c = 0; c < reps_.size(); ++c)
        if (class_leq(c, c1) && class_leq(c, c2)) lower.push_back(c);
      return greatest(lower);
    });
  }
  std::optional<std::size_t> join(std::size_t c1, std::size_t c2) const {
    return memo(join_memo_, c1, c2, [&] {
      std::vector<std::size_t> upper;
      for (std::size_t c = 0; c < reps_.size(); ++c)
        if (class_leq(c1, c) && class_leq(c2, c)) upper.push_back(c);
      return least(upper);
    });
  }
  std::optional<std::size_t> impl(std::size_t c1, std::size_t c2) const {
    return memo(impl_memo_, c1, c2, [&]() -> std::optional<std::size_t> {
      std::vector<std::size_t> ok;
      for (std::size_t c = 0; c < reps_.size(); ++c) {
        auto m = meet(c, c1);
        if (!m) return std::nullopt;
        if (class_leq(*m, c2)) ok.push_back(c);
      }
      return greatest(ok);
    });
  }

  std::optional<std::size_t> greatest(const std::vector<std::size_t>& cs) const {
    for (std::size_t g : cs) {
      bool all = true;
      for (std::size_t c : cs)
        if (!class_leq(c, g)) {
          all = false;
          break;
        }
      if (all) return g;
    }
    return std::nullopt;
  }
  std::optional<std::size_t> least(const std::vector<std::size_t>& cs) const {
    for (std::size_t l : cs) {
      bool all = true;
      for (std::size_t c : cs)
        if (!class_leq(l, c)) {
          all = false;
          break;
        }
      if (all) return l;
    }
    return std::nullopt;
  }

 private:
  using Memo = std::map<std::pair<std::size_t, std::size_t>, std::optional<std::size_t>>;

  template <class F>
  std::optional<std::size_t> memo(Memo& m, std::size_t a, std::size_t b, F compute) const {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      if (auto it = m.find({a, b}); it != m.end()) return it->second;
    }
    auto r = compute();
    std::lock_guard<std::mutex> lock(mutex_);
    m.emplace(std::make_pair(a, b), r);
    return r;
  }

  std::vector<std::size_t> all_classes() const {
    std::vector<std::size_t> cs(reps_.size());
    for (std::size_t c = 0; c < cs.size(); ++c) cs[c] = c;
    return cs;
  }

  void build() {
    class_of_.resize(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      index_.emplace(elements_[i], i);
      std::size_t found = reps_.size();
      for (std::size_t c = 0; c < reps_.size(); ++c) {
        const E& r = elements_[reps_[c]];
        if (d_->leq(ctx_, elements_[i], r) && d_->leq(ctx_, r, elements_[i])) {
          found = c;
          break;
        }
      }
      if (found == reps_.size()) reps_.push_back(i);
      class_of_[i] = found;
    }
    const std::size_t n = reps_.size();
    order_.assign(n * n, false);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) order_[a * n + b] = a == b || d_->leq(ctx_, rep(a), rep(b));
  }

  const D* d_;
  FinSet ctx_;
  std::vector<E> elements_;
  std::map<E, std::size_t> index_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> reps_;
  std::vector<bool> order_;
  mutable std::mutex mutex_;
  mutable Memo meet_memo_, join_memo_, impl_memo_;
};

/// A doctrine together with lazily built fiber tables. Quantifiers and Heyting operations
/// use the doctrine's own formulas when it supplies them and fiber scans otherwise.
template <Doctrine D>
class Logic {
 public:
  using E = typename D::Element;

  explicit Logic(const D& d) : d_(&d) {}
  Logic(const Logic&) = delete;
  Logic& operator=(const Logic&) = delete;

  const D& doctrine() const { return *d_; }
  Capabilities capabilities() const { return d_->capabilities(); }

  const FiberTable<D>& fiber(FinSet a) const {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    auto& slot = tables_[a.size];
    if (!slot) slot = std::make_unique<FiberTable<D>>(*d_, a);
    return *slot;
  }

  bool leq(FinSet a, const E& x, const E& y) const { return d_->leq(a, x, y); }
  bool equiv(FinSet a, const E& x, const E& y) const { return leq(a, x, y) && leq(a, y, x); }
  E reindex(const FinMap& f, const E& e) const { return d_->reindex(f, e); }

  /// Exists along the first projection a x b -> a.
  E exists_proj(FinSet a, FinSet b, const E& e) const {
    require(capabilities().exists, "existential quantifier");
    if constexpr (HasExistsProj<D>)
      return d_->exists_proj(a, b, e);
    else
      return exists_along(projection(a, b), e);
  }
  E forall_proj(FinSet a, FinSet b, const E& e) const {
    require(capabilities().forall, "universal quantifier");
    if constexpr (HasForallProj<D>)
      return d_->forall_proj(a, b, e);
    else
      return forall_along(projection(a, b), e);
  }

  E exists_along(const FinMap& f, const E& e) const {
    require(capabilities().exists, "existential quantifier");
    if constexpr (HasExistsAlong<D>) {
      return d_->exists_along(f, e);
    } else {
      if constexpr (HasExistsProj<D>)
        if (auto b = as_first_projection(f)) return d_->exists_proj(f.cod(), *b, e);
      return scan_exists(f, e);
    }
  }
  E forall_along(const FinMap& f, const E& e) const {
    require(capabilities().forall, "universal quantifier");
    if constexpr (HasForallAlong<D>) {
      return d_->forall_along(f, e);
    } else {
      if constexpr (HasForallProj<D>)
        if (auto b = as_first_projection(f)) return d_->forall_proj(f.cod(), *b, e);
      return scan_forall(f, e);
    }
  }

  /// Least element of the codomain window above e along f.
  E scan_exists(const FinMap& f, const E& e) const {
    const FiberTable<D>& t = fiber(f.cod());
    std::vector<std::size_t> cands;
    for (std::size_t c = 0; c < t.class_count(); ++c)
      if (leq(f.dom(), e, reindex(f, t.rep(c)))) cands.push_back(c);
    auto l = t.least(cands);
    if (!l) throw NoAdjoint("no least element for exists along " + f.to_string());
    return t.rep(*l);
  }
  E scan_forall(const FinMap& f, const E& e) const {
    const FiberTable<D>& t = fiber(f.cod());
    std::vector<std::size_t> cands;
    for (std::size_t c = 0; c < t.class_count(); ++c)
      if (leq(f.dom(), reindex(f, t.rep(c)), e)) cands.push_back(c);
    auto g = t.greatest(cands);
    if (!g) throw NoAdjoint("no greatest element for forall along " + f.to_string());
    return t.rep(*g);
  }

  E top(FinSet a) const {
    if constexpr (HasHeyting<D>) return d_->top(a);
    else return class_rep(a, fiber(a).top(), "top");
  }
  E bottom(FinSet a) const {
    if constexpr (HasHeyting<D>) return d_->bottom(a);
    else return class_rep(a, fiber(a).bottom(), "bottom");
  }
  E meet(FinSet a, const E& x, const E& y) const {
    if constexpr (HasHeyting<D>) {
      return d_->meet(a, x, y);
    } else {
      const auto& t = fiber(a);
      return class_rep(a, t.meet(classify(a, x), classify(a, y)), "meet");
    }
  }
  E join(FinSet a, const E& x, const E& y) const {
    if constexpr (HasHeyting<D>) {
      return d_->join(a, x, y);
    } else {
      const auto& t = fiber(a);
      return class_rep(a, t.join(classify(a, x), classify(a, y)), "join");
    }
  }
  E impl(FinSet a, const E& x, const E& y) const {
    if constexpr (HasHeyting<D>) {
      return d_->impl(a, x, y);
    } else {
      const auto& t = fiber(a);
      return class_rep(a, t.impl(classify(a, x), classify(a, y)), "implication");
    }
  }
  /// x -> bottom.
  E neg(FinSet a, const E& x) const { return impl(a, x, bottom(a)); }

  E heyting(FinSet a, HeytingOp op, const std::vector<E>& args) const {
    auto arg = [&](std::size_t i) -> const E& {
      if (args.size() <= i) throw std::invalid_argument("heyting: missing argument");
      return args[i];
    };
    switch (op) {
      case HeytingOp::meet:
        return meet(a, arg(0), arg(1));
      case HeytingOp::join:
        return join(a, arg(0), arg(1));
      case HeytingOp::impl:
        return impl(a, arg(0), arg(1));
      case HeytingOp::top:
        return top(a);
      case HeytingOp::bot:
        return bottom(a);
    }
    throw std::invalid_argument("heyting: unknown op");
  }

  /// delta_A, the doctrine's own if supplied and otherwise exists along the diagonal of top.
  E equality(FinSet a) const {
    if constexpr (HasEquality<D>) return d_->equality(a);
    else return exists_along(diagonal(a), top(a));
  }

  /// Window class of x; throws NoSuchElement when x is equivalent to no window element.
  std::size_t classify(FinSet a, const E& x) const {
    auto c = fiber(a).classify(x);
    if (!c) throw NoSuchElement("element " + d_->describe(x).dump() + " lies outside the window of fiber " +
                                std::to_string(a.size));
    return *c;
  }

 private:
  static void require(bool flag, const char* what) {
    if (!flag) throw NoAdjoint(std::string("doctrine has no ") + what);
  }
  E class_rep(FinSet a, std::optional<std::size_t> c, const char* what) const {
    if (!c) throw NoSuchElement(std::string("fiber ") + std::to_string(a.size) + " has no " + what);
    return fiber(a).rep(*c);
  }

  const D* d_;
  mutable std::recursive_mutex mutex_;
  mutable std::map<std::size_t, std::unique_ptr<FiberTable<D>>> tables_;
};

/// Replay filter: when set, only the instance with this id runs.
struct Only {
  std::optional<std::string> id;
  template <class F>
  bool selects(F&& make_id) const {
    return !id || *id == make_id();
  }
};

/// A commuting square  h: D -> A, k: D -> C, f: A -> B, g: C -> B.
struct Square {
  FinMap f, g, h, k;
};

/// Whether the square commutes and D is the pullback of f and g.
bool is_pullback(const Square& s);

std::string map_id(const FinMap& f);

/// BC for one square over every window element alpha of P(A): exists_k P_h = P_g exists_f
/// (dually forall). The one-sided inequality is reported separately.
template <Doctrine D>
Report beck_chevalley_check(const Logic<D>& L, const Square& s, Quantifier q, const Only& only = {}) {
  if (!is_pullback(s)) throw NotAPullback("square is not a pullback");
  const bool ex = q == Quantifier::exists;
  Report r(ex ? "beck-chevalley/exists" : "beck-chevalley/forall");
  const auto& alphas = L.fiber(s.f.dom()).elements();
  std::size_t n = 0;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    auto id = [&] {
      return r.name + "/f=" + map_id(s.f) + "/g=" + map_id(s.g) + "/alpha=" + std::to_string(i);
    };
    if (!only.selects(id)) continue;
    ++n;
    const auto& a = alphas[i];
    const FinSet cset = s.k.cod();
    // Both sides are only meaningful when the supplied quantifier is the adjoint.
    bool adjoint = true;
    try {
      const auto qf = ex ? L.exists_along(s.f, a) : L.forall_along(s.f, a);
      adjoint = L.equiv(s.f.cod(), qf, ex ? L.scan_exists(s.f, a) : L.scan_forall(s.f, a));
    } catch (const NoAdjoint&) {
      adjoint = false;
    }
    if (!adjoint) {
      r.fail(id(), "quantifier along f is not adjoint to reindexing", {{"alpha", L.doctrine().describe(a)}});
      r.detail["inequality_holds"] = false;
      break;
    }
    auto lhs = ex ? L.exists_along(s.k, L.reindex(s.h, a)) : L.forall_along(s.k, L.reindex(s.h, a));
    auto rhs = L.reindex(s.g, ex ? L.exists_along(s.f, a) : L.forall_along(s.f, a));
    const bool one_sided = ex ? L.leq(cset, lhs, rhs) : L.leq(cset, rhs, lhs);
    const bool other = ex ? L.leq(cset, rhs, lhs) : L.leq(cset, lhs, rhs);
    if (!one_sided || !other) {
      json data = {{"alpha", L.doctrine().describe(a)},
                   {"lhs", L.doctrine().describe(lhs)},
                   {"rhs", L.doctrine().describe(rhs)}};
      r.fail(id(), one_sided ? "Beck-Chevalley equality fails" : "the always-true BC inequality fails",
             std::move(data));
      r.detail["inequality_holds"] = one_sided;
      break;
    }
  }
  r.detail["instances"] = n;
  return r;
}

/// Bounded-exhaustive first-order hyperdoctrine laws over objects of size <= bound.
template <Doctrine D>
Report check_hyperdoctrine(const Logic<D>& L, std::size_t bound, const Only& only = {}) {
  const D& d = L.doctrine();
  const BaseCat& base = d.base();
  Report root("hyperdoctrine");
  root.detail["window"] = "objects of size <= " + std::to_string(bound);
  root.detail["doctrine"] = d.name();
  std::vector<FinSet> objs;
  for (std::size_t n = 0; n <= bound; ++n) objs.push_back(FinSet{n});
  auto elems = [&](FinSet a) -> const std::vector<typename D::Element>& { return L.fiber(a).elements(); };
  auto desc = [&](const typename D::Element& e) { return d.describe(e); };
  auto eid = [](std::size_t i) { return std::to_string(i); };

  // Functoriality.
  {
    Report r("functoriality");
    std::size_t n = 0;
    for (FinSet a : objs) {
      const auto& xs = elems(a);
      for (std::size_t i = 0; i < xs.size() && r.ok(); ++i) {
        auto id = [&] { return "functoriality/identity/A=" + std::to_string(a.size) + "/x=" + eid(i); };
        if (!only.selects(id)) continue;
        ++n;
        if (!L.equiv(a, L.reindex(FinMap::identity(a), xs[i]), xs[i]))
          r.fail(id(), "reindexing along the identity is not the identity", {{"x", desc(xs[i])}});
      }
    }
    for (FinSet a : objs)
      for (FinSet b : objs)
        for (FinSet c : objs) {
          if (!r.ok()) break;
          for (const FinMap& f : base.enumerate_maps(a, b))
            for (const FinMap& g : base.enumerate_maps(b, c)) {
              if (!r.ok()) break;
              const FinMap gf = compose(g, f);
              const auto& zs = elems(c);
              for (std::size_t i = 0; i < zs.size(); ++i) {
                auto id = [&] {
                  return "functoriality/composition/f=" + map_id(f) + "/g=" + map_id(g) + "/z=" + eid(i);
                };
                if (!only.selects(id)) continue;
                ++n;
                if (!L.equiv(a, L.reindex(gf, zs[i]), L.reindex(f, L.reindex(g, zs[i])))) {
                  r.fail(id(), "reindex(g.f) differs from reindex(f).reindex(g)", {{"z", desc(zs[i])}});
                  break;
                }
              }
            }
        }
    r.detail["instances"] = n;
    root.add(std::move(r));
  }

  // Monotonicity.
  {
    Report r("monotonicity");
    std::size_t n = 0;
    for (FinSet a : objs)
      for (FinSet b : objs) {
        if (!r.ok()) break;
        const auto& ys = elems(b);
        for (const FinMap& f : base.enumerate_maps(a, b)) {
          if (!r.ok()) break;
          for (std::size_t i = 0; i < ys.size() && r.ok(); ++i)
            for (std::size_t j = 0; j < ys.size(); ++j) {
              if (!L.leq(b, ys[i], ys[j])) continue;
              auto id = [&] { return "monotonicity/f=" + map_id(f) + "/x=" + eid(i) + "/y=" + eid(j); };
              if (!only.selects(id)) continue;
              ++n;
              if (!L.leq(a, L.reindex(f, ys[i]), L.reindex(f, ys[j]))) {
                r.fail(id(), "reindexing is not monotone", {{"x", desc(ys[i])}, {"y", desc(ys[j])}});
                break;
              }
            }
        }
      }
    r.detail["instances"] = n;
    root.add(std::move(r));
  }

  // Adjunctions along every map.
  for (Quantifier q : {Quantifier::exists, Quantifier::forall}) {
    const bool ex = q == Quantifier::exists;
    Report r(ex ? "adjunction/exists" : "adjunction/forall");
    if (!(ex ? L.capabilities().exists : L.capabilities().forall)) {
      r.status = Status::skipped;
      r.detail["summary"] = "capability absent";
      root.add(std::move(r));
      continue;
    }
    std::size_t n = 0;
    try {
      for (FinSet a : objs)
        for (FinSet b : objs) {
          if (!r.ok()) break;
          const auto& xs = elems(a);
          const auto& ys = elems(b);
          for (const FinMap& f : base.enumerate_maps(a, b)) {
            if (!r.ok()) break;
            for (std::size_t i = 0; i < xs.size() && r.ok(); ++i) {
              const auto qx = ex ? L.exists_along(f, xs[i]) : L.forall_along(f, xs[i]);
              for (std::size_t j = 0; j < ys.size(); ++j) {
                auto id = [&] { return r.name + "/f=" + map_id(f) + "/x=" + eid(i) + "/y=" + eid(j); };
                if (!only.selects(id)) continue;
                ++n;
                const auto py = L.reindex(f, ys[j]);
                const bool lhs = ex ? L.leq(b, qx, ys[j]) : L.leq(b, ys[j], qx);
                const bool rhs = ex ? L.leq(a, xs[i], py) : L.leq(a, py, xs[i]);
                const bool unit = ex ? L.leq(a, xs[i], L.reindex(f, qx)) : L.leq(a, L.reindex(f, qx), xs[i]);
                const auto qpy = ex ? L.exists_along(f, py) : L.forall_along(f, py);
                const bool counit = ex ? L.leq(b, qpy, ys[j]) : L.leq(b, ys[j], qpy);
                if (lhs != rhs || !unit || !counit) {
                  r.fail(id(), lhs != rhs ? "adjunction correspondence fails" : "unit or counit law fails",
                         {{"x", desc(xs[i])}, {"y", desc(ys[j])}});
                  break;
                }
              }
            }
          }
        }
    } catch (const Error& e) {
      r.fail(r.name, e.what());
    }
    r.detail["instances"] = n;
    root.add(std::move(r));
  }

  // Heyting laws per fiber and their stability under reindexing.
  {
    Report r("heyting");
    std::size_t n = 0;
    if (!L.capabilities().heyting) {
      r.status = Status::skipped;
      r.detail["summary"] = "capability absent";
    } else {
      try {
        for (FinSet a : objs) {
          const auto& xs = elems(a);
          const auto top = L.top(a);
          const auto bot = L.bottom(a);
          for (std::size_t i = 0; i < xs.size() && r.ok(); ++i) {
            if (!L.leq(a, xs[i], top) || !L.leq(a, bot, xs[i])) {
              r.fail("heyting/bounds/A=" + std::to_string(a.size) + "/x=" + eid(i), "top or bottom is not a bound",
                     {{"x", desc(xs[i])}});
              break;
            }
            for (std::size_t j = 0; j < xs.size() && r.ok(); ++j) {
              const auto m = L.meet(a, xs[i], xs[j]);
              const auto jn = L.join(a, xs[i], xs[j]);
              const auto im = L.impl(a, xs[i], xs[j]);
              for (std::size_t k = 0; k < xs.size(); ++k) {
                auto id = [&] {
                  return "heyting/A=" + std::to_string(a.size) + "/x=" + eid(i) + "/y=" + eid(j) + "/z=" + eid(k);
                };
                if (!only.selects(id)) continue;
                ++n;
                const auto& z = xs[k];
                const bool glb = L.leq(a, m, xs[i]) && L.leq(a, m, xs[j]) &&
                                 ((L.leq(a, z, xs[i]) && L.leq(a, z, xs[j])) == L.leq(a, z, m));
                const bool lub = L.leq(a, xs[i], jn) && L.leq(a, xs[j], jn) &&
                                 ((L.leq(a, xs[i], z) && L.leq(a, xs[j], z)) == L.leq(a, jn, z));
                const bool imp = L.leq(a, z, im) == L.leq(a, L.meet(a, z, xs[i]), xs[j]);
                if (!glb || !lub || !imp) {
                  r.fail(id(), !glb ? "meet is not a greatest lower bound"
                                    : !lub ? "join is not a least upper bound" : "implication is not relative pseudo-complement",
                         {{"x", desc(xs[i])}, {"y", desc(xs[j])}, {"z", desc(z)}});
                  break;
                }
              }
            }
          }
        }
        for (FinSet a : objs)
          for (FinSet b : objs) {
            if (!r.ok()) break;
            const auto& ys = elems(b);
            for (const FinMap& f : base.enumerate_maps(a, b)) {
              if (!r.ok()) break;
              if (!L.equiv(a, L.reindex(f, L.top(b)), L.top(a)) || !L.equiv(a, L.reindex(f, L.bottom(b)), L.bottom(a))) {
                r.fail("heyting/stability/f=" + map_id(f), "reindexing does not preserve top or bottom");
                break;
              }
              for (std::size_t i = 0; i < ys.size() && r.ok(); ++i)
                for (std::size_t j = 0; j < ys.size(); ++j) {
                  auto id = [&] { return "heyting/stability/f=" + map_id(f) + "/x=" + eid(i) + "/y=" + eid(j); };
                  if (!only.selects(id)) continue;
                  ++n;
                  const auto fx = L.reindex(f, ys[i]);
                  const auto fy = L.reindex(f, ys[j]);
                  const bool ok = L.equiv(a, L.reindex(f, L.meet(b, ys[i], ys[j])), L.meet(a, fx, fy)) &&
                                  L.equiv(a, L.reindex(f, L.join(b, ys[i], ys[j])), L.join(a, fx, fy)) &&
                                  L.equiv(a, L.reindex(f, L.impl(b, ys[i], ys[j])), L.impl(a, fx, fy));
                  if (!ok) {
                    r.fail(id(), "reindexing does not preserve the Heyting operations",
                           {{"x", desc(ys[i])}, {"y", desc(ys[j])}});
                    break;
                  }
                }
            }
          }
      } catch (const NoSuchElement& e) {
        r.fail("heyting", e.what());
      }
    }
    r.detail["instances"] = n;
    root.add(std::move(r));
  }

  // Beck-Chevalley over every pullback square of maps among window objects.
  for (Quantifier q : {Quantifier::exists, Quantifier::forall}) {
    const bool ex = q == Quantifier::exists;
    Report r(ex ? "beck-chevalley/exists" : "beck-chevalley/forall");
    if (!(ex ? L.capabilities().exists : L.capabilities().forall)) {
      r.status = Status::skipped;
      r.detail["summary"] = "capability absent";
      root.add(std::move(r));
      continue;
    }
    std::size_t n = 0, squares = 0, outside = 0;
    try {
      for (FinSet a : objs)
        for (FinSet b : objs)
          for (FinSet c : objs) {
            if (!r.ok()) break;
            for (const FinMap& f : base.enumerate_maps(a, b)) {
              if (!r.ok()) break;
              for (const FinMap& g : base.enumerate_maps(c, b)) {
                Pullback pb = pullback(f, g);
                if constexpr (HasMaxObject<D>)
                  if (pb.object.size > d.max_object()) {
                    ++outside;
                    continue;
                  }
                Report sq = beck_chevalley_check(L, Square{f, g, pb.left, pb.right}, q, only);
                ++squares;
                n += sq.detail["instances"].template get<std::size_t>();
                if (!sq.ok()) {
                  r.fail(sq.detail["instance"], sq.detail["message"], sq.detail.value("counterexample", json::object()));
                  break;
                }
              }
            }
          }
    } catch (const Error& e) {
      r.fail(r.name, e.what());
    }
    r.detail["instances"] = n;
    r.detail["squares"] = squares;
    if (outside) r.detail["squares_outside_tables"] = outside;
    root.add(std::move(r));
  }
  return root;
}

}  // namespace godel

#endif  // GODEL_DOCTRINE_HPP
