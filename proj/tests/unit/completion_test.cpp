#include <gtest/gtest.h>

#include "godel/basic_doctrines.hpp"
#include "godel/completion.hpp"

using namespace godel;

namespace {

Subset S(std::size_t n, std::vector<Index> m) { return Subset::of(n, m); }

const Window kW2 = Window::standard(2);

// Independent decision of Dial order over one context, on raw bit masks.
bool dial_leq_oracle(std::size_t I, std::size_t U, std::size_t X, std::uint64_t a, std::size_t V, std::size_t Y,
                     std::uint64_t b) {
  auto bit = [](std::uint64_t m, std::size_t k) { return (m >> k) & 1U; };
  // Each (i,u) independently needs a v such that every y has an x answering it.
  for (std::size_t i = 0; i < I; ++i)
    for (std::size_t u = 0; u < U; ++u) {
      bool some_v = false;
      for (std::size_t v = 0; v < V && !some_v; ++v) {
        bool all_y = true;
        for (std::size_t y = 0; y < Y && all_y; ++y) {
          bool some_x = false;
          for (std::size_t x = 0; x < X && !some_x; ++x)
            some_x = !bit(a, (i * U + u) * X + x) || bit(b, (i * V + v) * Y + y);
          all_y = some_x;
        }
        some_v = all_y;
      }
      if (!some_v) return false;
    }
  return true;
}

}  // namespace

TEST(ExCompletion, WitnessExamples) {
  ExCompletion<SubsetDoctrine> ex(SubsetDoctrine(), kW2);
  const FinSet one{1}, two{2};
  ExObj<Subset> x{one, two, S(2, {0})}, y{one, two, S(2, {1})};
  auto f = ex.witness(x, y);
  ASSERT_TRUE(f);
  EXPECT_EQ((*f)(0), 1u);
  // Brute force over the four maps 1 x 2 -> 2: the least certifying one.
  std::optional<FinMap> least;
  for (const FinMap& g : BaseCat().enumerate_maps(two, two))
    if (!least && ex.certify(x, y, g)) least = g;
  EXPECT_EQ(f, least);
  EXPECT_EQ(f->table(), (std::vector<Index>{1, 0}));

  ExObj<Subset> bot{one, two, S(2, {})};
  EXPECT_EQ(ex.witness(bot, y)->table(), (std::vector<Index>{0, 0}));
  EXPECT_FALSE(ex.witness(x, bot).has_value());
}

TEST(ExCompletion, TrivialAuxReducesToBaseOrder) {
  SubsetDoctrine p;
  ExCompletion<SubsetDoctrine> ex(p, kW2);
  UnCompletion<SubsetDoctrine> un(p, kW2);
  DialCompletion<SubsetDoctrine> dial(p, kW2);
  for (std::size_t a = 0; a <= 2; ++a)
    for (const Subset& s : p.fiber(FinSet{a}))
      for (const Subset& t : p.fiber(FinSet{a})) {
        const bool base = s.subset_of(t);
        EXPECT_EQ(ex.leq(FinSet{a}, ex.embed(FinSet{a}, s), ex.embed(FinSet{a}, t)), base);
        EXPECT_EQ(un.leq(FinSet{a}, un.embed(FinSet{a}, s), un.embed(FinSet{a}, t)), base);
        EXPECT_EQ(dial.leq(FinSet{a}, dial.embed(FinSet{a}, s), dial.embed(FinSet{a}, t)), base);
      }
}

TEST(ExCompletion, ReindexAlongIdentity) {
  ExCompletion<SubsetDoctrine> ex(SubsetDoctrine(), kW2);
  for (const auto& x : ex.fiber(FinSet{2})) EXPECT_EQ(ex.reindex(FinMap::identity(FinSet{2}), x), x);
}

TEST(Completions, PointwiseSearchMatchesExhaustiveSearch) {
  SubsetDoctrine p;
  ExCompletion<SubsetDoctrine> ex(p, kW2), exx(p, kW2, SearchMode::exhaustive);
  UnCompletion<SubsetDoctrine> un(p, kW2), unx(p, kW2, SearchMode::exhaustive);
  for (std::size_t a = 0; a <= 2; ++a) {
    const auto xs = ex.fiber(FinSet{a});
    for (const auto& x : xs)
      for (const auto& y : xs) EXPECT_EQ(ex.witness(x, y), exx.witness(x, y));
    const auto us = un.fiber(FinSet{a});
    for (const auto& x : us)
      for (const auto& y : us) EXPECT_EQ(un.witness(x, y), unx.witness(x, y));
  }
  DialCompletion<SubsetDoctrine> dial(p, kW2), dialx(p, kW2, SearchMode::exhaustive);
  for (std::size_t i = 0; i <= 2; ++i) {
    const auto ds = dial.fiber(FinSet{i});
    const std::size_t stride = i == 2 ? 37 : 1;
    for (std::size_t k = 0; k < ds.size() * ds.size(); k += stride) {
      const auto& x = ds[k / ds.size()];
      const auto& y = ds[k % ds.size()];
      EXPECT_EQ(dial.witness(x, y), dialx.witness(x, y));
    }
  }
}

TEST(DialCompletion, OrderMatchesRawOracle) {
  SubsetDoctrine p;
  Window w{2, true, 8};
  DialCompletion<SubsetDoctrine> dial(p, w);
  for (std::size_t i = 0; i <= 2; ++i) {
    const auto ds = dial.fiber(FinSet{i});
    for (const auto& x : ds)
      for (const auto& y : ds)
        ASSERT_EQ(dial.leq(FinSet{i}, x, y),
                  dial_leq_oracle(i, x.witness.size, x.counter.size, x.body.mask(), y.witness.size, y.counter.size,
                                  y.body.mask()));
  }
}

TEST(DialCompletion, WitnessExamples) {
  DialCompletion<SubsetDoctrine> dial(SubsetDoctrine(), kW2);
  const FinSet two{2};
  for (const auto& x : dial.fiber(FinSet{1})) {
    auto w = dial.witness(x, x);
    ASSERT_TRUE(w);
    EXPECT_TRUE(dial.certify(x, x, dial.identity_witness(x)));
    DialObj<Subset> top{x.ctx, two, two, Subset::full(4)};
    auto t = dial.witness(x, top);
    ASSERT_TRUE(t);
    EXPECT_EQ(t->f0, FinMap::constant(FinSet{x.witness.size}, two, 0));
    DialObj<Subset> bot{x.ctx, two, two, Subset(4)};
    EXPECT_TRUE(dial.leq(x.ctx, bot, x));
  }
}

TEST(DialCompletion, TerminalFiberMatchesDialecticaCategoryReflection) {
  // Over the terminal context the order is the poset reflection of the Dialectica category
  // on sets: a map (U,X,a) -> (V,Y,b) is f : U -> V with F : U x Y -> X and
  // a(u, F(u,y)) implies b(f(u), y). Decided here by enumerating such pairs directly.
  SubsetDoctrine p;
  DialCompletion<SubsetDoctrine> dial(p, kW2);
  const auto ds = dial.fiber(FinSet{1});
  BaseCat base;
  for (const auto& x : ds)
    for (const auto& y : ds) {
      const std::size_t U = x.witness.size, X = x.counter.size, V = y.witness.size, Y = y.counter.size;
      bool exists = false;
      for (const FinMap& f : base.enumerate_maps(FinSet{U}, FinSet{V})) {
        for (const FinMap& F : base.enumerate_maps(FinSet{U * Y}, FinSet{X})) {
          bool ok = true;
          for (Index u = 0; u < U && ok; ++u)
            for (Index yy = 0; yy < Y && ok; ++yy)
              ok = !x.body.contains(u * X + F(u * Y + yy)) || y.body.contains(f(u) * Y + yy);
          if (ok) exists = true;
        }
      }
      EXPECT_EQ(dial.leq(FinSet{1}, x, y), exists);
    }
}

TEST(Completions, PreorderWitnessesCompose) {
  SubsetDoctrine p;
  EXPECT_TRUE(check_completion_preorder(ExCompletion<SubsetDoctrine>(p, kW2), kW2).ok());
  EXPECT_TRUE(check_completion_preorder(UnCompletion<SubsetDoctrine>(p, kW2), kW2).ok());
  Window small{2, false, 4};
  Report r = check_completion_preorder(DialCompletion<SubsetDoctrine>(p, small), small);
  EXPECT_TRUE(r.ok()) << r.to_text();
  EXPECT_GT(r.detail["transitivity"].get<std::size_t>(), 1000u);
}

TEST(Completions, ReindexFunctorialAndMonotone) {
  SubsetDoctrine p;
  Window small{2, false, 4};
  DialCompletion<SubsetDoctrine> dial(p, small);
  BaseCat base;
  for (std::size_t a = 0; a <= 2; ++a)
    for (std::size_t b = 0; b <= 2; ++b)
      for (std::size_t c = 0; c <= 2; ++c)
        for (const FinMap& f : base.enumerate_maps(FinSet{a}, FinSet{b}))
          for (const FinMap& g : base.enumerate_maps(FinSet{b}, FinSet{c}))
            for (const auto& z : dial.fiber(FinSet{c}))
              ASSERT_EQ(dial.reindex(compose(g, f), z), dial.reindex(f, dial.reindex(g, z)));
  for (std::size_t a = 0; a <= 2; ++a)
    for (std::size_t b = 0; b <= 2; ++b) {
      const auto ys = dial.fiber(FinSet{b});
      for (const FinMap& f : base.enumerate_maps(FinSet{a}, FinSet{b}))
        for (const auto& x : ys)
          for (const auto& y : ys)
            if (dial.leq(FinSet{b}, x, y)) ASSERT_TRUE(dial.leq(FinSet{a}, dial.reindex(f, x), dial.reindex(f, y)));
    }
}

TEST(Completions, EmbeddingIsOrderFaithful) {
  SubsetDoctrine p;
  ExCompletion<SubsetDoctrine> ex(p, kW2);
  for (std::size_t a = 0; a <= 3; ++a)
    for (const Subset& s : p.fiber(FinSet{a}))
      for (const Subset& t : p.fiber(FinSet{a}))
        EXPECT_EQ(ex.leq(FinSet{a}, ex.embed(FinSet{a}, s), ex.embed(FinSet{a}, t)), s.subset_of(t));
}

TEST(UnCompletion, TopIsMaximal) {
  UnCompletion<SubsetDoctrine> un(SubsetDoctrine(), kW2);
  for (std::size_t a = 0; a <= 2; ++a)
    for (std::size_t b = 1; b <= 2; ++b) {
      UnObj<Subset> top{FinSet{a}, FinSet{b}, Subset::full(a * b)};
      for (const auto& x : un.fiber(FinSet{a})) EXPECT_TRUE(un.leq(FinSet{a}, x, top));
    }
}

TEST(UnCompletion, DualityWithOppositeExistentialCompletion) {
  Report r = duality_check(SubsetDoctrine(), kW2);
  EXPECT_TRUE(r.ok()) << r.to_text();
  EXPECT_GT(r.detail["instances"].get<std::size_t>(), 0u);
}

TEST(DialCompletion, IsoWithUniversalThenExistentialSmall) {
  Report r = dial_iso_check(SubsetDoctrine(), Window{1, true, 1});
  EXPECT_TRUE(r.ok()) << r.to_text();
  Report t = dial_iso_check(TrivialDoctrine(), kW2);
  EXPECT_TRUE(t.ok()) << t.to_text();
}

TEST(DialCompletion, QuantifiersAreAdjointInWindow) {
  SubsetDoctrine p;
  Window small{2, false, 4};
  DialCompletion<SubsetDoctrine> dial(p, small);
  Logic<DialCompletion<SubsetDoctrine>> L(dial);
  for (std::size_t i = 0; i <= 1; ++i)
    for (std::size_t a = 1; a <= 2; ++a) {
      const FinSet I{i}, A{a}, IA{i * a};
      const FinMap pi = projection(I, A);
      for (const auto& x : dial.fiber(IA))
        for (const auto& y : dial.fiber(I)) {
          EXPECT_EQ(L.leq(I, L.exists_proj(I, A, x), y), L.leq(IA, x, L.reindex(pi, y)));
          EXPECT_EQ(L.leq(I, y, L.forall_proj(I, A, x)), L.leq(IA, L.reindex(pi, y), x));
        }
    }
}

TEST(DialCompletion, ForallNeedsExponential) {
  DialCompletion<SubsetDoctrine> dial(SubsetDoctrine(BaseCat(4)), kW2);
  DialObj<Subset> x{FinSet{3}, FinSet{2}, FinSet{1}, Subset(6)};
  EXPECT_THROW(dial.forall_proj(FinSet{1}, FinSet{3}, x), CapExceeded);
}
