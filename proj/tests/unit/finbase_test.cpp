#include <gtest/gtest.h>

#include <set>

#include "godel/errors.hpp"
#include "godel/finbase.hpp"

using namespace godel;

namespace {

std::vector<FinMap> all_maps(std::size_t a, std::size_t b) {
  return BaseCat(8).enumerate_maps(FinSet{a}, FinSet{b}).to_vector();
}

}  // namespace

TEST(Finbase, ProductIndexConvention) {
  Product p = product(FinSet{2}, FinSet{3});
  EXPECT_EQ(p.object, FinSet{6});
  EXPECT_EQ(p.first.table(), (std::vector<Index>{0, 0, 0, 1, 1, 1}));
  EXPECT_EQ(p.second.table(), (std::vector<Index>{0, 1, 2, 0, 1, 2}));
}

TEST(Finbase, ProductWithTerminalAndEmpty) {
  Product p = product(FinSet{1}, FinSet{4});
  EXPECT_EQ(p.object, FinSet{4});
  EXPECT_EQ(p.first, FinMap::constant(FinSet{4}, FinSet{1}, 0));
  EXPECT_EQ(p.second, FinMap::identity(FinSet{4}));
  Product e = product(FinSet{0}, FinSet{5});
  EXPECT_EQ(e.object, FinSet{0});
  EXPECT_TRUE(e.first.table().empty());
  EXPECT_TRUE(e.second.table().empty());
}

TEST(Finbase, ExponentialEvaluatesDigits) {
  BaseCat base(4);
  Exponential e = base.exponential(FinSet{2}, FinSet{2});
  EXPECT_EQ(e.object, FinSet{4});
  for (Index f = 0; f < 4; ++f) {
    const std::vector<Index> table = {f / 2, f % 2};
    for (Index b = 0; b < 2; ++b) EXPECT_EQ(e.eval(f * 2 + b), table[b]);
  }
  Exponential one = base.exponential(FinSet{1}, FinSet{3});
  EXPECT_EQ(one.object, FinSet{3});
  for (Index f = 0; f < 3; ++f) EXPECT_EQ(one.eval(f), f);
  EXPECT_THROW(base.exponential(FinSet{3}, FinSet{2}), CapExceeded);
}

TEST(Finbase, CurryIsABijection) {
  BaseCat base(9);
  for (std::size_t a = 0; a <= 2; ++a)
    for (std::size_t b = 0; b <= 2; ++b)
      for (std::size_t c = 0; c <= 2; ++c) {
        if (!base.has_exponential(FinSet{b}, FinSet{c})) continue;
        std::set<FinMap> images;
        for (const FinMap& f : all_maps(a * b, c)) {
          FinMap g = base.curry(f, FinSet{a}, FinSet{b});
          EXPECT_EQ(base.uncurry(g, FinSet{b}, FinSet{c}), f);
          images.insert(g);
        }
        EXPECT_EQ(images.size(), all_maps(a, base.exponential_object(FinSet{b}, FinSet{c}).size).size());
      }
}

TEST(Finbase, PullbackExamples) {
  const FinSet two{2};
  EXPECT_EQ(pullback(FinMap::identity(two), FinMap::identity(two)).object, two);
  const FinMap c0 = FinMap::constant(two, FinSet{1}, 0);
  EXPECT_EQ(pullback(c0, c0).object, FinSet{4});
  // Oracle: count pairs with f(a) = g(c) directly, for g the point 0 of {2}.
  const FinMap g = FinMap::constant(FinSet{1}, two, 0);
  std::size_t count = 0;
  for (Index a = 0; a < 2; ++a) count += a == g(0) ? 1 : 0;
  Pullback pb = pullback(FinMap::identity(two), g);
  EXPECT_EQ(pb.object.size, count);
  EXPECT_EQ(pb.object, FinSet{1});
  EXPECT_EQ(pb.left.table(), (std::vector<Index>{0}));
}

TEST(Finbase, EnumerateMapsOrderAndEdges) {
  auto maps = all_maps(2, 2);
  ASSERT_EQ(maps.size(), 4u);
  EXPECT_EQ(maps[0].table(), (std::vector<Index>{0, 0}));
  EXPECT_EQ(maps[1].table(), (std::vector<Index>{0, 1}));
  EXPECT_EQ(maps[2].table(), (std::vector<Index>{1, 0}));
  EXPECT_EQ(maps[3].table(), (std::vector<Index>{1, 1}));
  EXPECT_EQ(all_maps(0, 3).size(), 1u);
  EXPECT_TRUE(all_maps(3, 0).empty());
  EXPECT_EQ(all_maps(0, 0).size(), 1u);
  BaseCat tight(4, 10);
  try {
    tight.enumerate_maps(FinSet{3}, FinSet{3});
    FAIL();
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.count(), 27u);
  }
}

TEST(Finbase, EncodingMatchesLexRank) {
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 1; b <= 3; ++b) {
      auto maps = all_maps(a, b);
      for (Index k = 0; k < maps.size(); ++k) {
        EXPECT_EQ(encode_function(maps[k].table(), b), k);
        EXPECT_EQ(decode_function(k, a, b), maps[k].table());
        for (Index x = 0; x < a; ++x) EXPECT_EQ(apply_code(k, x, a, b), maps[k](x));
      }
    }
}

TEST(Finbase, CompositionLawsExhaustive) {
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b)
      for (const FinMap& f : all_maps(a, b)) {
        EXPECT_EQ(compose(f, FinMap::identity(FinSet{a})), f);
        EXPECT_EQ(compose(FinMap::identity(FinSet{b}), f), f);
      }
  for (std::size_t a = 0; a <= 2; ++a)
    for (std::size_t b = 0; b <= 3; ++b)
      for (std::size_t c = 0; c <= 3; ++c)
        for (std::size_t d = 0; d <= 2; ++d)
          for (const FinMap& f : all_maps(a, b))
            for (const FinMap& g : all_maps(b, c))
              for (const FinMap& h : all_maps(c, d)) EXPECT_EQ(compose(h, compose(g, f)), compose(compose(h, g), f));
}

TEST(Finbase, ProductUniversalPropertyUpToTwo) {
  for (std::size_t x = 0; x <= 2; ++x)
    for (std::size_t a = 0; a <= 2; ++a)
      for (std::size_t b = 0; b <= 2; ++b) {
        Product p = product(FinSet{a}, FinSet{b});
        for (const FinMap& f : all_maps(x, a))
          for (const FinMap& g : all_maps(x, b)) {
            std::size_t mediating = 0;
            for (const FinMap& m : all_maps(x, a * b))
              if (compose(p.first, m) == f && compose(p.second, m) == g) {
                ++mediating;
                EXPECT_EQ(m, pairing(f, g));
              }
            EXPECT_EQ(mediating, 1u);
          }
      }
}

TEST(Finbase, PullbackUniversalPropertyAndMonicLegs) {
  for (std::size_t a = 0; a <= 2; ++a)
    for (std::size_t b = 1; b <= 2; ++b)
      for (std::size_t c = 0; c <= 2; ++c)
        for (const FinMap& f : all_maps(a, b))
          for (const FinMap& g : all_maps(c, b)) {
            Pullback pb = pullback(f, g);
            EXPECT_EQ(compose(f, pb.left), compose(g, pb.right));
            std::set<std::pair<Index, Index>> legs;
            for (Index d = 0; d < pb.object.size; ++d) legs.emplace(pb.left(d), pb.right(d));
            EXPECT_EQ(legs.size(), pb.object.size);
            for (std::size_t x = 0; x <= 2; ++x)
              for (const FinMap& u : all_maps(x, a))
                for (const FinMap& v : all_maps(x, c)) {
                  if (compose(f, u) != compose(g, v)) continue;
                  std::size_t mediating = 0;
                  for (const FinMap& m : all_maps(x, pb.object.size))
                    if (compose(pb.left, m) == u && compose(pb.right, m) == v) ++mediating;
                  EXPECT_EQ(mediating, 1u);
                }
          }
}

TEST(Finbase, ProjectionSquaresArePullbacks) {
  // f x 1 against the projection recovers A x C with the evident legs.
  for (std::size_t a = 0; a <= 2; ++a)
    for (std::size_t b = 0; b <= 2; ++b)
      for (std::size_t c = 1; c <= 2; ++c)
        for (const FinMap& f : all_maps(a, b)) {
          FinMap fx1 = cross(f, FinMap::identity(FinSet{c}));
          Pullback pb = pullback(f, projection(FinSet{b}, FinSet{c}));
          EXPECT_EQ(pb.object, FinSet{a * c});
          EXPECT_EQ(compose(fx1, FinMap::identity(FinSet{a * c})).cod(), FinSet{b * c});
        }
}

TEST(Finbase, FirstProjectionRecognition) {
  EXPECT_EQ(as_first_projection(projection(FinSet{3}, FinSet{2})), FinSet{2});
  EXPECT_EQ(as_first_projection(FinMap::identity(FinSet{3})), FinSet{1});
  EXPECT_FALSE(as_first_projection(second_projection(FinSet{2}, FinSet{2})).has_value());
}

TEST(Finbase, WindowListings) {
  Window w = Window::standard(2);
  EXPECT_EQ(w.sorts(), (std::vector<FinSet>{{1}, {2}}));
  EXPECT_EQ(w.contexts(), (std::vector<FinSet>{{0}, {1}, {2}}));
  w.empty_sorts = true;
  EXPECT_EQ(w.sorts().front(), FinSet{0});
}
