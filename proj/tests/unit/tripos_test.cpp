#include <gtest/gtest.h>

#include "godel/basic_doctrines.hpp"
#include "godel/subset_doctrine.hpp"
#include "godel/tripos.hpp"

using namespace godel;

namespace {

Subset S(std::size_t n, std::vector<Index> m) { return Subset::of(n, m); }

std::size_t power(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST(Tripos, SelectFactors) {
  EXPECT_EQ(select_factors({2, 3}, {1, 0}).table(), (std::vector<Index>{0, 2, 4, 1, 3, 5}));
  EXPECT_EQ(select_factors({2, 2}, {0, 0}).table(), (std::vector<Index>{0, 0, 3, 3}));
  EXPECT_EQ(select_factors({2, 2, 2}, {0, 2}), compose(select_factors({2, 2, 2}, {0, 2}), FinMap::identity(FinSet{8})));
}

TEST(Tripos, ComprehensionArrowsAndFibers) {
  SubsetDoctrine p;
  Logic<SubsetDoctrine> L(p);
  ComprehensionCompletion<SubsetDoctrine> G(L);
  const FinSet two{2};
  const ComprehensionObject<Subset> a{two, S(2, {0})}, full{two, S(2, {0, 1})}, b{two, S(2, {1})};
  const FinMap id = FinMap::identity(two), swap(two, two, {1, 0});
  EXPECT_TRUE(G.is_arrow(a, full, id));
  EXPECT_FALSE(G.is_arrow(a, b, id));
  EXPECT_TRUE(G.is_arrow(a, b, swap));
  EXPECT_EQ(G.fiber(a), (std::vector<Subset>{S(2, {}), S(2, {0})}));
  EXPECT_EQ(G.reindex(swap, a, S(2, {1})), S(2, {0}));
}

TEST(Tripos, PredArrowCountsMatchHandCount) {
  SubsetDoctrine p;
  Logic<SubsetDoctrine> L(p);
  PredicateCategory<SubsetDoctrine> pred(L, 2);
  EXPECT_EQ(pred.object_count(), 1u + 2u + 4u);
  // Maps agreeing on alpha are identified, so the count is |beta|^|alpha|.
  for (std::size_t i = 0; i < pred.object_count(); ++i)
    for (std::size_t j = 0; j < pred.object_count(); ++j) {
      const auto& a = pred.object(i);
      const auto& b = pred.object(j);
      std::size_t expected = a.carrier.size == 0 ? 1 : (b.carrier.size == 0 ? 0 : power(b.pred.count(), a.pred.count()));
      EXPECT_EQ(pred.arrows(i, j).size(), expected) << i << "," << j;
    }
  EXPECT_TRUE(check_category_laws(pred).ok());
}

TEST(Tripos, ExtensionalReflectionOfTheBase) {
  SubsetDoctrine p;
  Logic<SubsetDoctrine> L(p);
  PredicateCategory<SubsetDoctrine> base(L, 2, true);
  for (std::size_t i = 0; i < base.object_count(); ++i)
    for (std::size_t j = 0; j < base.object_count(); ++j)
      EXPECT_EQ(base.arrows(i, j).size(), power(j, i));
  TrivialDoctrine t;
  Logic<TrivialDoctrine> LT(t);
  PredicateCategory<TrivialDoctrine> chaotic(LT, 2, true);
  for (std::size_t i = 0; i < chaotic.object_count(); ++i)
    for (std::size_t j = 0; j < chaotic.object_count(); ++j)
      EXPECT_EQ(chaotic.arrows(i, j).size(), (i == 0 || j > 0) ? 1u : 0u);
}

TEST(Tripos, TriposToToposOfSubsets) {
  SubsetDoctrine p;
  Logic<SubsetDoctrine> L(p);
  TriposToTopos<SubsetDoctrine> T(L, 2);
  EXPECT_EQ(T.object_count(), 1u + 2u + 5u);
  std::optional<std::size_t> empty2, total2, delta1, delta2;
  for (std::size_t i = 0; i < T.object_count(); ++i) {
    const auto& o = T.object(i);
    if (o.carrier.size == 2 && o.rel == S(4, {})) empty2 = i;
    if (o.carrier.size == 2 && o.rel == Subset::full(4)) total2 = i;
    if (o.carrier.size == 1 && o.rel == Subset::full(1)) delta1 = i;
    if (o.carrier.size == 2 && o.rel == p.equality(FinSet{2})) delta2 = i;
  }
  ASSERT_TRUE(empty2 && total2 && delta1 && delta2);
  for (std::size_t j = 0; j < T.object_count(); ++j) EXPECT_EQ(T.arrows(*empty2, j).size(), 1u);
  EXPECT_EQ(T.arrows(*total2, *delta2).size(), 2u);
  EXPECT_EQ(T.arrows(*total2, *delta1).size(), 1u);
  const Subset d = T.identity(*delta2);
  EXPECT_TRUE(T.equivalent(*delta2, *delta2, T.compose(*delta2, *delta2, *delta2, d, d), d));
  Report laws = check_category_laws(T);
  EXPECT_TRUE(laws.ok()) << laws.to_text();
  EXPECT_GT(laws.detail["composable_triples"].get<std::size_t>(), 0u);
  Report lim = check_small_limits(T);
  // (1, top) and the three one-point quotients on two points, all isomorphic.
  EXPECT_EQ(lim.detail["terminal_objects"].get<std::size_t>(), 4u);
}

TEST(Tripos, CompositionWithoutMeetFails) {
  SubsetDoctrine p;
  Logic<SubsetDoctrine> L(p);
  TriposToTopos<SubsetDoctrine> T(L, 2);
  auto broken = [&](std::size_t i, std::size_t j, std::size_t k, const Subset& f, const Subset& g) {
    return T.compose_with(i, j, k, f, g, false);
  };
  WithComposition<TriposToTopos<SubsetDoctrine>, decltype(broken)> M{&T, broken};
  Report r = check_category_laws(M);
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(r.detail.contains("counterexample"));
}
