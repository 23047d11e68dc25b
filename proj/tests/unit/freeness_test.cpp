#include <gtest/gtest.h>

#include "godel/basic_doctrines.hpp"
#include "godel/completion.hpp"
#include "godel/freeness.hpp"
#include "godel/subset_doctrine.hpp"

using namespace godel;

TEST(Freeness, SubsetElementsAreFreeWithNonemptySorts) {
  SubsetDoctrine p;
  Logic<SubsetDoctrine> L(p);
  FreenessDetector<SubsetDoctrine> F(L, Window::standard(2));
  for (std::size_t a = 0; a <= 2; ++a)
    for (const Subset& s : p.fiber(FinSet{a})) {
      EXPECT_TRUE(F.existential_free(FinSet{a}, s).free);
      EXPECT_TRUE(F.universal_free(FinSet{a}, s).free);
      EXPECT_TRUE(F.quantifier_free(FinSet{a}, s).free);
    }
}

TEST(Freeness, EmptyWitnessSortGivesNewBottom) {
  SubsetDoctrine p;
  Window w{2, true, 8};
  ExCompletion<SubsetDoctrine> ex(p, w);
  Logic<ExCompletion<SubsetDoctrine>> L(ex);
  FreenessDetector<ExCompletion<SubsetDoctrine>> F(L, w);
  const ExObj<Subset> bottom{1, 0, Subset(0)};
  FreenessVerdict v = F.existential_free(FinSet{1}, bottom);
  EXPECT_FALSE(v.free);
  ASSERT_TRUE(v.sort);
  EXPECT_EQ(*v.sort, 0u);
  EXPECT_EQ(v.to_json()["status"], "not_free");
  EXPECT_TRUE(F.existential_free(FinSet{1}, ex.embed(FinSet{1}, Subset(1))).free);
}

TEST(Freeness, CharacterisationInBothWindows) {
  SubsetDoctrine p;
  for (Window w : {Window::standard(2), Window{2, true, 8}}) {
    Report r = check_freeness_characterisation(p, w);
    EXPECT_TRUE(r.ok()) << r.to_text();
  }
  Report r = check_freeness_characterisation(p, Window{2, true, 8});
  EXPECT_GT(r.children[0].detail["not_free"].get<std::size_t>(), 0u);
}

TEST(Freeness, DialecticaOfSubsetsIsGodel) {
  SubsetDoctrine p;
  Window w = Window::standard(2);
  DialCompletion<SubsetDoctrine> dial(p, w);
  Logic<DialCompletion<SubsetDoctrine>> L(dial);
  FreenessDetector<DialCompletion<SubsetDoctrine>> F(L, w);
  Report r = check_godel_doctrine(F);
  EXPECT_TRUE(r.ok()) << r.to_text();
  // Embedded elements are quantifier-free; exists over a nontrivial predicate stays equivalent to one.
  for (const Subset& s : p.fiber(FinSet{2})) EXPECT_TRUE(F.quantifier_free(FinSet{2}, dial.embed(FinSet{2}, s)).free);
}

TEST(Freeness, ExCompletionIsNotSkolem) {
  SubsetDoctrine p;
  Window w = Window::standard(2);
  ExCompletion<SubsetDoctrine> ex(p, w);
  Logic<ExCompletion<SubsetDoctrine>> L(ex);
  FreenessDetector<ExCompletion<SubsetDoctrine>> F(L, w);
  Report r = check_skolem_doctrine(F);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.first_failure()->name, "quantifiers");
}

TEST(Freeness, TrivialDoctrineIsGodel) {
  TrivialDoctrine t;
  Logic<TrivialDoctrine> L(t);
  FreenessDetector<TrivialDoctrine> F(L, Window::standard(2));
  EXPECT_TRUE(check_godel_doctrine(F).ok());
}

TEST(Freeness, DialPrenexCoverIsTheBodyItself) {
  SubsetDoctrine p;
  Window w = Window::standard(2);
  DialCompletion<SubsetDoctrine> dial(p, w);
  Logic<DialCompletion<SubsetDoctrine>> L(dial);
  FreenessDetector<DialCompletion<SubsetDoctrine>> F(L, w);
  const DialObj<Subset> x{FinSet{1}, FinSet{2}, FinSet{2}, Subset::of(4, {1, 2})};
  auto cov = find_prenex_cover(F, FinSet{1}, x);
  ASSERT_TRUE(cov);
  EXPECT_EQ(cov->witness, FinSet{2});
  EXPECT_EQ(cov->counter, FinSet{2});
  EXPECT_EQ(cov->gamma, dial.embed(FinSet{4}, x.body));
  Report r = check_godel_doctrine(F);
  const Report* pc = nullptr;
  for (const Report& c : r.children)
    if (c.name == "prenex-cover") pc = &c;
  ASSERT_NE(pc, nullptr);
  EXPECT_EQ(pc->detail["order_checks"].get<std::size_t>(), 2 * pc->detail["elements"].get<std::size_t>());
}

TEST(Freeness, VerdictsAreStableUnderReindexing) {
  SubsetDoctrine p;
  Window w{2, true, 8};
  ExCompletion<SubsetDoctrine> ex(p, w);
  Logic<ExCompletion<SubsetDoctrine>> L(ex);
  FreenessDetector<ExCompletion<SubsetDoctrine>> F(L, w);
  for (FinSet a : w.contexts())
    for (const auto& x : L.fiber(a).elements()) {
      if (!F.existential_free(a, x).free) continue;
      for (FinSet a2 : w.contexts())
        for (const FinMap& f : p.base().enumerate_maps(a2, a))
          EXPECT_TRUE(F.existential_free(a2, L.reindex(f, x)).free);
    }
}
