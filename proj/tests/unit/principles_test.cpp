#include <gtest/gtest.h>

#include "godel/completion.hpp"
#include "godel/principles.hpp"
#include "godel/subset_doctrine.hpp"

using namespace godel;

namespace {

using Dial = DialCompletion<SubsetDoctrine>;

struct Fixture {
  explicit Fixture(Window w = Window::standard(2), std::size_t cap = 4)
      : p(BaseCat(cap)), dial(p, w), L(dial), F(L, w), C(F) {}
  SubsetDoctrine p;
  Dial dial;
  Logic<Dial> L;
  FreenessDetector<Dial> F;
  PrincipleChecker<Dial> C;
};

}  // namespace

TEST(Principles, RulesHoldOnDialOfSubsets) {
  Fixture f;
  for (Rule r : {Rule::ip, Rule::mmp, Rule::mp, Rule::choice, Rule::counterexample}) {
    Report rep = f.C.rule(r);
    EXPECT_TRUE(rep.ok()) << rep.to_text();
    EXPECT_GT(rep.detail["instances"].get<std::size_t>(), 0u) << to_string(r);
    EXPECT_EQ(rep.detail["witnesses"].size(), rep.detail["premises_holding"].get<std::size_t>());
  }
}

TEST(Principles, PrinciplesHoldOnDialOfSubsets) {
  Fixture f;
  for (Principle p : {Principle::ip, Principle::ip_star, Principle::mmp, Principle::mp}) {
    Report rep = f.C.principle(p);
    EXPECT_TRUE(rep.ok()) << rep.to_text();
    EXPECT_EQ(rep.detail["verdict"], "holds");
  }
  Report chain = f.C.chain_step();
  EXPECT_TRUE(chain.ok()) << chain.to_text();
}

TEST(Principles, ChoiceReturnsACheckedTerm) {
  Fixture f;
  const FinSet two{2};
  // alpha(a, b) holds exactly when b = 1 - a.
  const auto alpha = f.dial.embed(FinSet{4}, Subset::of(4, {1, 2}));
  auto o = f.C.choice_rule(two, two, alpha);
  ASSERT_TRUE(o.premise);
  ASSERT_TRUE(o.term);
  EXPECT_EQ(o.term->table(), (std::vector<Index>{1, 0}));
}

TEST(Principles, CounterexampleAtBottomTakesTheFirstTerm) {
  Fixture f;
  const FinSet two{2};
  auto o = f.C.counterexample_rule(two, two, f.L.bottom(FinSet{4}));
  ASSERT_TRUE(o.premise);
  ASSERT_TRUE(o.term);
  EXPECT_EQ(o.term->table(), (std::vector<Index>{0, 0}));
}

TEST(Principles, MarkovRuleNeedsQuantifierFreeBottom) {
  Fixture f(Window{1, true, 1});
  EXPECT_THROW(f.C.rule(Rule::mp), SideConditionFailed);
  Report r = guarded("mp-rule", [&] { return f.C.rule(Rule::mp); });
  EXPECT_EQ(r.status, Status::skipped);
  EXPECT_EQ(r.detail["verdict"], "side-condition-fails");
}

TEST(Principles, SkolemFunctionOfTheDiagonalIsTheIdentity) {
  Fixture f;
  const FinSet two{2};
  std::vector<Index> diag;
  for (Index a = 0; a < 2; ++a)
    for (Index b = 0; b < 2; ++b) diag.push_back((a * 2 + b) * 2 + b);
  Report r = f.C.skolemise(two, two, two, f.dial.embed(FinSet{8}, Subset::of(8, diag)));
  ASSERT_TRUE(r.ok()) << r.to_text();
  const Index id_code = encode_function({0, 1}, 2);
  const auto f0 = r.detail["lhs_to_rhs"]["f0"];
  for (Index a = 0; a < 2; ++a) EXPECT_EQ(f0[a * 4 + id_code].get<Index>(), id_code);
  EXPECT_TRUE(f.C.skolemise(two, two, two, f.L.top(FinSet{8})).ok());
  EXPECT_TRUE(f.C.skolemise(two, two, two, f.L.bottom(FinSet{8})).ok());
}

TEST(Principles, SkolemisationSweep) {
  Fixture f(Window::standard(2), 16);
  Report r = f.C.skolemisation();
  EXPECT_TRUE(r.ok()) << r.to_text();
}

TEST(Principles, DialecticaPairExamples) {
  Fixture f;
  const FinSet one{1}, two{2};
  const auto top = f.dial.embed(FinSet{4}, Subset::full(4));
  const auto bot = f.dial.embed(FinSet{4}, Subset(4));
  auto pair = f.C.find_dialectica_pair(one, two, two, top, two, two, top);
  ASSERT_TRUE(pair);
  EXPECT_EQ(pair->first.table(), (std::vector<Index>{0, 0}));
  EXPECT_EQ(pair->second.table(), (std::vector<Index>{0, 0, 0, 0}));
  EXPECT_FALSE(f.C.find_dialectica_pair(one, two, two, top, two, two, bot));
  EXPECT_FALSE(f.L.leq(one, f.C.prenex(one, two, two, top), f.C.prenex(one, two, two, bot)));
}

TEST(Principles, ImplicationEquivalence) {
  Fixture f;
  const FinSet one{1}, two{2};
  Report r = f.C.implication_equivalence(one, one, one, f.L.top(one), one, one, f.L.bottom(one));
  EXPECT_TRUE(r.ok()) << r.to_text();
  EXPECT_FALSE(r.detail["top_entails_lhs"].get<bool>());
  for (const Subset& s : f.p.fiber(two)) {
    Report q = f.C.implication_equivalence(one, one, one, f.L.top(one), two, one, f.dial.embed(two, s));
    EXPECT_TRUE(q.ok()) << q.to_text();
  }
  Report sweep = f.C.implication_equivalences();
  EXPECT_TRUE(sweep.ok()) << sweep.to_text();
  EXPECT_GT(sweep.detail["instances"].get<std::size_t>(), 0u);
}

TEST(Principles, ExtractionAgreesWithTheSequentOnSmallCarriers) {
  Fixture f;
  Report r = check_dialectica_extraction(f.C, f.F, {0, 1, 2}, Only{"dialectica-extraction/I=1/U=2/X=1/V=1/Y=2/psi=1/phi=2"});
  EXPECT_TRUE(r.ok()) << r.to_text();
  EXPECT_EQ(r.detail["instances"].get<std::size_t>(), 1u);
  Report all = check_dialectica_extraction(f.C, f.F, {0, 1});
  EXPECT_TRUE(all.ok()) << all.to_text();
  EXPECT_EQ(all.detail["pairs_certified"], all.detail["sequents_holding"]);
}

TEST(Principles, QuantifierFreeClassesAreTheEmbeddedSubsets) {
  Fixture f;
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto& t = f.L.fiber(FinSet{n});
    std::size_t qf = 0;
    for (std::size_t c = 0; c < t.class_count(); ++c) {
      const auto& x = t.rep(c);
      EXPECT_EQ(x.witness, FinSet{1});
      EXPECT_EQ(x.counter, FinSet{1});
      qf += f.F.quantifier_free(FinSet{n}, x).free ? 1 : 0;
    }
    EXPECT_EQ(qf, std::size_t{1} << n);
  }
}
