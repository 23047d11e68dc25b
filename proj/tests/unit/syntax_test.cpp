#include <gtest/gtest.h>

#include "godel/errors.hpp"
#include "godel/model.hpp"
#include "godel/syntax.hpp"

using namespace godel;

namespace {

std::vector<std::string> corpus() { return read_corpus(std::string(GODEL_TEST_DATA) + "/corpus.txt"); }

Formula atom(const std::string& r, std::vector<std::string> vars) {
  std::vector<Term> ts;
  for (auto& v : vars) ts.push_back(Term::var(v));
  return Formula::atom(r, ts);
}

// Tuple lengths predicted clause by clause, independently of the translator.
std::pair<std::size_t, std::size_t> shape(const Formula& f) {
  switch (f.op) {
    case Op::atom:
    case Op::top:
    case Op::bottom:
      return {0, 0};
    case Op::conj: {
      auto [a, b] = shape(f.kids[0]);
      auto [c, d] = shape(f.kids[1]);
      return {a + c, b + d};
    }
    case Op::disj: {
      auto [a, b] = shape(f.kids[0]);
      auto [c, d] = shape(f.kids[1]);
      return {1 + a + c, b + d};
    }
    case Op::exists: {
      auto [a, b] = shape(f.kids[0]);
      return {a + 1, b};
    }
    case Op::forall: {
      auto [a, b] = shape(f.kids[0]);
      return {a, b + 1};
    }
    case Op::impl: {
      auto [u, x] = shape(f.kids[0]);
      auto [v, y] = shape(f.kids[1]);
      return {v + x, u + y};
    }
  }
  return {0, 0};
}

Model one_sort(std::size_t n, std::set<Index> p) {
  Model m;
  m.sorts["A"] = n;
  Model::Relation r{{"A"}, {}};
  for (Index i : p) r.tuples.insert({i});
  m.relations["P"] = r;
  return m;
}

}  // namespace

TEST(Parse, ImplicationSitsAboveQuantifiers) {
  const Formula f = parse_formula("forall x:A. P(x) -> exists y:B. Q(y)");
  ASSERT_EQ(f.op, Op::impl);
  EXPECT_EQ(f.kids[0], Formula::forall("x", SortExpr::base("A"), atom("P", {"x"})));
  EXPECT_EQ(f.kids[1], Formula::exists("y", SortExpr::base("B"), atom("Q", {"y"})));
}

TEST(Parse, ConjunctionBindsTighterThanDisjunction) {
  const Formula f = parse_formula("P(x) & Q(x) | R(x)");
  EXPECT_EQ(f, Formula::disj(Formula::conj(atom("P", {"x"}), atom("Q", {"x"})), atom("R", {"x"})));
}

TEST(Parse, NegationIsImplicationIntoBottom) {
  EXPECT_EQ(parse_formula("~~P(x)"), Formula::impl(Formula::impl(atom("P", {"x"}), Formula::bottom()), Formula::bottom()));
  EXPECT_EQ(to_string(parse_formula("~~P(x)")), "~~P(x)");
}

TEST(Parse, ImplicationIsRightAssociative) {
  EXPECT_EQ(parse_formula("P(x) -> Q(x) -> R(x)"),
            Formula::impl(atom("P", {"x"}), Formula::impl(atom("Q", {"x"}), atom("R", {"x"}))));
}

TEST(Parse, BinderListsNest) {
  EXPECT_EQ(parse_formula("exists y:B, z:A. R(z, y)"), parse_formula("exists y:B. exists z:A. R(z, y)"));
}

TEST(Parse, ErrorsCarryPositions) {
  try {
    parse_formula("P(x) & ");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 7u);
  }
  EXPECT_THROW(parse_formula("P(x"), ParseError);
  EXPECT_THROW(parse_formula("forall x. P(x)"), ParseError);
  EXPECT_THROW(parse_formula("P(x) $ Q(x)"), ParseError);
  EXPECT_THROW(parse_formula("P"), ParseError);
}

TEST(Parse, IllSortedInputIsRejected) {
  EXPECT_THROW(parse_formula("forall x:A. forall y:B. R(x, y) & R(y, x)"), SortError);
  EXPECT_THROW(parse_formula("P(x) & P(x, x)"), SortError);
  EXPECT_THROW(parse_formula("forall b:A. is0(b)"), SortError);
  EXPECT_THROW(parse_formula("forall g:B^A. forall x:B. P(g(x))"), SortError);
}

TEST(Parse, BoundVariablesAreRenamedApart) {
  const Formula f = parse_formula("(forall x:A. P(x)) & (forall x:A. Q(x))");
  EXPECT_EQ(to_string(f), "(forall x:A. P(x)) & (forall x_1:A. Q(x_1))");
  const Formula g = parse_formula("P(x) & (exists x:A. Q(x))");
  EXPECT_EQ(to_string(g), "P(x) & (exists x_1:A. Q(x_1))");
  EXPECT_EQ(free_variables(g), std::set<std::string>{"x"});
}

TEST(Parse, SignatureIsInferred) {
  const Signature s = infer_signature(parse_formula("forall x:A. exists y:B. R(x, f(y)) | P(c)"));
  ASSERT_EQ(s.relations.at("R").size(), 2u);
  EXPECT_EQ(s.relations.at("R")[0], "A");
  EXPECT_EQ(s.relations.at("R")[1], s.functions.at("f").result);
  EXPECT_EQ(s.relations.at("R")[1][0], '?');
  EXPECT_EQ(s.functions.at("f").args, std::vector<std::string>{"B"});
  EXPECT_EQ(s.sorts, (std::set<std::string>{"A", "B"}));
  EXPECT_TRUE(s.free.count("c"));
}

TEST(Print, CorpusRoundTrips) {
  const auto lines = corpus();
  ASSERT_GE(lines.size(), 20u);
  for (const std::string& l : lines) {
    const Formula f = parse_formula(l);
    EXPECT_EQ(to_string(f), l);
    EXPECT_EQ(parse_formula(to_string(f)), f);
    EXPECT_TRUE(free_variables(f).empty()) << l;
  }
}

TEST(Print, NestedFunctionSortsKeepParentheses) {
  const SortExpr s = parse_sort("(C^B)^A");
  EXPECT_EQ(s, SortExpr::fun({SortExpr::base("A")}, SortExpr::fun({SortExpr::base("B")}, SortExpr::base("C"))));
  EXPECT_EQ(to_string(s), "(C^B)^A");
  EXPECT_EQ(to_string(parse_sort("C^(A,B)")), "C^(A,B)");
  EXPECT_EQ(to_string(parse_sort("C^B^A")), "(C^B)^A");
  EXPECT_EQ(to_string(SortExpr::fun({}, SortExpr::base("S"), false)), "S^()");
  EXPECT_EQ(parse_sort("S^()"), SortExpr::fun({}, SortExpr::base("S"), false));
}

TEST(Translate, AtomIsItsOwnForm) {
  const DialForm d = dialectica_translate(parse_formula("P(x)"));
  EXPECT_TRUE(d.witnesses.empty());
  EXPECT_TRUE(d.counters.empty());
  EXPECT_EQ(d.matrix, atom("P", {"x"}));
  EXPECT_EQ(to_string(d), "P(x)");
}

TEST(Translate, ImplicationBetweenQuantifiers) {
  const DialForm d = dialectica_translate(parse_formula("forall z:A. P(z) -> exists y:B. Q(y)"));
  EXPECT_EQ(d.witnesses, (std::vector<Binder>{{"y", SortExpr::base("B")}, {"z*", SortExpr::base("A")}}));
  EXPECT_TRUE(d.counters.empty());
  EXPECT_EQ(to_string(d), "exists y:B, z*:A. (P(z*) -> Q(y))");
  // Without simplification the unit sorts stay visible.
  const DialForm raw = dialectica_translate(parse_formula("forall z:A. P(z) -> exists y:B. Q(y)"), false);
  EXPECT_EQ(to_string(raw), "exists y:B^(), z*:A^(). (P(z*) -> Q(y))");
}

TEST(Translate, PrenexFormIsAFixedPoint) {
  const DialForm d = dialectica_translate(parse_formula("exists u:A. forall x:B. P(u, x)"));
  EXPECT_EQ(d.witnesses, (std::vector<Binder>{{"u", SortExpr::base("A")}}));
  EXPECT_EQ(d.counters, (std::vector<Binder>{{"x", SortExpr::base("B")}}));
  EXPECT_EQ(d.matrix, atom("P", {"u", "x"}));
}

TEST(Translate, UniversalsCurryWitnesses) {
  const DialForm d = dialectica_translate(parse_formula("forall a:A. forall b:B. exists c:C. R(a, b, c)"));
  ASSERT_EQ(d.witnesses.size(), 1u);
  EXPECT_EQ(to_string(d.witnesses[0].sort), "(C^B)^A");
  EXPECT_EQ(to_string(d), "exists c:(C^B)^A. forall a:A, b:B. R(a, b, c(a, b))");
  EXPECT_NO_THROW(parse_formula(to_string(d)));
}

TEST(Translate, DisjunctionAddsADecision) {
  const DialForm d = dialectica_translate(parse_formula("P(x) | Q(x)"));
  EXPECT_EQ(to_string(d), "exists z:Bool. (is0(z) -> P(x)) & (is1(z) -> Q(x))");
}

TEST(Translate, CorpusInvariants) {
  for (const std::string& l : corpus()) {
    const Formula f = parse_formula(l);
    const DialForm d = dialectica_translate(f);
    EXPECT_FALSE(has_quantifier(d.matrix)) << l;
    const auto [w, c] = shape(f);
    EXPECT_EQ(d.witnesses.size(), w) << l;
    EXPECT_EQ(d.counters.size(), c) << l;
    std::set<std::string> allowed = free_variables(f);
    for (const Binder& b : d.witnesses) allowed.insert(b.name);
    for (const Binder& b : d.counters) allowed.insert(b.name);
    for (const std::string& v : free_variables(d.matrix)) EXPECT_TRUE(allowed.count(v)) << l << " " << v;
    // Matrices never contain a disjunction, so translating the prenex form again is the identity.
    EXPECT_EQ(dialectica_translate(d.to_formula()), d) << l;
    // The printed form is well sorted and parses back to the same prenex formula.
    EXPECT_EQ(parse_formula(to_string(d)), alpha_normalise(d.to_formula())) << l;
  }
}

TEST(Evaluate, SmallModel) {
  const Model m = one_sort(2, {1});
  const Evaluator ev(m, 27);
  for (const auto& [text, want] : std::vector<std::pair<std::string, bool>>{
           {"forall x:A. P(x)", false}, {"exists x:A. P(x)", true}, {"false", false}, {"true", true}}) {
    EXPECT_EQ(ev.eval(parse_formula(text)), want) << text;
    EXPECT_EQ(ev.tarski(parse_formula(text)), want) << text;
  }
  EXPECT_TRUE(ev.eval(parse_formula("P(x)"), {{"x", 1}}));
  EXPECT_FALSE(ev.tarski(parse_formula("P(x)"), {{"x", 0}}));
  EXPECT_THROW(ev.eval(parse_formula("P(x)")), UnboundSymbol);
  EXPECT_THROW(ev.eval(parse_formula("exists x:A. Q(x)")), UnboundSymbol);
}

TEST(Evaluate, DoctrineMatchesDirectLoops) {
  // forall x. exists y. R(x, y) and exists y. forall x. R(x, y) for every R on 2 x 3.
  Model m;
  m.sorts = {{"A", 2}, {"B", 3}};
  const Formula ae = parse_formula("forall x:A. exists y:B. R(x, y)");
  const Formula ea = parse_formula("exists y:B. forall x:A. R(x, y)");
  for (unsigned mask = 0; mask < 64; ++mask) {
    Model::Relation r{{"A", "B"}, {}};
    bool rows[2][3];
    for (Index a = 0; a < 2; ++a)
      for (Index b = 0; b < 3; ++b)
        if ((rows[a][b] = (mask >> (a * 3 + b)) & 1U)) r.tuples.insert({a, b});
    m.relations["R"] = r;
    bool want_ae = true, want_ea = false;
    for (int a = 0; a < 2; ++a) want_ae = want_ae && (rows[a][0] || rows[a][1] || rows[a][2]);
    for (int b = 0; b < 3; ++b) want_ea = want_ea || (rows[0][b] && rows[1][b]);
    const Evaluator ev(m, 27);
    EXPECT_EQ(ev.eval(ae), want_ae);
    EXPECT_EQ(ev.eval(ea), want_ea);
  }
}

TEST(Evaluate, FunctionSortedValuesAreCodes) {
  // g : A^A over A = {0,1}; the code of the table [t0, t1] is 2 * t0 + t1.
  Model m = one_sort(2, {1});
  const Evaluator ev(m, 27);
  const Formula f = parse_formula("P(g(x))");
  EXPECT_TRUE(ev.eval(parse_formula("forall x:A. exists g:A^A. P(g(x))")));
  EXPECT_EQ(ev.size(parse_sort("A^A")), 4u);
  EXPECT_EQ(ev.size(parse_sort("(A^A)^A")), 16u);
  EXPECT_THROW(ev.size(parse_sort("A^(A,A,A,A,A)")), CapExceeded);
  const Formula h = parse_formula("forall h:(A^A)^A. forall x:A. forall y:A. (P(h(x, y)) | ~P(h(x, y)))");
  EXPECT_TRUE(ev.eval(h));
  EXPECT_TRUE(ev.tarski(h));
  (void)f;
}

TEST(Evaluate, TermsThroughFunctionSymbols) {
  Model m = one_sort(3, {2});
  m.functions["f"] = {{"A"}, "A", {1, 2, 0}};
  const Evaluator ev(m, 27);
  EXPECT_TRUE(ev.eval(parse_formula("P(f(f(x)))"), {{"x", 0}}));
  EXPECT_FALSE(ev.eval(parse_formula("P(f(x))"), {{"x", 0}}));
  EXPECT_TRUE(ev.tarski(parse_formula("exists x:A. P(f(x))")));
  EXPECT_TRUE(ev.eval(parse_formula("forall x:A. exists y:A. P(f(y)) & ~P(x) | P(x)")));
}

TEST(Model, JsonRoundTripAndValidation) {
  Model m = one_sort(2, {0, 1});
  m.functions["f"] = {{"A"}, "A", {1, 0}};
  EXPECT_EQ(Model::from_json(m.to_json()), m);
  json bad = m.to_json();
  bad["functions"]["f"]["table"] = {0};
  EXPECT_THROW(Model::from_json(bad), SortError);
  bad = m.to_json();
  bad["relations"]["P"]["tuples"] = {{2}};
  EXPECT_THROW(Model::from_json(bad), SortError);
  EXPECT_THROW(Model::from_json(json::parse(R"({"sorts": {"A": "x"}})")), SortError);
}

TEST(Witness, DirectWitness) {
  Model m;
  m.sorts["B"] = 3;
  m.relations["Q"] = {{"B"}, {{1}, {2}}};
  const WitnessCheck c = verify_witness(parse_formula("exists y:B. Q(y)"), m, 27);
  EXPECT_TRUE(c.phi);
  ASSERT_TRUE(c.witness);
  EXPECT_EQ(*c.witness, std::vector<Index>{1});
  EXPECT_TRUE(c.agree());
}

TEST(Witness, FalseOnBothSides) {
  Model m = one_sort(2, {0, 1});
  m.sorts["B"] = 2;
  m.relations["Q"] = {{"B"}, {}};
  const WitnessCheck c = verify_witness(parse_formula("forall x:A. P(x) -> exists y:B. Q(y)"), m, 27);
  EXPECT_FALSE(c.phi);
  EXPECT_FALSE(c.dial_value);
  EXPECT_FALSE(c.witness);
  EXPECT_EQ(c.candidates, 4u);
  EXPECT_TRUE(c.agree());
  EXPECT_TRUE(c.to_report("x").ok());
}

TEST(Witness, LimitsAreReported) {
  const Model m = one_sort(3, {0});
  EXPECT_THROW(verify_witness(parse_formula("forall x:A. forall y:A. exists z:A. P(z)"), m, 8), CapExceeded);
  EXPECT_THROW(verify_witness(parse_formula("exists x:A, y:A, z:A. P(x)"), m, 27, 10), BudgetExceeded);
}

TEST(Models, EnumerationCounts) {
  // P on A and f : A -> A: sum over n = 1..2 of 2^n * n^n.
  const Signature s = infer_signature(parse_formula("forall x:A. (P(x) -> P(f(x)))"));
  std::size_t seen = 0;
  const std::size_t n = for_each_model(s, 2, 1000, [&](const Model& m) {
    m.validate();
    ++seen;
  });
  EXPECT_EQ(n, 2u * 1 + 4u * 4);
  EXPECT_EQ(seen, n);
  EXPECT_THROW(for_each_model(s, 3, 10, [](const Model&) {}), BudgetExceeded);
  // With the result sort open, f ranges over maps into a second carrier S:
  // sum over a, s in 1..2 of 2^s * s^a.
  const Signature open = infer_signature(parse_formula("forall x:A. P(f(x))"));
  EXPECT_EQ(for_each_model(open, 2, 1000, [](const Model&) {}), 2u + 8 + 2 + 16);
}

TEST(Models, CorpusAgreesUpToTwo) {
  const CorpusSweep s = sweep_corpus(corpus(), 2, 27);
  EXPECT_TRUE(s.report.ok()) << s.report.to_text();
  EXPECT_EQ(s.disagreements, 0u);
  EXPECT_GT(s.pairs, 300u);
}
