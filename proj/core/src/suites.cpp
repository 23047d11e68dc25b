#include "godel/suites.hpp"

#include <algorithm>
#include <type_traits>

#include "godel/basic_doctrines.hpp"
#include "godel/completion.hpp"
#include "godel/freeness.hpp"
#include "godel/model.hpp"
#include "godel/subset_doctrine.hpp"
#include "godel/tripos.hpp"

namespace godel {

// Doctrine selection.

DoctrineSpec DoctrineSpec::builtin(const std::string& name) {
  DoctrineSpec s;
  if (name == "subsets") return s;
  if (name == "trivial") {
    s.base = BaseKind::trivial;
    return s;
  }
  const std::string suffix = "-of-subsets";
  if (name.size() > suffix.size() && name.ends_with(suffix)) {
    s.completion = completion_kind(name.substr(0, name.size() - suffix.size()));
    return s;
  }
  throw UsageError("unknown builtin doctrine " + name);
}

CompletionKind DoctrineSpec::completion_kind(const std::string& name) {
  if (name == "ex") return CompletionKind::ex;
  if (name == "un") return CompletionKind::un;
  if (name == "dial") return CompletionKind::dial;
  throw UsageError("unknown completion " + name);
}

std::string DoctrineSpec::name() const {
  const std::string b = base == BaseKind::subsets ? "subsets" : base == BaseKind::trivial ? "trivial" : "table";
  switch (completion) {
    case CompletionKind::none:
      return b;
    case CompletionKind::ex:
      return "ex-of-" + b;
    case CompletionKind::un:
      return "un-of-" + b;
    case CompletionKind::dial:
      return "dial-of-" + b;
  }
  return b;
}

namespace {

template <class D>
inline constexpr bool is_base_v = std::is_same_v<D, SubsetDoctrine> || std::is_same_v<D, TrivialDoctrine> ||
                                  std::is_same_v<D, TableDoctrine>;

TableDoctrine load_table(const json& j) {
  try {
    return TableDoctrine::from_json(j);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad doctrine file: ") + e.what());
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad doctrine file: ") + e.what());
  }
}

template <class P, class F>
Report with_completion(const P& p, const SuiteConfig& c, F&& f) {
  const Window w = c.window();
  switch (c.doctrine.completion) {
    case CompletionKind::none:
      return f(p, w);
    case CompletionKind::ex:
      return f(ExCompletion<P>(p, w), w);
    case CompletionKind::un:
      return f(UnCompletion<P>(p, w), w);
    case CompletionKind::dial:
      return f(DialCompletion<P>(p, w), w);
  }
  throw UsageError("unknown completion");
}

/// Calls f(doctrine, window) on the configured doctrine.
template <class F>
Report visit(const SuiteConfig& c, F&& f) {
  const BaseCat base(c.base_cap, c.budget);
  switch (c.doctrine.base) {
    case BaseKind::subsets:
      return with_completion(SubsetDoctrine(base), c, f);
    case BaseKind::trivial:
      if (c.doctrine.completion != CompletionKind::none)
        throw UsageError("completions of the trivial doctrine are not offered");
      return f(TrivialDoctrine(base), c.window());
    case BaseKind::table:
      return with_completion(load_table(c.doctrine.table), c, f);
  }
  throw UsageError("unknown doctrine");
}

template <class D>
void need_base(const std::string& suite) {
  if constexpr (!is_base_v<D>) throw UsageError("suite " + suite + " runs on a base doctrine, not a completion");
}

// Principles.

template <Doctrine D>
Report principles_report(const FreenessDetector<D>& F, const SuiteConfig& c) {
  const PrincipleChecker<D> C(F, c.scope);
  std::vector<std::string> which = c.which.empty() ? principle_names() : c.which;
  const std::vector<std::string> known = principle_names();
  for (const std::string& w : which)
    if (std::find(known.begin(), known.end(), w) == known.end()) throw UsageError("unknown principle " + w);
  auto wants = [&](const char* n) { return std::find(which.begin(), which.end(), n) != which.end(); };
  Report root("principles");
  root.detail["scope"] = c.scope == Scope::classes ? "classes" : "elements";
  root.detail["window"] = c.window().to_string();
  auto rule = [&](Rule r) { root.add(guarded(std::string(to_string(r)) + "-rule", [&] { return C.rule(r, c.only); })); };
  auto principle = [&](Principle p) {
    root.add(guarded(std::string(to_string(p)) + "-principle", [&] { return C.principle(p, c.only); }));
  };
  if (wants("ip")) {
    rule(Rule::ip);
    principle(Principle::ip);
  }
  if (wants("ipstar")) principle(Principle::ip_star);
  if (wants("mmp")) {
    rule(Rule::mmp);
    principle(Principle::mmp);
  }
  if (wants("mp")) {
    rule(Rule::mp);
    principle(Principle::mp);
  }
  if (wants("choice")) rule(Rule::choice);
  if (wants("counterexample")) rule(Rule::counterexample);
  if (wants("chain")) root.add(guarded("chain-step", [&] { return C.chain_step(c.only); }));
  if (wants("skolem")) root.add(C.skolemisation(c.only));
  if (wants("impl-equiv")) root.add(C.implication_equivalences(c.only));
  return root;
}

std::vector<std::size_t> extraction_sizes(const SuiteConfig& c) {
  if (!c.sizes.empty()) return c.sizes;
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= c.cap; ++n) out.push_back(n);
  return out;
}

// Tripos.

template <Doctrine D>
Report tripos_report(const Logic<D>& L, std::size_t cap, bool laws, bool count) {
  Report root("tripos");
  root.detail["doctrine"] = L.doctrine().name();
  root.detail["cap"] = cap;
  const TriposToTopos<D> T(L, cap);
  const PredicateCategory<D> P(L, cap);
  auto counts = [](const auto& cat) {
    std::size_t arrows = 0;
    for (std::size_t i = 0; i < cat.object_count(); ++i)
      for (std::size_t j = 0; j < cat.object_count(); ++j) arrows += cat.arrows(i, j).size();
    return json{{"objects", cat.object_count()}, {"arrows", arrows}};
  };
  if (count) {
    root.detail["tripos_to_topos"] = counts(T);
    root.detail["predicates"] = counts(P);
  }
  if (laws) {
    root.add(check_category_laws(T));
    root.add(check_category_laws(P));
    root.add(check_small_limits(T));
  }
  return root;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"hyperdoctrine", "iso", "freeness", "skolem", "godel", "principles", "extraction", "translation"};
}

std::vector<std::string> principle_names() {
  return {"ip", "ipstar", "mmp", "mp", "choice", "counterexample", "chain", "skolem", "impl-equiv"};
}

Report run_suite(const std::string& suite, const SuiteConfig& c) {
  if (suite == "translation") {
    if (c.corpus.empty()) throw UsageError("suite translation needs a corpus file");
    return sweep_corpus(read_corpus(c.corpus), c.max_carrier, c.model_cap, c.budget).report;
  }
  const std::vector<std::string> known = suite_names();
  if (std::find(known.begin(), known.end(), suite) == known.end()) throw UsageError("unknown suite " + suite);
  Report r = visit(c, [&](const auto& d, const Window& w) -> Report {
    using D = std::decay_t<decltype(d)>;
    const Logic<D> L(d);
    if (suite == "hyperdoctrine") return check_hyperdoctrine(L, c.cap, c.only);
    if (suite == "iso" || suite == "freeness") {
      need_base<D>(suite);
      if constexpr (is_base_v<D>) {
        if (suite == "iso") return dial_iso_check(d, w, c.only);
        return check_freeness_characterisation(d, w, c.only);
      }
    }
    const FreenessDetector<D> F(L, w);
    if (suite == "skolem") return check_skolem_doctrine(F, c.only);
    if (suite == "godel") return check_godel_doctrine(F, c.only);
    if (suite == "principles") return principles_report(F, c);
    const PrincipleChecker<D> C(F, c.scope);
    return check_dialectica_extraction(C, F, extraction_sizes(c), c.only);
  });
  r.detail["suite_doctrine"] = c.doctrine.name();
  return r;
}

Report run_tripos(const SuiteConfig& c, bool laws, bool count) {
  return visit(c, [&](const auto& d, const Window&) -> Report {
    using D = std::decay_t<decltype(d)>;
    need_base<D>("tripos");
    if constexpr (is_base_v<D>) {
      const Logic<D> L(d);
      return tripos_report(L, c.cap, laws, count);
    }
    return Report();
  });
}

json dump_fiber(const SuiteConfig& c, std::size_t fiber) {
  json out;
  visit(c, [&](const auto& d, const Window&) -> Report {
    using D = std::decay_t<decltype(d)>;
    const Logic<D> L(d);
    out = export_table(L, {FinSet{fiber}}, false);
    return Report();
  });
  return out;
}

// Acceptance.

std::string criterion_title(int k) {
  switch (k) {
    case 1:
      return "hyperdoctrine laws of subsets, carriers <= 3";
    case 2:
      return "Dial(subsets) order-isomorphic to the universal-then-existential completion, cap 2";
    case 3:
      return "sequent decision equals existence of an (f0, f1) pair, carriers <= 2";
    case 4:
      return "skolemisation equivalence in both directions, sizes <= 2";
    case 5:
      return "freeness verdicts match embedded elements in both completions, cap 2";
    case 6:
      return "Dial(subsets) is a Goedel doctrine with constructive prenex covers, cap 2";
    case 7:
      return "rules and principles on Dial(subsets), every element, cap 2";
    case 8:
      return "formula and translation agree on the corpus, carriers <= 3";
    case 9:
      return "category laws of T_P and Pred(P) for subsets, cap 2";
  }
  return "unknown";
}

Report run_criterion(int k, const std::string& corpus_path) {
  Report root("criterion-" + std::to_string(k));
  root.detail["title"] = criterion_title(k);
  const SubsetDoctrine p;
  const Logic<SubsetDoctrine> LP(p);
  const Window w2 = Window::standard(2);
  using Dial = DialCompletion<SubsetDoctrine>;
  switch (k) {
    case 1:
      root.add(check_hyperdoctrine(LP, 3));
      break;
    case 2:
      root.add(dial_iso_check(p, w2));
      break;
    case 3: {
      const Dial dial(p, w2);
      const Logic<Dial> L(dial);
      const FreenessDetector<Dial> F(L, w2);
      const PrincipleChecker<Dial> C(F);
      root.add(check_dialectica_extraction(C, F, {0, 1, 2}));
      break;
    }
    case 4: {
      // C^B stays within 4 for B, C <= 2; the larger base cap serves the completion's own
      // witness sorts.
      const Dial dial(SubsetDoctrine(BaseCat(16)), w2);
      const Logic<Dial> L(dial);
      const FreenessDetector<Dial> F(L, w2);
      const PrincipleChecker<Dial> C(F, Scope::elements);
      Report r = C.skolemisation();
      for (FinSet b : w2.sorts())
        for (FinSet c : w2.sorts())
          if (checked_power(c.size, b.size).value_or(SIZE_MAX) > 4) r.fail("skolemisation", "exponential above 4");
      root.add(std::move(r));
      break;
    }
    case 5:
      for (const Window& w : {w2, Window{2, true, 8}}) {
        Report r = check_freeness_characterisation(p, w);
        r.name += "/" + w.to_string();
        root.add(std::move(r));
      }
      break;
    case 6: {
      const Dial dial(p, w2);
      const Logic<Dial> L(dial);
      const FreenessDetector<Dial> F(L, w2);
      root.add(check_godel_doctrine(F));
      break;
    }
    case 7: {
      SuiteConfig c;
      c.doctrine = DoctrineSpec::builtin("dial-of-subsets");
      c.scope = Scope::elements;
      c.which = {"ip", "ipstar", "mmp", "mp", "choice", "counterexample", "chain"};
      root.add(run_suite("principles", c));
      break;
    }
    case 8: {
      const CorpusSweep s = sweep_corpus(read_corpus(corpus_path), 3, 27);
      Report r = s.report;
      if (s.formulas < 20) r.fail("translation-agreement", "corpus has fewer than 20 formulas");
      root.add(std::move(r));
      break;
    }
    case 9:
      root.add(tripos_report(LP, 2, true, true));
      break;
    default:
      throw UsageError("no criterion " + std::to_string(k));
  }
  return root;
}

}  // namespace godel
