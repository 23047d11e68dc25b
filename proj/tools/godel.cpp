// Command-line entry point: translate, check, complete, tripos and demo.
// Exit status: 0 when every requested check passes, 1 on a failed check, 2 on bad input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "godel/completion.hpp"
#include "godel/errors.hpp"
#include "godel/model.hpp"
#include "godel/principles.hpp"
#include "godel/subset_doctrine.hpp"
#include "godel/suites.hpp"
#include "godel/syntax.hpp"
#include "godel/tripos.hpp"

namespace {

using namespace godel;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

int emit(const Report& r, bool as_json) {
  if (as_json)
    std::cout << r.to_json().dump(2) << "\n";
  else
    std::cout << r.to_text();
  return r.ok() ? 0 : 1;
}

/// Doctrine selection shared by check, complete and tripos.
struct DoctrineFlags {
  std::string builtin = "subsets";
  std::string file;

  void attach(CLI::App* app) {
    app->add_option("--builtin", builtin, "subsets, ex-of-subsets, un-of-subsets, dial-of-subsets or trivial");
    app->add_option("--doctrine", file, "doctrine interchange file")->check(CLI::ExistingFile);
  }
  DoctrineSpec spec() const {
    if (file.empty()) return DoctrineSpec::builtin(builtin);
    DoctrineSpec s;
    s.base = BaseKind::table;
    s.table = read_json_file(file);
    return s;
  }
};

int run_translate(const std::string& text, bool as_json, bool raw, bool verify, const std::string& model_path,
                  std::size_t cap, std::size_t budget) {
  const Formula f = parse_formula(text);
  const DialForm d = dialectica_translate(f, !raw);
  if (!verify) {
    if (as_json)
      std::cout << json{{"formula", to_string(f)}, {"translation", to_json(d)}}.dump(2) << "\n";
    else
      std::cout << to_string(d) << "\n";
    return 0;
  }
  if (model_path.empty()) throw UsageError("--verify needs --model");
  const Model m = Model::from_json(read_json_file(model_path));
  Report r = verify_witness(f, m, cap, budget).to_report("verify-witness");
  r.detail["formula"] = to_string(f);
  return emit(r, as_json);
}

int run_demo() {
  auto say = [](const std::string& s) { std::cout << s << "\n"; };
  bool ok = true;

  const std::string text = "forall x:A. P(x) -> exists y:B. Q(y)";
  const Formula f = parse_formula(text);
  say("parse      " + to_string(f));
  const DialForm d = dialectica_translate(f);
  say("translate  " + to_string(d));

  Model m;
  m.sorts = {{"A", 2}, {"B", 2}};
  m.relations["P"] = {{"A"}, {{0}, {1}}};
  m.relations["Q"] = {{"B"}, {{1}}};
  const WitnessCheck w = verify_witness(f, m, 27);
  ok = ok && w.agree();
  say("verify     P = A, Q = {1}: formula " + std::string(w.phi ? "true" : "false") + ", witness " +
      (w.witness ? json(*w.witness).dump() : "none") + (w.agree() ? ", sides agree" : ", sides DISAGREE"));

  const SubsetDoctrine p;
  const Window win = Window::standard(2);
  using Dial = DialCompletion<SubsetDoctrine>;
  const Dial dial(p, win);
  const Logic<Dial> L(dial);
  std::string sizes;
  for (std::size_t a = 0; a <= 2; ++a)
    sizes += (a ? ", " : "") + std::to_string(L.fiber(FinSet{a}).size()) + " over " + std::to_string(a);
  say("build      Dial(subsets) at cap 2: " + sizes + " listed elements");

  // exists u. forall x. true  |-  exists v. forall y. (v = 0 or y = 0), over I = 1 and U = X = V = Y = 2.
  const FinSet one{1}, two{2};
  const FreenessDetector<Dial> F(L, win);
  const PrincipleChecker<Dial> C(F);
  const auto psi = dial.embed(FinSet{4}, Subset::full(4));
  const auto phi = dial.embed(FinSet{4}, Subset::of(4, {0, 1, 2}));
  const auto pair = C.find_dialectica_pair(one, two, two, psi, two, two, phi);
  ok = ok && pair.has_value();
  say("extract    (exists u. forall x. true) -> (exists v. forall y. v = 0 | y = 0): " +
      (pair ? "f0 = " + json(pair->first.table()).dump() + ", f1 = " + json(pair->second.table()).dump()
            : std::string("no pair")));

  for (Rule r : {Rule::ip, Rule::mmp, Rule::mp, Rule::choice, Rule::counterexample}) {
    const Report rep = guarded(to_string(r), [&] { return C.rule(r); });
    ok = ok && rep.ok();
    say("principle  " + std::string(to_string(r)) + ": " + to_string(rep.status) + " on " +
        rep.detail.value("instances", json(0)).dump() + " instances");
  }

  const Logic<SubsetDoctrine> LP(p);
  const TriposToTopos<SubsetDoctrine> T(LP, 2);
  const Report laws = check_category_laws(T);
  ok = ok && laws.ok();
  say("tripos     T_P(subsets) at cap 2: " + std::to_string(T.object_count()) + " objects, category laws " +
      to_string(laws.status));
  return ok ? 0 : 1;
}

std::vector<std::size_t> parse_sizes(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stoul(item));
    } catch (const std::exception&) {
      throw UsageError("bad size list " + s);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-window checks for doctrines, Dialectica completions and Goedel's translation"};
  app.require_subcommand(1);

  // translate
  auto* tr = app.add_subcommand("translate", "print the prenex translation of a formula");
  std::string formula, model_path;
  bool tr_json = false, raw = false, verify = false;
  std::size_t tr_cap = 27, tr_budget = 1'000'000;
  tr->add_option("--formula", formula, "formula text")->required();
  tr->add_flag("--json", tr_json, "JSON output");
  tr->add_flag("--no-simplify", raw, "keep unit function sorts S^()");
  tr->add_flag("--verify", verify, "evaluate both sides in --model and search for a witness");
  tr->add_option("--model", model_path, "model file")->check(CLI::ExistingFile);
  tr->add_option("--cap", tr_cap, "largest function sort instantiated")->check(CLI::PositiveNumber);
  tr->add_option("--budget", tr_budget, "largest witness search")->check(CLI::PositiveNumber);

  // check
  auto* ck = app.add_subcommand("check", "run a check suite");
  SuiteConfig cfg;
  DoctrineFlags ck_doc;
  std::string suite, scope = "classes", which, sizes, only;
  bool ck_json = false;
  ck->add_option("--suite", suite, "hyperdoctrine, iso, freeness, skolem, godel, principles, extraction, translation")
      ->required();
  ck_doc.attach(ck);
  ck->add_option("--cap,--bound", cfg.cap, "window cap")->check(CLI::PositiveNumber);
  ck->add_option("--base-cap", cfg.base_cap, "largest exponential object")->check(CLI::PositiveNumber);
  ck->add_option("--budget", cfg.budget, "enumeration budget")->check(CLI::PositiveNumber);
  ck->add_option("--scope", scope, "classes or elements")->check(CLI::IsMember({"classes", "elements"}));
  ck->add_flag("--empty-sorts", cfg.empty_sorts, "quantify over the empty sort too");
  ck->add_option("--which", which, "comma-separated principles");
  ck->add_option("--sizes", sizes, "comma-separated carrier sizes for the extraction sweep");
  ck->add_option("--only", only, "replay one instance id");
  ck->add_option("--corpus", cfg.corpus, "formula corpus for the translation suite")->check(CLI::ExistingFile);
  ck->add_option("--max-carrier", cfg.max_carrier, "largest model carrier")->check(CLI::PositiveNumber);
  ck->add_option("--model-cap", cfg.model_cap, "largest function sort in models")->check(CLI::PositiveNumber);
  ck->add_flag("--json", ck_json, "JSON output");

  // complete
  auto* cp = app.add_subcommand("complete", "list a fiber of a completion in the interchange format");
  DoctrineFlags cp_doc;
  std::string kind;
  std::size_t fiber = 1, cp_cap = 2;
  cp->add_option("--kind", kind, "ex, un or dial")->required()->check(CLI::IsMember({"ex", "un", "dial"}));
  cp_doc.attach(cp);
  cp->add_option("--cap", cp_cap, "window cap")->check(CLI::PositiveNumber);
  cp->add_option("--fiber", fiber, "object size")->required();

  // tripos
  auto* tp = app.add_subcommand("tripos", "build T_P and Pred(P)");
  DoctrineFlags tp_doc;
  std::size_t tp_cap = 2;
  bool laws = false, count = false, tp_json = false;
  tp_doc.attach(tp);
  tp->add_option("--cap", tp_cap, "largest carrier")->check(CLI::PositiveNumber);
  tp->add_flag("--laws", laws, "check category laws and small limits");
  tp->add_flag("--count", count, "count objects and arrows");
  tp->add_flag("--json", tp_json, "JSON output");

  auto* demo = app.add_subcommand("demo", "narrated end-to-end run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (tr->parsed()) return run_translate(formula, tr_json, raw, verify, model_path, tr_cap, tr_budget);
    if (ck->parsed()) {
      cfg.doctrine = ck_doc.spec();
      cfg.scope = scope == "elements" ? Scope::elements : Scope::classes;
      if (!which.empty()) {
        std::stringstream in(which);
        for (std::string w; std::getline(in, w, ',');) cfg.which.push_back(w);
      }
      if (!sizes.empty()) cfg.sizes = parse_sizes(sizes);
      if (!only.empty()) cfg.only.id = only;
      return emit(run_suite(suite, cfg), ck_json);
    }
    if (cp->parsed()) {
      SuiteConfig c;
      c.doctrine = cp_doc.spec();
      if (c.doctrine.completion != CompletionKind::none)
        throw UsageError("complete takes a base doctrine; the completion comes from --kind");
      c.doctrine.completion = DoctrineSpec::completion_kind(kind);
      c.cap = cp_cap;
      std::cout << dump_fiber(c, fiber).dump(2) << "\n";
      return 0;
    }
    if (tp->parsed()) {
      SuiteConfig c;
      c.doctrine = tp_doc.spec();
      c.cap = tp_cap;
      if (!laws && !count) count = true;
      return emit(run_tripos(c, laws, count), tp_json);
    }
    if (demo->parsed()) return run_demo();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const SortError& e) {
    std::cerr << "sort error: " << e.what() << "\n";
    return 2;
  } catch (const UnboundSymbol& e) {
    std::cerr << "unbound symbol: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    // Cap and budget limits: the request is outside what can be enumerated.
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
