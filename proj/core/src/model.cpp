#include "godel/model.hpp"

#include <fstream>

#include "godel/errors.hpp"
#include "godel/subset_doctrine.hpp"

namespace godel {

// Model files.

namespace {

std::size_t sort_size(const std::map<std::string, std::size_t>& sorts, const std::string& s) {
  if (s == "Bool") return 2;
  auto it = sorts.find(s);
  if (it == sorts.end()) throw SortError("model has no sort " + s);
  return it->second;
}

std::size_t arg_product(const std::map<std::string, std::size_t>& sorts, const std::vector<std::string>& args) {
  std::size_t n = 1;
  for (const std::string& a : args) n *= sort_size(sorts, a);
  return n;
}

}  // namespace

void Model::validate() const {
  for (const auto& [name, f] : functions) {
    if (f.table.size() != arg_product(sorts, f.args))
      throw SortError("function " + name + " has a table of the wrong length");
    const std::size_t r = sort_size(sorts, f.result);
    for (Index v : f.table)
      if (v >= r) throw SortError("function " + name + " has a value outside its result sort");
  }
  for (const auto& [name, rel] : relations)
    for (const auto& t : rel.tuples) {
      if (t.size() != rel.args.size()) throw SortError("relation " + name + " has a tuple of the wrong arity");
      for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i] >= sort_size(sorts, rel.args[i])) throw SortError("relation " + name + " has an out-of-range tuple");
    }
}

Model Model::from_json(const json& j) {
  Model m;
  try {
    const json sorts = j.value("sorts", json::object());
    const json functions = j.value("functions", json::object());
    const json relations = j.value("relations", json::object());
    for (const auto& [k, v] : sorts.items()) m.sorts[k] = v.get<std::size_t>();
    for (const auto& [k, v] : functions.items())
      m.functions[k] = {v.at("args").get<std::vector<std::string>>(), v.at("result").get<std::string>(),
                        v.at("table").get<std::vector<Index>>()};
    for (const auto& [k, v] : relations.items()) {
      Relation r;
      r.args = v.at("args").get<std::vector<std::string>>();
      for (const auto& t : v.at("tuples")) r.tuples.insert(t.get<std::vector<Index>>());
      m.relations[k] = std::move(r);
    }
  } catch (const json::exception& e) {
    throw SortError(std::string("malformed model: ") + e.what());
  }
  m.validate();
  return m;
}

json Model::to_json() const {
  json s = json::object(), f = json::object(), r = json::object();
  for (const auto& [k, v] : sorts) s[k] = v;
  for (const auto& [k, v] : functions) f[k] = {{"args", v.args}, {"result", v.result}, {"table", v.table}};
  for (const auto& [k, v] : relations) {
    json tuples = json::array();
    for (const auto& t : v.tuples) tuples.push_back(t);
    r[k] = {{"args", v.args}, {"tuples", tuples}};
  }
  return {{"sorts", s}, {"functions", f}, {"relations", r}};
}

// Evaluation.

Evaluator::Evaluator(const Model& m, std::size_t cap, std::size_t budget)
    : m_(m), cap_(cap), budget_(budget), base_(cap, budget) {}

std::size_t Evaluator::size(const SortExpr& s) const {
  switch (s.kind) {
    case SortExpr::Kind::boolean:
      return 2;
    case SortExpr::Kind::base: {
      auto it = m_.sorts.find(s.name);
      if (it == m_.sorts.end()) throw UnboundSymbol("model has no sort " + s.name);
      return it->second;
    }
    case SortExpr::Kind::fun: {
      std::size_t d = 1;
      for (const SortExpr& x : s.dom) d *= size(x);
      const std::size_t c = size(s.codomain());
      auto n = checked_power(c, d, cap_);
      if (!n) throw CapExceeded(checked_power(c, d).value_or(SIZE_MAX), cap_);
      return *n;
    }
  }
  return 0;
}

namespace {

/// The map Gamma -> tuple of the given term maps, in left-nested order.
FinMap tuple_of(const std::vector<FinMap>& maps, FinSet gamma) {
  FinMap acc = FinMap::constant(gamma, FinSet{1}, 0);
  for (const FinMap& m : maps) acc = pairing(acc, m);
  return acc;
}

}  // namespace

FinMap Evaluator::term_map(const Term& t, const Context& ctx, FinSet gamma) const {
  for (std::size_t k = ctx.size(); k-- > 0;) {
    if (ctx[k].name != t.name) continue;
    std::size_t stride = 1;
    for (std::size_t j = k + 1; j < ctx.size(); ++j) stride *= size(ctx[j].sort);
    SortExpr s = ctx[k].sort;
    const std::size_t n = size(s);
    std::vector<Index> table(gamma.size);
    for (Index g = 0; g < gamma.size; ++g) table[g] = (g / stride) % n;
    FinMap value(gamma, FinSet{n}, std::move(table));
    std::size_t i = 0;
    while (i < t.args.size()) {
      if (!s.is_fun() || t.args.size() - i < s.dom.size()) throw SortError("ill-sorted application of " + t.name);
      std::vector<FinMap> args;
      for (std::size_t d = 0; d < s.dom.size(); ++d) args.push_back(term_map(t.args[i++], ctx, gamma));
      // ev : C^B x B -> C applied to <value, args>.
      const FinSet b{tuple_of(args, gamma).cod().size};
      const Exponential e = base_.exponential(b, FinSet{size(s.codomain())});
      value = compose(e.eval, pairing(value, tuple_of(args, gamma)));
      s = s.codomain();
    }
    return value;
  }
  auto it = m_.functions.find(t.name);
  if (it == m_.functions.end() || t.args.empty()) throw UnboundSymbol("no interpretation for " + t.name);
  const Model::Function& f = it->second;
  if (f.args.size() != t.args.size()) throw SortError("function " + t.name + " applied with the wrong arity");
  std::vector<FinMap> args;
  for (const Term& a : t.args) args.push_back(term_map(a, ctx, gamma));
  const FinMap tuple = tuple_of(args, gamma);
  return compose(FinMap(tuple.cod(), FinSet{sort_size(m_.sorts, f.result)}, f.table), tuple);
}

Subset Evaluator::interpret(const Formula& f, const Context& ctx) const {
  const SubsetDoctrine p;
  std::vector<FinSet> sizes;
  for (const Var& v : ctx) sizes.push_back(FinSet{size(v.sort)});
  const FinSet gamma = product_of(sizes);
  if (gamma.size > budget_) throw BudgetExceeded(gamma.size, budget_);
  switch (f.op) {
    case Op::top:
      return p.top(gamma);
    case Op::bottom:
      return p.bottom(gamma);
    case Op::atom: {
      std::vector<FinMap> args;
      for (const Term& t : f.args) args.push_back(term_map(t, ctx, gamma));
      const FinMap tuple = tuple_of(args, gamma);
      Subset rel(tuple.cod().size);
      if (f.name == kIsZero || f.name == kIsOne) {
        rel.insert(f.name == kIsZero ? 0 : 1);
      } else {
        auto it = m_.relations.find(f.name);
        if (it == m_.relations.end()) throw UnboundSymbol("no interpretation for relation " + f.name);
        for (const auto& tup : it->second.tuples) {
          if (tup.size() != args.size()) throw SortError("relation " + f.name + " applied with the wrong arity");
          Index code = 0;
          for (std::size_t i = 0; i < tup.size(); ++i) code = code * args[i].cod().size + tup[i];
          rel.insert(code);
        }
      }
      return p.reindex(tuple, rel);
    }
    case Op::conj:
      return p.meet(gamma, interpret(f.kids[0], ctx), interpret(f.kids[1], ctx));
    case Op::disj:
      return p.join(gamma, interpret(f.kids[0], ctx), interpret(f.kids[1], ctx));
    case Op::impl:
      return p.impl(gamma, interpret(f.kids[0], ctx), interpret(f.kids[1], ctx));
    case Op::exists:
    case Op::forall: {
      Context inner = ctx;
      inner.push_back({f.name, f.sort});
      const FinMap pi = projection(gamma, FinSet{size(f.sort)});
      const Subset body = interpret(f.kids[0], inner);
      return f.op == Op::exists ? p.exists_along(pi, body) : p.forall_along(pi, body);
    }
  }
  return p.bottom(gamma);
}

Evaluator::TypedEnv Evaluator::typed(const Formula& f, const Env& env) const {
  const Signature sig = infer_signature(f);
  // Sorts left open by the formula are read off the model's declarations.
  std::map<std::string, std::string> open;
  auto learn = [&](const std::vector<std::string>& used, const std::vector<std::string>& declared) {
    for (std::size_t i = 0; i < used.size() && i < declared.size(); ++i)
      if (!used[i].empty() && used[i][0] == '?') open.emplace(used[i], declared[i]);
  };
  for (const auto& [r, args] : sig.relations)
    if (auto it = m_.relations.find(r); it != m_.relations.end()) learn(args, it->second.args);
  for (const auto& [g, fs] : sig.functions)
    if (auto it = m_.functions.find(g); it != m_.functions.end()) {
      learn(fs.args, it->second.args);
      learn({fs.result}, {it->second.result});
    }
  TypedEnv out;
  for (const std::string& v : free_variables(f)) {
    auto it = env.find(v);
    if (it == env.end()) throw UnboundSymbol("free variable " + v + " has no value");
    std::string s = sig.free.at(v);
    if (!s.empty() && s[0] == '?') {
      if (!open.count(s)) throw SortError("cannot infer the sort of " + v);
      s = open.at(s);
    }
    SortExpr sort = parse_sort(s);
    if (it->second >= size(sort)) throw SortError("value of " + v + " lies outside its sort");
    out[v] = {it->second, std::move(sort)};
  }
  return out;
}

bool Evaluator::eval(const Formula& f, const Env& env) const {
  Context ctx;
  Index at = 0;
  for (const auto& [name, vs] : typed(f, env)) {
    ctx.push_back({name, vs.second});
    at = at * size(vs.second) + vs.first;
  }
  return SubsetDoctrine::holds(interpret(f, ctx), at);
}

Index Evaluator::term_value(const Term& t, const TypedEnv& env) const {
  if (auto it = env.find(t.name); it != env.end()) {
    Index v = it->second.first;
    SortExpr s = it->second.second;
    std::size_t i = 0;
    while (i < t.args.size()) {
      if (!s.is_fun() || t.args.size() - i < s.dom.size()) throw SortError("ill-sorted application of " + t.name);
      Index b = 0;
      std::size_t dom = 1;
      for (const SortExpr& d : s.dom) {
        b = b * size(d) + term_value(t.args[i++], env);
        dom *= size(d);
      }
      v = apply_code(v, b, dom, size(s.codomain()));
      s = s.codomain();
    }
    return v;
  }
  auto it = m_.functions.find(t.name);
  if (it == m_.functions.end() || t.args.empty()) throw UnboundSymbol("no interpretation for " + t.name);
  const Model::Function& f = it->second;
  if (f.args.size() != t.args.size()) throw SortError("function " + t.name + " applied with the wrong arity");
  Index code = 0;
  for (std::size_t i = 0; i < t.args.size(); ++i)
    code = code * sort_size(m_.sorts, f.args[i]) + term_value(t.args[i], env);
  return f.table[code];
}

bool Evaluator::holds(const Formula& f, TypedEnv& env) const {
  switch (f.op) {
    case Op::top:
      return true;
    case Op::bottom:
      return false;
    case Op::atom: {
      std::vector<Index> tup;
      for (const Term& t : f.args) tup.push_back(term_value(t, env));
      if (f.name == kIsZero) return tup.at(0) == 0;
      if (f.name == kIsOne) return tup.at(0) == 1;
      auto it = m_.relations.find(f.name);
      if (it == m_.relations.end()) throw UnboundSymbol("no interpretation for relation " + f.name);
      return it->second.tuples.count(tup) > 0;
    }
    case Op::conj:
      return holds(f.kids[0], env) && holds(f.kids[1], env);
    case Op::disj:
      return holds(f.kids[0], env) || holds(f.kids[1], env);
    case Op::impl:
      return !holds(f.kids[0], env) || holds(f.kids[1], env);
    case Op::exists:
    case Op::forall: {
      const bool want = f.op == Op::exists;
      const std::size_t n = size(f.sort);
      auto saved = env.find(f.name) == env.end() ? std::nullopt : std::optional(env.at(f.name));
      bool result = !want;
      for (Index a = 0; a < n && result != want; ++a) {
        env[f.name] = {a, f.sort};
        if (holds(f.kids[0], env) == want) result = want;
      }
      if (saved) env[f.name] = *saved;
      else env.erase(f.name);
      return result;
    }
  }
  return false;
}

bool Evaluator::tarski(const Formula& f, const Env& env) const {
  TypedEnv t = typed(f, env);
  return holds(f, t);
}

// Witnesses.

Report WitnessCheck::to_report(const std::string& name) const {
  Report r(name);
  r.detail = {{"translation", godel::to_json(dial)},
              {"phi", phi},
              {"phi_tarski", phi_tarski},
              {"dial", dial_value},
              {"dial_tarski", dial_tarski},
              {"witness", witness ? json(*witness) : json(nullptr)},
              {"candidates", candidates}};
  if (!agree()) r.fail(name, "the formula and its translation disagree");
  return r;
}

namespace {

/// Advances a mixed-radix counter, last digit fastest; false after the last tuple.
bool advance(std::vector<Index>& digits, const std::vector<std::size_t>& radix) {
  for (std::size_t k = digits.size(); k-- > 0;) {
    if (++digits[k] < radix[k]) return true;
    digits[k] = 0;
  }
  return false;
}

std::size_t count_tuples(const std::vector<std::size_t>& radix, std::size_t budget) {
  std::size_t n = 1;
  for (std::size_t r : radix) {
    if (r == 0) return 0;
    if (n > budget / r) throw BudgetExceeded(budget + 1, budget);
    n *= r;
  }
  if (n > budget) throw BudgetExceeded(n, budget);
  return n;
}

}  // namespace

WitnessCheck verify_witness(const Formula& f, const Model& m, std::size_t cap, std::size_t budget, const Env& env) {
  const Evaluator ev(m, cap, budget);
  WitnessCheck out;
  out.dial = dialectica_translate(f);
  std::vector<std::size_t> wr, cr;
  for (const Binder& b : out.dial.witnesses) wr.push_back(ev.size(b.sort));
  for (const Binder& b : out.dial.counters) cr.push_back(ev.size(b.sort));
  const std::size_t wn = count_tuples(wr, budget);
  count_tuples(cr, budget);

  out.phi = ev.eval(f, env);
  out.phi_tarski = ev.tarski(f, env);
  const Formula df = out.dial.to_formula();
  out.dial_value = ev.eval(df, env);
  out.dial_tarski = ev.tarski(df, env);

  Evaluator::TypedEnv te = ev.typed(f, env);
  std::vector<Index> w(wr.size(), 0);
  for (std::size_t k = 0; k < wn; ++k, advance(w, wr)) {
    ++out.candidates;
    for (std::size_t i = 0; i < w.size(); ++i) te[out.dial.witnesses[i].name] = {w[i], out.dial.witnesses[i].sort};
    bool all = true;
    std::vector<Index> x(cr.size(), 0);
    if (count_tuples(cr, budget) > 0) {
      do {
        for (std::size_t i = 0; i < x.size(); ++i) te[out.dial.counters[i].name] = {x[i], out.dial.counters[i].sort};
        all = ev.holds(out.dial.matrix, te);
      } while (all && advance(x, cr));
    }
    if (all) {
      out.witness = w;
      break;
    }
  }
  return out;
}

// Model enumeration.

std::size_t for_each_model(const Signature& sig, std::size_t max_carrier, std::size_t budget,
                           const std::function<void(const Model&)>& fn) {
  // Sorts the formula leaves open are enumerated like named ones.
  std::set<std::string> names = sig.sorts;
  auto note = [&](const std::string& s) {
    if (!s.empty() && s[0] == '?') names.insert(s);
  };
  for (const auto& [r, args] : sig.relations)
    for (const auto& a : args) note(a);
  for (const auto& [g, fs] : sig.functions) {
    for (const auto& a : fs.args) note(a);
    note(fs.result);
  }
  const std::vector<std::string> sorts(names.begin(), names.end());
  auto check_sort = [&](const std::string& s) {
    if (s != "Bool" && !names.count(s)) throw SortError("cannot enumerate models over sort " + s);
  };
  for (const auto& [r, args] : sig.relations)
    for (const auto& a : args) check_sort(a);
  for (const auto& [g, fs] : sig.functions) {
    for (const auto& a : fs.args) check_sort(a);
    check_sort(fs.result);
  }

  std::size_t total = 0;
  std::vector<Index> sz(sorts.size(), 0);
  const std::vector<std::size_t> sradix(sorts.size(), max_carrier);
  if (max_carrier == 0) return 0;
  do {
    Model base;
    for (std::size_t i = 0; i < sorts.size(); ++i) base.sorts[sorts[i]] = sz[i] + 1;
    // One digit per relation (a subset mask) and per function (a table code).
    std::vector<std::size_t> radix;
    std::vector<std::size_t> cells;
    for (const auto& [r, args] : sig.relations) {
      const std::size_t n = arg_product(base.sorts, args);
      if (n >= 20) throw BudgetExceeded(SIZE_MAX, budget);
      radix.push_back(std::size_t{1} << n);
      cells.push_back(n);
    }
    for (const auto& [g, fs] : sig.functions) {
      const std::size_t n = arg_product(base.sorts, fs.args);
      auto c = checked_power(sort_size(base.sorts, fs.result), n, budget);
      if (!c) throw BudgetExceeded(SIZE_MAX, budget);
      radix.push_back(*c);
      cells.push_back(n);
    }
    const std::size_t count = count_tuples(radix, budget);
    if (total + count > budget) throw BudgetExceeded(total + count, budget);
    total += count;
    std::vector<Index> d(radix.size(), 0);
    for (std::size_t k = 0; k < count; ++k, advance(d, radix)) {
      Model m = base;
      std::size_t i = 0;
      for (const auto& [r, args] : sig.relations) {
        Model::Relation rel{args, {}};
        for (Index code = 0; code < cells[i]; ++code) {
          if (!((d[i] >> code) & 1U)) continue;
          std::vector<Index> tup(args.size());
          Index rest = code;
          for (std::size_t a = args.size(); a-- > 0;) {
            const std::size_t s = sort_size(base.sorts, args[a]);
            tup[a] = rest % s;
            rest /= s;
          }
          rel.tuples.insert(std::move(tup));
        }
        m.relations[r] = std::move(rel);
        ++i;
      }
      for (const auto& [g, fs] : sig.functions) {
        m.functions[g] = {fs.args, fs.result, decode_function(d[i], cells[i], sort_size(base.sorts, fs.result))};
        ++i;
      }
      fn(m);
    }
  } while (advance(sz, sradix));
  return total;
}

CorpusSweep sweep_corpus(const std::vector<std::string>& corpus, std::size_t max_carrier, std::size_t cap,
                         std::size_t budget) {
  CorpusSweep out;
  out.report = Report("translation-agreement");
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const std::string id = "formula-" + std::to_string(i);
    Report r(id);
    std::size_t models = 0, skipped = 0, pairs = 0, bad = 0;
    try {
      const Formula f = parse_formula(corpus[i]);
      for_each_model(infer_signature(f), max_carrier, budget, [&](const Model& m) {
        const std::string inst = id + "/model-" + std::to_string(models++);
        try {
          const WitnessCheck c = verify_witness(f, m, cap, budget);
          ++pairs;
          if (!c.agree()) {
            ++bad;
            json data = c.to_report(inst).detail;
            data["model"] = m.to_json();
            if (r.ok()) r.fail(inst, "the formula and its translation disagree", data);
          }
        } catch (const CapExceeded&) {
          ++skipped;
        }
      });
    } catch (const Error& e) {
      r.fail(id, e.what());
    }
    r.detail["formula"] = corpus[i];
    r.detail["models"] = models;
    r.detail["pairs"] = pairs;
    r.detail["skipped"] = skipped;
    r.detail["disagreements"] = bad;
    ++out.formulas;
    out.pairs += pairs;
    out.skipped += skipped;
    out.disagreements += bad;
    out.report.add(std::move(r));
  }
  out.report.detail = {{"formulas", out.formulas},
                       {"pairs", out.pairs},
                       {"skipped", out.skipped},
                       {"disagreements", out.disagreements},
                       {"max_carrier", max_carrier},
                       {"cap", cap}};
  return out;
}

std::vector<std::string> read_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read corpus " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto e = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(b, e - b + 1));
  }
  return out;
}

}  // namespace godel
