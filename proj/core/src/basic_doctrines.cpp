#include "godel/basic_doctrines.hpp"

#include <stdexcept>

namespace godel {

std::string map_key(const FinMap& f) { return map_id(f); }

namespace {

std::size_t parse_size(const std::string& s) {
  std::size_t pos = 0;
  const unsigned long v = std::stoul(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("not an object size: " + s);
  return v;
}

}  // namespace

TableDoctrine TableDoctrine::from_json(const json& j) {
  TableDoctrine t;
  if (!j.is_object()) throw std::invalid_argument("doctrine: expected a JSON object");
  t.cap_ = j.at("base_cap").get<std::size_t>();
  t.base_ = BaseCat(std::max<std::size_t>(1, t.cap_));
  if (j.contains("name")) t.name_ = j["name"].get<std::string>();
  if (j.contains("flags")) {
    const json& f = j["flags"];
    t.caps_.exists = f.value("exists", false);
    t.caps_.forall = f.value("forall", false);
    t.caps_.heyting = f.value("heyting", false);
    t.caps_.equality = f.value("equality", false);
  }
  t.names_.resize(t.cap_ + 1);
  t.leq_.resize(t.cap_ + 1);
  for (auto& [key, names] : j.at("fibers").items()) {
    const std::size_t a = parse_size(key);
    if (a > t.cap_) throw std::invalid_argument("fiber over object above base_cap: " + key);
    t.names_[a] = names.get<std::vector<std::string>>();
  }
  for (std::size_t a = 0; a <= t.cap_; ++a) {
    const std::size_t n = t.names_[a].size();
    if (n == 0) throw std::invalid_argument("fiber " + std::to_string(a) + " missing or empty");
    auto& m = t.leq_[a];
    m.assign(n * n, false);
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] = true;
    const std::string key = std::to_string(a);
    if (j.contains("leq") && j["leq"].contains(key))
      for (const json& pr : j["leq"][key]) {
        auto x = t.element_id(FinSet{a}, pr.at(0).get<std::string>());
        auto y = t.element_id(FinSet{a}, pr.at(1).get<std::string>());
        if (!x || !y) throw std::invalid_argument("leq names an unknown element in fiber " + key);
        m[*x * n + *y] = true;
      }
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (m[i * n + k])
          for (std::size_t l = 0; l < n; ++l)
            if (m[k * n + l]) m[i * n + l] = true;
  }
  for (std::size_t a = 0; a <= t.cap_; ++a)
    for (std::size_t b = 0; b <= t.cap_; ++b)
      for (const FinMap& f : t.base_.enumerate_maps(FinSet{a}, FinSet{b})) {
        const std::string key = map_key(f);
        std::vector<std::size_t> table(t.names_[b].size());
        const bool given = j.contains("reindex") && j["reindex"].contains(key);
        if (!given) {
          if (a != b || f != FinMap::identity(FinSet{a}))
            throw std::invalid_argument("reindex table missing for map " + key);
          for (std::size_t i = 0; i < table.size(); ++i) table[i] = i;
        } else {
          const json& r = j["reindex"][key];
          for (std::size_t i = 0; i < table.size(); ++i) {
            const std::string& src = t.names_[b][i];
            if (!r.contains(src)) throw std::invalid_argument("reindex " + key + " misses element " + src);
            auto y = t.element_id(FinSet{a}, r[src].get<std::string>());
            if (!y) throw std::invalid_argument("reindex " + key + " names an unknown element");
            table[i] = *y;
          }
        }
        t.reindex_[key] = std::move(table);
      }
  return t;
}

json TableDoctrine::to_json() const {
  json out;
  out["base_cap"] = cap_;
  out["name"] = name_;
  out["flags"] = caps_.to_json();
  json fibers = json::object(), leq = json::object(), reindex = json::object();
  for (std::size_t a = 0; a <= cap_; ++a) {
    const std::string key = std::to_string(a);
    fibers[key] = names_[a];
    json pairs = json::array();
    const std::size_t n = names_[a].size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (i != k && leq_[a][i * n + k]) pairs.push_back({names_[a][i], names_[a][k]});
    leq[key] = std::move(pairs);
  }
  for (const auto& [key, table] : reindex_) {
    const std::size_t arrow = key.find("->");
    const std::size_t colon = key.find(':');
    const std::size_t a = parse_size(key.substr(0, arrow));
    const std::size_t b = parse_size(key.substr(arrow + 2, colon - arrow - 2));
    json m = json::object();
    for (std::size_t i = 0; i < table.size(); ++i) m[names_[b][i]] = names_[a][table[i]];
    reindex[key] = std::move(m);
  }
  out["fibers"] = std::move(fibers);
  out["leq"] = std::move(leq);
  out["reindex"] = std::move(reindex);
  return out;
}

void TableDoctrine::check_object(FinSet a) const {
  if (a.size > cap_) throw CapExceeded(a.size, cap_);
}

std::vector<std::size_t> TableDoctrine::fiber(FinSet a) const {
  check_object(a);
  std::vector<std::size_t> out(names_[a.size].size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

bool TableDoctrine::leq(FinSet a, std::size_t x, std::size_t y) const {
  check_object(a);
  const std::size_t n = names_[a.size].size();
  return leq_[a.size][x * n + y];
}

std::size_t TableDoctrine::reindex(const FinMap& f, std::size_t x) const {
  check_object(f.dom());
  check_object(f.cod());
  return reindex_.at(map_key(f)).at(x);
}

std::optional<std::size_t> TableDoctrine::element_id(FinSet a, const std::string& name) const {
  const auto& ns = names_.at(a.size);
  for (std::size_t i = 0; i < ns.size(); ++i)
    if (ns[i] == name) return i;
  return std::nullopt;
}

}  // namespace godel
