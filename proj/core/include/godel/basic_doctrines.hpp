#ifndef GODEL_BASIC_DOCTRINES_HPP
#define GODEL_BASIC_DOCTRINES_HPP

#include <map>
#include <string>
#include <vector>

#include "godel/doctrine.hpp"

namespace godel {

struct Unit {
  friend bool operator==(Unit, Unit) = default;
  friend auto operator<=>(Unit, Unit) = default;
};

/// Every fiber has exactly one element.
class TrivialDoctrine {
 public:
  using Element = Unit;

  explicit TrivialDoctrine(BaseCat base = BaseCat()) : base_(base) {}

  std::string name() const { return "trivial"; }
  const BaseCat& base() const { return base_; }
  Capabilities capabilities() const { return {true, true, true, true}; }
  std::vector<Unit> fiber(FinSet) const { return {Unit{}}; }
  bool leq(FinSet, Unit, Unit) const { return true; }
  Unit reindex(const FinMap&, Unit) const { return {}; }
  json describe(Unit) const { return "*"; }
  Unit exists_along(const FinMap&, Unit) const { return {}; }
  Unit forall_along(const FinMap&, Unit) const { return {}; }
  Unit top(FinSet) const { return {}; }
  Unit bottom(FinSet) const { return {}; }
  Unit meet(FinSet, Unit, Unit) const { return {}; }
  Unit join(FinSet, Unit, Unit) const { return {}; }
  Unit impl(FinSet, Unit, Unit) const { return {}; }

 private:
  BaseCat base_;
};

/// A doctrine given by explicit tables over the objects of size <= base_cap, read from the
/// interchange format. Elements are positions in their fiber's name list.
class TableDoctrine {
 public:
  using Element = std::size_t;

  /// Throws std::invalid_argument on malformed input, missing maps, or a leq that is not
  /// a preorder after closure.
  static TableDoctrine from_json(const json& j);
  json to_json() const;

  std::string name() const { return name_; }
  const BaseCat& base() const { return base_; }
  std::size_t base_cap() const { return cap_; }
  std::size_t max_object() const { return cap_; }
  Capabilities capabilities() const { return caps_; }
  std::vector<std::size_t> fiber(FinSet a) const;
  bool leq(FinSet a, std::size_t x, std::size_t y) const;
  std::size_t reindex(const FinMap& f, std::size_t x) const;
  json describe(std::size_t x) const { return std::to_string(x); }
  const std::string& element_name(FinSet a, std::size_t x) const { return names_.at(a.size).at(x); }
  std::optional<std::size_t> element_id(FinSet a, const std::string& name) const;

 private:
  void check_object(FinSet a) const;

  std::string name_ = "table";
  std::size_t cap_ = 0;
  BaseCat base_;
  Capabilities caps_;
  std::vector<std::vector<std::string>> names_;
  std::vector<std::vector<bool>> leq_;  // per object, n*n
  std::map<std::string, std::vector<std::size_t>> reindex_;
};

/// Interchange rendering of the window of any doctrine over objects of the given sizes.
/// Reindexing tables are included for every map among those objects.
template <Doctrine D>
json export_table(const Logic<D>& L, const std::vector<FinSet>& objects, bool with_reindex = true);

std::string map_key(const FinMap& f);

template <Doctrine D>
json export_table(const Logic<D>& L, const std::vector<FinSet>& objects, bool with_reindex) {
  const D& d = L.doctrine();
  json out;
  std::size_t cap = 0;
  for (FinSet a : objects) cap = std::max(cap, a.size);
  out["base_cap"] = cap;
  out["name"] = d.name();
  out["flags"] = d.capabilities().to_json();
  json fibers = json::object(), leq = json::object(), reindex = json::object(), elements = json::object();
  for (FinSet a : objects) {
    const auto& t = L.fiber(a);
    json names = json::array(), pairs = json::array(), described = json::array();
    for (std::size_t i = 0; i < t.size(); ++i) {
      names.push_back("e" + std::to_string(i));
      described.push_back(d.describe(t.elements()[i]));
    }
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t k = 0; k < t.size(); ++k)
        if (i != k && t.class_leq(t.class_of(i), t.class_of(k)))
          pairs.push_back({"e" + std::to_string(i), "e" + std::to_string(k)});
    const std::string key = std::to_string(a.size);
    fibers[key] = std::move(names);
    leq[key] = std::move(pairs);
    elements[key] = std::move(described);
  }
  if (with_reindex) {
    for (FinSet a : objects)
      for (FinSet b : objects)
        for (const FinMap& f : d.base().enumerate_maps(a, b)) {
          const auto& src = L.fiber(b);
          const auto& dst = L.fiber(a);
          json table = json::object();
          for (std::size_t i = 0; i < src.size(); ++i) {
            auto c = dst.classify(d.reindex(f, src.elements()[i]));
            if (!c) throw NoSuchElement("reindexed element outside the exported window");
            table["e" + std::to_string(i)] = "e" + std::to_string(dst.rep_id(*c));
          }
          reindex[map_key(f)] = std::move(table);
        }
  }
  out["fibers"] = std::move(fibers);
  out["leq"] = std::move(leq);
  out["elements"] = std::move(elements);
  if (with_reindex) out["reindex"] = std::move(reindex);
  return out;
}

}  // namespace godel

#endif  // GODEL_BASIC_DOCTRINES_HPP
