#ifndef GODEL_FINBASE_HPP
#define GODEL_FINBASE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

namespace godel {

using Index = std::size_t;

/// Skeletal finite set: the elements are 0..size-1 and equal sizes are equal objects.
struct FinSet {
  std::size_t size = 0;

  friend bool operator==(FinSet, FinSet) = default;
  friend auto operator<=>(FinSet, FinSet) = default;
};

/// A function between finite sets given by its table.
class FinMap {
 public:
  FinMap() = default;
  /// Throws std::invalid_argument unless the table has dom.size entries below cod.size.
  FinMap(FinSet dom, FinSet cod, std::vector<Index> table);

  static FinMap identity(FinSet a);
  static FinMap constant(FinSet dom, FinSet cod, Index value);

  FinSet dom() const { return dom_; }
  FinSet cod() const { return cod_; }
  const std::vector<Index>& table() const { return table_; }
  Index operator()(Index a) const { return table_[a]; }

  std::string to_string() const;

  friend bool operator==(const FinMap&, const FinMap&) = default;
  friend auto operator<=>(const FinMap&, const FinMap&) = default;

 private:
  FinSet dom_{};
  FinSet cod_{};
  std::vector<Index> table_;
};

/// g after f.
FinMap compose(const FinMap& g, const FinMap& f);

/// Chosen product: the pair (i, j) has index i * b.size + j.
struct Product {
  FinSet object;
  FinMap first;
  FinMap second;
};
Product product(FinSet a, FinSet b);

/// Product of a list of objects, left-nested; the empty list gives the terminal object.
FinSet product_of(const std::vector<FinSet>& factors);

/// The mediating map <f, g> : X -> A x B.
FinMap pairing(const FinMap& f, const FinMap& g);
/// f x g : A x B -> A' x B'.
FinMap cross(const FinMap& f, const FinMap& g);
/// The first projection A x B -> A.
FinMap projection(FinSet a, FinSet b);
/// The second projection A x B -> B.
FinMap second_projection(FinSet a, FinSet b);
/// The diagonal A -> A x A.
FinMap diagonal(FinSet a);
/// The unique map into the terminal object.
FinMap bang(FinSet a);

/// Returns b when f is the chosen first projection cod x b -> cod, with b determined by sizes.
std::optional<FinSet> as_first_projection(const FinMap& f);

struct Pullback {
  FinSet object;
  FinMap left;   // to f.dom
  FinMap right;  // to g.dom
};
/// {(a, c) | f(a) = g(c)} enumerated in lexicographic order of (a, c).
Pullback pullback(const FinMap& f, const FinMap& g);

/// Saturating power base^exp; returns nullopt past the limit.
std::optional<std::size_t> checked_power(std::size_t base, std::size_t exp,
                                         std::size_t limit = SIZE_MAX);

/// A function table read as a numeral with the first entry most significant, so that
/// the code of a table equals its rank in lexicographic order.
Index encode_function(const std::vector<Index>& table, std::size_t cod_size);
std::vector<Index> decode_function(Index code, std::size_t dom_size, std::size_t cod_size);
/// Digit b of the numeral f, counting from the most significant digit.
Index apply_code(Index code, Index b, std::size_t dom_size, std::size_t cod_size);

struct Exponential {
  FinSet object;
  FinMap eval;  // C^B x B -> C
};

class MapRange;

/// The base category: finite sets with uncapped products and capped exponentials.
class BaseCat {
 public:
  static constexpr std::size_t kDefaultBudget = 1000000;

  explicit BaseCat(std::size_t size_cap = 4, std::size_t budget = kDefaultBudget);

  std::size_t size_cap() const { return size_cap_; }
  std::size_t budget() const { return budget_; }

  /// Throws CapExceeded when C^B is larger than size_cap.
  Exponential exponential(FinSet b, FinSet c) const;
  /// Size of C^B, or CapExceeded.
  FinSet exponential_object(FinSet b, FinSet c) const;
  bool has_exponential(FinSet b, FinSet c) const;

  /// Hom(A x B, C) -> Hom(A, C^B).
  FinMap curry(const FinMap& f, FinSet a, FinSet b) const;
  FinMap uncurry(const FinMap& g, FinSet b, FinSet c) const;

  /// All maps A -> B in lexicographic table order; throws BudgetExceeded first if needed.
  MapRange enumerate_maps(FinSet a, FinSet b) const;

 private:
  std::size_t size_cap_;
  std::size_t budget_;
};

/// Counts B^A or throws BudgetExceeded when it passes the budget.
std::size_t map_count(FinSet a, FinSet b, std::size_t budget);

/// Lazy lexicographic enumeration of the maps A -> B.
class MapRange {
 public:
  MapRange(FinSet a, FinSet b) : a_(a), b_(b) {}

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = FinMap;
    using difference_type = std::ptrdiff_t;
    using pointer = const FinMap*;
    using reference = const FinMap&;

    iterator() = default;
    iterator(FinSet a, FinSet b);

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& x, const iterator& y) { return x.done_ == y.done_; }

   private:
    FinSet b_{};
    FinMap current_;
    std::vector<Index> digits_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(a_, b_); }
  iterator end() const { return iterator(); }
  std::vector<FinMap> to_vector() const;

 private:
  FinSet a_;
  FinSet b_;
};

/// Enumeration window for sorts and contexts of the checks.
struct Window {
  std::size_t cap = 2;
  /// Whether size-0 sorts are quantified over.
  bool empty_sorts = false;
  /// Completion bodies with more points than this are left out of fiber listings.
  std::size_t max_body = 8;

  /// Sizes of quantified and auxiliary sorts.
  std::vector<FinSet> sorts() const;
  /// Sizes of contexts, always starting at 0.
  std::vector<FinSet> contexts() const;
  std::string to_string() const;

  /// cap, no empty sorts, bodies up to cap^3.
  static Window standard(std::size_t cap);
};

}  // namespace godel

#endif  // GODEL_FINBASE_HPP
