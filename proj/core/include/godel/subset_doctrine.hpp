#ifndef GODEL_SUBSET_DOCTRINE_HPP
#define GODEL_SUBSET_DOCTRINE_HPP

#include <string>
#include <vector>

#include "godel/doctrine.hpp"
#include "godel/subset.hpp"

namespace godel {

/// P(A) = all subsets of A ordered by inclusion; reindexing is preimage.
class SubsetDoctrine {
 public:
  using Element = Subset;
  /// Fibers above this many points are refused by fiber().
  static constexpr std::size_t kMaxListedCarrier = 20;

  explicit SubsetDoctrine(BaseCat base = BaseCat()) : base_(base) {}

  std::string name() const { return "subsets"; }
  const BaseCat& base() const { return base_; }
  Capabilities capabilities() const { return {true, true, true, true}; }

  std::vector<Subset> fiber(FinSet a) const;
  bool leq(FinSet, const Subset& x, const Subset& y) const { return x.subset_of(y); }
  Subset reindex(const FinMap& f, const Subset& s) const { return preimage(f, s); }
  json describe(const Subset& s) const { return s.to_string(); }

  Subset exists_along(const FinMap& f, const Subset& s) const { return image(f, s); }
  Subset forall_along(const FinMap& f, const Subset& s) const { return dual_image(f, s); }

  Subset top(FinSet a) const { return Subset::full(a.size); }
  Subset bottom(FinSet a) const { return Subset(a.size); }
  Subset meet(FinSet, const Subset& x, const Subset& y) const { return x & y; }
  Subset join(FinSet, const Subset& x, const Subset& y) const { return x | y; }
  Subset impl(FinSet, const Subset& x, const Subset& y) const { return ~x | y; }
  /// The diagonal of A x A.
  Subset equality(FinSet a) const;

  /// Membership of one point; completions use this for pointwise witness search.
  static bool holds(const Subset& s, Index i) { return s.contains(i); }

 private:
  BaseCat base_;
};

/// Marks doctrines whose fibers are full powersets with pointwise order and preimage
/// reindexing, which lets order witnesses in the completions be chosen entry by entry.
template <class D>
inline constexpr bool is_pointwise_v = false;
template <>
inline constexpr bool is_pointwise_v<SubsetDoctrine> = true;

}  // namespace godel

#endif  // GODEL_SUBSET_DOCTRINE_HPP
