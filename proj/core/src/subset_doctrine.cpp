#include "godel/subset_doctrine.hpp"

#include "godel/errors.hpp"

namespace godel {

std::vector<Subset> SubsetDoctrine::fiber(FinSet a) const {
  if (a.size > kMaxListedCarrier) throw BudgetExceeded(std::size_t{1} << std::min<std::size_t>(a.size, 63), base_.budget());
  const std::size_t n = std::size_t{1} << a.size;
  if (n > base_.budget()) throw BudgetExceeded(n, base_.budget());
  std::vector<Subset> out;
  out.reserve(n);
  for (std::uint64_t m = 0; m < n; ++m) out.push_back(Subset::from_mask(a.size, m));
  return out;
}

Subset SubsetDoctrine::equality(FinSet a) const { return image(diagonal(a), Subset::full(a.size)); }

}  // namespace godel
