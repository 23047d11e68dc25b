#include "godel/doctrine.hpp"

#include <set>

namespace godel {

std::string map_id(const FinMap& f) {
  return std::to_string(f.dom().size) + "->" + std::to_string(f.cod().size) + ":" + f.to_string();
}

bool is_pullback(const Square& s) {
  if (s.f.cod() != s.g.cod() || s.h.cod() != s.f.dom() || s.k.cod() != s.g.dom() || s.h.dom() != s.k.dom())
    return false;
  if (compose(s.f, s.h) != compose(s.g, s.k)) return false;
  const Pullback pb = pullback(s.f, s.g);
  if (pb.object != s.h.dom()) return false;
  std::set<std::pair<Index, Index>> seen;
  for (Index d = 0; d < s.h.dom().size; ++d)
    if (!seen.emplace(s.h(d), s.k(d)).second) return false;
  return true;
}

}  // namespace godel
