#include "godel/subset.hpp"

#include <bit>
#include <stdexcept>

namespace godel {

Subset Subset::full(std::size_t carrier) {
  Subset s(carrier);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.trim();
  return s;
}

Subset Subset::of(std::size_t carrier, const std::vector<Index>& members) {
  Subset s(carrier);
  for (Index i : members) {
    if (i >= carrier) throw std::invalid_argument("Subset::of: member outside carrier");
    s.insert(i);
  }
  return s;
}

Subset Subset::from_mask(std::size_t carrier, std::uint64_t mask) {
  if (carrier > 64) throw std::invalid_argument("Subset::from_mask: carrier above 64");
  Subset s(carrier);
  if (!s.words_.empty()) s.words_[0] = mask;
  s.trim();
  return s;
}

void Subset::trim() {
  if (size_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
}

bool Subset::empty() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

bool Subset::is_full() const { return count() == size_; }

std::size_t Subset::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Subset::subset_of(const Subset& other) const {
  if (other.size_ != size_) throw std::invalid_argument("Subset: carrier mismatch");
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k] & ~other.words_[k]) return false;
  return true;
}

std::vector<Index> Subset::members() const {
  std::vector<Index> out;
  for (Index i = 0; i < size_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

Subset Subset::operator&(const Subset& o) const {
  if (o.size_ != size_) throw std::invalid_argument("Subset: carrier mismatch");
  Subset r = *this;
  for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= o.words_[k];
  return r;
}

Subset Subset::operator|(const Subset& o) const {
  if (o.size_ != size_) throw std::invalid_argument("Subset: carrier mismatch");
  Subset r = *this;
  for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] |= o.words_[k];
  return r;
}

Subset Subset::operator~() const {
  Subset r = *this;
  for (auto& w : r.words_) w = ~w;
  r.trim();
  return r;
}

std::string Subset::to_string() const {
  std::string s = "{";
  bool first = true;
  for (Index i : members()) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

Subset preimage(const FinMap& f, const Subset& s) {
  if (s.carrier() != f.cod().size) throw std::invalid_argument("preimage: carrier mismatch");
  Subset r(f.dom().size);
  for (Index a = 0; a < f.dom().size; ++a)
    if (s.contains(f(a))) r.insert(a);
  return r;
}

Subset image(const FinMap& f, const Subset& s) {
  if (s.carrier() != f.dom().size) throw std::invalid_argument("image: carrier mismatch");
  Subset r(f.cod().size);
  for (Index a = 0; a < f.dom().size; ++a)
    if (s.contains(a)) r.insert(f(a));
  return r;
}

Subset dual_image(const FinMap& f, const Subset& s) {
  if (s.carrier() != f.dom().size) throw std::invalid_argument("dual_image: carrier mismatch");
  Subset r = Subset::full(f.cod().size);
  for (Index a = 0; a < f.dom().size; ++a)
    if (!s.contains(a)) r.erase(f(a));
  return r;
}

}  // namespace godel
