#ifndef GODEL_SUBSET_HPP
#define GODEL_SUBSET_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "godel/finbase.hpp"

namespace godel {

/// A subset of a finite carrier as a bitset; bits past the carrier are always clear.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t carrier) : size_(carrier), words_((carrier + 63) / 64, 0) {}

  static Subset full(std::size_t carrier);
  static Subset of(std::size_t carrier, const std::vector<Index>& members);
  /// Members given by the low bits of mask.
  static Subset from_mask(std::size_t carrier, std::uint64_t mask);

  std::size_t carrier() const { return size_; }
  bool contains(Index i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void insert(Index i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(Index i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void assign(Index i, bool v) { v ? insert(i) : erase(i); }

  bool empty() const;
  bool is_full() const;
  std::size_t count() const;
  bool subset_of(const Subset& other) const;
  std::vector<Index> members() const;
  /// Low 64 bits, for carriers up to 64 points.
  std::uint64_t mask() const { return words_.empty() ? 0 : words_[0]; }

  Subset operator&(const Subset& o) const;
  Subset operator|(const Subset& o) const;
  /// Complement within the carrier.
  Subset operator~() const;

  std::string to_string() const;

  friend bool operator==(const Subset&, const Subset&) = default;
  friend auto operator<=>(const Subset&, const Subset&) = default;

 private:
  void trim();

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Preimage of s under f.
Subset preimage(const FinMap& f, const Subset& s);
/// Image of s under f.
Subset image(const FinMap& f, const Subset& s);
/// {b | every a with f(a) = b lies in s}.
Subset dual_image(const FinMap& f, const Subset& s);

}  // namespace godel

#endif  // GODEL_SUBSET_HPP
