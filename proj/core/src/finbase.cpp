#include "godel/finbase.hpp"

#include <stdexcept>

#include "godel/errors.hpp"

namespace godel {

FinMap::FinMap(FinSet dom, FinSet cod, std::vector<Index> table)
    : dom_(dom), cod_(cod), table_(std::move(table)) {
  if (table_.size() != dom_.size) throw std::invalid_argument("FinMap: table length != dom size");
  for (Index v : table_)
    if (v >= cod_.size) throw std::invalid_argument("FinMap: table entry out of codomain");
}

FinMap FinMap::identity(FinSet a) {
  std::vector<Index> t(a.size);
  for (Index i = 0; i < a.size; ++i) t[i] = i;
  return FinMap(a, a, std::move(t));
}

FinMap FinMap::constant(FinSet dom, FinSet cod, Index value) {
  return FinMap(dom, cod, std::vector<Index>(dom.size, value));
}

std::string FinMap::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(table_[i]);
  }
  return s + "]";
}

FinMap compose(const FinMap& g, const FinMap& f) {
  if (f.cod() != g.dom()) throw std::invalid_argument("compose: codomain/domain mismatch");
  std::vector<Index> t(f.dom().size);
  for (Index i = 0; i < t.size(); ++i) t[i] = g(f(i));
  return FinMap(f.dom(), g.cod(), std::move(t));
}

Product product(FinSet a, FinSet b) {
  FinSet p{a.size * b.size};
  std::vector<Index> t1(p.size), t2(p.size);
  for (Index i = 0; i < a.size; ++i)
    for (Index j = 0; j < b.size; ++j) {
      t1[i * b.size + j] = i;
      t2[i * b.size + j] = j;
    }
  return {p, FinMap(p, a, std::move(t1)), FinMap(p, b, std::move(t2))};
}

FinSet product_of(const std::vector<FinSet>& factors) {
  std::size_t n = 1;
  for (FinSet f : factors) n *= f.size;
  return FinSet{n};
}

FinMap pairing(const FinMap& f, const FinMap& g) {
  if (f.dom() != g.dom()) throw std::invalid_argument("pairing: domain mismatch");
  std::vector<Index> t(f.dom().size);
  for (Index x = 0; x < t.size(); ++x) t[x] = f(x) * g.cod().size + g(x);
  return FinMap(f.dom(), FinSet{f.cod().size * g.cod().size}, std::move(t));
}

FinMap cross(const FinMap& f, const FinMap& g) {
  const std::size_t b = g.dom().size;
  std::vector<Index> t(f.dom().size * b);
  for (Index i = 0; i < f.dom().size; ++i)
    for (Index j = 0; j < b; ++j) t[i * b + j] = f(i) * g.cod().size + g(j);
  return FinMap(FinSet{f.dom().size * b}, FinSet{f.cod().size * g.cod().size}, std::move(t));
}

FinMap projection(FinSet a, FinSet b) { return product(a, b).first; }

FinMap second_projection(FinSet a, FinSet b) { return product(a, b).second; }

FinMap diagonal(FinSet a) {
  std::vector<Index> t(a.size);
  for (Index i = 0; i < a.size; ++i) t[i] = i * a.size + i;
  return FinMap(a, FinSet{a.size * a.size}, std::move(t));
}

FinMap bang(FinSet a) { return FinMap::constant(a, FinSet{1}, 0); }

std::optional<FinSet> as_first_projection(const FinMap& f) {
  const std::size_t n = f.dom().size, m = f.cod().size;
  if (m == 0 || n % m != 0) return std::nullopt;
  const std::size_t b = n / m;
  for (Index k = 0; k < n; ++k)
    if (f(k) != k / b) return std::nullopt;
  return FinSet{b};
}

Pullback pullback(const FinMap& f, const FinMap& g) {
  if (f.cod() != g.cod()) throw std::invalid_argument("pullback: codomain mismatch");
  std::vector<Index> left, right;
  for (Index a = 0; a < f.dom().size; ++a)
    for (Index c = 0; c < g.dom().size; ++c)
      if (f(a) == g(c)) {
        left.push_back(a);
        right.push_back(c);
      }
  FinSet p{left.size()};
  return {p, FinMap(p, f.dom(), std::move(left)), FinMap(p, g.dom(), std::move(right))};
}

std::optional<std::size_t> checked_power(std::size_t base, std::size_t exp, std::size_t limit) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base == 0) return 0;
    if (r > limit / base) return std::nullopt;
    r *= base;
  }
  return r <= limit ? std::optional<std::size_t>(r) : std::nullopt;
}

Index encode_function(const std::vector<Index>& table, std::size_t cod_size) {
  Index code = 0;
  for (Index v : table) code = code * cod_size + v;
  return code;
}

std::vector<Index> decode_function(Index code, std::size_t dom_size, std::size_t cod_size) {
  std::vector<Index> t(dom_size);
  for (std::size_t k = dom_size; k-- > 0;) {
    t[k] = code % cod_size;
    code /= cod_size;
  }
  return t;
}

Index apply_code(Index code, Index b, std::size_t dom_size, std::size_t cod_size) {
  for (std::size_t k = dom_size - 1; k > b; --k) code /= cod_size;
  return code % cod_size;
}

BaseCat::BaseCat(std::size_t size_cap, std::size_t budget) : size_cap_(size_cap), budget_(budget) {
  if (size_cap_ == 0) throw std::invalid_argument("BaseCat: size_cap must be positive");
  if (budget_ == 0) throw std::invalid_argument("BaseCat: budget must be positive");
}

FinSet BaseCat::exponential_object(FinSet b, FinSet c) const {
  auto n = checked_power(c.size, b.size, size_cap_);
  if (!n) {
    auto full = checked_power(c.size, b.size);
    throw CapExceeded(full.value_or(SIZE_MAX), size_cap_);
  }
  return FinSet{*n};
}

bool BaseCat::has_exponential(FinSet b, FinSet c) const {
  return checked_power(c.size, b.size, size_cap_).has_value();
}

Exponential BaseCat::exponential(FinSet b, FinSet c) const {
  FinSet e = exponential_object(b, c);
  std::vector<Index> t(e.size * b.size);
  for (Index f = 0; f < e.size; ++f)
    for (Index x = 0; x < b.size; ++x) t[f * b.size + x] = apply_code(f, x, b.size, c.size);
  return {e, FinMap(FinSet{e.size * b.size}, c, std::move(t))};
}

FinMap BaseCat::curry(const FinMap& f, FinSet a, FinSet b) const {
  FinSet e = exponential_object(b, f.cod());
  std::vector<Index> t(a.size);
  std::vector<Index> row(b.size);
  for (Index x = 0; x < a.size; ++x) {
    for (Index y = 0; y < b.size; ++y) row[y] = f(x * b.size + y);
    t[x] = encode_function(row, f.cod().size);
  }
  return FinMap(a, e, std::move(t));
}

FinMap BaseCat::uncurry(const FinMap& g, FinSet b, FinSet c) const {
  const std::size_t a = g.dom().size;
  std::vector<Index> t(a * b.size);
  for (Index x = 0; x < a; ++x)
    for (Index y = 0; y < b.size; ++y) t[x * b.size + y] = apply_code(g(x), y, b.size, c.size);
  return FinMap(FinSet{a * b.size}, c, std::move(t));
}

std::size_t map_count(FinSet a, FinSet b, std::size_t budget) {
  auto n = checked_power(b.size, a.size, budget);
  if (!n) throw BudgetExceeded(checked_power(b.size, a.size).value_or(SIZE_MAX), budget);
  return *n;
}

MapRange BaseCat::enumerate_maps(FinSet a, FinSet b) const {
  map_count(a, b, budget_);
  return MapRange(a, b);
}

MapRange::iterator::iterator(FinSet a, FinSet b) : b_(b), digits_(a.size, 0), done_(false) {
  if (b.size == 0 && a.size > 0) {
    done_ = true;
    return;
  }
  current_ = FinMap(a, b, digits_);
}

MapRange::iterator& MapRange::iterator::operator++() {
  std::size_t k = digits_.size();
  while (k > 0) {
    --k;
    if (++digits_[k] < b_.size) {
      current_ = FinMap(current_.dom(), b_, digits_);
      return *this;
    }
    digits_[k] = 0;
  }
  done_ = true;
  return *this;
}

std::vector<FinMap> MapRange::to_vector() const {
  std::vector<FinMap> out;
  for (const FinMap& f : *this) out.push_back(f);
  return out;
}

std::vector<FinSet> Window::sorts() const {
  std::vector<FinSet> out;
  for (std::size_t n = empty_sorts ? 0 : 1; n <= cap; ++n) out.push_back(FinSet{n});
  return out;
}

std::vector<FinSet> Window::contexts() const {
  std::vector<FinSet> out;
  for (std::size_t n = 0; n <= cap; ++n) out.push_back(FinSet{n});
  return out;
}

std::string Window::to_string() const {
  return "cap=" + std::to_string(cap) + (empty_sorts ? ",empty-sorts" : "") +
         ",max-body=" + std::to_string(max_body);
}

Window Window::standard(std::size_t cap) { return Window{cap, false, cap * cap * cap}; }

}  // namespace godel
