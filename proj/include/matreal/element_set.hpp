#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace matreal {

/// Ground-set elements are 1-based labels.
using Element = int;

inline constexpr int kMaxElement = 64;

/// A subset of {1..64} stored as a bitmask; bit (e-1) represents element e.
class ElementSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Element operator*() const { return std::countr_zero(rest_) + 1; }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ElementSet() = default;
  constexpr ElementSet(std::initializer_list<Element> elements) {
    for (Element e : elements) bits_ |= bit(e);
  }
  explicit ElementSet(const std::vector<Element>& elements) {
    for (Element e : elements) bits_ |= bit(e);
  }

  static constexpr ElementSet from_mask(std::uint64_t mask) {
    ElementSet s;
    s.bits_ = mask;
    return s;
  }
  /// {1, ..., d}
  static constexpr ElementSet range(int d) {
    ElementSet s;
    s.bits_ = d >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << d) - 1);
    return s;
  }
  static constexpr ElementSet single(Element e) { return from_mask(bit(e)); }

  constexpr std::uint64_t mask() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(Element e) const {
    return e >= 1 && e <= kMaxElement && (bits_ & bit(e)) != 0;
  }
  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool proper_subset_of(ElementSet other) const {
    return subset_of(other) && bits_ != other.bits_;
  }
  /// Smallest element; 0 when empty.
  constexpr Element min() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }
  /// Largest element; 0 when empty.
  constexpr Element max() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

  constexpr ElementSet with(Element e) const { return from_mask(bits_ | bit(e)); }
  constexpr ElementSet without(Element e) const { return from_mask(bits_ & ~bit(e)); }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Element> elements() const { return {begin(), end()}; }

  /// "{1,2,3}"
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (Element e : *this) {
      if (!first) out += ',';
      out += std::to_string(e);
      first = false;
    }
    return out + "}";
  }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return from_mask(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return from_mask(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return from_mask(a.bits_ & ~b.bits_); }
  constexpr ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator-=(ElementSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  constexpr bool operator==(const ElementSet&) const = default;

 private:
  static constexpr std::uint64_t bit(Element e) {
    return (e >= 1 && e <= kMaxElement) ? (std::uint64_t{1} << (e - 1)) : 0;
  }

  std::uint64_t bits_ = 0;
};

/// Lexicographic comparison of the sorted element lists ({1,2,5} < {1,3} < {2}).
inline bool lex_less(ElementSet a, ElementSet b) {
  auto ia = a.begin(), ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.end() && ib != b.end();
}

/// Calls f(ElementSet) for each k-subset of `from`, in lexicographic order.
template <class F>
void for_each_k_subset(ElementSet from, int k, F&& f) {
  std::vector<Element> items = from.elements();
  const int m = static_cast<int>(items.size());
  if (k < 0 || k > m) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    ElementSet s;
    for (int i : idx) s = s.with(items[i]);
    f(s);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Calls f(ElementSet) for every subset of `from` (including the empty set and `from`).
template <class F>
void for_each_subset(ElementSet from, F&& f) {
  const std::uint64_t full = from.mask();
  std::uint64_t sub = 0;
  while (true) {
    f(ElementSet::from_mask(sub));
    if (sub == full) return;
    sub = (sub - full) & full;
  }
}

}  // namespace matreal
