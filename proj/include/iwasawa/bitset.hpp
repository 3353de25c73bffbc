#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace iwasawa {

/// Set of element indices over a fixed universe 0..n-1, packed into 64-bit
/// words. Subgroups, centers, product sets and conjugates are all of these.
/// Ordering compares the set as the integer sum of 2^i over its members,
/// which is what gives lattices and reports their stable tie-break order.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet single(int universe, int i) {
    ElementSet s(universe);
    s.insert(i);
    return s;
  }

  static ElementSet full(int universe) {
    ElementSet s(universe);
    for (int w = 0; w < static_cast<int>(s.words_.size()); ++w) s.words_[w] = ~0ULL;
    s.trim();
    return s;
  }

  int universe() const { return universe_; }

  bool contains(int i) const { return (words_[i >> 6] >> (i & 63)) & 1ULL; }
  void insert(int i) { words_[i >> 6] |= 1ULL << (i & 63); }
  void remove(int i) { words_[i >> 6] &= ~(1ULL << (i & 63)); }

  int count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (std::uint64_t w : words_)
      if (w) return false;
    return true;
  }

  /// Least member, or -1 when empty.
  int front() const {
    for (int w = 0; w < static_cast<int>(words_.size()); ++w)
      if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
    return -1;
  }

  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }

  bool is_subset_of(const ElementSet& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  bool operator==(const ElementSet& o) const = default;

  /// Value order: the set read as an integer with bit i = element i.
  std::strong_ordering operator<=>(const ElementSet& o) const {
    if (universe_ != o.universe_) return universe_ <=> o.universe_;
    for (int w = static_cast<int>(words_.size()) - 1; w >= 0; --w)
      if (words_[w] != o.words_[w]) return words_[w] <=> o.words_[w];
    return std::strong_ordering::equal;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(count());
    for (int w = 0; w < static_cast<int>(words_.size()); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        out.push_back(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
    return out;
  }

 private:
  void trim() {
    int tail = universe_ & 63;
    if (tail && !words_.empty()) words_.back() &= (1ULL << tail) - 1;
  }

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace iwasawa
