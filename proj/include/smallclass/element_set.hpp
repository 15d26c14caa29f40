#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <vector>

#include "smallclass/error.hpp"

namespace smallclass {

/// Index of a group element; the identity is always 0.
using ElementId = std::uint32_t;

inline constexpr ElementId kIdentity = 0;

/// A subset of the elements of a group of fixed order, stored as a bitset.
/// All set algebra runs a 64-bit word at a time.
class ElementSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = ElementId;
    using difference_type = std::ptrdiff_t;
    using pointer = const ElementId*;
    using reference = ElementId;

    const_iterator() = default;
    const_iterator(const ElementSet* set, std::size_t word, Word rest)
        : set_(set), word_(word), rest_(rest) {
      skip_empty();
    }

    ElementId operator*() const {
      return static_cast<ElementId>(word_ * kWordBits + std::countr_zero(rest_));
    }
    const_iterator& operator++() {
      rest_ &= rest_ - 1;
      skip_empty();
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& other) const {
      return word_ == other.word_ && rest_ == other.rest_;
    }

   private:
    void skip_empty() {
      while (rest_ == 0 && set_ != nullptr && ++word_ < set_->words_.size()) {
        rest_ = set_->words_[word_];
      }
      if (rest_ == 0 && set_ != nullptr) word_ = set_->words_.size();
    }

    const ElementSet* set_ = nullptr;
    std::size_t word_ = 0;
    Word rest_ = 0;
  };

  ElementSet() = default;
  explicit ElementSet(std::size_t parent_order)
      : order_(parent_order), words_((parent_order + kWordBits - 1) / kWordBits, 0) {}
  ElementSet(std::size_t parent_order, std::initializer_list<ElementId> members)
      : ElementSet(parent_order) {
    for (auto m : members) insert(m);
  }
  template <typename Range>
  static ElementSet from_range(std::size_t parent_order, const Range& members) {
    ElementSet s(parent_order);
    for (auto m : members) s.insert(static_cast<ElementId>(m));
    return s;
  }
  static ElementSet full(std::size_t parent_order) {
    ElementSet s(parent_order);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }
  static ElementSet identity_only(std::size_t parent_order) {
    ElementSet s(parent_order);
    if (parent_order > 0) s.insert(kIdentity);
    return s;
  }

  std::size_t parent_order() const noexcept { return order_; }

  bool contains(ElementId x) const noexcept {
    return x < order_ && ((words_[x / kWordBits] >> (x % kWordBits)) & 1U) != 0;
  }
  void insert(ElementId x) {
    if (x >= order_) {
      throw Error(ErrorKind::InvalidArgument,
                  "element " + std::to_string(x) + " outside group of order " +
                      std::to_string(order_));
    }
    words_[x / kWordBits] |= Word{1} << (x % kWordBits);
  }
  void erase(ElementId x) noexcept {
    if (x < order_) words_[x / kWordBits] &= ~(Word{1} << (x % kWordBits));
  }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  ElementSet& operator|=(const ElementSet& other) {
    check_same(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& other) {
    check_same(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  ElementSet& operator-=(const ElementSet& other) {
    check_same(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  ElementSet complement() const {
    ElementSet c(order_);
    for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
    c.trim();
    return c;
  }

  bool is_subset_of(const ElementSet& other) const {
    check_same(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }
  bool intersects(const ElementSet& other) const {
    check_same(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & other.words_[i]) != 0) return true;
    return false;
  }

  /// Smallest member; parent_order() when empty.
  ElementId first() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != 0)
        return static_cast<ElementId>(i * kWordBits + std::countr_zero(words_[i]));
    return static_cast<ElementId>(order_);
  }

  const_iterator begin() const {
    return words_.empty() ? end() : const_iterator(this, 0, words_[0]);
  }
  const_iterator end() const { return const_iterator(this, words_.size(), 0); }

  std::vector<ElementId> to_vector() const { return {begin(), end()}; }

  const std::vector<Word>& words() const noexcept { return words_; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) = default;

  /// Lexicographic order of the sorted member lists.
  friend bool operator<(const ElementSet& a, const ElementSet& b) {
    auto ia = a.begin(), ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
      if (*ia != *ib) return *ia < *ib;
    }
    return ia == a.end() && ib != b.end();
  }

  std::size_t hash() const noexcept {
    std::size_t h = order_ * 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  void trim() {
    if (order_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (order_ % kWordBits)) - 1;
  }
  void check_same(const ElementSet& other) const {
    if (other.order_ != order_) {
      throw Error(ErrorKind::InvalidArgument, "element sets of groups with different orders");
    }
  }

  std::size_t order_ = 0;
  std::vector<Word> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace smallclass
