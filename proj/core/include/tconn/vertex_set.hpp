#pragma once

/**
 * Fixed-universe vertex set stored as a bitset. Graphs with at most 64
 * vertices keep the single word inline, larger universes spill to the heap.
 */

#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace tconn {

using Vertex = int;

class VertexSet {
  using Word = std::uint64_t;
  static constexpr int kBits = 64;

 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* set, Vertex at) : set_(set), at_(at) {}

    Vertex operator*() const { return at_; }
    const_iterator& operator++() {
      at_ = set_->next(at_);
      return *this;
    }
    const_iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    bool operator==(const const_iterator& o) const { return at_ == o.at_; }

   private:
    const VertexSet* set_ = nullptr;
    Vertex at_ = -1;
  };

  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_(word_count(universe), Word{0}) {}

  VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  template <class Range>
  static VertexSet from_range(int universe, const Range& members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  /// Members are the set bits of `mask`; requires universe <= 64.
  static VertexSet from_mask(int universe, std::uint64_t mask) {
    assert(universe <= kBits);
    VertexSet s(universe);
    if (!s.words_.empty()) s.words_[0] = mask;
    s.trim();
    return s;
  }

  int universe() const { return universe_; }

  bool contains(Vertex v) const {
    assert(v >= 0 && v < universe_);
    return (words_[v / kBits] >> (v % kBits)) & 1U;
  }
  void insert(Vertex v) {
    assert(v >= 0 && v < universe_);
    words_[v / kBits] |= Word{1} << (v % kBits);
  }
  void erase(Vertex v) {
    assert(v >= 0 && v < universe_);
    words_[v / kBits] &= ~(Word{1} << (v % kBits));
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  int size() const {
    int c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Smallest member, or -1.
  Vertex first() const { return scan_from(0); }

  /// Smallest member strictly greater than `after`, or -1.
  Vertex next(Vertex after) const { return scan_from(after + 1); }

  const_iterator begin() const { return {this, first()}; }
  const_iterator end() const { return {this, -1}; }

  VertexSet& operator|=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool intersects(const VertexSet& o) const {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (Vertex v : *this) out.push_back(v);
    return out;
  }

  /// Low 64 members as a mask; requires universe <= 64.
  std::uint64_t mask() const {
    assert(universe_ <= kBits);
    return words_.empty() ? 0 : words_[0];
  }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(universe_);
    for (Word w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  /// Canonical total order: universe first, then by word contents.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

 private:
  static std::size_t word_count(int universe) {
    return static_cast<std::size_t>((universe + kBits - 1) / kBits);
  }

  void trim() {
    if (universe_ % kBits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (universe_ % kBits)) - 1;
  }

  Vertex scan_from(Vertex from) const {
    if (from >= universe_) return -1;
    std::size_t wi = static_cast<std::size_t>(from / kBits);
    Word w = words_[wi] & (~Word{0} << (from % kBits));
    while (true) {
      if (w != 0) return static_cast<Vertex>(wi * kBits + static_cast<std::size_t>(std::countr_zero(w)));
      if (++wi == words_.size()) return -1;
      w = words_[wi];
    }
  }

  int universe_ = 0;
  boost::container::small_vector<Word, 1> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace tconn
