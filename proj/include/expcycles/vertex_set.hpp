#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace expcycles {

/// Dense 0-based vertex id.
using Vertex = int;

/// A set of vertex ids over a fixed universe [0, universe). Word-packed bits,
/// iteration is in ascending id order.
class VertexSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const std::uint64_t* words, int universe, int pos)
        : words_(words), universe_(universe), pos_(pos) {
      advance_to_member();
    }

    Vertex operator*() const { return pos_; }
    const_iterator& operator++() {
      ++pos_;
      advance_to_member();
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

   private:
    void advance_to_member();

    const std::uint64_t* words_ = nullptr;
    int universe_ = 0;
    int pos_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<Vertex> members);
  VertexSet(int universe, std::span<const Vertex> members);

  static VertexSet full(int universe);

  int universe() const noexcept { return universe_; }
  int size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  /// Out-of-range ids are reported as non-members.
  bool contains(Vertex v) const noexcept {
    return v >= 0 && v < universe_ && ((words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U);
  }
  /// Throws invalid_input for ids outside the universe.
  void insert(Vertex v);
  void erase(Vertex v);
  void clear();

  std::vector<Vertex> to_vector() const;
  /// Smallest member; -1 when empty.
  Vertex min() const noexcept;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const;
  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  bool operator==(const VertexSet& other) const {
    return universe_ == other.universe_ && words_ == other.words_;
  }

  const_iterator begin() const {
    return {words_.data(), universe_, 0};
  }
  const_iterator end() const {
    return {words_.data(), universe_, universe_};
  }

 private:
  void check_same_universe(const VertexSet& other) const;
  void recount();

  int universe_ = 0;
  int count_ = 0;
  std::vector<std::uint64_t> words_;
};

inline void VertexSet::const_iterator::advance_to_member() {
  // Bits at or beyond universe_ are always clear.
  while (pos_ < universe_) {
    const std::uint64_t w = words_[pos_ >> 6] >> (pos_ & 63);
    if (w != 0) {
      pos_ += std::countr_zero(w);
      return;
    }
    pos_ = ((pos_ >> 6) + 1) << 6;
  }
  pos_ = universe_;
}

}  // namespace expcycles
