#include "expcycles/vertex_set.hpp"

#include <string>

#include "expcycles/error.hpp"

namespace expcycles {

namespace {
std::size_t word_count(int universe) { return (static_cast<std::size_t>(universe) + 63) / 64; }
}  // namespace

VertexSet::VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {
  if (universe < 0) throw Error(ErrorKind::invalid_input, "negative vertex universe");
}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(int universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (Vertex v = 0; v < universe; ++v) s.words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
  s.count_ = universe;
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v < 0 || v >= universe_) {
    throw Error(ErrorKind::invalid_input,
                "vertex " + std::to_string(v) + " outside universe of size " + std::to_string(universe_));
  }
  auto& w = words_[static_cast<std::size_t>(v) >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if (!(w & bit)) {
    w |= bit;
    ++count_;
  }
}

void VertexSet::erase(Vertex v) {
  if (!contains(v)) return;
  words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
  --count_;
}

void VertexSet::clear() {
  std::fill(words_.begin(), words_.end(), 0);
  count_ = 0;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(count_));
  for (Vertex v : *this) out.push_back(v);
  return out;
}

Vertex VertexSet::min() const noexcept {
  auto it = begin();
  return it == end() ? -1 : *it;
}

void VertexSet::check_same_universe(const VertexSet& other) const {
  if (universe_ != other.universe_) {
    throw Error(ErrorKind::invalid_input, "vertex sets over different universes");
  }
}

void VertexSet::recount() {
  count_ = 0;
  for (auto w : words_) count_ += std::popcount(w);
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  recount();
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  recount();
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  recount();
  return *this;
}

VertexSet VertexSet::complement() const { return full(universe_) -= *this; }

bool VertexSet::intersects(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

}  // namespace expcycles
