#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tia/simd/bitops.hpp"

namespace tia {

using Vertex = std::size_t;

/// A set of vertex ids drawn from a fixed universe {0, ..., universe-1}.
///
/// Stored as a bitset, so iteration is always in ascending id order and the
/// set is duplicate-free by construction. Binary operations require both
/// operands to share the same universe.
class VertexSet {
 public:
  using Word = simd::Word;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    iterator() = default;
    iterator(const Word* words, std::size_t word_count, std::size_t index)
        : words_(words), word_count_(word_count), word_index_(index) {
      if (word_index_ < word_count_) {
        current_ = words_[word_index_];
        advance_to_set();
      }
    }

    Vertex operator*() const { return word_index_ * 64 + static_cast<std::size_t>(std::countr_zero(current_)); }

    iterator& operator++() {
      current_ &= current_ - 1;
      advance_to_set();
      return *this;
    }
    iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const iterator& other) const { return word_index_ == other.word_index_ && current_ == other.current_; }

   private:
    void advance_to_set() {
      while (current_ == 0) {
        if (++word_index_ >= word_count_) {
          word_index_ = word_count_;
          current_ = 0;
          return;
        }
        current_ = words_[word_index_];
      }
    }

    const Word* words_ = nullptr;
    std::size_t word_count_ = 0;
    std::size_t word_index_ = 0;
    Word current_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_(word_count_for(universe), 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] = ~Word{0};
    s.trim();
    return s;
  }

  template <class Range>
  static VertexSet from_range(std::size_t universe, const Range& members) {
    VertexSet s(universe);
    for (auto v : members) s.insert(static_cast<Vertex>(v));
    return s;
  }

  /// {lo, ..., hi - 1}
  static VertexSet interval(std::size_t universe, Vertex lo, Vertex hi) {
    VertexSet s(universe);
    for (Vertex v = lo; v < hi; ++v) s.insert(v);
    return s;
  }

  static VertexSet singleton(std::size_t universe, Vertex v) {
    VertexSet s(universe);
    s.insert(v);
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Vertex v) const noexcept { return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0; }

  void insert(Vertex v) {
    check(v);
    words_[v >> 6] |= Word{1} << (v & 63);
  }
  void erase(Vertex v) {
    check(v);
    words_[v >> 6] &= ~(Word{1} << (v & 63));
  }
  void clear() noexcept {
    for (auto& w : words_) w = 0;
  }

  std::size_t size() const noexcept {
    if (words_.size() == 1) return static_cast<std::size_t>(std::popcount(words_[0]));
    return simd::active_kernels().popcount(words_.data(), words_.size());
  }
  bool empty() const noexcept {
    for (Word w : words_)
      if (w) return false;
    return true;
  }

  /// Smallest member; the set must be nonempty.
  Vertex front() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    throw std::logic_error("VertexSet::front on empty set");
  }

  iterator begin() const { return iterator(words_.data(), words_.size(), 0); }
  iterator end() const { return iterator(words_.data(), words_.size(), words_.size()); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  bool intersects(const VertexSet& other) const {
    same_universe(other);
    if (words_.size() == 1) return (words_[0] & other.words_[0]) != 0;
    return simd::active_kernels().intersects(words_.data(), other.words_.data(), words_.size());
  }
  bool is_subset_of(const VertexSet& other) const {
    same_universe(other);
    if (words_.size() == 1) return (words_[0] & ~other.words_[0]) == 0;
    return simd::active_kernels().is_subset(words_.data(), other.words_.data(), words_.size());
  }
  std::size_t intersection_size(const VertexSet& other) const {
    same_universe(other);
    if (words_.size() == 1) return static_cast<std::size_t>(std::popcount(words_[0] & other.words_[0]));
    return simd::active_kernels().and_popcount(words_.data(), other.words_.data(), words_.size());
  }

  VertexSet& operator&=(const VertexSet& other) {
    same_universe(other);
    if (words_.size() == 1)
      words_[0] &= other.words_[0];
    else
      simd::active_kernels().and_into(words_.data(), other.words_.data(), words_.size());
    return *this;
  }
  VertexSet& operator|=(const VertexSet& other) {
    same_universe(other);
    if (words_.size() == 1)
      words_[0] |= other.words_[0];
    else
      simd::active_kernels().or_into(words_.data(), other.words_.data(), words_.size());
    return *this;
  }
  VertexSet& operator-=(const VertexSet& other) {
    same_universe(other);
    if (words_.size() == 1)
      words_[0] &= ~other.words_[0];
    else
      simd::active_kernels().andnot_into(words_.data(), other.words_.data(), words_.size());
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet with(Vertex v) const {
    VertexSet s = *this;
    s.insert(v);
    return s;
  }
  VertexSet without(Vertex v) const {
    VertexSet s = *this;
    s.erase(v);
    return s;
  }

  bool operator==(const VertexSet& other) const = default;

  std::span<const Word> words() const noexcept { return words_; }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (Vertex v : *this) {
      if (!first) out += ",";
      out += std::to_string(v);
      first = false;
    }
    return out + "}";
  }

  static std::size_t word_count_for(std::size_t universe) { return universe == 0 ? 1 : (universe + 63) / 64; }

 private:
  void check(Vertex v) const {
    if (v >= universe_)
      throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(universe_));
  }
  void same_universe(const VertexSet& other) const {
    if (other.universe_ != universe_) throw std::invalid_argument("VertexSet universes differ");
  }
  void trim() {
    const std::size_t tail = universe_ & 63;
    if (tail != 0) words_.back() &= (Word{1} << tail) - 1;
    if (universe_ == 0) words_[0] = 0;
  }

  std::size_t universe_ = 0;
  std::vector<Word> words_ = std::vector<Word>(1, 0);
};

}  // namespace tia
