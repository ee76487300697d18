#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace zfort {

using Vertex = std::size_t;

/// Fixed-capacity bit vector over the labels 0..universe-1 of a host graph.
///
/// Storage is inline (no allocation); operations only touch the words that
/// the universe actually uses. Binary operations require equal universes.
class VertexSet {
 public:
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t kMaxWords = 16;
  static constexpr std::size_t kMaxUniverse = kWordBits * kMaxWords;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, const std::vector<Vertex>& members);

  static VertexSet full(std::size_t universe);
  /// Only valid for universe <= 64.
  static VertexSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const { return universe_; }
  std::size_t word_count() const { return (universe_ + kWordBits - 1) / kWordBits; }
  std::uint64_t word(std::size_t i) const { return words_[i]; }
  /// Low word; the whole set when universe <= 64.
  std::uint64_t mask() const { return words_[0]; }

  bool contains(Vertex v) const {
    return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);

  std::size_t count() const;
  bool empty() const;
  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;
  /// Smallest member, or universe() when empty.
  Vertex first() const;
  /// Smallest member strictly greater than v, or universe() when none.
  Vertex next(Vertex v) const;
  std::vector<Vertex> members() const;

  VertexSet complement() const;
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet& a, const VertexSet& b);

  /// Lexicographic comparison of the sorted member sequences.
  friend bool lex_less(const VertexSet& a, const VertexSet& b);
  /// Orders by cardinality, then lexicographically.
  friend bool size_lex_less(const VertexSet& a, const VertexSet& b);

  /// "{0,2,5}"
  std::string to_string() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    const std::size_t words = word_count();
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        fn(static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

 private:
  void check_same_universe(const VertexSet& other) const;
  void clear_tail();

  std::array<std::uint64_t, kMaxWords> words_{};
  std::size_t universe_ = 0;
};

bool lex_less(const VertexSet& a, const VertexSet& b);
bool size_lex_less(const VertexSet& a, const VertexSet& b);

}  // namespace zfort
