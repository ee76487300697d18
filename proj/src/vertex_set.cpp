#include "zfort/vertex_set.hpp"

#include <sstream>
#include <stdexcept>

#include "zfort/errors.hpp"

namespace zfort {

VertexSet::VertexSet(std::size_t universe) : universe_(universe) {
  if (universe > kMaxUniverse) {
    throw CapExceeded("vertex set universe " + std::to_string(universe) + " exceeds " +
                      std::to_string(kMaxUniverse));
  }
}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, const std::vector<Vertex>& members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (std::size_t w = 0; w < s.word_count(); ++w) s.words_[w] = ~std::uint64_t{0};
  s.clear_tail();
  return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > kWordBits) throw std::logic_error("from_mask requires universe <= 64");
  VertexSet s(universe);
  s.words_[0] = mask;
  s.clear_tail();
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) {
    throw InputError("vertex " + std::to_string(v) + " outside universe of size " +
                     std::to_string(universe_));
  }
  words_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
}

void VertexSet::erase(Vertex v) {
  if (v >= universe_) return;
  words_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
}

std::size_t VertexSet::count() const {
  std::size_t total = 0;
  for (std::size_t w = 0; w < word_count(); ++w) total += std::popcount(words_[w]);
  return total;
}

bool VertexSet::empty() const {
  for (std::size_t w = 0; w < word_count(); ++w) {
    if (words_[w] != 0) return false;
  }
  return true;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t w = 0; w < word_count(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t w = 0; w < word_count(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

Vertex VertexSet::first() const {
  for (std::size_t w = 0; w < word_count(); ++w) {
    if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return universe_;
}

Vertex VertexSet::next(Vertex v) const {
  const Vertex start = v + 1;
  if (start >= universe_) return universe_;
  std::size_t w = start / kWordBits;
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (start % kWordBits));
  while (true) {
    if (bits != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
    if (++w >= word_count()) return universe_;
    bits = words_[w];
  }
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(count());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

VertexSet VertexSet::complement() const {
  VertexSet s(universe_);
  for (std::size_t w = 0; w < word_count(); ++w) s.words_[w] = ~words_[w];
  s.clear_tail();
  return s;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < word_count(); ++w) words_[w] &= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < word_count(); ++w) words_[w] |= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < word_count(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

bool operator==(const VertexSet& a, const VertexSet& b) {
  if (a.universe_ != b.universe_) return false;
  for (std::size_t w = 0; w < a.word_count(); ++w) {
    if (a.words_[w] != b.words_[w]) return false;
  }
  return true;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  a.check_same_universe(b);
  for (std::size_t w = 0; w < a.word_count(); ++w) {
    const std::uint64_t diff = a.words_[w] ^ b.words_[w];
    if (diff == 0) continue;
    const Vertex x = w * VertexSet::kWordBits + static_cast<std::size_t>(std::countr_zero(diff));
    // x is the first position where the sorted sequences can diverge. The set
    // holding x is smaller unless the other sequence has already ended.
    if (a.contains(x)) return b.next(x) < b.universe();
    return a.next(x) >= a.universe();
  }
  return false;
}

bool size_lex_less(const VertexSet& a, const VertexSet& b) {
  const std::size_t ca = a.count();
  const std::size_t cb = b.count();
  if (ca != cb) return ca < cb;
  return lex_less(a, b);
}

std::string VertexSet::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first_member = true;
  for_each([&](Vertex v) {
    if (!first_member) out << ',';
    out << v;
    first_member = false;
  });
  out << '}';
  return out.str();
}

void VertexSet::check_same_universe(const VertexSet& other) const {
  if (universe_ != other.universe_) {
    throw std::logic_error("vertex sets over different universes (" + std::to_string(universe_) +
                           " vs " + std::to_string(other.universe_) + ")");
  }
}

void VertexSet::clear_tail() {
  const std::size_t words = word_count();
  for (std::size_t w = words; w < kMaxWords; ++w) words_[w] = 0;
  const std::size_t rem = universe_ % kWordBits;
  if (words > 0 && rem != 0) words_[words - 1] &= (std::uint64_t{1} << rem) - 1;
}

}  // namespace zfort
