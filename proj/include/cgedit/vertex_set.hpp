#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace cgedit {

// Subset of the dense vertex universe 0..n-1, stored as a packed bit vector.
//
// All binary operations require both operands to share the same universe size.
class VertexSet {
 public:
  using word_type = std::uint64_t;
  static constexpr int word_bits = 64;

  VertexSet() = default;
  explicit VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {
    if (universe < 0) throw std::invalid_argument("negative universe size");
  }
  VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
    for (int v : members) insert(v);
  }
  template <class Range>
  static VertexSet from_range(int universe, const Range& members) {
    VertexSet s(universe);
    for (int v : members) s.insert(v);
    return s;
  }
  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~word_type{0};
    s.trim();
    return s;
  }
  static VertexSet singleton(int universe, int v) {
    VertexSet s(universe);
    s.insert(v);
    return s;
  }

  int universe() const noexcept { return universe_; }

  bool contains(int v) const noexcept {
    return v >= 0 && v < universe_ && ((words_[v / word_bits] >> (v % word_bits)) & 1U);
  }
  void insert(int v) {
    check(v);
    words_[v / word_bits] |= word_type{1} << (v % word_bits);
  }
  void erase(int v) {
    check(v);
    words_[v / word_bits] &= ~(word_type{1} << (v % word_bits));
  }
  void toggle(int v) {
    check(v);
    words_[v / word_bits] ^= word_type{1} << (v % word_bits);
  }
  void set(int v, bool value) { value ? insert(v) : erase(v); }

  int size() const noexcept {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](word_type w) { return w == 0; });
  }

  // Smallest member, or -1 when empty.
  int min() const noexcept { return next(0); }
  // Smallest member >= from, or -1.
  int next(int from) const noexcept {
    if (from < 0) from = 0;
    if (from >= universe_) return -1;
    std::size_t wi = static_cast<std::size_t>(from / word_bits);
    word_type w = words_[wi] & (~word_type{0} << (from % word_bits));
    while (true) {
      if (w != 0) return static_cast<int>(wi) * word_bits + std::countr_zero(w);
      if (++wi == words_.size()) return -1;
      w = words_[wi];
    }
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int v = min(); v >= 0; v = next(v + 1)) out.push_back(v);
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      word_type w = words_[wi];
      while (w != 0) {
        f(static_cast<int>(wi) * word_bits + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  bool is_subset_of(const VertexSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const VertexSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  // Overlap in the laminar-family sense: nonempty intersection, neither contains the other.
  bool overlaps(const VertexSet& o) const noexcept {
    return intersects(o) && !is_subset_of(o) && !o.is_subset_of(*this);
  }
  int intersection_size(const VertexSet& o) const noexcept {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  VertexSet& operator&=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator^=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  // Set difference.
  VertexSet& operator-=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) noexcept { return a ^= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) noexcept { return a -= b; }
  VertexSet complement() const {
    VertexSet c = *this;
    for (auto& w : c.words_) w = ~w;
    c.trim();
    return c;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  // Orders by universe, then by the sorted member sequence (lexicographic).
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
    for (int x = a.min(), y = b.min();; x = a.next(x + 1), y = b.next(y + 1)) {
      if (x == y) {
        if (x < 0) return std::strong_ordering::equal;
        continue;
      }
      if (x < 0) return std::strong_ordering::less;
      if (y < 0) return std::strong_ordering::greater;
      return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }

  const std::vector<word_type>& words() const noexcept { return words_; }

  std::string to_string() const {
    std::string s;
    for_each([&](int v) {
      if (!s.empty()) s += ',';
      s += std::to_string(v);
    });
    return s;
  }

 private:
  static std::size_t word_count(int universe) {
    return universe <= 0 ? 0 : static_cast<std::size_t>((universe + word_bits - 1) / word_bits);
  }
  void check(int v) const {
    if (v < 0 || v >= universe_)
      throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " +
                              std::to_string(universe_));
  }
  void trim() noexcept {
    if (universe_ % word_bits != 0 && !words_.empty())
      words_.back() &= (word_type{1} << (universe_ % word_bits)) - 1;
  }

  int universe_ = 0;
  std::vector<word_type> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept {
    std::size_t h = static_cast<std::size_t>(s.universe()) * 0x9E3779B97F4A7C15ULL;
    for (auto w : s.words()) h = (h ^ w) * 0x100000001B3ULL + (h >> 29);
    return h;
  }
};

// Orders sets by minimum vertex id; ties (impossible for disjoint sets) fall back to <=>.
inline bool min_vertex_less(const VertexSet& a, const VertexSet& b) {
  int am = a.min(), bm = b.min();
  if (am != bm) return am < bm;
  return a < b;
}

}  // namespace cgedit
