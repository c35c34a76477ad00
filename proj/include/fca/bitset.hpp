#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fca/error.hpp"

namespace fca {

/// Dense index set over a fixed universe {0..n-1}, one bit per index.
/// The universe size is part of the value; sets over different universes
/// never compare equal and refuse set algebra. The tag parameter keeps
/// object sets and attribute sets apart at compile time.
template <class Tag>
class IndexSet {
 public:
  IndexSet() = default;

  explicit IndexSet(std::size_t universe)
      : size_(universe), words_((universe + 63) / 64, 0) {}

  static IndexSet full(std::size_t universe) {
    IndexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  static IndexSet single(std::size_t universe, std::size_t index) {
    IndexSet s(universe);
    s.add(index);
    return s;
  }

  std::size_t universe_size() const { return size_; }

  bool test(std::size_t i) const {
    check_index(i);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void add(std::size_t i) {
    check_index(i);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void remove(std::size_t i) {
    check_index(i);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  IndexSet& operator&=(const IndexSet& o) {
    check_universe(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }

  IndexSet& operator|=(const IndexSet& o) {
    check_universe(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }

  /// Set difference.
  IndexSet& operator-=(const IndexSet& o) {
    check_universe(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }

  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

  IndexSet complement() const {
    IndexSet s = full(size_);
    return s -= *this;
  }

  bool operator==(const IndexSet&) const = default;

  bool is_subset_of(const IndexSet& o) const {
    check_universe(o);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }

  bool is_proper_subset_of(const IndexSet& o) const {
    return is_subset_of(o) && *this != o;
  }

  bool intersects(const IndexSet& o) const {
    check_universe(o);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  /// Order by ascending index: the first index present in exactly one of the
  /// two sets decides, and the set lacking it comes first. Empty set sorts
  /// before everything.
  bool lex_less(const IndexSet& o) const {
    check_universe(o);
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t diff = words_[k] ^ o.words_[k];
      if (diff) {
        std::size_t bit = static_cast<std::size_t>(std::countr_zero(diff));
        return ((o.words_[k] >> bit) & 1u) != 0;
      }
    }
    return false;
  }

  /// Members strictly below `limit`.
  IndexSet below(std::size_t limit) const {
    IndexSet s(*this);
    for (std::size_t k = 0; k < s.words_.size(); ++k) {
      std::size_t lo = k * 64;
      if (lo >= limit) {
        s.words_[k] = 0;
      } else if (lo + 64 > limit) {
        s.words_[k] &= (std::uint64_t{1} << (limit - lo)) - 1;
      }
    }
    return s;
  }

  std::optional<std::size_t> first() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k])
        return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return std::nullopt;
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        std::size_t bit = static_cast<std::size_t>(std::countr_zero(w));
        out.push_back(k * 64 + bit);
        w &= w - 1;
      }
    }
    return out;
  }

  /// Hex rendering of the set read as an integer with bit i = index i.
  /// Lowercase, no leading zeros, "0" for the empty set.
  std::string to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    bool started = false;
    for (std::size_t k = words_.size(); k-- > 0;) {
      for (int shift = 60; shift >= 0; shift -= 4) {
        unsigned nibble = (words_[k] >> shift) & 0xf;
        if (!started && nibble == 0) continue;
        started = true;
        out.push_back(digits[nibble]);
      }
    }
    return started ? out : "0";
  }

  std::size_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull ^ size_;
    for (auto w : words_) {
      h ^= w;
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }

 private:
  void check_index(std::size_t i) const {
    if (i >= size_)
      throw ContractError("index " + std::to_string(i) +
                          " outside universe of size " + std::to_string(size_));
  }

  void check_universe(const IndexSet& o) const {
    if (size_ != o.size_)
      throw ContractError("universe mismatch: " + std::to_string(size_) +
                          " vs " + std::to_string(o.size_));
  }

  void trim() {
    std::size_t used = size_ & 63;
    if (used && !words_.empty())
      words_.back() &= (std::uint64_t{1} << used) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ObjectTag {};
struct AttributeTag {};

using ObjectSet = IndexSet<ObjectTag>;
using AttributeSet = IndexSet<AttributeTag>;

template <class Tag>
struct IndexSetHash {
  std::size_t operator()(const IndexSet<Tag>& s) const { return s.hash(); }
};

}  // namespace fca
