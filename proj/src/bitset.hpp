#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace idcode {

/**
 * Runtime-sized bitset over [0, size). Words are 64-bit; bits past size()
 * in the last word are always zero so popcount and equality need no masking.
 */
class DynamicBitset {
 public:
  DynamicBitset() = default;
  explicit DynamicBitset(std::size_t size)
      : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t num_words() const noexcept { return words_.size(); }

  bool test(std::size_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) noexcept { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void set(std::size_t i, bool v) noexcept {
    if (v) set(i); else reset(i);
  }
  void clear() noexcept {
    for (auto& w : words_) w = 0;
  }
  void fill() noexcept {
    for (auto& w : words_) w = ~std::uint64_t{0};
    trim();
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool any() const noexcept { return !none(); }

  bool intersects(const DynamicBitset& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  std::size_t intersection_count(const DynamicBitset& o) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }
  std::size_t xor_count(const DynamicBitset& o) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] ^ o.words_[i]));
    return c;
  }
  // True iff (this ^ o) & mask is nonzero.
  bool xor_intersects(const DynamicBitset& o, const DynamicBitset& mask) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] ^ o.words_[i]) & mask.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const DynamicBitset& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  DynamicBitset& operator|=(const DynamicBitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  DynamicBitset& operator&=(const DynamicBitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  DynamicBitset& operator^=(const DynamicBitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  // this &= ~o
  DynamicBitset& subtract(const DynamicBitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend DynamicBitset operator|(DynamicBitset a, const DynamicBitset& b) { return a |= b; }
  friend DynamicBitset operator&(DynamicBitset a, const DynamicBitset& b) { return a &= b; }
  friend DynamicBitset operator^(DynamicBitset a, const DynamicBitset& b) { return a ^= b; }

  bool operator==(const DynamicBitset& o) const noexcept = default;

  // Lexicographic order on sorted member lists. Only meaningful for sets of
  // equal cardinality (the owner of the lowest differing element sorts first).
  bool lex_less(const DynamicBitset& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      auto diff = words_[i] ^ o.words_[i];
      if (diff) {
        auto bit = std::countr_zero(diff);
        return (words_[i] >> bit) & 1u;
      }
    }
    return false;
  }

  // First set bit at or after `from`; size() if none.
  std::size_t find_next(std::size_t from) const noexcept {
    if (from >= size_) return size_;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi >= words_.size()) return size_;
      w = words_[wi];
    }
  }
  std::size_t find_first() const noexcept { return find_next(0); }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        auto b = static_cast<std::size_t>(std::countr_zero(w));
        f((wi << 6) + b);
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  std::size_t hash() const noexcept {
    std::uint64_t h = 1469598103934665603ull ^ size_;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

 private:
  void trim() noexcept {
    if (size_ & 63) words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
    if (size_ == 0) words_.clear();
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct DynamicBitsetHash {
  std::size_t operator()(const DynamicBitset& b) const noexcept { return b.hash(); }
};

}  // namespace idcode
