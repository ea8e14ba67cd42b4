#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>

namespace n3l {

/// Fixed-width bit set over W 64-bit words. Trivially copyable, meant to be
/// passed by value through the search recursion.
template <std::size_t W>
struct Bits {
  static constexpr std::size_t kWords = W;
  static constexpr std::size_t kCapacity = 64 * W;

  std::array<std::uint64_t, W> words{};

  constexpr void set(std::size_t i) { words[i >> 6] |= std::uint64_t{1} << (i & 63); }
  constexpr void reset(std::size_t i) { words[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  [[nodiscard]] constexpr bool test(std::size_t i) const {
    return (words[i >> 6] >> (i & 63)) & 1U;
  }

  [[nodiscard]] constexpr bool any() const {
    for (auto w : words)
      if (w) return true;
    return false;
  }
  [[nodiscard]] constexpr bool none() const { return !any(); }

  [[nodiscard]] constexpr int count() const {
    int c = 0;
    for (auto w : words) c += std::popcount(w);
    return c;
  }

  /// Index of the lowest set bit; undefined when empty.
  [[nodiscard]] constexpr int lowest() const {
    for (std::size_t k = 0; k < W; ++k)
      if (words[k]) return static_cast<int>(64 * k) + std::countr_zero(words[k]);
    return -1;
  }

  /// All bits with index >= i.
  [[nodiscard]] static constexpr Bits from(std::size_t i, std::size_t n) {
    Bits b;
    for (std::size_t k = i; k < n; ++k) b.set(k);
    return b;
  }

  constexpr Bits& operator&=(const Bits& o) {
    for (std::size_t k = 0; k < W; ++k) words[k] &= o.words[k];
    return *this;
  }
  constexpr Bits& operator|=(const Bits& o) {
    for (std::size_t k = 0; k < W; ++k) words[k] |= o.words[k];
    return *this;
  }
  /// this &= ~o
  constexpr Bits& subtract(const Bits& o) {
    for (std::size_t k = 0; k < W; ++k) words[k] &= ~o.words[k];
    return *this;
  }

  friend constexpr Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend constexpr Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend constexpr bool operator==(const Bits&, const Bits&) = default;

  [[nodiscard]] friend constexpr int count_and(const Bits& a, const Bits& b) {
    int c = 0;
    for (std::size_t k = 0; k < W; ++k) c += std::popcount(a.words[k] & b.words[k]);
    return c;
  }
  [[nodiscard]] friend constexpr bool intersects(const Bits& a, const Bits& b) {
    for (std::size_t k = 0; k < W; ++k)
      if (a.words[k] & b.words[k]) return true;
    return false;
  }

  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::size_t k = 0; k < W; ++k) {
      auto w = words[k];
      while (w) {
        f(static_cast<int>(64 * k) + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }
};

}  // namespace n3l
