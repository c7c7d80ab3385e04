#pragma once

#include <array>
#include <bit>
#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>

// Subsets of a finite domain {0, ..., n-1} stored as bit masks. Element i of
// the domain is bit i. The narrow form is a plain std::uint64_t; WideMask<W>
// covers domains of up to 64 * W elements with the same set of free functions.

namespace ucf {

template <std::size_t Words>
class WideMask {
  static_assert(Words > 0);

 public:
  static constexpr std::size_t capacity = 64 * Words;

  constexpr WideMask() = default;

  constexpr bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  constexpr void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  constexpr void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

  constexpr std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  constexpr bool none() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  constexpr const std::array<std::uint64_t, Words>& words() const { return words_; }

  constexpr WideMask& operator|=(const WideMask& o) {
    for (std::size_t k = 0; k < Words; ++k) words_[k] |= o.words_[k];
    return *this;
  }
  constexpr WideMask& operator&=(const WideMask& o) {
    for (std::size_t k = 0; k < Words; ++k) words_[k] &= o.words_[k];
    return *this;
  }
  friend constexpr WideMask operator|(WideMask a, const WideMask& b) { return a |= b; }
  friend constexpr WideMask operator&(WideMask a, const WideMask& b) { return a &= b; }

  /// a \ b
  friend constexpr WideMask difference(WideMask a, const WideMask& b) {
    for (std::size_t k = 0; k < Words; ++k) a.words_[k] &= ~b.words_[k];
    return a;
  }

  friend constexpr bool operator==(const WideMask&, const WideMask&) = default;

  // Compares as unsigned integers, so the order agrees with std::uint64_t masks.
  friend constexpr std::strong_ordering operator<=>(const WideMask& a, const WideMask& b) {
    for (std::size_t k = Words; k-- > 0;) {
      if (a.words_[k] != b.words_[k]) return a.words_[k] <=> b.words_[k];
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

 private:
  std::array<std::uint64_t, Words> words_{};
};

// --- free-function interface, std::uint64_t -------------------------------

constexpr bool test_bit(std::uint64_t m, std::size_t i) { return (m >> i) & 1U; }
constexpr void set_bit(std::uint64_t& m, std::size_t i) { m |= std::uint64_t{1} << i; }
constexpr std::size_t cardinality(std::uint64_t m) { return static_cast<std::size_t>(std::popcount(m)); }
constexpr std::uint64_t difference(std::uint64_t a, std::uint64_t b) { return a & ~b; }
constexpr bool is_empty(std::uint64_t m) { return m == 0; }

// --- free-function interface, WideMask -------------------------------------

template <std::size_t W>
constexpr bool test_bit(const WideMask<W>& m, std::size_t i) { return m.test(i); }
template <std::size_t W>
constexpr void set_bit(WideMask<W>& m, std::size_t i) { m.set(i); }
template <std::size_t W>
constexpr std::size_t cardinality(const WideMask<W>& m) { return m.count(); }
template <std::size_t W>
constexpr bool is_empty(const WideMask<W>& m) { return m.none(); }

// --- capacity ----------------------------------------------------------------

template <class M>
inline constexpr std::size_t mask_capacity = 0;
template <>
inline constexpr std::size_t mask_capacity<std::uint64_t> = 64;
template <std::size_t W>
inline constexpr std::size_t mask_capacity<WideMask<W>> = WideMask<W>::capacity;

template <class M>
concept SetMask = std::regular<M> && std::totally_ordered<M> && (mask_capacity<M> > 0) &&
                  requires(M a, const M& b, std::size_t i) {
                    { a | b } -> std::convertible_to<M>;
                    { a & b } -> std::convertible_to<M>;
                    { difference(a, b) } -> std::convertible_to<M>;
                    { test_bit(b, i) } -> std::same_as<bool>;
                    { cardinality(b) } -> std::same_as<std::size_t>;
                    { is_empty(b) } -> std::same_as<bool>;
                    set_bit(a, i);
                    { std::hash<M>{}(b) } -> std::convertible_to<std::size_t>;
                  };

template <SetMask M>
constexpr bool is_subset(const M& a, const M& b) {
  return is_empty(difference(a, b));
}

template <SetMask M>
constexpr M singleton(std::size_t i) {
  M m{};
  set_bit(m, i);
  return m;
}

/// {0, ..., n-1}
template <SetMask M>
constexpr M prefix_mask(std::size_t n) {
  if constexpr (std::same_as<M, std::uint64_t>) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  } else {
    M m{};
    for (std::size_t i = 0; i < n; ++i) set_bit(m, i);
    return m;
  }
}

/// Index of the highest set bit plus one; 0 for the empty mask.
template <SetMask M>
constexpr std::size_t bit_extent(const M& m) {
  if constexpr (std::same_as<M, std::uint64_t>) {
    return static_cast<std::size_t>(std::bit_width(m));
  } else {
    const auto& w = m.words();
    for (std::size_t k = w.size(); k-- > 0;) {
      if (w[k] != 0) return 64 * k + static_cast<std::size_t>(std::bit_width(w[k]));
    }
    return 0;
  }
}

/// Index of the lowest set bit; capacity for the empty mask.
template <SetMask M>
constexpr std::size_t lowest_bit(const M& m) {
  if constexpr (std::same_as<M, std::uint64_t>) {
    return static_cast<std::size_t>(std::countr_zero(m));
  } else {
    const auto& w = m.words();
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w[k] != 0) return 64 * k + static_cast<std::size_t>(std::countr_zero(w[k]));
    }
    return mask_capacity<M>;
  }
}

/// Calls f(i) for every set bit i in increasing order.
template <SetMask M, class F>
constexpr void for_each_bit(const M& m, F&& f) {
  if constexpr (std::same_as<M, std::uint64_t>) {
    for (std::uint64_t rest = m; rest != 0; rest &= rest - 1)
      f(static_cast<std::size_t>(std::countr_zero(rest)));
  } else {
    const auto& w = m.words();
    for (std::size_t k = 0; k < w.size(); ++k)
      for (std::uint64_t rest = w[k]; rest != 0; rest &= rest - 1)
        f(64 * k + static_cast<std::size_t>(std::countr_zero(rest)));
  }
}

}  // namespace ucf

template <std::size_t W>
struct std::hash<ucf::WideMask<W>> {
  std::size_t operator()(const ucf::WideMask<W>& m) const noexcept { return m.hash(); }
};
