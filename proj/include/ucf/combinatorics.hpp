#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include <boost/rational.hpp>

#include "ucf/errors.hpp"

namespace ucf {

using Rational = boost::rational<std::int64_t>;

/// Exact C(n, k); 0 when k > n. Throws unsupported_scale on 64-bit overflow.
constexpr std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    // acc * (n - i) / (i + 1) stays integral at every step.
    acc = acc * (n - i) / (i + 1);
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      throw unsupported_scale("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                              ") exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw unsupported_scale("64-bit overflow in a sum");
  return r;
}

/// log2(m), exact for powers of two (bit length instead of libm).
inline double log2_of(std::uint64_t m) {
  if (m != 0 && std::has_single_bit(m)) return static_cast<double>(std::countr_zero(m));
  return std::log2(static_cast<double>(m));
}

/// m * log2(m), with the convention 0 * log2(0) = 0.
inline double m_log2_m(std::uint64_t m) {
  return m == 0 ? 0.0 : static_cast<double>(m) * log2_of(m);
}

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace ucf
