#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "ucf/bounds.hpp"
#include "ucf/errors.hpp"
#include "ucf/family.hpp"

// Builders for the named families: staircases, plateaus, powersets, and the
// intermediate construction of low weight for every satisfiable (n, m).

namespace ucf {

namespace detail {

template <SetMask M>
M from_low_bits(std::uint64_t bits) {
  if constexpr (std::same_as<M, std::uint64_t>) {
    return bits;
  } else {
    M m{};
    for_each_bit(bits, [&](std::size_t i) { set_bit(m, i); });
    return m;
  }
}

// Every subset of {0..k-1} united with `anchor` (pass an empty anchor for the
// plain subcube).
template <SetMask M>
void append_subcube(std::vector<M>& out, std::size_t k, const M& anchor) {
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) {
    out.push_back(from_low_bits<M>(s) | anchor);
  }
}

inline constexpr std::uint64_t kMaxConstructedSize = std::uint64_t{1} << 24;

}  // namespace detail

/// {{n}, {n-1, n}, ..., {2, ..., n}} in 1-based labels; empty for n = 1.
template <class Family = SetFamily>
Family staircase(std::size_t n) {
  using M = typename Family::mask_type;
  if (n < 1) throw invalid_input("staircase: n must be at least 1");
  if (n > Family::max_domain) throw invalid_input("staircase: n exceeds the mask capacity");
  std::vector<M> sets;
  sets.reserve(n - 1);
  const M full = prefix_mask<M>(n);
  for (std::size_t start = 1; start < n; ++start) {
    sets.push_back(difference(full, prefix_mask<M>(start)));
  }
  return Family(n, std::move(sets));
}

/// All (n-1)-subsets of [n] together with [n]. For n = 1 this is {{}, {1}}.
template <class Family = SetFamily>
Family plateau(std::size_t n) {
  using M = typename Family::mask_type;
  if (n < 1) throw invalid_input("plateau: n must be at least 1");
  if (n > Family::max_domain) throw invalid_input("plateau: n exceeds the mask capacity");
  const M full = prefix_mask<M>(n);
  if (n == 1) return Family(1, {M{}, full});
  std::vector<M> sets;
  sets.reserve(n + 1);
  for (std::size_t x = 0; x < n; ++x) sets.push_back(difference(full, singleton<M>(x)));
  sets.push_back(full);
  return Family(n, std::move(sets));
}

/// All 2^n subsets of [n], 1 <= n <= 20.
template <class Family = SetFamily>
Family powerset(std::size_t n) {
  using M = typename Family::mask_type;
  if (n < 1 || n > 20) throw invalid_input("powerset: n must be in [1, 20]");
  std::vector<M> sets;
  detail::append_subcube(sets, n, M{});
  return Family(n, std::move(sets));
}

enum class IntermediateCase {
  powerset,                 // m = 2^n
  staircase,                // m = n - 1
  staircase_with_empty,     // m = n
  staircase_with_low_pair,  // m = n + 1, n >= 3: T_n, {} and {n-1}
  general,                  // base of subcubes below a staircase-like top
};

inline std::string_view to_string(IntermediateCase c) {
  switch (c) {
    case IntermediateCase::powerset: return "powerset";
    case IntermediateCase::staircase: return "staircase";
    case IntermediateCase::staircase_with_empty: return "staircase_with_empty";
    case IntermediateCase::staircase_with_low_pair: return "staircase_with_low_pair";
    case IntermediateCase::general: return "general";
  }
  return "unknown";
}

struct IntermediateTrace {
  IntermediateCase kind = IntermediateCase::general;
  /// Unique b with 2^b - b <= m - n < 2^(b+1) - (b+1); general case only.
  unsigned b = 0;
  /// Exponents of the binary expansion of m - n + b + 1, descending.
  std::vector<unsigned> expansion;
  /// Leading exponent equals b (base is a union of subcubes, not P([b+1])).
  bool technical = false;
  std::size_t base_size = 0;
  std::size_t top_size = 0;
};

template <class Family>
struct Intermediate {
  Family family;
  IntermediateTrace trace;
};

/// Exponents of the binary expansion of v, highest first.
inline std::vector<unsigned> binary_expansion(std::uint64_t v) {
  std::vector<unsigned> out;
  for (unsigned e = 64; e-- > 0;) {
    if ((v >> e) & 1U) out.push_back(e);
  }
  return out;
}

/// Unique b with 2^b - b <= d < 2^(b+1) - (b+1), for d >= 1.
inline unsigned intermediate_exponent(std::uint64_t d) {
  if (d < 1) throw invalid_input("intermediate_exponent: m - n must be at least 1");
  auto f = [](unsigned b) { return (std::uint64_t{1} << b) - b; };
  unsigned b = 0;
  while (!(f(b) <= d && d < f(b + 1))) ++b;
  return b;
}

/// An n-separating union-closed family of size m with weight below
/// min_weight_upper(n, m). Postconditions are checked on every result and
/// reported as invariant_violation.
template <class Family = SetFamily>
Intermediate<Family> intermediate(std::size_t n, std::uint64_t m) {
  using M = typename Family::mask_type;
  require_satisfiable(n, m);
  if (n > Family::max_domain) throw invalid_input("intermediate: n exceeds the mask capacity");
  if (m > detail::kMaxConstructedSize) {
    throw unsupported_scale("intermediate: m above 2^24 is not supported");
  }

  Intermediate<Family> out;
  IntermediateTrace& trace = out.trace;
  std::vector<M> sets;

  auto staircase_sets = [&] {
    const Family t = staircase<Family>(n);
    sets.assign(t.begin(), t.end());
    trace.top_size = t.size();
  };

  if (n < 64 && m == (std::uint64_t{1} << n)) {
    trace.kind = IntermediateCase::powerset;
    detail::append_subcube(sets, n, M{});
    trace.base_size = sets.size();
  } else if (m + 1 == n) {
    trace.kind = IntermediateCase::staircase;
    staircase_sets();
  } else if (m == n) {
    trace.kind = IntermediateCase::staircase_with_empty;
    staircase_sets();
    sets.push_back(M{});
    trace.base_size = 1;
  } else if (m == n + 1 && n >= 3) {
    trace.kind = IntermediateCase::staircase_with_low_pair;
    staircase_sets();
    sets.push_back(M{});
    sets.push_back(singleton<M>(n - 2));
    trace.base_size = 2;
  } else {
    trace.kind = IntermediateCase::general;
    const std::uint64_t d = m - n;
    const unsigned b = intermediate_exponent(d);
    trace.b = b;
    trace.expansion = binary_expansion(d + b + 1);
    const unsigned lead = trace.expansion.front();
    if (lead != b && lead != b + 1) {
      throw invariant_violation("intermediate: leading exponent outside {b, b+1}");
    }
    if (n < b + 1) throw invariant_violation("intermediate: n < b + 1 in the general case");
    trace.technical = lead == b;

    if (!trace.technical) {
      detail::append_subcube(sets, b + 1, M{});
    } else {
      // Q_1 is anchored at element b+1, Q_i at element b_{i-1} (1-based).
      std::unordered_set<M> seen;
      std::size_t anchor = b + 1;
      for (unsigned e : trace.expansion) {
        const std::size_t start = sets.size();
        detail::append_subcube(sets, e, singleton<M>(anchor - 1));
        for (std::size_t k = start; k < sets.size(); ++k) {
          if (!seen.insert(sets[k]).second) {
            throw invariant_violation("intermediate: subcubes of the base overlap");
          }
        }
        anchor = e;
      }
    }
    trace.base_size = sets.size();
    if (trace.technical && trace.base_size <= (std::size_t{1} << 16)) {
      const Family base(b + 1, sets);
      if (!is_union_closed(base) || !is_separating(base)) {
        throw invariant_violation("intermediate: base is not a separating union-closed family");
      }
    }
    for (std::size_t k = b + 2; k <= n; ++k) sets.push_back(prefix_mask<M>(k));
    trace.top_size = sets.size() - trace.base_size;
  }

  out.family = Family(n, std::move(sets));
  const Family& f = out.family;
  if (f.size() != m) {
    throw invariant_violation("intermediate: built " + std::to_string(f.size()) +
                              " sets instead of " + std::to_string(m));
  }
  if (trace.base_size + trace.top_size != m) {
    throw invariant_violation("intermediate: base and top sizes do not add up to m");
  }
  if (!is_union_closed(f)) throw invariant_violation("intermediate: result is not union-closed");
  if (!is_separating(f)) throw invariant_violation("intermediate: result is not separating");
  if (!(static_cast<double>(weight(f)) < min_weight_upper(n, m))) {
    throw invariant_violation("intermediate: weight is not below the construction upper bound");
  }
  return out;
}

/// The base of a general-case build, on its own domain [b+1].
template <class Family>
std::optional<Family> intermediate_base(const Intermediate<Family>& built) {
  using M = typename Family::mask_type;
  if (built.trace.kind != IntermediateCase::general) return std::nullopt;
  const std::size_t k = built.trace.b + 1;
  const M low = prefix_mask<M>(k);
  std::vector<M> sets;
  for (const M& s : built.family) {
    if (is_subset(s, low)) sets.push_back(s);
  }
  return Family(k, std::move(sets));
}

enum class ConstructionKind { staircase, plateau, powerset, intermediate };

inline ConstructionKind parse_construction_kind(std::string_view s) {
  if (s == "staircase") return ConstructionKind::staircase;
  if (s == "plateau") return ConstructionKind::plateau;
  if (s == "powerset") return ConstructionKind::powerset;
  if (s == "intermediate") return ConstructionKind::intermediate;
  throw invalid_input("unknown construction kind '" + std::string(s) + "'");
}

struct ConstructionRequest {
  ConstructionKind kind = ConstructionKind::staircase;
  std::size_t n = 1;
  /// Required for the intermediate kind only.
  std::optional<std::uint64_t> m;
};

template <class Family>
struct Construction {
  Family family;
  std::optional<IntermediateTrace> trace;
};

template <class Family = SetFamily>
Construction<Family> construct(const ConstructionRequest& req) {
  switch (req.kind) {
    case ConstructionKind::staircase: return {staircase<Family>(req.n), std::nullopt};
    case ConstructionKind::plateau: return {plateau<Family>(req.n), std::nullopt};
    case ConstructionKind::powerset: return {powerset<Family>(req.n), std::nullopt};
    case ConstructionKind::intermediate: {
      if (!req.m) throw invalid_input("intermediate construction needs m");
      auto built = intermediate<Family>(req.n, *req.m);
      return {std::move(built.family), std::move(built.trace)};
    }
  }
  throw invalid_input("unknown construction kind");
}

}  // namespace ucf
