#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "ucf/bounds.hpp"
#include "ucf/constructions.hpp"
#include "ucf/errors.hpp"
#include "ucf/family.hpp"
#include "ucf/io.hpp"

// Exhaustive enumeration of union-closed families on domains of at most five
// elements, extremal-weight search, and the verification suites built on them.

namespace ucf {

/// A family on [n], n <= 5, as a bit set over the 2^n subsets: bit s is set
/// iff the subset with mask s is a member.
using FamilyCode = std::uint64_t;

inline constexpr std::size_t kMaxEnumerationDomain = 5;
inline constexpr std::size_t kScanTierLimit = 4;
inline constexpr std::size_t kMaxCanonicalDomain = 8;

/// A slice of the enumeration space. Slices with the same count and distinct
/// indices are disjoint and together cover everything.
struct EnumerationPartition {
  std::size_t index = 0;
  std::size_t count = 1;
};

inline SetFamily decode_family(std::size_t n, FamilyCode code) {
  std::vector<std::uint64_t> sets;
  sets.reserve(static_cast<std::size_t>(std::popcount(code)));
  for (FamilyCode rest = code; rest != 0; rest &= rest - 1) {
    sets.push_back(static_cast<std::uint64_t>(std::countr_zero(rest)));
  }
  return SetFamily(n, std::move(sets));
}

inline FamilyCode encode_family(const SetFamily& f) {
  if (f.domain_size() > kMaxEnumerationDomain) {
    throw unsupported_scale("encode_family: domain above 5 elements");
  }
  FamilyCode code = 0;
  for (auto s : f) code |= FamilyCode{1} << s;
  return code;
}

inline bool code_is_union_closed(FamilyCode code) {
  for (FamilyCode a = code; a != 0; a &= a - 1) {
    const auto s = static_cast<unsigned>(std::countr_zero(a));
    for (FamilyCode b = a & (a - 1); b != 0; b &= b - 1) {
      const auto t = static_cast<unsigned>(std::countr_zero(b));
      if (!((code >> (s | t)) & 1U)) return false;
    }
  }
  return true;
}

namespace detail {

inline void check_partition(const EnumerationPartition& p) {
  if (p.count == 0 || p.index >= p.count) throw invalid_input("invalid enumeration partition");
}

inline void check_enumeration_domain(std::size_t n) {
  if (n < 1) throw invalid_input("enumeration needs n >= 1");
  if (n > kMaxEnumerationDomain) {
    throw unsupported_scale("exhaustive enumeration is limited to n <= 5, got n = " +
                            std::to_string(n));
  }
}

// Decides membership of each subset in decreasing mask order. Every union
// with an already-included member is either that member or a larger mask, so
// the inclusion test below is exact and every leaf is a union-closed family.
template <class Visit>
struct DepthFirstEnumerator {
  std::size_t subsets;
  std::size_t split_depth;
  EnumerationPartition part;
  Visit& visit;
  std::uint64_t visited = 0;

  void run(std::ptrdiff_t s, FamilyCode code, std::size_t depth) {
    if (depth == split_depth && part.count > 1) {
      const FamilyCode prefix = code >> (s + 1);
      if (prefix % part.count != part.index) return;
    }
    if (s < 0) {
      ++visited;
      visit(code);
      return;
    }
    run(s - 1, code, depth + 1);
    for (FamilyCode rest = code; rest != 0; rest &= rest - 1) {
      const auto t = static_cast<unsigned>(std::countr_zero(rest));
      if (!((code >> (static_cast<unsigned>(s) | t)) & 1U)) return;
    }
    run(s - 1, code | (FamilyCode{1} << s), depth + 1);
  }
};

}  // namespace detail

/// Pruned depth-first enumeration; valid for every n <= 5.
template <class Visit>
std::uint64_t for_each_union_closed_code_depth_first(std::size_t n, Visit&& visit,
                                                     EnumerationPartition part = {}) {
  detail::check_enumeration_domain(n);
  detail::check_partition(part);
  const std::size_t subsets = std::size_t{1} << n;
  detail::DepthFirstEnumerator<std::remove_reference_t<Visit>> e{
      subsets, std::min<std::size_t>(5, subsets), part, visit};
  e.run(static_cast<std::ptrdiff_t>(subsets) - 1, 0, 0);
  return e.visited;
}

/// Filters all 2^(2^n) families; n <= 4.
template <class Visit>
std::uint64_t for_each_union_closed_code_scan(std::size_t n, Visit&& visit,
                                              EnumerationPartition part = {}) {
  detail::check_enumeration_domain(n);
  detail::check_partition(part);
  if (n > kScanTierLimit) throw unsupported_scale("full scan is limited to n <= 4");
  const FamilyCode end = FamilyCode{1} << (std::size_t{1} << n);
  std::uint64_t visited = 0;
  for (FamilyCode code = part.index; code < end; code += part.count) {
    if (code_is_union_closed(code)) {
      ++visited;
      visit(code);
    }
  }
  return visited;
}

/// Full scan for n <= 4, depth-first for n = 5.
template <class Visit>
std::uint64_t for_each_union_closed_code(std::size_t n, Visit&& visit,
                                         EnumerationPartition part = {}) {
  detail::check_enumeration_domain(n);
  if (n <= kScanTierLimit) return for_each_union_closed_code_scan(n, visit, part);
  return for_each_union_closed_code_depth_first(n, visit, part);
}

/// Calls visit(const SetFamily&) once per union-closed family on [n],
/// including the empty family and families containing the empty set.
template <class Visit>
std::uint64_t enumerate_union_closed(std::size_t n, Visit&& visit, EnumerationPartition part = {}) {
  return for_each_union_closed_code(
      n, [&](FamilyCode code) { visit(decode_family(n, code)); }, part);
}

/// The depth-first tier reproduces the full scan exactly for n = 1..4.
inline bool depth_first_matches_scan() {
  static const bool ok = [] {
    for (std::size_t n = 1; n <= kScanTierLimit; ++n) {
      std::vector<FamilyCode> a, b;
      for_each_union_closed_code_scan(n, [&](FamilyCode c) { a.push_back(c); });
      for_each_union_closed_code_depth_first(n, [&](FamilyCode c) { b.push_back(c); });
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) return false;
    }
    return true;
  }();
  return ok;
}

// --- canonical forms ---------------------------------------------------------

/// Least sorted mask list over all relabellings of the domain.
struct CanonicalKey {
  std::size_t n = 0;
  std::vector<std::uint64_t> sets;

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

inline CanonicalKey canonical_form(const SetFamily& f) {
  const std::size_t n = f.domain_size();
  if (n > kMaxCanonicalDomain) {
    throw unsupported_scale("canonical_form is limited to n <= 8, got n = " + std::to_string(n));
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  CanonicalKey best{n, {f.begin(), f.end()}};
  std::vector<std::uint64_t> mapped(f.size());
  do {
    for (std::size_t k = 0; k < f.size(); ++k) mapped[k] = detail::map_elements(f[k], perm);
    std::sort(mapped.begin(), mapped.end());
    if (mapped < best.sets) best.sets = mapped;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline SetFamily to_family(const CanonicalKey& key) { return SetFamily(key.n, key.sets); }

// --- extremal search ---------------------------------------------------------

struct SearchOptions {
  /// Number of disjoint partitions searched concurrently.
  unsigned threads = 1;
  /// Permit n = 5, enumerated depth-first rather than by full scan.
  bool allow_depth_first_tier = false;
};

struct SearchOutcome {
  std::size_t n = 0;
  std::uint64_t m = 0;
  std::size_t l = 1;
  std::optional<std::uint64_t> min_value;
  /// Extremal families in canonical form, sorted, pairwise non-isomorphic.
  std::vector<SetFamily> witnesses;
  std::uint64_t examined = 0;
  bool exhaustive = false;
};

/// Order-free merge of two partial results over disjoint partitions.
inline SearchOutcome merge(SearchOutcome a, const SearchOutcome& b) {
  a.examined += b.examined;
  a.exhaustive = a.exhaustive && b.exhaustive;
  if (!b.min_value) return a;
  if (!a.min_value || *b.min_value < *a.min_value) {
    a.min_value = b.min_value;
    a.witnesses = b.witnesses;
    return a;
  }
  if (*b.min_value == *a.min_value) {
    std::vector<SetFamily> u;
    auto less = [](const SetFamily& x, const SetFamily& y) {
      return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    };
    std::set_union(a.witnesses.begin(), a.witnesses.end(), b.witnesses.begin(),
                   b.witnesses.end(), std::back_inserter(u), less);
    a.witnesses = std::move(u);
  }
  return a;
}

namespace detail {

inline SearchOutcome search_partition(std::size_t n, std::uint64_t m, std::size_t l,
                                      EnumerationPartition part) {
  SearchOutcome out;
  out.n = n;
  out.m = m;
  out.l = l;
  std::set<CanonicalKey> keys;
  out.examined = for_each_union_closed_code(
      n,
      [&](FamilyCode code) {
        if (static_cast<std::uint64_t>(std::popcount(code)) != m) return;
        const SetFamily f = decode_family(n, code);
        if (!is_separating(f)) return;
        const std::uint64_t w = l_fold_weight(f, l);
        if (out.min_value && w > *out.min_value) return;
        if (!out.min_value || w < *out.min_value) {
          out.min_value = w;
          keys.clear();
        }
        keys.insert(canonical_form(f));
      },
      part);
  for (const auto& k : keys) out.witnesses.push_back(to_family(k));
  return out;
}

}  // namespace detail

/// Minimal l-fold weight over all n-separating union-closed families of size
/// m on [n], with every extremal family up to isomorphism.
inline SearchOutcome min_weight_search(std::size_t n, std::uint64_t m, std::size_t l,
                                       const SearchOptions& options = {}) {
  require_satisfiable(n, m);
  if (l < 1) throw invalid_input("min_weight_search: l must be at least 1");
  detail::check_enumeration_domain(n);
  if (n > kScanTierLimit && !options.allow_depth_first_tier) {
    throw unsupported_scale("n = 5 needs the depth-first tier to be enabled explicitly");
  }
  const std::size_t parts = std::max(1U, options.threads);
  std::vector<SearchOutcome> partial(parts);
  if (parts == 1) {
    partial[0] = detail::search_partition(n, m, l, {0, 1});
  } else {
    std::vector<std::jthread> workers;
    for (std::size_t p = 0; p < parts; ++p) {
      workers.emplace_back(
          [&, p] { partial[p] = detail::search_partition(n, m, l, {p, parts}); });
    }
  }
  SearchOutcome out = partial[0];
  for (std::size_t p = 1; p < parts; ++p) out = merge(std::move(out), partial[p]);
  out.exhaustive = n <= kScanTierLimit || depth_first_matches_scan();
  return out;
}

// --- verification suites -----------------------------------------------------

struct VerificationReport {
  std::string suite;
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  std::uint64_t checked = 0;
  std::vector<std::string> violations;
  std::vector<std::string> skipped;

  bool passed() const { return violations.empty(); }
};

namespace detail {

inline VerificationReport report(std::string suite, std::size_t n_min, std::size_t n_max) {
  VerificationReport r;
  r.suite = std::move(suite);
  r.n_min = n_min;
  r.n_max = n_max;
  return r;
}

inline std::string describe(const SetFamily& f) {
  return "n=" + std::to_string(f.domain_size()) + " " + to_string(f);
}

// Computes the degree profile, recording a double-counting failure.
inline std::optional<DegreeProfile> checked_profile(const SetFamily& f, VerificationReport& r) {
  try {
    return degree_profile(f);
  } catch (const invariant_violation& e) {
    r.violations.push_back(describe(f) + ": " + e.what());
    return std::nullopt;
  }
}

// For i < j some member contains j but not i.
inline bool splits_upward(const SetFamily& g) {
  const std::size_t n = g.domain_size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool found = std::any_of(g.begin(), g.end(), [&](std::uint64_t a) {
        return test_bit(a, j) && !test_bit(a, i);
      });
      if (!found) return false;
    }
  }
  return true;
}

// For each i < n-1 (0-based) some member contains i+1..n-1 but not i.
inline bool has_descending_skeleton(const SetFamily& g) {
  const std::size_t n = g.domain_size();
  const std::uint64_t full = g.domain_mask();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::uint64_t above = difference(full, prefix_mask<std::uint64_t>(i + 1));
    const bool found = std::any_of(g.begin(), g.end(), [&](std::uint64_t a) {
      return is_subset(above, a) && !test_bit(a, i);
    });
    if (!found) return false;
  }
  return true;
}

// Every relabelling by nondecreasing degree, as new_index_of maps.
inline std::vector<std::vector<std::size_t>> degree_orderings(const SetFamily& f) {
  const auto deg = degree_profile(f).degrees;
  const std::size_t n = f.domain_size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> out;
  do {
    bool sorted = true;
    for (std::size_t k = 0; k + 1 < n; ++k) sorted = sorted && deg[order[k]] <= deg[order[k + 1]];
    if (!sorted) continue;
    std::vector<std::size_t> new_index_of(n);
    for (std::size_t k = 0; k < n; ++k) new_index_of[order[k]] = k;
    out.push_back(std::move(new_index_of));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

}  // namespace detail

/// Equality shape for the l-fold separation bound, on an already degree-sorted
/// family: it holds [n]\[1], ..., [n]\[n-l]; the remaining members together
/// with [n]\[n-l] form a separating union-closed family on [n]\[n-l].
inline bool matches_l_fold_equality_form(const SetFamily& g, std::size_t l) {
  const std::size_t n = g.domain_size();
  if (l < 1 || l >= n) return false;
  const std::uint64_t full = g.domain_mask();
  std::vector<std::uint64_t> chain;
  for (std::size_t i = 1; i <= n - l; ++i) chain.push_back(difference(full, prefix_mask<std::uint64_t>(i)));
  for (auto c : chain) {
    if (!g.contains(c)) return false;
  }
  const std::uint64_t top = chain.back();
  std::vector<std::uint64_t> rest;
  for (auto a : g) {
    if (std::find(chain.begin(), chain.end(), a) != chain.end()) continue;
    if (!is_subset(a, top)) return false;
    rest.push_back(a);
  }
  rest.push_back(top);
  const SetFamily tail(n, rest);
  if (!is_union_closed(tail)) return false;
  for (std::size_t i = n - l; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!separates(tail, i, j)) return false;
    }
  }
  return true;
}

/// Over all n-separating union-closed families on [n]: the least weight is
/// C(n, 2), attained exactly by the staircase with and without the empty set.
inline VerificationReport verify_staircase_extremality(std::size_t n_min, std::size_t n_max) {
  if (n_min < 1 || n_max > kScanTierLimit || n_min > n_max) {
    throw invalid_input("staircase suite needs 1 <= n_min <= n_max <= 4");
  }
  auto r = detail::report("staircase", n_min, n_max);
  for (std::size_t n = n_min; n <= n_max; ++n) {
    std::optional<std::uint64_t> min_w;
    std::set<CanonicalKey> extremal;
    enumerate_union_closed(n, [&](const SetFamily& f) {
      if (!is_separating(f)) return;
      ++r.checked;
      const auto p = detail::checked_profile(f, r);
      if (!p) return;
      if (!min_w || p->weight < *min_w) {
        min_w = p->weight;
        extremal.clear();
      }
      if (p->weight == *min_w) extremal.insert(canonical_form(f));
    });
    const std::uint64_t expected = binomial(n, 2);
    if (!min_w || *min_w != expected) {
      r.violations.push_back("n=" + std::to_string(n) + ": least weight " +
                             (min_w ? std::to_string(*min_w) : "none") + " != " +
                             std::to_string(expected));
    }
    const SetFamily t = staircase(n);
    std::vector<std::uint64_t> with_empty(t.begin(), t.end());
    with_empty.push_back(0);
    const std::set<CanonicalKey> want{canonical_form(t), canonical_form(SetFamily(n, with_empty))};
    if (extremal != want) {
      std::string got;
      for (const auto& k : extremal) got += " " + to_string(to_family(k));
      r.violations.push_back("n=" + std::to_string(n) + ": extremal families differ from the "
                             "staircase pair:" + got);
    }
  }
  return r;
}

/// Every separating union-closed family on [n] has w_l >= C(n, l+1), and each
/// equality case has the chain-plus-remainder shape under every degree order.
inline VerificationReport verify_l_fold_equality_structure(std::size_t n_max, std::size_t l) {
  if (l < 1 || n_max > kScanTierLimit || l >= n_max) {
    throw invalid_input("l-fold suite needs 1 <= l < n_max <= 4");
  }
  auto r = detail::report("l-fold-equality", l + 1, n_max);
  for (std::size_t n = l + 1; n <= n_max; ++n) {
    const std::uint64_t bound = separation_lower(n, l);
    enumerate_union_closed(n, [&](const SetFamily& f) {
      if (!is_separating(f)) return;
      ++r.checked;
      if (!detail::checked_profile(f, r)) return;
      const std::uint64_t w = l_fold_weight(f, l);
      if (w < bound) {
        r.violations.push_back(detail::describe(f) + ": w_" + std::to_string(l) + " = " +
                               std::to_string(w) + " < " + std::to_string(bound));
        return;
      }
      if (w != bound) return;
      for (const auto& relabel : detail::degree_orderings(f)) {
        if (!matches_l_fold_equality_form(permute(f, relabel), l)) {
          r.violations.push_back(detail::describe(f) + ": equality case without the chain shape");
          return;
        }
      }
    });
  }
  return r;
}

/// For every union-closed family with nonempty support and every
/// 1 <= l <= min(l_max, floor(log2 |F|)), some l-subset lies in at least
/// |F| / 2^l members.
inline VerificationReport verify_conjectures(std::size_t n_max, std::size_t l_max) {
  if (n_max < 1 || n_max > kScanTierLimit || l_max < 1) {
    throw invalid_input("conjecture suite needs 1 <= n_max <= 4 and l_max >= 1");
  }
  auto r = detail::report("conjectures", 1, n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    enumerate_union_closed(n, [&](const SetFamily& f) {
      if (!detail::checked_profile(f, r)) return;
      if (is_empty(support(f))) {
        r.skipped.push_back(detail::describe(f) + ": support is empty");
        return;
      }
      ++r.checked;
      const std::size_t l_top =
          std::min<std::size_t>(l_max, static_cast<std::size_t>(std::bit_width(f.size())) - 1);
      for (std::size_t l = 1; l <= l_top; ++l) {
        const auto w = frankl_witness(f, l);
        if (!w.meets_threshold()) {
          r.violations.push_back(detail::describe(f) + ": best " + std::to_string(l) +
                                 "-subset lies in " + std::to_string(w.count) + " members");
        }
      }
    });
  }
  return r;
}

/// w(F) >= |F| log2 |F| / 2 for every nonempty union-closed family, with
/// equality exactly when F is the powerset of its support.
inline VerificationReport verify_reimer(std::size_t n_max) {
  if (n_max < 1 || n_max > kScanTierLimit) throw invalid_input("reimer suite needs 1 <= n_max <= 4");
  auto r = detail::report("reimer", 1, n_max);
  constexpr double kTol = 1e-9;
  for (std::size_t n = 1; n <= n_max; ++n) {
    enumerate_union_closed(n, [&](const SetFamily& f) {
      if (f.empty()) return;
      ++r.checked;
      const auto p = detail::checked_profile(f, r);
      if (!p) return;
      const double w = static_cast<double>(p->weight);
      const double bound = reimer_lower(f.size());
      if (w < bound - kTol * bound) {
        r.violations.push_back(detail::describe(f) + ": weight below m log2 m / 2");
      }
      const bool equal = std::abs(w - bound) <= kTol * std::max(1.0, bound);
      if (equal != is_powerset(f)) {
        r.violations.push_back(detail::describe(f) + (equal ? ": equality without a powerset"
                                                            : ": powerset without equality"));
      }
    });
  }
  return r;
}

/// Structural facts about separating families and the reduction, checked on
/// every family: upward splitting under a degree order (all separating
/// families), and for union-closed ones the descending skeleton, d(i) >= i-1,
/// n <= m+1, reduction and induced-family identities, and the max-degree
/// bound m / log2 m for m >= 3.
inline VerificationReport verify_structure(std::size_t n_max) {
  if (n_max < 1 || n_max > kScanTierLimit) throw invalid_input("structure suite needs 1 <= n_max <= 4");
  auto r = detail::report("structure", 1, n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const FamilyCode end = FamilyCode{1} << (std::size_t{1} << n);
    for (FamilyCode code = 0; code < end; ++code) {
      const SetFamily f = decode_family(n, code);
      const bool closed = code_is_union_closed(code);
      if (closed != is_union_closed(f)) {
        r.violations.push_back(detail::describe(f) + ": union-closure tests disagree");
      }
      const auto p = detail::checked_profile(f, r);
      if (!p) continue;
      const bool separating = is_separating(f);
      if (separating) {
        ++r.checked;
        const SetFamily g = relabel_by_degree(f).family;
        if (!detail::splits_upward(g)) {
          r.violations.push_back(detail::describe(f) + ": degree order does not split upward");
        }
      }
      if (!closed) continue;
      if (separating) {
        const SetFamily g = relabel_by_degree(f).family;
        if (!detail::has_descending_skeleton(g)) {
          r.violations.push_back(detail::describe(f) + ": descending skeleton missing");
        }
        const auto dg = degree_profile(g).degrees;
        for (std::size_t i = 0; i < n; ++i) {
          if (dg[i] < i) r.violations.push_back(detail::describe(f) + ": d(i) < i - 1");
        }
        if (n > f.size() + 1) r.violations.push_back(detail::describe(f) + ": n > m + 1");
      }
      const SetFamily red = reduce(f);
      if (red.size() != f.size() || !is_separating(red) || reduce(red) != red ||
          !is_union_closed(red)) {
        r.violations.push_back(detail::describe(f) + ": reduction identities fail");
      }
      for (std::size_t x = 0; x < n; ++x) {
        if (induced(f, singleton<std::uint64_t>(x)).family.size() != p->degrees[x]) {
          r.violations.push_back(detail::describe(f) + ": |F[x]| != d(x)");
        }
      }
      // {{}, A} has two members and maximum degree 1, so the bound starts at m = 3.
      if (f.size() >= 3 && !is_empty(support(f))) {
        const auto max_deg = *std::max_element(p->degrees.begin(), p->degrees.end());
        if (static_cast<double>(max_deg) < knill_lower(f.size()) * (1 - 1e-9)) {
          r.violations.push_back(detail::describe(f) + ": max degree below m / log2 m");
        }
      }
    }
  }
  return r;
}

// --- construction sweep ------------------------------------------------------

struct SweepRow {
  std::size_t n = 0;
  std::uint64_t m = 0;
  std::size_t l = 1;
  std::uint64_t w = 0;
  double lower = 0.0;
  double upper = 0.0;
  bool upper_asymptotic = false;
  /// w / (m C(log2(m)/2, l)); absent when that term is not positive.
  std::optional<double> ratio_reimer;
  /// w / C(n, l+1); absent when that term is zero.
  std::optional<double> ratio_sep;
};

inline SweepRow sweep_row(std::size_t n, std::uint64_t m, std::size_t l) {
  SweepRow row;
  row.n = n;
  row.m = m;
  row.l = l;
  if (n <= SetFamily::max_domain) {
    row.w = l_fold_weight(intermediate<SetFamily>(n, m).family, l);
  } else {
    row.w = l_fold_weight(intermediate<WideSetFamily>(n, m).family, l);
  }
  const auto lu = static_cast<unsigned>(l);
  const double reimer = reimer_l_lower(m, lu);
  const double sep = static_cast<double>(separation_lower(n, l));
  row.lower = std::max(reimer, sep);
  if (l == 1) {
    row.upper = min_weight_upper(n, m);
  } else {
    row.upper = min_l_fold_weight_upper(n, m, lu).value;
    row.upper_asymptotic = true;
  }
  const double w = static_cast<double>(row.w);
  if (reimer > 0) row.ratio_reimer = w / reimer;
  if (sep > 0) row.ratio_sep = w / sep;
  return row;
}

/// Domain sizes sampled for a given m: both ends of the satisfiable range, the
/// neighbourhood of sqrt(m log2 m), and a doubling ladder in between.
inline std::vector<std::size_t> sweep_domains(std::uint64_t m) {
  std::size_t lo = 1;
  while (lo < 64 && (std::uint64_t{1} << lo) < m) ++lo;
  const std::size_t hi = static_cast<std::size_t>(
      std::min<std::uint64_t>(m + 1, WideSetFamily::max_domain));
  if (lo > hi) return {};
  const auto s = static_cast<std::size_t>(std::ceil(std::sqrt(m_log2_m(m))));
  std::set<std::size_t> c{lo, lo + 1, hi, hi - 1, s / 2, s, 2 * s};
  for (std::size_t k = lo; k <= hi; k *= 2) c.insert(k);
  std::vector<std::size_t> out;
  for (auto n : c) {
    if (n >= lo && n <= hi && n >= 1 && satisfiable(n, m)) out.push_back(n);
  }
  return out;
}

/// Sizes m: every m <= 64, then powers of two and three halves of them.
inline std::vector<std::uint64_t> sweep_sizes(std::uint64_t m_max) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 1; m <= std::min<std::uint64_t>(64, m_max); ++m) out.push_back(m);
  for (std::uint64_t p = 64; p <= m_max; p *= 2) {
    if (p + p / 2 <= m_max) out.push_back(p + p / 2);
    if (2 * p <= m_max) out.push_back(2 * p);
  }
  return out;
}

inline std::vector<SweepRow> sweep_constructions(std::uint64_t m_max, std::size_t l) {
  if (m_max < 1 || m_max > (std::uint64_t{1} << 20)) {
    throw invalid_input("sweep: max-m must be in [1, 2^20]");
  }
  if (l < 1) throw invalid_input("sweep: l must be at least 1");
  std::vector<SweepRow> rows;
  for (auto m : sweep_sizes(m_max)) {
    for (auto n : sweep_domains(m)) rows.push_back(sweep_row(n, m, l));
  }
  return rows;
}

inline const char* sweep_csv_header() { return "n,m,l,w,lower,upper,ratio_reimer,ratio_sep"; }

inline std::string sweep_csv_row(const SweepRow& r) {
  std::ostringstream os;
  os << r.n << ',' << r.m << ',' << r.l << ',' << r.w << ',' << format_real(r.lower) << ','
     << format_real(r.upper) << ',' << (r.ratio_reimer ? format_real(*r.ratio_reimer) : "") << ','
     << (r.ratio_sep ? format_real(*r.ratio_sep) : "");
  return os.str();
}

// --- serialization -----------------------------------------------------------

inline nlohmann::json to_json(const SearchOutcome& o) {
  nlohmann::json wit = nlohmann::json::array();
  for (const auto& f : o.witnesses) wit.push_back(to_json(f));
  return {{"n", o.n},
          {"m", o.m},
          {"l", o.l},
          {"min_value", o.min_value ? nlohmann::json(*o.min_value) : nlohmann::json(nullptr)},
          {"witnesses", std::move(wit)},
          {"examined", o.examined},
          {"exhaustive", o.exhaustive}};
}

inline nlohmann::json to_json(const VerificationReport& r) {
  return {{"suite", r.suite},
          {"n_min", r.n_min},
          {"n_max", r.n_max},
          {"checked", r.checked},
          {"violations", r.violations},
          {"skipped", r.skipped},
          {"passed", r.passed()}};
}

}  // namespace ucf
