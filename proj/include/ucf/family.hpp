#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ucf/combinatorics.hpp"
#include "ucf/errors.hpp"
#include "ucf/mask.hpp"

// A set family is a finite domain {0, ..., n-1} together with a duplicate-free
// collection of its subsets. Elements are 0-based in this API; the file
// formats and to_string() use the 1-based labels 1..n.

namespace ucf {

template <SetMask M>
class BasicSetFamily {
 public:
  using mask_type = M;
  static constexpr std::size_t max_domain = mask_capacity<M>;

  BasicSetFamily() = default;

  /// Validates that every set lies inside the domain and that no set repeats.
  /// Sets are stored in ascending mask order.
  explicit BasicSetFamily(std::size_t domain_size, std::vector<M> sets = {})
      : domain_size_(domain_size), sets_(std::move(sets)) {
    if (domain_size_ > max_domain) {
      throw invalid_input("domain size " + std::to_string(domain_size_) + " exceeds the " +
                          std::to_string(max_domain) + "-element mask capacity");
    }
    for (const M& s : sets_) {
      if (bit_extent(s) > domain_size_) {
        throw invalid_input("set contains an element outside the domain of size " +
                            std::to_string(domain_size_));
      }
    }
    std::sort(sets_.begin(), sets_.end());
    if (std::adjacent_find(sets_.begin(), sets_.end()) != sets_.end()) {
      throw invalid_input("family contains a duplicate set");
    }
  }

  std::size_t domain_size() const { return domain_size_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  std::span<const M> sets() const { return sets_; }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }
  const M& operator[](std::size_t i) const { return sets_[i]; }

  M domain_mask() const { return prefix_mask<M>(domain_size_); }

  bool contains(const M& s) const { return std::binary_search(sets_.begin(), sets_.end(), s); }

  friend bool operator==(const BasicSetFamily&, const BasicSetFamily&) = default;

 private:
  std::size_t domain_size_ = 0;
  std::vector<M> sets_;
};

using SetFamily = BasicSetFamily<std::uint64_t>;
using WideSetFamily = BasicSetFamily<WideMask<16>>;

struct DegreeProfile {
  std::vector<std::uint64_t> degrees;
  std::uint64_t weight = 0;
  std::uint64_t size = 0;

  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

/// The classes of the "not separated by any member" equivalence, ordered by
/// their lowest element.
template <SetMask M>
struct SeparationPartition {
  std::vector<M> classes;

  bool all_singletons() const {
    return std::all_of(classes.begin(), classes.end(),
                       [](const M& c) { return cardinality(c) == 1; });
  }
};

template <SetMask M>
struct ConjectureWitness {
  M subset{};
  std::uint64_t count = 0;
  Rational threshold;

  bool meets_threshold() const { return Rational(static_cast<std::int64_t>(count)) >= threshold; }
};

/// A family on a renumbered domain, with the original index of every new
/// element (origin[new] = old).
template <SetMask M>
struct RelabeledFamily {
  BasicSetFamily<M> family;
  std::vector<std::size_t> origin;
};

namespace detail {

// Constant-time membership over a family's sets: a dense bitmap when the
// domain is small, a hash set otherwise.
template <SetMask M>
class MembershipIndex {
 public:
  explicit MembershipIndex(const BasicSetFamily<M>& f) {
    if constexpr (std::same_as<M, std::uint64_t>) {
      if (f.domain_size() <= kDenseLimit) {
        dense_.assign(std::size_t{1} << f.domain_size(), false);
        for (auto s : f) dense_[s] = true;
        use_dense_ = true;
        return;
      }
    }
    hashed_.reserve(f.size() * 2);
    hashed_.insert(f.begin(), f.end());
  }

  bool contains(const M& s) const {
    if constexpr (std::same_as<M, std::uint64_t>) {
      if (use_dense_) return dense_[s];
    }
    return hashed_.contains(s);
  }

 private:
  static constexpr std::size_t kDenseLimit = 24;
  bool use_dense_ = false;
  std::vector<bool> dense_;
  std::unordered_set<M> hashed_;
};

// Members that are not the union of the members strictly below them. Every
// member is a union of these.
template <SetMask M>
std::vector<M> join_irreducibles(const BasicSetFamily<M>& f) {
  std::vector<M> by_size(f.begin(), f.end());
  std::stable_sort(by_size.begin(), by_size.end(), [](const M& a, const M& b) {
    return cardinality(a) < cardinality(b);
  });
  std::vector<M> gens;
  for (const M& a : by_size) {
    if (is_empty(a)) continue;
    M covered{};
    for (const M& g : gens) {
      if (is_subset(g, a)) {
        covered = covered | g;
        if (covered == a) break;
      }
    }
    if (covered != a) gens.push_back(a);
  }
  return gens;
}

template <SetMask M>
M map_elements(const M& s, std::span<const std::size_t> new_index_of) {
  M out{};
  for_each_bit(s, [&](std::size_t x) { set_bit(out, new_index_of[x]); });
  return out;
}

inline void check_element(std::size_t x, std::size_t n) {
  if (x >= n) {
    throw invalid_input("element index " + std::to_string(x) + " is outside a domain of size " +
                        std::to_string(n));
  }
}

}  // namespace detail

/// True iff A | B is a member for every pair of members. The empty set is not
/// required. Checks A | g only for join-irreducible g, which suffices since
/// every member is a union of those.
template <SetMask M>
bool is_union_closed(const BasicSetFamily<M>& f) {
  if (f.size() < 2) return true;
  const auto gens = detail::join_irreducibles(f);
  const detail::MembershipIndex<M> index(f);
  for (const M& a : f) {
    for (const M& g : gens) {
      if (is_subset(g, a)) continue;
      if (!index.contains(a | g)) return false;
    }
  }
  return true;
}

/// Smallest union-closed superfamily; the empty set is only present if it was
/// already a member.
template <SetMask M>
BasicSetFamily<M> union_closure(const BasicSetFamily<M>& f) {
  const auto gens = detail::join_irreducibles(f);
  std::vector<M> all(f.begin(), f.end());
  std::unordered_set<M> seen(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const M& g : gens) {
      M u = all[i] | g;
      if (seen.insert(u).second) all.push_back(u);
    }
  }
  return BasicSetFamily<M>(f.domain_size(), std::move(all));
}

/// Degrees and weight, with the weight computed both per set and per element.
template <SetMask M>
DegreeProfile degree_profile(const BasicSetFamily<M>& f) {
  DegreeProfile p;
  p.degrees.assign(f.domain_size(), 0);
  p.size = f.size();
  std::uint64_t by_sets = 0;
  for (const M& s : f) {
    by_sets += cardinality(s);
    for_each_bit(s, [&](std::size_t x) { ++p.degrees[x]; });
  }
  p.weight = std::accumulate(p.degrees.begin(), p.degrees.end(), std::uint64_t{0});
  if (p.weight != by_sets) {
    throw invariant_violation("double counting failed: sum of degrees " + std::to_string(p.weight) +
                              " != sum of set sizes " + std::to_string(by_sets));
  }
  return p;
}

template <SetMask M>
std::uint64_t weight(const BasicSetFamily<M>& f) {
  std::uint64_t w = 0;
  for (const M& s : f) w += cardinality(s);
  return w;
}

/// Sum over members A of C(|A|, l).
template <SetMask M>
std::uint64_t l_fold_weight(const BasicSetFamily<M>& f, std::size_t l) {
  std::uint64_t w = 0;
  for (const M& s : f) w = checked_add(w, binomial(cardinality(s), l));
  return w;
}

/// Union of all members.
template <SetMask M>
M support(const BasicSetFamily<M>& f) {
  M u{};
  for (const M& s : f) u = u | s;
  return u;
}

/// The family of all subsets of its own support.
template <SetMask M>
bool is_powerset(const BasicSetFamily<M>& f) {
  const std::size_t k = cardinality(support(f));
  return k < 63 && f.size() == (std::size_t{1} << k);
}

/// {A \ X : A in F, X subset of A} on the domain without X, renumbered in order.
template <SetMask M>
RelabeledFamily<M> induced(const BasicSetFamily<M>& f, const M& x) {
  if (bit_extent(x) > f.domain_size()) {
    throw invalid_input("induced: X is not a subset of the domain");
  }
  const std::size_t n = f.domain_size();
  std::vector<std::size_t> new_index_of(n, 0);
  std::vector<std::size_t> origin;
  for (std::size_t e = 0; e < n; ++e) {
    if (!test_bit(x, e)) {
      new_index_of[e] = origin.size();
      origin.push_back(e);
    }
  }
  std::vector<M> sets;
  for (const M& a : f) {
    if (is_subset(x, a)) sets.push_back(detail::map_elements(difference(a, x), new_index_of));
  }
  return {BasicSetFamily<M>(origin.size(), std::move(sets)), std::move(origin)};
}

/// Some member contains exactly one of i and j.
template <SetMask M>
bool separates(const BasicSetFamily<M>& f, std::size_t i, std::size_t j) {
  detail::check_element(i, f.domain_size());
  detail::check_element(j, f.domain_size());
  if (i == j) throw invalid_input("separates: the two elements must be distinct");
  return std::any_of(f.begin(), f.end(),
                     [&](const M& a) { return test_bit(a, i) != test_bit(a, j); });
}

template <SetMask M>
SeparationPartition<M> separation_partition(const BasicSetFamily<M>& f) {
  const std::size_t n = f.domain_size();
  SeparationPartition<M> part;
  if (n == 0) return part;
  part.classes.push_back(f.domain_mask());
  std::vector<M> next;
  for (const M& a : f) {
    if (part.classes.size() == n) break;
    next.clear();
    for (const M& c : part.classes) {
      if (cardinality(c) == 1) {
        next.push_back(c);
        continue;
      }
      const M in = c & a;
      const M out = difference(c, a);
      if (!is_empty(in)) next.push_back(in);
      if (!is_empty(out)) next.push_back(out);
    }
    part.classes.swap(next);
  }
  std::sort(part.classes.begin(), part.classes.end(),
            [](const M& a, const M& b) { return lowest_bit(a) < lowest_bit(b); });
  return part;
}

template <SetMask M>
bool is_separating(const BasicSetFamily<M>& f) {
  return separation_partition(f).classes.size() == f.domain_size();
}

/// Quotient by the separation partition; class k becomes element k.
template <SetMask M>
BasicSetFamily<M> reduce(const BasicSetFamily<M>& f) {
  const auto part = separation_partition(f);
  std::vector<std::size_t> class_of(f.domain_size(), 0);
  for (std::size_t k = 0; k < part.classes.size(); ++k) {
    for_each_bit(part.classes[k], [&](std::size_t x) { class_of[x] = k; });
  }
  std::vector<M> sets;
  sets.reserve(f.size());
  for (const M& a : f) sets.push_back(detail::map_elements(a, class_of));
  return BasicSetFamily<M>(part.classes.size(), std::move(sets));
}

/// Renames element x to new_index_of[x]; new_index_of must be a permutation.
template <SetMask M>
BasicSetFamily<M> permute(const BasicSetFamily<M>& f, std::span<const std::size_t> new_index_of) {
  std::vector<M> sets;
  sets.reserve(f.size());
  for (const M& a : f) sets.push_back(detail::map_elements(a, new_index_of));
  return BasicSetFamily<M>(f.domain_size(), std::move(sets));
}

/// Elements renumbered by nondecreasing degree, ties kept in original order.
template <SetMask M>
RelabeledFamily<M> relabel_by_degree(const BasicSetFamily<M>& f) {
  const auto degrees = degree_profile(f).degrees;
  std::vector<std::size_t> origin(f.domain_size());
  std::iota(origin.begin(), origin.end(), std::size_t{0});
  std::stable_sort(origin.begin(), origin.end(),
                   [&](std::size_t a, std::size_t b) { return degrees[a] < degrees[b]; });
  std::vector<std::size_t> new_index_of(f.domain_size());
  for (std::size_t k = 0; k < origin.size(); ++k) new_index_of[origin[k]] = k;
  return {permute(f, new_index_of), std::move(origin)};
}

/// Calls f(mask) for every l-subset of {0..n-1}, in lexicographic order of the
/// ascending element lists. Stops early if f returns false.
template <SetMask M, class F>
void for_each_l_subset(std::size_t n, std::size_t l, F&& f) {
  if (l > n) return;
  std::vector<std::size_t> idx(l);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    M m{};
    for (auto i : idx) set_bit(m, i);
    if (!f(m)) return;
    std::size_t k = l;
    while (k > 0 && idx[k - 1] == n - l + (k - 1)) --k;
    if (k == 0) return;
    ++idx[k - 1];
    for (std::size_t j = k; j < l; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// The l-subset contained in the most members (lexicographically least on
/// ties), with the threshold |F| / 2^l it is compared against.
template <SetMask M>
ConjectureWitness<M> frankl_witness(const BasicSetFamily<M>& f, std::size_t l) {
  const std::size_t n = f.domain_size();
  if (l < 1 || l > n) {
    throw invalid_input("frankl_witness: need 1 <= l <= n, got l = " + std::to_string(l) +
                        ", n = " + std::to_string(n));
  }
  if (l > 62) throw unsupported_scale("frankl_witness: threshold |F|/2^l needs l <= 62");
  if (binomial(n, l) > (std::uint64_t{1} << 32)) {
    throw unsupported_scale("frankl_witness: too many l-subsets to scan");
  }
  ConjectureWitness<M> best;
  bool first = true;
  for_each_l_subset<M>(n, l, [&](const M& x) {
    std::uint64_t count = 0;
    for (const M& a : f) count += is_subset(x, a) ? 1 : 0;
    if (first || count > best.count) {
      best.subset = x;
      best.count = count;
      first = false;
    }
    return true;
  });
  best.threshold = Rational(static_cast<std::int64_t>(f.size()), std::int64_t{1} << l);
  return best;
}

/// E[d(X)] for X a uniformly random l-subset: w_l(F) / C(n, l).
template <SetMask M>
Rational expected_l_degree(const BasicSetFamily<M>& f, std::size_t l) {
  const std::size_t n = f.domain_size();
  if (l < 1 || l > n) {
    throw invalid_input("expected_l_degree: need 1 <= l <= n, got l = " + std::to_string(l) +
                        ", n = " + std::to_string(n));
  }
  const auto num = l_fold_weight(f, l);
  const auto den = binomial(n, l);
  constexpr auto kMax = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
  if (num > kMax || den > kMax) throw unsupported_scale("expected_l_degree: exceeds 63 bits");
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

/// 1-based display form, e.g. {{4},{3,4},{2,3,4}}.
template <SetMask M>
std::string to_string(const BasicSetFamily<M>& f) {
  std::string out = "{";
  bool first_set = true;
  for (const M& a : f) {
    if (!first_set) out += ',';
    first_set = false;
    out += '{';
    bool first = true;
    for_each_bit(a, [&](std::size_t x) {
      if (!first) out += ',';
      first = false;
      out += std::to_string(x + 1);
    });
    out += '}';
  }
  out += '}';
  return out;
}

}  // namespace ucf
