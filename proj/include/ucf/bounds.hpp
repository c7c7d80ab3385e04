#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "ucf/combinatorics.hpp"
#include "ucf/errors.hpp"

// Closed-form lower and upper bounds on the (l-fold) weight of separating
// union-closed families of a given size m on a domain of n elements.

namespace ucf {

/// A value that is only the leading term of an asymptotic estimate.
struct LeadingTerm {
  double value = 0.0;
  bool asymptotic = true;
};

/// Some n-separating union-closed family of size m exists: n-1 <= m <= 2^n.
constexpr bool satisfiable(std::uint64_t n, std::uint64_t m) {
  if (n == 0) return false;
  if (m + 1 < n) return false;
  return n >= 64 || m <= (std::uint64_t{1} << n);
}

inline void require_satisfiable(std::uint64_t n, std::uint64_t m) {
  if (n == 0) throw invalid_input("n must be positive");
  if (m + 1 < n) {
    throw invalid_input("(n, m) = (" + std::to_string(n) + ", " + std::to_string(m) +
                        ") is unsatisfiable: n - 1 <= m fails");
  }
  if (!satisfiable(n, m)) {
    throw invalid_input("(n, m) = (" + std::to_string(n) + ", " + std::to_string(m) +
                        ") is unsatisfiable: m <= 2^n fails");
  }
}

/// m log2(m) / 2, the least weight of any union-closed family of size m.
inline double reimer_lower(std::uint64_t m) { return m_log2_m(m) / 2.0; }

/// C(n, l+1), the least l-fold weight of an n-separating union-closed family.
inline std::uint64_t separation_lower(std::uint64_t n, std::uint64_t l) {
  return binomial(n, l + 1);
}

/// x (x-1) ... (x-l+1) / l!; 1 for l = 0. Negative values are returned as is.
inline double generalized_binomial(double x, unsigned l) {
  double r = 1.0;
  for (unsigned i = 0; i < l; ++i) r *= (x - i) / static_cast<double>(i + 1);
  return r;
}

/// m * C(log2(m) / 2, l).
inline double reimer_l_lower(std::uint64_t m, unsigned l) {
  if (m == 0) return 0.0;
  return static_cast<double>(m) * generalized_binomial(log2_of(m) / 2.0, l);
}

/// Weight of the intermediate construction is below this for every satisfiable
/// pair: m log2(m) / 2 + n(n+1)/2 + m.
inline double min_weight_upper(std::uint64_t n, std::uint64_t m) {
  require_satisfiable(n, m);
  const double nd = static_cast<double>(n);
  return reimer_lower(m) + nd * (nd + 1.0) / 2.0 + static_cast<double>(m);
}

/// |B| log2|B| / 2 + |B|, the weight ceiling for a technical-case base.
inline double base_weight_upper(std::uint64_t size) {
  return reimer_lower(size) + static_cast<double>(size);
}

/// (1 + 2l / log2|B|) (|B| / l!) (log2|B| / 2)^l, the l-fold analogue; needs |B| >= 2.
inline double base_l_fold_weight_upper(std::uint64_t size, unsigned l) {
  if (size < 2) throw invalid_input("base_l_fold_weight_upper: base size must be at least 2");
  const double lg = log2_of(size);
  double factorial = 1.0;
  for (unsigned k = 2; k <= l; ++k) factorial *= k;
  return (1.0 + 2.0 * l / lg) * (static_cast<double>(size) / factorial) * std::pow(lg / 2.0, l);
}

/// Leading term C(n, l+1) + m C(log2(m)/2, l) of the l-fold upper estimate.
inline LeadingTerm min_l_fold_weight_upper(std::uint64_t n, std::uint64_t m, unsigned l) {
  require_satisfiable(n, m);
  return {static_cast<double>(separation_lower(n, l)) + reimer_l_lower(m, l), true};
}

/// Average degree lower bound at known n: max(m log2 m / (2n), (n-1)/2).
inline double avg_degree_lower_at(std::uint64_t n, std::uint64_t m) {
  if (n == 0) throw invalid_input("avg_degree_lower_at: n must be positive");
  const double nd = static_cast<double>(n);
  return std::max(m_log2_m(m) / (2.0 * nd), (nd - 1.0) / 2.0);
}

/// The n-free form sqrt(m log2 m) / 2 - 1/4 obtained by minimising over n.
inline double avg_degree_lower(std::uint64_t m) {
  if (m == 0) throw invalid_input("avg_degree_lower: m must be positive");
  return std::sqrt(m_log2_m(m)) / 2.0 - 0.25;
}

struct ExpectedDegreeLower {
  /// max(C(n, l+1), m C(log2(m)/2, l)) / C(n, l); a valid bound.
  double exact = 0.0;
  /// m^(1/(l+1)) (log2(m) / (2(l+1)))^(l/(l+1)); leading term only.
  LeadingTerm leading;
};

inline ExpectedDegreeLower expected_l_lower(std::uint64_t n, std::uint64_t m, unsigned l) {
  require_satisfiable(n, m);
  if (l < 1 || l > n) {
    throw invalid_input("expected_l_lower: need 1 <= l <= n");
  }
  ExpectedDegreeLower out;
  const double numer = std::max(static_cast<double>(separation_lower(n, l)), reimer_l_lower(m, l));
  out.exact = numer / static_cast<double>(binomial(n, l));
  const double lp1 = static_cast<double>(l) + 1.0;
  const double md = static_cast<double>(m);
  out.leading.value =
      m == 0 ? 0.0
             : std::pow(md, 1.0 / lp1) * std::pow(log2_of(m) / (2.0 * lp1), static_cast<double>(l) / lp1);
  return out;
}

/// m / log2(m): some element lies in at least this many members.
inline double knill_lower(std::uint64_t m) {
  if (m < 2) throw invalid_input("knill_lower: m must be at least 2");
  return static_cast<double>(m) / log2_of(m);
}

struct BoundsReport {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  unsigned l = 1;
  /// m C(log2(m)/2, l); equals m log2(m) / 2 at l = 1.
  double reimer_lower = 0.0;
  std::uint64_t separation_lower = 0;
  double combined_lower = 0.0;
  /// Absent for unsatisfiable pairs.
  std::optional<LeadingTerm> construction_upper;
  double avg_degree_lower = 0.0;
  /// Absent for m < 2.
  std::optional<double> knill_lower;
  bool satisfiable = false;
};

inline BoundsReport bounds_report(std::uint64_t n, std::uint64_t m, unsigned l) {
  if (n == 0) throw invalid_input("bounds: n must be positive");
  if (l == 0) throw invalid_input("bounds: l must be positive");
  BoundsReport r;
  r.n = n;
  r.m = m;
  r.l = l;
  r.reimer_lower = ucf::reimer_l_lower(m, l);
  r.separation_lower = ucf::separation_lower(n, l);
  r.combined_lower = std::max(r.reimer_lower, static_cast<double>(r.separation_lower));
  r.satisfiable = ucf::satisfiable(n, m);
  if (r.satisfiable) {
    r.construction_upper = l == 1 ? LeadingTerm{min_weight_upper(n, m), false}
                                  : min_l_fold_weight_upper(n, m, l);
  }
  r.avg_degree_lower = avg_degree_lower_at(n, m);
  if (m >= 2) r.knill_lower = ucf::knill_lower(m);
  return r;
}

inline nlohmann::json to_json(const BoundsReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["l"] = r.l;
  j["reimer_lower"] = r.reimer_lower;
  j["separation_lower"] = r.separation_lower;
  j["combined_lower"] = r.combined_lower;
  if (r.construction_upper) {
    j["construction_upper"] = {{"value", r.construction_upper->value},
                               {"asymptotic", r.construction_upper->asymptotic}};
  } else {
    j["construction_upper"] = nullptr;
  }
  j["avg_degree_lower"] = r.avg_degree_lower;
  j["knill_lower"] = r.knill_lower ? nlohmann::json(*r.knill_lower) : nlohmann::json(nullptr);
  j["satisfiable"] = r.satisfiable;
  return j;
}

inline const char* bounds_csv_header() {
  return "n,m,l,reimer,separation,combined,upper,avg_deg,knill,satisfiable";
}

inline std::string format_real(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

/// Empty fields stand for absent values.
inline std::string bounds_csv_row(const BoundsReport& r) {
  std::ostringstream os;
  os << r.n << ',' << r.m << ',' << r.l << ',' << format_real(r.reimer_lower) << ','
     << r.separation_lower << ',' << format_real(r.combined_lower) << ','
     << (r.construction_upper ? format_real(r.construction_upper->value) : "") << ','
     << format_real(r.avg_degree_lower) << ','
     << (r.knill_lower ? format_real(*r.knill_lower) : "") << ','
     << (r.satisfiable ? "true" : "false");
  return os.str();
}

}  // namespace ucf
