#pragma once

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "ucf/errors.hpp"
#include "ucf/family.hpp"

// Family file formats. The canonical one is JSON:
//   {"n": 4, "sets": [[4], [3, 4], [2, 3, 4]]}
// with 1-based ascending element lists and [] for the empty set. A plain text
// form is also accepted on input: the first line holds n, then one set per
// line as whitespace-separated labels, with "-" for the empty set.

namespace ucf {

using AnyFamily = std::variant<SetFamily, WideSetFamily>;

template <SetMask M>
nlohmann::json to_json(const BasicSetFamily<M>& f) {
  nlohmann::json sets = nlohmann::json::array();
  for (const M& a : f) {
    nlohmann::json elems = nlohmann::json::array();
    for_each_bit(a, [&](std::size_t x) { elems.push_back(x + 1); });
    sets.push_back(std::move(elems));
  }
  return {{"n", f.domain_size()}, {"sets", std::move(sets)}};
}

inline nlohmann::json to_json(const AnyFamily& f) {
  return std::visit([](const auto& g) { return to_json(g); }, f);
}

namespace detail {

template <SetMask M>
M parse_elements(const std::vector<long long>& labels, std::size_t n, bool require_ascending) {
  M m{};
  long long prev = 0;
  for (long long x : labels) {
    if (x < 1 || static_cast<unsigned long long>(x) > n) {
      throw invalid_input("element " + std::to_string(x) + " is outside [1, " + std::to_string(n) +
                          "]");
    }
    if (test_bit(m, static_cast<std::size_t>(x - 1))) {
      throw invalid_input("element " + std::to_string(x) + " repeats within a set");
    }
    if (x < prev && require_ascending) {
      throw invalid_input("set elements must be listed in ascending order");
    }
    prev = std::max(prev, x);
    set_bit(m, static_cast<std::size_t>(x - 1));
  }
  return m;
}

inline std::size_t parse_domain_size(long long n) {
  if (n < 1) throw invalid_input("domain size must be positive");
  if (static_cast<unsigned long long>(n) > WideSetFamily::max_domain) {
    throw unsupported_scale("domain size " + std::to_string(n) + " exceeds " +
                            std::to_string(WideSetFamily::max_domain));
  }
  return static_cast<std::size_t>(n);
}

template <SetMask M>
BasicSetFamily<M> family_from_labels(std::size_t n, const std::vector<std::vector<long long>>& raw,
                                     bool require_ascending) {
  std::vector<M> sets;
  sets.reserve(raw.size());
  for (const auto& labels : raw) sets.push_back(parse_elements<M>(labels, n, require_ascending));
  return BasicSetFamily<M>(n, std::move(sets));
}

inline AnyFamily any_from_labels(std::size_t n, const std::vector<std::vector<long long>>& raw,
                                 bool require_ascending) {
  if (n <= SetFamily::max_domain) {
    return family_from_labels<std::uint64_t>(n, raw, require_ascending);
  }
  return family_from_labels<WideSetFamily::mask_type>(n, raw, require_ascending);
}

}  // namespace detail

/// Parses the JSON family document; narrow representation when n <= 64.
inline AnyFamily family_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("sets")) {
    throw invalid_input("family JSON needs an object with \"n\" and \"sets\"");
  }
  if (!j["n"].is_number_integer()) throw invalid_input("\"n\" must be an integer");
  if (!j["sets"].is_array()) throw invalid_input("\"sets\" must be an array");
  const std::size_t n = detail::parse_domain_size(j["n"].get<long long>());
  std::vector<std::vector<long long>> raw;
  for (const auto& s : j["sets"]) {
    if (!s.is_array()) throw invalid_input("each set must be an array of integers");
    std::vector<long long> labels;
    for (const auto& x : s) {
      if (!x.is_number_integer()) throw invalid_input("set elements must be integers");
      labels.push_back(x.get<long long>());
    }
    raw.push_back(std::move(labels));
  }
  return detail::any_from_labels(n, raw, true);
}

inline AnyFamily family_from_text(std::istream& in) {
  std::string line;
  long long n_raw = 0;
  bool have_n = false;
  std::vector<std::vector<long long>> raw;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    std::vector<std::string> toks;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    if (!have_n) {
      if (toks.size() != 1) throw invalid_input("text family: first line must hold n alone");
      try {
        std::size_t used = 0;
        n_raw = std::stoll(toks[0], &used);
        if (used != toks[0].size()) throw std::invalid_argument("trailing characters");
      } catch (const std::logic_error&) {
        throw invalid_input("text family: cannot parse n from '" + toks[0] + "'");
      }
      have_n = true;
      continue;
    }
    std::vector<long long> labels;
    if (!(toks.size() == 1 && toks[0] == "-")) {
      for (const auto& t : toks) {
        try {
          std::size_t used = 0;
          labels.push_back(std::stoll(t, &used));
          if (used != t.size()) throw std::invalid_argument("trailing characters");
        } catch (const std::logic_error&) {
          throw invalid_input("text family: bad element '" + t + "'");
        }
      }
    }
    raw.push_back(std::move(labels));
  }
  if (!have_n) throw invalid_input("text family: missing n");
  return detail::any_from_labels(detail::parse_domain_size(n_raw), raw, false);
}

/// JSON if the first non-blank character is '{', the text form otherwise.
inline AnyFamily parse_family(const std::string& content) {
  const auto pos = content.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && content[pos] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(content);
    } catch (const nlohmann::json::parse_error& e) {
      throw invalid_input(std::string("malformed family JSON: ") + e.what());
    }
    return family_from_json(j);
  }
  std::istringstream in(content);
  return family_from_text(in);
}

inline AnyFamily load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open family file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_family(buf.str());
}

}  // namespace ucf
