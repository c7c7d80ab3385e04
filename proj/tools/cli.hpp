#pragma once

// Command-line driver: construct, analyze, bounds, search, verify, sweep.
// Exit codes: 0 success, 1 a verification suite or runtime invariant failed,
// 2 invalid input (bad flags, unsatisfiable pairs, malformed files, scale).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ucf/ucf.hpp"

namespace ucf::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kInvalid = 2 };

namespace detail {

// Writes to the output path, or to `out` when the path is empty or "-".
inline void emit(const std::string& path, std::ostream& out, const std::string& data) {
  if (path.empty() || path == "-") {
    out << data;
    return;
  }
  std::ofstream f(path);
  if (!f) throw invalid_input("cannot open output file '" + path + "'");
  f << data;
}

inline std::string rational_text(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline nlohmann::json rational_json(const Rational& r) {
  return {{"exact", rational_text(r)}, {"value", to_double(r)}};
}

template <SetMask M>
nlohmann::json labels(const M& m) {
  nlohmann::json a = nlohmann::json::array();
  for_each_bit(m, [&](std::size_t x) { a.push_back(x + 1); });
  return a;
}

inline nlohmann::json trace_json(const IntermediateTrace& t) {
  return {{"case", std::string(to_string(t.kind))},
          {"b", t.b},
          {"expansion", t.expansion},
          {"technical", t.technical},
          {"base_size", t.base_size},
          {"top_size", t.top_size}};
}

template <SetMask M>
nlohmann::json analyze_json(const BasicSetFamily<M>& f, std::size_t l) {
  const auto profile = degree_profile(f);
  const auto part = separation_partition(f);
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : part.classes) classes.push_back(labels(c));
  const auto red = reduce(f);

  nlohmann::json j;
  j["n"] = f.domain_size();
  j["m"] = f.size();
  j["degrees"] = profile.degrees;
  j["weight"] = profile.weight;
  j["l"] = l;
  j["l_fold_weight"] = l_fold_weight(f, l);
  j["is_union_closed"] = is_union_closed(f);
  j["is_separating"] = part.classes.size() == f.domain_size();
  j["separation_classes"] = std::move(classes);
  j["reduction_size"] = red.domain_size();
  j["reduction"] = to_json(red);
  if (l >= 1 && l <= f.domain_size()) {
    const auto w = frankl_witness(f, l);
    const Rational count(static_cast<std::int64_t>(w.count));
    j["frankl"] = {{"subset", labels(w.subset)},
                   {"count", w.count},
                   {"threshold", rational_json(w.threshold)},
                   {"margin", rational_json(count - w.threshold)},
                   {"meets_threshold", w.meets_threshold()},
                   {"support_empty", is_empty(support(f))}};
    j["expected_l_degree"] = rational_json(expected_l_degree(f, l));
  } else {
    j["frankl"] = nullptr;
    j["expected_l_degree"] = nullptr;
  }
  return j;
}

inline unsigned threads_from_env() {
  const char* v = std::getenv("UCF_THREADS");
  if (v == nullptr || *v == '\0') return 1;
  try {
    const long t = std::stol(v);
    if (t < 1) throw invalid_input("UCF_THREADS must be a positive integer");
    return static_cast<unsigned>(t);
  } catch (const std::logic_error&) {
    throw invalid_input(std::string("UCF_THREADS must be a positive integer, got '") + v + "'");
  }
}

}  // namespace detail

/// Runs one command line (args excludes the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Separating union-closed families: constructions, bounds, exhaustive search"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string output;
  std::string format = "json";
  std::size_t n = 0;
  std::uint64_t m = 0;
  std::size_t l = 1;

  auto* construct_cmd = app.add_subcommand("construct", "Build a named family");
  std::string kind;
  bool with_trace = false;
  construct_cmd->add_option("--kind", kind, "staircase | plateau | powerset | intermediate")->required();
  construct_cmd->add_option("--n", n, "Domain size")->required();
  auto* construct_m = construct_cmd->add_option("--m", m, "Family size (intermediate only)");
  construct_cmd->add_flag("--trace", with_trace, "Add the construction trace as a sibling key");
  construct_cmd->add_option("-o,--output", output, "Output path (default stdout)");

  auto* analyze_cmd = app.add_subcommand("analyze", "Report the invariants of a family file");
  std::string input;
  analyze_cmd->add_option("-i,--input,input", input, "Family file (JSON or text)")->required();
  analyze_cmd->add_option("--l", l, "l for the l-fold quantities")->capture_default_str();
  analyze_cmd->add_option("-o,--output", output, "Output path (default stdout)");

  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate the closed-form bounds");
  bounds_cmd->add_option("--n", n, "Domain size")->required();
  bounds_cmd->add_option("--m", m, "Family size")->required();
  bounds_cmd->add_option("--l", l, "l-fold order")->capture_default_str();
  std::string bounds_format = "csv";
  bounds_cmd->add_option("--format", bounds_format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  bounds_cmd->add_option("-o,--output", output, "Output path (default stdout)");

  auto* search_cmd = app.add_subcommand("search", "Exhaustive minimal-weight search (n <= 5)");
  bool allow_n5 = false;
  search_cmd->add_option("--n", n, "Domain size")->required();
  search_cmd->add_option("--m", m, "Family size")->required();
  search_cmd->add_option("--l", l, "l-fold order")->capture_default_str();
  search_cmd->add_flag("--allow-n5", allow_n5, "Enable the depth-first tier for n = 5");
  search_cmd->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));
  search_cmd->add_option("-o,--output", output, "Output path (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  std::size_t max_n = 4;
  std::optional<std::size_t> suite_l;
  verify_cmd
      ->add_option("--suite", suite,
                   "staircase (theorem3) | l-fold (lemma8) | conjectures | reimer | structure | all")
      ->required();
  verify_cmd->add_option("--max-n", max_n, "Largest domain size (<= 4)")->capture_default_str();
  verify_cmd->add_option("--l", suite_l, "l for l-fold (default: every l) or l_max for conjectures (default 2)");
  verify_cmd->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));
  verify_cmd->add_option("-o,--output", output, "Output path (default stdout)");

  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate the intermediate construction");
  std::uint64_t max_m = 4096;
  sweep_cmd->add_option("--max-m", max_m, "Largest family size (<= 2^20)")->capture_default_str();
  sweep_cmd->add_option("--l", l, "l-fold order")->capture_default_str();
  std::string sweep_format = "csv";
  sweep_cmd->add_option("--format", sweep_format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sweep_cmd->add_option("-o,--output", output, "Output path (default stdout)");

  std::vector<const char*> argv{"ucf"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*construct_cmd) {
      ConstructionRequest req{parse_construction_kind(kind), n, std::nullopt};
      if (*construct_m) req.m = m;
      auto render = [&](auto tag) {
        using Family = decltype(tag);
        const auto built = construct<Family>(req);
        nlohmann::json j = to_json(built.family);
        if (with_trace && built.trace) j["trace"] = detail::trace_json(*built.trace);
        return j;
      };
      const nlohmann::json j = n <= SetFamily::max_domain ? render(SetFamily{}) : render(WideSetFamily{});
      detail::emit(output, out, j.dump() + "\n");
      return kOk;
    }

    if (*analyze_cmd) {
      const AnyFamily f = load_family(input);
      const nlohmann::json j = std::visit([&](const auto& g) { return detail::analyze_json(g, l); }, f);
      detail::emit(output, out, j.dump(2) + "\n");
      return kOk;
    }

    if (*bounds_cmd) {
      const auto r = bounds_report(n, m, static_cast<unsigned>(l));
      if (bounds_format == "json") {
        detail::emit(output, out, to_json(r).dump(2) + "\n");
      } else {
        detail::emit(output, out, std::string(bounds_csv_header()) + "\n" + bounds_csv_row(r) + "\n");
      }
      return kOk;
    }

    if (*search_cmd) {
      SearchOptions opts;
      opts.threads = detail::threads_from_env();
      opts.allow_depth_first_tier = allow_n5;
      const auto o = min_weight_search(n, m, l, opts);
      detail::emit(output, out, to_json(o).dump(2) + "\n");
      return kOk;
    }

    if (*verify_cmd) {
      if (max_n < 1 || max_n > kScanTierLimit) throw invalid_input("--max-n must be in [1, 4]");
      std::vector<VerificationReport> reports;
      const bool all = suite == "all";
      bool known = all;
      if (all || suite == "staircase" || suite == "theorem3") {
        known = true;
        reports.push_back(verify_staircase_extremality(std::min<std::size_t>(2, max_n), max_n));
      }
      if (all || suite == "l-fold" || suite == "lemma8") {
        known = true;
        if (suite_l) {
          reports.push_back(verify_l_fold_equality_structure(max_n, *suite_l));
        } else {
          for (std::size_t k = 1; k < max_n; ++k) reports.push_back(verify_l_fold_equality_structure(max_n, k));
        }
      }
      if (all || suite == "conjectures") {
        known = true;
        reports.push_back(verify_conjectures(max_n, suite_l.value_or(2)));
      }
      if (all || suite == "reimer") {
        known = true;
        reports.push_back(verify_reimer(max_n));
      }
      if (all || suite == "structure") {
        known = true;
        reports.push_back(verify_structure(max_n));
      }
      if (!known) throw invalid_input("unknown suite '" + suite + "'");
      bool passed = true;
      nlohmann::json j = nlohmann::json::array();
      for (const auto& r : reports) {
        passed = passed && r.passed();
        j.push_back(to_json(r));
        err << r.suite << ": " << r.checked << " checked, " << r.violations.size() << " violations, "
            << r.skipped.size() << " skipped\n";
      }
      detail::emit(output, out, (j.size() == 1 ? j[0] : j).dump(2) + "\n");
      return passed ? kOk : kFailed;
    }

    if (*sweep_cmd) {
      const auto rows = sweep_constructions(max_m, l);
      std::string data;
      if (sweep_format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rows) {
          j.push_back({{"n", r.n},
                       {"m", r.m},
                       {"l", r.l},
                       {"w", r.w},
                       {"lower", r.lower},
                       {"upper", r.upper},
                       {"upper_asymptotic", r.upper_asymptotic},
                       {"ratio_reimer", r.ratio_reimer ? nlohmann::json(*r.ratio_reimer) : nlohmann::json(nullptr)},
                       {"ratio_sep", r.ratio_sep ? nlohmann::json(*r.ratio_sep) : nlohmann::json(nullptr)}});
        }
        data = j.dump(2) + "\n";
      } else {
        data = std::string(sweep_csv_header()) + "\n";
        for (const auto& r : rows) data += sweep_csv_row(r) + "\n";
      }
      detail::emit(output, out, data);
      return kOk;
    }
  } catch (const invalid_input& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const unsupported_scale& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const invariant_violation& e) {
    err << "invariant violated: " << e.what() << "\n";
    return kFailed;
  }
  return kInvalid;
}

}  // namespace ucf::cli
