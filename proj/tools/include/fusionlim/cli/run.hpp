#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fusionlim/bilim/bilimit.hpp"
#include "fusionlim/coh/bar.hpp"
#include "fusionlim/cli/report.hpp"

namespace fusionlim::cli {

enum class IndexFlavor { fusion, transporter, both };
enum class Format { human, json };

struct RunConfig {
  std::string group = "S3";
  unsigned p = 2;
  /// Defaults per command when unset.
  std::optional<std::size_t> max_degree;
  IndexFlavor index = IndexFlavor::both;
  std::size_t budget = coh::kDefaultBudget;
  std::uint64_t bilim_budget = bilim::kDefaultBilimBudget;
  std::optional<std::filesystem::path> cache_dir;
  /// Lifts the degree cap.
  bool force = false;
  Format format = Format::human;
  /// trivial | regular | perm:<label> | perm:idx:<k>; empty means the default set.
  std::vector<std::string> modules;
  std::vector<std::string> targets;
  /// <label> | idx:<k> in subgroup enumeration order; unset means a Sylow subgroup.
  std::optional<std::string> subgroup;
  bool stable = false;
  std::string diagram = "generated";
  std::size_t jobs = 0;

  /// Throws InvalidArgument unless p is a prime ≤ 251 and the options are
  /// consistent.
  void validate() const;
};

/// Commands: group show, sylow, fusion, transporter, cohomology,
/// stable-elements, verify <check>, bilim enum. Throws on invalid input.
Report run(const std::string& command, const RunConfig& config);

/// Runs every corpus entry with per-entry isolation on a worker pool.
/// An unset path selects the shipped default corpus.
Report run_suite(const std::optional<std::string>& corpus_path, const RunConfig& config);
Report run_suite_text(const std::string& corpus_json, const RunConfig& config);

/// The shipped default corpus.
const std::string& default_corpus();

/// Full command line entry point; returns the process exit code
/// (0 all checks pass, 1 some check fails, 2 usage or input error).
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fusionlim::cli
