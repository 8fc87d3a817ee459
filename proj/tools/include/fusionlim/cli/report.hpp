#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace fusionlim::cli {

inline constexpr int kSchemaVersion = 1;

/// Identifiers of the formulas a record can certify.
inline constexpr const char* kFormulas[] = {"ce",       "mackey-ce", "hom-limit",
                                            "tate-ce",  "bilim-hom", "finality",
                                            "cohomological-axiom", "monadicity"};

bool is_formula(const std::string& id);

/// One isomorphism or identity claim, with both sides' dimensions.
struct Record {
  std::string name;
  std::string formula;
  std::size_t lhs_dim = 0;
  std::size_t rhs_dim = 0;
  bool iso = false;
  bool pass = false;
  std::string note;
};

/// A suite entry outcome: observed pass/fail/error against the expectation.
struct EntryOutcome {
  std::string name;
  std::string expect;
  std::string observed;
  std::string error;

  bool ok() const { return observed == expect; }
};

struct Report {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json data = nlohmann::json::object();
  std::vector<Record> records;
  std::vector<EntryOutcome> entries;
  bool is_suite = false;
  std::size_t cache_hits = 0;
  std::vector<std::string> warnings;
  /// Human-readable body, without the record table.
  std::vector<std::string> lines;

  /// For a suite, every entry matches its expectation; otherwise every
  /// record passes.
  bool pass() const;
  /// FNV-1a of the canonical inputs, as 16 hex digits.
  std::string inputs_digest() const;
};

nlohmann::json to_json(const Record& r);
nlohmann::json to_json(const Report& r);
std::string render_json(const Report& r);
std::string render_human(const Report& r);

}  // namespace fusionlim::cli
