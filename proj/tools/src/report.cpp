#include "fusionlim/cli/report.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <sstream>

namespace fusionlim::cli {

using nlohmann::json;

bool is_formula(const std::string& id) {
  return std::any_of(std::begin(kFormulas), std::end(kFormulas),
                     [&](const char* f) { return id == f; });
}

bool Report::pass() const {
  if (is_suite)
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.ok(); });
  return std::all_of(records.begin(), records.end(), [](const auto& r) { return r.pass; });
}

std::string Report::inputs_digest() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const unsigned char c : inputs.dump()) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json to_json(const Record& r) {
  return {{"name", r.name}, {"formula", r.formula}, {"lhs_dim", r.lhs_dim},
          {"rhs_dim", r.rhs_dim}, {"iso", r.iso}, {"pass", r.pass}, {"note", r.note}};
}

json to_json(const Report& r) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = r.command;
  j["inputs"] = r.inputs;
  j["inputs_digest"] = r.inputs_digest();
  j["data"] = r.data;
  j["records"] = json::array();
  for (const auto& rec : r.records) j["records"].push_back(to_json(rec));
  if (r.is_suite) {
    j["entries"] = json::array();
    for (const auto& e : r.entries)
      j["entries"].push_back({{"name", e.name}, {"expect", e.expect}, {"observed", e.observed},
                              {"ok", e.ok()}, {"error", e.error}});
  }
  j["cache_hits"] = r.cache_hits;
  j["pass"] = r.pass();
  return j;
}

std::string render_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

std::string render_human(const Report& r) {
  std::ostringstream out;
  out << r.command << " [" << r.inputs_digest() << "]\n";
  for (const auto& l : r.lines) out << l << "\n";
  if (!r.records.empty()) {
    std::size_t wn = 4, wf = 7;
    for (const auto& rec : r.records) {
      wn = std::max(wn, rec.name.size());
      wf = std::max(wf, rec.formula.size());
    }
    char buf[512];
    std::snprintf(buf, sizeof buf, "%-*s  %-*s  %6s  %6s  %-5s  %s\n", static_cast<int>(wf),
                  "formula", static_cast<int>(wn), "name", "lhs", "rhs", "iso", "result");
    out << buf;
    for (const auto& rec : r.records) {
      std::snprintf(buf, sizeof buf, "%-*s  %-*s  %6zu  %6zu  %-5s  %s", static_cast<int>(wf),
                    rec.formula.c_str(), static_cast<int>(wn), rec.name.c_str(), rec.lhs_dim,
                    rec.rhs_dim, rec.iso ? "yes" : "no", rec.pass ? "PASS" : "FAIL");
      out << buf;
      if (!rec.note.empty()) out << "  (" << rec.note << ")";
      out << "\n";
    }
  }
  if (r.is_suite) {
    for (const auto& e : r.entries) {
      std::string verdict;
      if (e.ok())
        verdict = e.expect == "fail" ? "FAIL-as-expected" : "PASS";
      else
        verdict = e.observed == "error" ? "ERROR" : e.observed == "fail" ? "FAIL" : "UNEXPECTED-PASS";
      out << "entry " << e.name << ": " << verdict;
      if (!e.error.empty()) out << " (" << e.error << ")";
      out << "\n";
    }
  }
  out << "cache hits: " << r.cache_hits << "\n";
  out << (r.pass() ? "result: PASS" : "result: FAIL") << "\n";
  return out.str();
}

}  // namespace fusionlim::cli
