#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "commands_internal.hpp"
#include "fusionlim/error.hpp"

namespace fusionlim::cli {

using nlohmann::json;

namespace {

struct EntryResult {
  EntryOutcome outcome;
  std::vector<Record> records;
  std::size_t cache_hits = 0;
  std::vector<std::string> warnings;
};

std::vector<std::string> string_list(const json& j, const char* key) {
  std::vector<std::string> out;
  if (!j.contains(key)) return out;
  const auto& v = j.at(key);
  if (v.is_string()) return {v.get<std::string>()};
  for (const auto& x : v) out.push_back(x.get<std::string>());
  return out;
}

RunConfig entry_config(const json& e, const RunConfig& base) {
  RunConfig c = base;
  c.group = e.value("group", base.group);
  c.p = e.value("p", base.p);
  if (e.contains("degree")) c.max_degree = e.at("degree").get<std::size_t>();
  if (e.contains("modules")) c.modules = string_list(e, "modules");
  if (e.contains("targets")) c.targets = string_list(e, "targets");
  if (e.contains("subgroup")) c.subgroup = e.at("subgroup").get<std::string>();
  c.stable = e.value("stable", base.stable);
  c.diagram = e.value("diagram", base.diagram);
  if (e.contains("index")) {
    const auto i = e.at("index").get<std::string>();
    if (i == "fusion") c.index = IndexFlavor::fusion;
    else if (i == "transporter") c.index = IndexFlavor::transporter;
    else if (i == "both") c.index = IndexFlavor::both;
    else throw InvalidArgument("unknown index flavor '" + i + "'");
  }
  return c;
}

std::string entry_name(const json& e, std::size_t i) {
  if (e.contains("name")) return e.at("name").get<std::string>();
  std::string s = "entry" + std::to_string(i);
  return s;
}

EntryResult run_entry(const json& e, std::size_t i, const RunConfig& base) {
  EntryResult out;
  out.outcome.name = entry_name(e, i);
  out.outcome.expect = e.value("expect", std::string("pass"));
  try {
    if (out.outcome.expect != "pass" && out.outcome.expect != "fail")
      throw InvalidArgument("expect must be pass or fail");
    const auto cfg = entry_config(e, base);
    cfg.validate();
    const auto checks = string_list(e, "checks");
    if (checks.empty()) throw InvalidArgument("entry has no checks");
    Report r;
    Context ctx(cfg, r);
    try {
      for (const auto& c : checks) run_check(ctx, c);
    } catch (...) {
      ctx.finish();
      out.cache_hits = r.cache_hits;
      out.warnings = r.warnings;
      throw;
    }
    ctx.finish();
    for (auto& rec : r.records) {
      rec.name = out.outcome.name + ": " + rec.name;
      out.records.push_back(std::move(rec));
    }
    out.cache_hits = r.cache_hits;
    out.warnings = std::move(r.warnings);
    const bool all = std::all_of(out.records.begin(), out.records.end(),
                                 [](const Record& x) { return x.pass; });
    out.outcome.observed = all ? "pass" : "fail";
  } catch (const std::exception& ex) {
    out.outcome.observed = "error";
    out.outcome.error = ex.what();
  }
  return out;
}

}  // namespace

Report run_suite_text(const std::string& corpus_json, const RunConfig& config) {
  json corpus;
  try {
    corpus = json::parse(corpus_json);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("corpus: ") + e.what());
  }
  const json entries = corpus.is_array() ? corpus : corpus.value("entries", json::array());
  if (!entries.is_array()) throw InvalidArgument("corpus: entries must be an array");

  Report report;
  report.command = "suite";
  report.is_suite = true;
  report.inputs = {{"corpus", entries},
                   {"budget", config.budget},
                   {"bilim_budget", config.bilim_budget},
                   {"force", config.force}};

  std::vector<EntryResult> results(entries.size());
  std::size_t jobs = config.jobs ? config.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, std::max<std::size_t>(entries.size(), 1));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++)
      results[i] = run_entry(entries[i], i, config);
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (auto& r : results) {
    report.cache_hits += r.cache_hits;
    for (auto& w : r.warnings) report.warnings.push_back(std::move(w));
    for (auto& rec : r.records) report.records.push_back(std::move(rec));
    report.entries.push_back(r.outcome);
  }
  report.lines.push_back(std::to_string(entries.size()) + " corpus entries");
  return report;
}

Report run_suite(const std::optional<std::string>& corpus_path, const RunConfig& config) {
  if (!corpus_path) return run_suite_text(default_corpus(), config);
  std::ifstream in(*corpus_path);
  if (!in) throw InvalidArgument("cannot open corpus '" + *corpus_path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return run_suite_text(ss.str(), config);
}

}  // namespace fusionlim::cli
