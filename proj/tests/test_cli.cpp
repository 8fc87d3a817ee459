#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "fusionlim/cli/report.hpp"
#include "fusionlim/cli/run.hpp"
#include "json.hpp"

using namespace fusionlim::cli;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  args.insert(args.begin(), "fusionlim");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() /
             ("fusionlim-test-" + std::to_string(::getpid()) + "-" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("verify ce exit codes and notes") {
  auto r = cli({"verify", "ce", "--group", "S3", "-p", "2", "--no-cache"});
  CHECK(r.code == 0);
  CHECK(r.out.find("result: PASS") != std::string::npos);

  r = cli({"verify", "ce", "--group", "S3", "-p", "5", "--no-cache", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["records"].size() == 5);
  for (const auto& rec : j["records"]) CHECK(rec["note"].get<std::string>().find("p coprime to |G|") != std::string::npos);
  CHECK(j["records"][0]["lhs_dim"] == 1);
  CHECK(j["records"][1]["lhs_dim"] == 0);
}

TEST_CASE("report schema") {
  const auto r = cli({"verify", "finality", "-g", "A4", "-p", "2", "--format", "json", "--no-cache"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["command"] == "verify finality");
  CHECK(j["inputs_digest"].get<std::string>().size() == 16);
  CHECK(j.contains("cache_hits"));
  CHECK_FALSE(j.contains("timing"));
  for (const auto& rec : j["records"]) {
    CHECK(is_formula(rec["formula"]));
    for (const char* key : {"name", "lhs_dim", "rhs_dim", "iso", "pass", "note"})
      CHECK(rec.contains(key));
  }
}

TEST_CASE("reports are byte-identical across runs") {
  const std::vector<std::string> cmd{"verify", "hom-limit", "-g", "S3", "-p", "2",
                                     "--format", "json", "--no-cache"};
  CHECK(cli(cmd).out == cli(cmd).out);
  const std::vector<std::string> suite{"suite", "--format", "json", "--no-cache", "-j", "4"};
  const auto a = cli(suite);
  const auto b = cli(suite);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const std::vector<std::string> show{"group", "show", "-g", "S4", "--format", "json"};
  CHECK(cli(show).out == cli(show).out);
}

TEST_CASE("cache on and off give the same records") {
  const auto dir = scratch("cache");
  const std::vector<std::string> base{"verify", "ce", "-g", "A4", "-p", "2", "--format", "json"};
  auto with = [&](std::vector<std::string> extra) {
    auto args = base;
    args.insert(args.end(), extra.begin(), extra.end());
    return cli(args);
  };
  const auto off = with({"--no-cache"});
  const auto cold = with({"--cache-dir", dir.string()});
  const auto warm = with({"--cache-dir", dir.string()});
  REQUIRE(off.code == 0);
  REQUIRE(cold.code == 0);
  REQUIRE(warm.code == 0);
  const auto jo = json::parse(off.out), jc = json::parse(cold.out), jw = json::parse(warm.out);
  CHECK(jo["records"] == jc["records"]);
  CHECK(jo["records"] == jw["records"]);
  CHECK(jo["data"] == jw["data"]);
  CHECK(jc["cache_hits"] == 0);
  CHECK(jw["cache_hits"].get<int>() > 0);
  CHECK(cli({"verify", "ce", "-g", "A4", "-p", "2", "--format", "json", "--cache-dir",
             dir.string()}).out == warm.out);

  std::size_t files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    ++files;
    std::fstream f(e.path(), std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(40);
    f.put('\x7f');
  }
  CHECK(files > 0);
  const auto corrupt = with({"--cache-dir", dir.string()});
  CHECK(corrupt.code == 0);
  CHECK(corrupt.err.find("warning:") != std::string::npos);
  CHECK(json::parse(corrupt.out)["records"] == jo["records"]);
  const auto healed = with({"--cache-dir", dir.string()});
  CHECK(healed.err.find("warning:") == std::string::npos);
  CHECK(json::parse(healed.out)["records"] == jo["records"]);
  std::filesystem::remove_all(dir);
}

TEST_CASE("FUSIONLIM_CACHE selects the cache directory") {
  const auto dir = scratch("env");
  ::setenv("FUSIONLIM_CACHE", dir.string().c_str(), 1);
  const auto r = cli({"cohomology", "-g", "S3", "-p", "3"});
  ::unsetenv("FUSIONLIM_CACHE");
  CHECK(r.code == 0);
  CHECK_FALSE(std::filesystem::is_empty(dir));
  std::filesystem::remove_all(dir);
}

TEST_CASE("suite isolation and expectations") {
  const auto dir = scratch("suite");
  auto r = cli({"suite", write_file(dir / "empty.json", R"({"entries": []})"), "--format", "json"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["entries"].empty());
  CHECK(j["records"].empty());

  const auto corpus = write_file(dir / "mixed.json", R"({"entries": [
    {"name": "bad-group", "group": "nope", "p": 2, "checks": ["ce"]},
    {"name": "good", "group": "S3", "p": 3, "degree": 2, "checks": ["ce"]},
    {"name": "control", "group": "S3", "p": 2, "subgroup": "C3", "modules": ["trivial"],
     "checks": ["fixed-point"], "expect": "fail"}]})");
  r = cli({"suite", corpus, "--format", "json", "--no-cache"});
  CHECK(r.code == 1);
  j = json::parse(r.out);
  REQUIRE(j["entries"].size() == 3);
  CHECK(j["entries"][0]["observed"] == "error");
  CHECK(j["entries"][1]["observed"] == "pass");
  CHECK(j["entries"][1]["ok"] == true);
  CHECK(j["entries"][2]["observed"] == "fail");
  CHECK(j["entries"][2]["ok"] == true);

  const auto expected = write_file(dir / "control.json", R"([
    {"name": "control", "group": "A4", "p": 2, "subgroup": "C2", "modules": ["perm:C3"],
     "checks": ["fixed-point"], "expect": "fail"}])");
  r = cli({"suite", expected, "--no-cache"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL-as-expected") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("input errors exit with 2") {
  CHECK(cli({"verify", "ce", "-g", "S3", "-p", "4"}).code == 2);
  CHECK(cli({"verify", "ce", "-g", "S3", "-p", "257"}).code == 2);
  CHECK(cli({"verify", "ce", "-g", "nonexistent.json"}).code == 2);
  CHECK(cli({"verify", "nothing"}).code == 2);
  CHECK(cli({"verify", "hom-limit", "-g", "S3", "--module", "bogus"}).code == 2);

  auto r = cli({"verify", "ce", "-g", "S4", "-n", "5", "--no-cache"});
  CHECK(r.code == 2);
  CHECK(r.err.find("budget") != std::string::npos);

  const auto dir = scratch("errors");
  r = cli({"group", "show", "-g", write_file(dir / "g.json", R"({"name": "X", "degree": 3,
           "generators": [[0, 0, 1]]})"), "--format", "json"});
  CHECK(r.code == 2);
  CHECK(json::parse(r.out).contains("error"));

  r = cli({"bilim", "enum", "--diagram", "swap_walking_iso", "--bilim-budget", "1"});
  CHECK(r.code == 2);
  CHECK(r.out.find("search bound: 2") == 0);
  CHECK(r.err.find("budget") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("informational commands") {
  auto j = json::parse(cli({"group", "show", "-g", "S4", "--format", "json"}).out);
  CHECK(j["data"]["group"]["order"] == 24);
  CHECK(j["data"]["group"]["subgroup_count"] == 30);
  CHECK(j["data"]["group"]["subgroup_classes"].size() == 11);

  j = json::parse(cli({"sylow", "-g", "S4", "-p", "3", "--format", "json"}).out);
  CHECK(j["data"]["sylow"]["order"] == 3);
  CHECK(j["data"]["sylow"]["sylow_count"] == 4);

  const auto f = json::parse(cli({"fusion", "-g", "A4", "-p", "2", "--format", "json"}).out);
  const auto t = json::parse(cli({"transporter", "-g", "A4", "-p", "2", "--format", "json"}).out);
  CHECK(f["data"]["fusion"]["objects"].size() == 5);
  CHECK(t["data"]["transporter"]["objects"].size() == 5);
  CHECK(f["data"]["fusion"]["morphism_count"].get<int>() <
        t["data"]["transporter"]["morphism_count"].get<int>());

  j = json::parse(cli({"cohomology", "-g", "D8", "-p", "2", "-n", "3", "--format", "json",
                       "--no-cache"}).out);
  std::vector<int> dims;
  for (const auto& d : j["data"]["cohomology"]["degrees"]) dims.push_back(d["dim"]);
  CHECK(dims == std::vector<int>{1, 2, 3, 4});

  for (const char* index : {"fusion", "transporter"}) {
    const auto r = cli({"stable-elements", "-g", "A4", "-p", "2", "-n", "3", "--index", index,
                        "--no-cache"});
    CHECK(r.code == 0);
  }
  CHECK(cli({"stable-elements", "-g", "S3", "-p", "2", "--module", "regular"}).code == 0);
  CHECK(cli({"stable-elements", "-g", "S3", "-p", "2", "--module", "regular", "--index",
             "fusion"}).code == 2);
}

TEST_CASE("bilim enum on fixtures") {
  const auto r = cli({"bilim", "enum", "--diagram", FUSIONLIM_FIXTURE_DIR "/swap_walking_iso.json",
                      "--format", "json"});
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["data"]["bilim"][0]["objects"] == 2);
  CHECK(j["data"]["bilim"][0]["morphisms"] == 4);
  CHECK(j["data"]["bilim"][0]["search_bound"] == 2);
}
