#include <chrono>
#include <cstdlib>
#include <ostream>

#include "CLI11.hpp"
#include "commands_internal.hpp"
#include "fusionlim/error.hpp"

namespace fusionlim::cli {

namespace {

struct Options {
  RunConfig cfg;
  std::string format = "human";
  std::string index = "both";
  long long max_degree = -1;
  std::string subgroup;
  std::string cache_dir;
  bool no_cache = false;
  bool timing = false;
  std::string corpus;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("-g,--group", o.cfg.group, "builtin group name or group definition file")
      ->capture_default_str();
  sub->add_option("-p,--prime", o.cfg.p, "the prime p")->capture_default_str();
  sub->add_option("-n,--max-degree", o.max_degree, "largest cohomological degree");
  sub->add_option("--index", o.index, "index flavor")
      ->check(CLI::IsMember({"fusion", "transporter", "both"}))
      ->capture_default_str();
  sub->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"human", "json"}))
      ->capture_default_str();
  sub->add_option("--module", o.cfg.modules,
                  "trivial, regular, perm:<label> or perm:idx:<k> (repeatable)");
  sub->add_option("--target", o.cfg.targets, "target modules for Hom checks (repeatable)");
  sub->add_option("--subgroup", o.subgroup, "<label> or idx:<k>; defaults to a Sylow subgroup");
  sub->add_flag("--stable", o.cfg.stable, "use stable Hom");
  sub->add_option("--budget", o.cfg.budget, "cochain budget (|G|-1)^(N+1)")->capture_default_str();
  sub->add_option("--bilim-budget", o.cfg.bilim_budget, "bilimit search budget")
      ->capture_default_str();
  sub->add_option("--cache-dir", o.cache_dir, "cohomology cache directory (env FUSIONLIM_CACHE)");
  sub->add_flag("--no-cache", o.no_cache, "disable the on-disk cache");
  sub->add_flag("--force", o.cfg.force, "lift the degree cap");
  sub->add_option("--diagram", o.cfg.diagram,
                  "generated, swap_walking_iso, rotation_discrete3, swap_discrete2 or a file")
      ->capture_default_str();
  sub->add_option("-j,--jobs", o.cfg.jobs, "suite worker threads (0 = hardware)");
  sub->add_flag("--timing", o.timing, "print elapsed time to stderr");
}

void finalize(Options& o) {
  o.cfg.format = o.format == "json" ? Format::json : Format::human;
  o.cfg.index = o.index == "fusion"        ? IndexFlavor::fusion
                : o.index == "transporter" ? IndexFlavor::transporter
                                           : IndexFlavor::both;
  if (o.max_degree >= 0) o.cfg.max_degree = static_cast<std::size_t>(o.max_degree);
  if (!o.subgroup.empty()) o.cfg.subgroup = o.subgroup;
  if (!o.cache_dir.empty())
    o.cfg.cache_dir = o.cache_dir;
  else if (const char* env = std::getenv("FUSIONLIM_CACHE"); env && *env)
    o.cfg.cache_dir = env;
  if (o.no_cache) o.cfg.cache_dir.reset();
}

}  // namespace

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fusion and transporter categories, mod-p cohomology and limit formula checks",
               "fusionlim"};
  app.require_subcommand(1);
  Options o;
  std::string command;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& full,
                  const std::string& help) {
    auto* sub = parent->add_subcommand(name, help);
    add_common(sub, o);
    sub->callback([&command, full] { command = full; });
    return sub;
  };

  auto* group = app.add_subcommand("group", "group information");
  group->require_subcommand(1);
  leaf(group, "show", "group show", "order, generators and subgroup classes");
  leaf(&app, "sylow", "sylow", "a Sylow p-subgroup");
  leaf(&app, "fusion", "fusion", "the fusion category on S");
  leaf(&app, "transporter", "transporter", "the transporter category on S");
  leaf(&app, "cohomology", "cohomology", "dim H^n(G; F_p) from the bar resolution");
  leaf(&app, "stable-elements", "stable-elements", "stable elements in H^n(S) or M^S");
  auto* verify = app.add_subcommand("verify", "verify a limit formula");
  verify->require_subcommand(1);
  for (const char* c :
       {"ce", "fixed-point", "hom-limit", "tate", "cohomological", "monadicity", "finality"})
    leaf(verify, c, std::string("verify ") + c, std::string("check ") + c);
  auto* bilim = app.add_subcommand("bilim", "bilimits of Cat-valued 2-diagrams");
  bilim->require_subcommand(1);
  leaf(bilim, "enum", "bilim enum", "enumerate L_D and check its Hom-sets");
  auto* suite = leaf(&app, "suite", "suite", "run a corpus of checks");
  suite->add_option("corpus", o.corpus, "corpus file; the shipped default when omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  finalize(o);

  const auto start = std::chrono::steady_clock::now();
  try {
    if (command == "bilim enum" && o.cfg.format == Format::human) {
      const auto ds = resolve_diagrams(o.cfg.diagram);
      std::uint64_t total = 0;
      for (const auto& d : ds) total += bilim::bilimit_search_bound(d);
      out << "search bound: " << total;
      if (ds.size() > 1) out << " over " << ds.size() << " diagrams";
      out << " (budget " << o.cfg.bilim_budget << " per diagram)\n" << std::flush;
    }
    const auto report = command == "suite"
                            ? run_suite(o.corpus.empty() ? std::nullopt
                                                         : std::optional<std::string>(o.corpus),
                                        o.cfg)
                            : run(command, o.cfg);
    for (const auto& w : report.warnings) err << "warning: " << w << "\n";
    out << (o.cfg.format == Format::json ? render_json(report) : render_human(report));
    if (o.timing)
      err << "elapsed: "
          << std::chrono::duration_cast<std::chrono::milliseconds>(
                 std::chrono::steady_clock::now() - start)
                 .count()
          << " ms\n";
    return report.pass() ? 0 : 1;
  } catch (const std::exception& e) {
    if (o.cfg.format == Format::json) {
      nlohmann::json j = {{"schema_version", kSchemaVersion},
                          {"command", command},
                          {"error", e.what()},
                          {"pass", false}};
      out << j.dump(2) << "\n";
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace fusionlim::cli
