#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>

#include "commands_internal.hpp"
#include "fusionlim/bilim/fixture_io.hpp"
#include "fusionlim/bilim/generate.hpp"
#include "fusionlim/bilim/transporter.hpp"
#include "fusionlim/coh/cohomology.hpp"
#include "fusionlim/coh/syzygy.hpp"
#include "fusionlim/error.hpp"
#include "fusionlim/fincat/subgroup_category.hpp"
#include "fusionlim/fpla/field.hpp"
#include "fusionlim/grp/catalog.hpp"
#include "fusionlim/mackey/mackey.hpp"
#include "fusionlim/rep/hom.hpp"
#include "fusionlim/rep/module.hpp"

namespace fusionlim::cli {

using nlohmann::json;

namespace {

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string flavor_name(IndexFlavor f) {
  switch (f) {
    case IndexFlavor::fusion: return "fusion";
    case IndexFlavor::transporter: return "transporter";
    case IndexFlavor::both: return "both";
  }
  return "both";
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.compare(0, prefix.size(), prefix) == 0;
}

std::size_t parse_index(const std::string& s, std::size_t bound, const std::string& what) {
  std::size_t k = 0;
  try {
    std::size_t used = 0;
    k = std::stoul(s, &used);
    if (used != s.size()) throw InvalidArgument("");
  } catch (const std::exception&) {
    throw InvalidArgument("invalid " + what + " index '" + s + "'");
  }
  if (k >= bound)
    throw InvalidArgument(what + " index " + s + " out of range (" + std::to_string(bound) +
                          " available)");
  return k;
}

json group_json(const grp::PermGroup& g) {
  json gens = json::array();
  for (const auto& x : g.generators()) gens.push_back(x.cycle_string());
  return {{"name", g.name()},
          {"order", g.order()},
          {"degree", g.degree()},
          {"structure", grp::structure_label(g)},
          {"generators", gens}};
}

json subgroup_json(const grp::Subgroup& h, std::size_t index) {
  json gens = json::array();
  for (const auto x : h.generators()) gens.push_back(h.parent()->element(x).cycle_string());
  return {{"index", index}, {"structure", grp::structure_label(h)}, {"order", h.order()},
          {"generators", gens}};
}

std::string join(const json& arr) {
  std::string s;
  for (const auto& x : arr) s += (s.empty() ? "" : ", ") + x.get<std::string>();
  return s.empty() ? "()" : s;
}

}  // namespace

Context::Context(const RunConfig& c, Report& r)
    : cfg(c), report(r), group(grp::resolve_group(c.group)) {
  coh::StoreOptions opts;
  opts.cache_dir = c.cache_dir;
  opts.budget = c.budget;
  opts.force = c.force;
  store = std::make_unique<coh::CohomologyStore>(opts);
}

Context::~Context() = default;

std::size_t Context::degree(std::size_t fallback_cap) const {
  const auto n = cfg.max_degree.value_or(
      std::min(fallback_cap, coh::default_max_degree(group->order(), cfg.budget)));
  const auto cap = coh::max_degree_within(group->order(), cfg.budget);
  if (n > cap && !cfg.force)
    throw BudgetExceeded("degree " + std::to_string(n) + " exceeds the cap " +
                         std::to_string(cap) + " for |G| = " + std::to_string(group->order()) +
                         ": (|G| - 1)^(N+1) must stay within the budget of " +
                         std::to_string(cfg.budget) + " (use --force to lift)");
  return n;
}

const std::vector<grp::Subgroup>& Context::subgroups() {
  if (!all_subgroups_) all_subgroups_ = grp::all_subgroups(group);
  return *all_subgroups_;
}

const std::vector<std::size_t>& Context::class_of() {
  if (!class_of_) {
    const auto& subs = subgroups();
    std::vector<std::size_t> cls(subs.size());
    for (std::size_t i = 0; i < subs.size(); ++i) {
      cls[i] = i;
      for (std::size_t j = 0; j < i && cls[i] == i; ++j) {
        if (cls[j] != j || subs[j].order() != subs[i].order()) continue;
        for (grp::ElementId x = 0; x < group->order(); ++x)
          if (grp::conjugate_subgroup(x, subs[j]) == subs[i]) {
            cls[i] = j;
            break;
          }
      }
    }
    class_of_ = std::move(cls);
  }
  return *class_of_;
}

grp::Subgroup Context::pick_subgroup(const std::string& spec) {
  const auto& subs = subgroups();
  if (starts_with(spec, "idx:")) return subs[parse_index(spec.substr(4), subs.size(), "subgroup")];
  for (const auto& h : subs)
    if (grp::structure_label(h) == spec) return h;
  throw InvalidArgument("no subgroup of " + group->name() + " with structure '" + spec + "'");
}

grp::Subgroup Context::sylow_or_chosen() {
  if (cfg.subgroup) return pick_subgroup(*cfg.subgroup);
  return grp::sylow(group, cfg.p).subgroup;
}

std::optional<grp::Subgroup> Context::chosen_subgroup() {
  if (cfg.subgroup) return pick_subgroup(*cfg.subgroup);
  return std::nullopt;
}

rep::KGModule Context::module(const std::string& spec) {
  if (spec == "trivial") return rep::trivial_module(group, cfg.p);
  if (spec == "regular") return rep::regular_module(group, cfg.p);
  if (starts_with(spec, "perm:")) {
    auto rest = spec.substr(5);
    if (starts_with(rest, "idx:"))
      return rep::permutation_module(
          group, subgroups()[parse_index(rest.substr(4), subgroups().size(), "subgroup")], cfg.p);
    return rep::permutation_module(group, pick_subgroup(rest), cfg.p);
  }
  throw InvalidArgument("unknown module '" + spec +
                        "' (expected trivial, regular, perm:<label> or perm:idx:<k>)");
}

std::vector<std::string> Context::fixed_point_modules() {
  if (!cfg.modules.empty()) return cfg.modules;
  std::vector<std::string> out;
  const auto& cls = class_of();
  for (std::size_t i = 0; i < cls.size(); ++i)
    if (cls[i] == i) out.push_back("perm:idx:" + std::to_string(i));
  return out;
}

std::vector<std::string> Context::hom_modules() {
  if (!cfg.modules.empty()) return cfg.modules;
  std::vector<std::string> out{"trivial", "regular"};
  const auto& subs = subgroups();
  std::set<std::size_t> orders;
  for (const auto& h : subs)
    if (h.order() > 1 && h.order() < group->order()) orders.insert(h.order());
  std::size_t taken = 0;
  for (auto it = orders.rbegin(); it != orders.rend() && taken < 2; ++it, ++taken)
    for (std::size_t i = 0; i < subs.size(); ++i)
      if (subs[i].order() == *it) {
        out.push_back("perm:idx:" + std::to_string(i));
        break;
      }
  return out;
}

const coh::CEReport& Context::ce_report() {
  if (!ce_) ce_ = coh::verify_cartan_eilenberg(group, cfg.p, degree(), *store);
  return *ce_;
}

void Context::finish() {
  report.cache_hits += store->cache_hits();
  for (const auto& w : store->warnings()) report.warnings.push_back(w);
}

json config_inputs(const RunConfig& cfg, const grp::PermGroup& g) {
  json j;
  j["group"] = g.name();
  j["group_digest"] = hex64(g.digest());
  j["p"] = cfg.p;
  j["max_degree"] = cfg.max_degree ? json(*cfg.max_degree) : json();
  j["index"] = flavor_name(cfg.index);
  j["budget"] = cfg.budget;
  j["bilim_budget"] = cfg.bilim_budget;
  j["force"] = cfg.force;
  j["modules"] = cfg.modules;
  j["targets"] = cfg.targets;
  j["subgroup"] = cfg.subgroup ? json(*cfg.subgroup) : json();
  j["stable"] = cfg.stable;
  j["diagram"] = cfg.diagram;
  return j;
}

void RunConfig::validate() const {
  if (!fpla::is_prime(p) || p > fpla::kMaxPrime)
    throw InvalidArgument("p = " + std::to_string(p) + " is not a prime at most " +
                          std::to_string(fpla::kMaxPrime));
  if (budget == 0) throw InvalidArgument("budget must be positive");
  if (max_degree && *max_degree > 64) throw InvalidArgument("max degree must be at most 64");
}

// ---- checks ----------------------------------------------------------------

void check_ce(Context& ctx) {
  const auto& ce = ctx.ce_report();
  const bool transporter = ctx.cfg.index == IndexFlavor::transporter;
  json rows = json::array();
  for (const auto& d : ce.degrees) {
    Record r;
    r.name = "H^" + std::to_string(d.degree);
    r.formula = "ce";
    r.lhs_dim = d.dim_global;
    r.rhs_dim = transporter ? d.dim_transporter_limit : d.dim_fusion_limit;
    r.iso = transporter ? d.iso() && d.finality : d.iso();
    r.pass = r.iso;
    std::string note = d.note;
    if (d.computed && !r.iso) note = "comparison rank " + std::to_string(d.comparison_rank);
    if (!ce.note.empty()) note = ce.note + (note.empty() ? "" : "; " + note);
    r.note = note;
    ctx.report.records.push_back(std::move(r));
    rows.push_back({{"degree", d.degree},
                    {"computed", d.computed},
                    {"dim_global", d.dim_global},
                    {"dim_fusion_limit", d.dim_fusion_limit},
                    {"dim_transporter_limit", d.dim_transporter_limit},
                    {"comparison_rank", d.comparison_rank},
                    {"image_in_limit", d.image_in_limit}});
  }
  ctx.report.data["ce"] = {{"sylow", grp::structure_label(*ce.sylow)},
                           {"sylow_order", ce.sylow->order()},
                           {"p_divides_order", ce.p_divides_order},
                           {"index", transporter ? "transporter" : "fusion"},
                           {"degrees", rows}};
  ctx.report.lines.push_back("Sylow " + std::to_string(ctx.cfg.p) + "-subgroup: " +
                             grp::structure_label(*ce.sylow) + " of order " +
                             std::to_string(ce.sylow->order()));
  if (!ce.note.empty()) ctx.report.lines.push_back("note: " + ce.note);
}

void check_finality(Context& ctx) {
  const auto& ce = ctx.ce_report();
  for (const auto& d : ce.degrees) {
    Record r;
    r.name = "lim H^" + std::to_string(d.degree) + " over F vs T";
    r.formula = "finality";
    r.lhs_dim = d.dim_fusion_limit;
    r.rhs_dim = d.dim_transporter_limit;
    r.iso = d.computed && d.finality;
    r.pass = r.iso;
    r.note = d.note;
    ctx.report.records.push_back(std::move(r));
  }
}

void check_fixed_point(Context& ctx) {
  const auto s = ctx.chosen_subgroup();
  json rows = json::array();
  for (const auto& spec : ctx.fixed_point_modules()) {
    const auto m = ctx.module(spec);
    const auto rep = mackey::verify_fixed_point_ce(m, s);
    Record r;
    r.name = "M^G vs stable elements, " + m.label();
    r.formula = "mackey-ce";
    r.lhs_dim = rep.dim_global;
    r.rhs_dim = rep.dim_limit;
    r.iso = rep.pass();
    r.pass = r.iso;
    r.note = "S = " + rep.s_label + ", [G:S] = " + std::to_string(rep.index);
    if (!rep.s_is_sylow) r.note += ", S not Sylow";
    if (!rep.transfer_surjective) r.note += ", transfer from S not onto M^G";
    if (!rep.section) r.note += ", no transfer section";
    ctx.report.records.push_back(std::move(r));
    rows.push_back({{"module", m.label()},
                    {"spec", spec},
                    {"dim", m.dim()},
                    {"s", rep.s_label},
                    {"s_is_sylow", rep.s_is_sylow},
                    {"index", rep.index},
                    {"dim_global", rep.dim_global},
                    {"dim_limit", rep.dim_limit},
                    {"same_subspace", rep.same_subspace},
                    {"index_invertible", rep.index_invertible},
                    {"transfer_surjective", rep.transfer_surjective},
                    {"section", rep.section}});
  }
  ctx.report.data["fixed_point"] = rows;
}

void check_hom_limit(Context& ctx) {
  const auto s = ctx.sylow_or_chosen();
  const auto sources = ctx.hom_modules();
  const auto targets = ctx.cfg.targets.empty() ? sources : ctx.cfg.targets;
  std::vector<rep::KGModule> ms, ns;
  for (const auto& x : sources) ms.push_back(ctx.module(x));
  for (const auto& x : targets) ns.push_back(ctx.module(x));
  const auto t = fincat::build_transporter_category(ctx.group, s);
  const std::string hom = ctx.cfg.stable ? "stHom" : "Hom";
  json rows = json::array();
  for (const auto& m : ms)
    for (const auto& n : ns) {
      const auto rep = rep::hom_limit_over_transporter(ctx.group, s, m, n, ctx.cfg.stable);
      Record r;
      r.name = hom + "(" + m.label() + ", " + n.label() + ")";
      r.formula = "hom-limit";
      r.lhs_dim = rep.dim_global;
      r.rhs_dim = rep.dim_limit;
      r.iso = rep.iso();
      r.pass = r.iso;
      r.note = "S = " + grp::structure_label(s);
      if (!rep.claim) r.note += ", S not Sylow: isomorphism not claimed";
      if (!r.iso) r.note += ", comparison rank " + std::to_string(rep.comparison_rank);
      ctx.report.records.push_back(std::move(r));
      json row = {{"source", m.label()},          {"target", n.label()},
                  {"dim_global", rep.dim_global}, {"dim_limit", rep.dim_limit},
                  {"comparison_rank", rep.comparison_rank}};
      if (!ctx.cfg.stable) {
        const auto tc = bilim::check_transporter_construction(t, m, n);
        Record c;
        c.name = "L_D structure, " + m.label() + " -> " + n.label();
        c.formula = "hom-limit";
        c.lhs_dim = tc.morphisms;
        c.rhs_dim = tc.morphisms;
        c.iso = tc.pass();
        c.pass = c.iso;
        c.note = "d_g = action of g^-1 on each transporter morphism";
        ctx.report.records.push_back(std::move(c));
        row["transporter_construction"] = tc.pass();
      }
      rows.push_back(std::move(row));
    }
  ctx.report.data["hom_limit"] = {{"s", grp::structure_label(s)},
                                  {"stable", ctx.cfg.stable},
                                  {"pairs", rows}};
}

void check_tate(Context& ctx) {
  const auto n = ctx.degree(3);
  const auto rep = coh::verify_tate_ce(ctx.group, ctx.cfg.p, n, *ctx.store);
  json rows = json::array();
  for (const auto& d : rep.degrees) {
    Record r;
    r.name = "stHom(Omega^" + std::to_string(d.degree) + " k, k)";
    r.formula = "tate-ce";
    r.lhs_dim = d.dim_stable_global;
    r.rhs_dim = d.dim_transporter_limit;
    r.iso = d.agree();
    r.pass = r.iso;
    r.note = "dim H^" + std::to_string(d.degree) + " = " + std::to_string(d.dim_cohomology);
    ctx.report.records.push_back(std::move(r));
    rows.push_back({{"degree", d.degree},
                    {"dim_stable_global", d.dim_stable_global},
                    {"dim_transporter_limit", d.dim_transporter_limit},
                    {"dim_cohomology", d.dim_cohomology}});
  }
  ctx.report.data["tate"] = rows;
}

void check_cohomological(Context& ctx) {
  const auto s = ctx.cfg.subgroup ? ctx.pick_subgroup(*ctx.cfg.subgroup)
                                  : grp::Subgroup::whole(ctx.group);
  json rows = json::array();
  for (const auto& spec : ctx.fixed_point_modules()) {
    const auto m = ctx.module(spec);
    const auto md = mackey::fixed_point_mackey(m, s);
    const auto rep = mackey::check_cohomological(md);
    Record r;
    r.name = "tr o res = index, " + m.label();
    r.formula = "cohomological-axiom";
    r.lhs_dim = rep.pairs_checked;
    r.rhs_dim = rep.pairs_checked - rep.failures.size();
    r.iso = rep.pass();
    r.pass = r.iso;
    r.note = "pairs checked vs satisfied over subgroups of " + grp::structure_label(s);
    if (!rep.failures.empty()) r.note += "; " + rep.failures.front().description;
    ctx.report.records.push_back(std::move(r));
    rows.push_back({{"module", m.label()},
                    {"pairs_checked", rep.pairs_checked},
                    {"failures", rep.failures.size()}});
  }
  ctx.report.data["cohomological"] = rows;
}

void check_monadicity(Context& ctx) {
  const auto s = ctx.chosen_subgroup();
  json rows = json::array();
  for (const auto& spec : ctx.fixed_point_modules()) {
    const auto m = ctx.module(spec);
    const auto rep = mackey::monadicity_section_witness(m, s);
    Record r;
    r.name = "tr o res = [G:S], " + m.label();
    r.formula = "monadicity";
    r.lhs_dim = rep.dim_global;
    r.rhs_dim = rep.dim_global;
    r.iso = rep.pass();
    r.pass = r.iso;
    r.note = "[G:S] = " + std::to_string(rep.index) +
             (rep.index_invertible ? " invertible" : " not invertible") + " mod " +
             std::to_string(ctx.cfg.p);
    if (!rep.composite_is_index) r.note += ", composite differs from [G:S]";
    ctx.report.records.push_back(std::move(r));
    rows.push_back({{"module", m.label()},
                    {"index", rep.index},
                    {"index_invertible", rep.index_invertible},
                    {"dim_global", rep.dim_global},
                    {"composite_is_index", rep.composite_is_index}});
  }
  ctx.report.data["monadicity"] = rows;
}

std::vector<bilim::CatValued2Functor> resolve_diagrams(const std::string& spec) {
  if (spec == "generated") return bilim::generated_family();
  if (spec == "swap_walking_iso") return {bilim::swap_walking_iso()};
  if (spec == "rotation_discrete3") return {bilim::rotation_discrete3()};
  if (spec == "swap_discrete2") return {bilim::swap_discrete2()};
  return {bilim::load_diagram_file(spec)};
}

void check_bilim(Context& ctx, const std::vector<bilim::CatValued2Functor>& diagrams) {
  const bool single = diagrams.size() == 1;
  json rows = json::array();
  for (const auto& d : diagrams) {
    const auto s = bilim::summarize_bilimit(d, ctx.cfg.bilim_budget);
    std::size_t enumerated = 0, limit = 0;
    bool bijective = true;
    for (const auto& h : s.homs) {
      enumerated += h.enumerated;
      limit += h.limit;
      bijective = bijective && h.bijection;
      if (single) {
        Record r;
        r.name = "Hom(" + std::to_string(h.src) + ", " + std::to_string(h.dst) + ")";
        r.formula = "bilim-hom";
        r.lhs_dim = h.enumerated;
        r.rhs_dim = h.limit;
        r.iso = h.bijection;
        r.pass = r.iso;
        ctx.report.records.push_back(std::move(r));
      }
    }
    Record r;
    r.name = single ? "d_id = id, canonical cone" : d.name;
    r.formula = "bilim-hom";
    r.lhs_dim = single ? s.objects : enumerated;
    r.rhs_dim = single ? s.objects : limit;
    r.iso = single ? s.identities_forced && s.cone.pass() : s.pass();
    r.pass = r.iso;
    r.note = std::to_string(s.objects) + " objects, " + std::to_string(s.morphisms) +
             " morphisms, skeleton " + std::to_string(s.skeleton);
    if (!single) r.note += ", " + std::to_string(s.homs.size()) + " Hom pairs";
    if (!s.identities_forced) r.note += ", d_id not forced";
    if (!bijective) r.note += ", Hom mismatch";
    ctx.report.records.push_back(std::move(r));
    rows.push_back({{"name", d.name},
                    {"search_bound", s.search_bound},
                    {"objects", s.objects},
                    {"morphisms", s.morphisms},
                    {"skeleton", s.skeleton},
                    {"identities_forced", s.identities_forced},
                    {"cone_squares", s.cone.squares_checked},
                    {"hom_pairs", s.homs.size()}});
    if (single) {
      ctx.report.lines.push_back("diagram " + d.name + ": search bound " +
                                 std::to_string(s.search_bound));
      ctx.report.lines.push_back("L_D: " + std::to_string(s.objects) + " objects, " +
                                 std::to_string(s.morphisms) + " morphisms, skeleton " +
                                 std::to_string(s.skeleton));
    }
  }
  if (!single)
    ctx.report.lines.push_back(std::to_string(diagrams.size()) + " diagrams enumerated");
  ctx.report.data["bilim"] = rows;
}

void run_check(Context& ctx, const std::string& check) {
  if (check == "ce") return check_ce(ctx);
  if (check == "finality") return check_finality(ctx);
  if (check == "fixed-point") return check_fixed_point(ctx);
  if (check == "hom-limit") return check_hom_limit(ctx);
  if (check == "tate") return check_tate(ctx);
  if (check == "cohomological") return check_cohomological(ctx);
  if (check == "monadicity") return check_monadicity(ctx);
  if (check == "bilim") return check_bilim(ctx, resolve_diagrams(ctx.cfg.diagram));
  throw InvalidArgument("unknown check '" + check + "'");
}

// ---- informational commands --------------------------------------------------

namespace {

void group_show(Context& ctx) {
  const auto& g = *ctx.group;
  auto j = group_json(g);
  std::map<std::size_t, std::size_t> orders;
  for (grp::ElementId x = 0; x < g.order(); ++x) ++orders[g.element_order(x)];
  json ord = json::object();
  for (const auto& [o, c] : orders) ord[std::to_string(o)] = c;
  j["element_orders"] = ord;
  const auto& subs = ctx.subgroups();
  const auto& cls = ctx.class_of();
  json classes = json::array();
  ctx.report.lines.push_back(g.name() + ": order " + std::to_string(g.order()) + ", degree " +
                             std::to_string(g.degree()) + ", structure " +
                             grp::structure_label(g));
  ctx.report.lines.push_back("generators: " + join(j["generators"]));
  std::string eo;
  for (const auto& [o, c] : orders)
    eo += (eo.empty() ? "" : ", ") + std::to_string(c) + " of order " + std::to_string(o);
  ctx.report.lines.push_back("elements: " + eo);
  ctx.report.lines.push_back(std::to_string(subs.size()) + " subgroups; classes:");
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (cls[i] != i) continue;
    const auto size = static_cast<std::size_t>(std::count(cls.begin(), cls.end(), i));
    auto c = subgroup_json(subs[i], i);
    c["class_size"] = size;
    classes.push_back(c);
    ctx.report.lines.push_back("  idx:" + std::to_string(i) + "  " + grp::structure_label(subs[i]) +
                               "  order " + std::to_string(subs[i].order()) + "  x" +
                               std::to_string(size));
  }
  j["subgroup_count"] = subs.size();
  j["subgroup_classes"] = classes;
  ctx.report.data["group"] = j;
}

void sylow_show(Context& ctx) {
  const auto syl = grp::sylow(ctx.group, ctx.cfg.p);
  const auto& subs = ctx.subgroups();
  std::size_t index = 0, count = 0;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i] == syl.subgroup) index = i;
    if (subs[i].order() == syl.subgroup.order()) ++count;
  }
  auto j = subgroup_json(syl.subgroup, index);
  j["p"] = ctx.cfg.p;
  j["p_divides_order"] = syl.p_divides_order;
  j["sylow_count"] = count;
  ctx.report.data["sylow"] = j;
  ctx.report.lines.push_back("Sylow " + std::to_string(ctx.cfg.p) + "-subgroup of " +
                             ctx.group->name() + ": " + grp::structure_label(syl.subgroup) +
                             " of order " + std::to_string(syl.subgroup.order()) + " (idx:" +
                             std::to_string(index) + ")");
  ctx.report.lines.push_back("generators: " + join(j["generators"]));
  ctx.report.lines.push_back("number of Sylow " + std::to_string(ctx.cfg.p) +
                             "-subgroups: " + std::to_string(count));
  if (!syl.p_divides_order) ctx.report.lines.push_back("note: p coprime to |G|");
}

void category_show(Context& ctx, fincat::IndexKind kind) {
  const auto s = ctx.sylow_or_chosen();
  const auto c = fincat::build_subgroup_category(kind, ctx.group, s);
  const auto& cat = *c.category;
  json objects = json::array();
  for (fincat::ObjectId a = 0; a < cat.object_count(); ++a)
    objects.push_back({{"object", a},
                       {"structure", grp::structure_label(c.objects[a])},
                       {"order", c.objects[a].order()}});
  json homs = json::array();
  for (fincat::ObjectId a = 0; a < cat.object_count(); ++a)
    for (fincat::ObjectId b = 0; b < cat.object_count(); ++b)
      if (const auto k = cat.hom(a, b).size(); k > 0) homs.push_back({a, b, k});
  const auto name = fincat::to_string(kind);
  ctx.report.data[name] = {{"s", grp::structure_label(s)},
                           {"objects", objects},
                           {"morphism_count", cat.morphism_count()},
                           {"homs", homs},
                           {"digest", hex64(cat.digest())}};
  ctx.report.lines.push_back(name + " category of " + ctx.group->name() + " on S = " +
                             grp::structure_label(s) + ": " + std::to_string(cat.object_count()) +
                             " objects, " + std::to_string(cat.morphism_count()) + " morphisms");
  for (fincat::ObjectId a = 0; a < cat.object_count(); ++a)
    ctx.report.lines.push_back("  " + std::to_string(a) + ": " +
                               grp::structure_label(c.objects[a]));
  for (const auto& h : homs)
    ctx.report.lines.push_back("  |Hom(" + h[0].dump() + ", " + h[1].dump() + ")| = " +
                               h[2].dump());
}

void cohomology_show(Context& ctx) {
  const auto n = ctx.degree();
  const auto gc = ctx.store->get(ctx.group, ctx.cfg.p, n);
  json rows = json::array();
  std::string dims;
  for (std::size_t k = 0; k <= n; ++k) {
    const auto& h = (*gc)[k];
    rows.push_back({{"degree", k}, {"dim", h.dim()}, {"cochain_dim", h.cochain_dim()}});
    dims += (dims.empty() ? "" : ", ") + std::to_string(h.dim());
  }
  ctx.report.data["cohomology"] = {{"degrees", rows}};
  ctx.report.lines.push_back("dim H^n(" + ctx.group->name() + "; F_" + std::to_string(ctx.cfg.p) +
                             "), n = 0.." + std::to_string(n) + ": " + dims);
}

void stable_elements_show(Context& ctx) {
  const auto s = ctx.sylow_or_chosen();
  json rows = json::array();
  if (!ctx.cfg.modules.empty()) {
    const auto kind = ctx.cfg.index == IndexFlavor::fusion ? fincat::IndexKind::fusion
                                                           : fincat::IndexKind::transporter;
    for (const auto& spec : ctx.cfg.modules) {
      const auto m = ctx.module(spec);
      const auto md = mackey::fixed_point_mackey(m, s);
      const auto lim = mackey::stable_elements_limit(md, kind);
      const auto ce = mackey::verify_fixed_point_ce(m, s);
      Record r;
      r.name = "stable elements, " + m.label();
      r.formula = "mackey-ce";
      r.lhs_dim = ce.dim_global;
      r.rhs_dim = lim.dim();
      r.iso = ce.pass() && lim.dim() == ce.dim_global;
      r.pass = r.iso;
      r.note = "over " + fincat::to_string(kind) + ", M^S has dim " +
               std::to_string(md.dims.back());
      ctx.report.records.push_back(std::move(r));
      rows.push_back({{"module", m.label()}, {"dim_limit", lim.dim()},
                      {"dim_global", ce.dim_global}, {"dim_s", md.dims.back()}});
    }
    ctx.report.data["stable_elements"] = {{"s", grp::structure_label(s)}, {"rows", rows}};
    return;
  }
  const auto n = ctx.degree();
  const auto gc = ctx.store->get(ctx.group, ctx.cfg.p, n);
  const auto hs = ctx.store->get(s, ctx.cfg.p, n);
  for (std::size_t k = 0; k <= n; ++k) {
    std::size_t dim = 0;
    if (ctx.cfg.index == IndexFlavor::transporter) {
      const auto md = mackey::cohomology_mackey(ctx.group, s, ctx.cfg.p, k, *ctx.store);
      dim = mackey::stable_elements_limit(md, fincat::IndexKind::transporter).dim();
    } else {
      dim = coh::stable_elements(ctx.group, s, ctx.cfg.p, k, *ctx.store).dim();
    }
    Record r;
    r.name = "stable elements in H^" + std::to_string(k) + "(S)";
    r.formula = "ce";
    r.lhs_dim = (*gc)[k].dim();
    r.rhs_dim = dim;
    r.iso = r.lhs_dim == r.rhs_dim;
    r.pass = r.iso;
    r.note = "dim H^" + std::to_string(k) + "(S) = " + std::to_string((*hs)[k].dim());
    ctx.report.records.push_back(std::move(r));
    rows.push_back({{"degree", k}, {"dim_stable", dim}, {"dim_global", (*gc)[k].dim()},
                    {"dim_s", (*hs)[k].dim()}});
  }
  ctx.report.data["stable_elements"] = {{"s", grp::structure_label(s)}, {"rows", rows}};
}

}  // namespace

Report run(const std::string& command, const RunConfig& config) {
  config.validate();
  Report report;
  report.command = command;
  Context ctx(config, report);
  report.inputs = config_inputs(config, *ctx.group);
  if (command == "group show") {
    group_show(ctx);
  } else if (command == "sylow") {
    sylow_show(ctx);
  } else if (command == "fusion") {
    category_show(ctx, fincat::IndexKind::fusion);
  } else if (command == "transporter") {
    category_show(ctx, fincat::IndexKind::transporter);
  } else if (command == "cohomology") {
    cohomology_show(ctx);
  } else if (command == "stable-elements") {
    stable_elements_show(ctx);
  } else if (starts_with(command, "verify ")) {
    run_check(ctx, command.substr(7));
  } else if (command == "bilim enum") {
    check_bilim(ctx, resolve_diagrams(config.diagram));
  } else {
    throw InvalidArgument("unknown command '" + command + "'");
  }
  ctx.finish();
  return report;
}

}  // namespace fusionlim::cli
