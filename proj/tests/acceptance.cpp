#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fusionlim/bilim/bilimit.hpp"
#include "fusionlim/bilim/generate.hpp"
#include "fusionlim/cli/run.hpp"
#include "fusionlim/coh/bar.hpp"
#include "fusionlim/coh/cohomology.hpp"
#include "fusionlim/coh/syzygy.hpp"
#include "fusionlim/error.hpp"
#include "fusionlim/fincat/subgroup_category.hpp"
#include "fusionlim/grp/catalog.hpp"
#include "fusionlim/mackey/mackey.hpp"
#include "fusionlim/rep/hom.hpp"
#include "fusionlim/rep/module.hpp"

using namespace fusionlim;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct CEPair {
  const char* group;
  unsigned p;
  std::size_t n;
};

const std::vector<CEPair> kCEPairs = {{"S3", 2, 4}, {"S3", 3, 4}, {"A4", 2, 4}, {"S4", 2, 3}};

coh::CohomologyStore& store() {
  static coh::CohomologyStore s;
  return s;
}

const coh::CEReport& ce_report(const CEPair& c) {
  static std::map<std::string, coh::CEReport> memo;
  const auto key = std::string(c.group) + "/" + std::to_string(c.p);
  auto it = memo.find(key);
  if (it == memo.end())
    it = memo.emplace(key, coh::verify_cartan_eilenberg(grp::named_group(c.group), c.p, c.n,
                                                        store()))
             .first;
  return it->second;
}

std::string pair_label(const CEPair& c) {
  return std::string(c.group) + "@" + std::to_string(c.p);
}

/// One representative per conjugacy class of subgroups.
std::vector<grp::Subgroup> class_representatives(const grp::GroupPtr& g) {
  const auto subs = grp::all_subgroups(g);
  std::vector<grp::Subgroup> reps;
  for (const auto& h : subs) {
    bool seen = false;
    for (const auto& r : reps)
      for (grp::ElementId x = 0; x < g->order() && !seen; ++x)
        seen = grp::conjugate_subgroup(x, r) == h;
    if (!seen) reps.push_back(h);
  }
  return reps;
}

grp::Subgroup first_with_order(const grp::GroupPtr& g, std::size_t order) {
  for (const auto& h : grp::all_subgroups(g))
    if (h.order() == order) return h;
  throw Error("no subgroup of that order");
}

Outcome criterion1() {
  Outcome o;
  for (const auto& c : kCEPairs) {
    const auto& r = ce_report(c);
    std::string dims;
    for (const auto& d : r.degrees) {
      o.pass = o.pass && d.computed && d.iso() && d.dim_global == d.dim_fusion_limit;
      dims += std::to_string(d.dim_global);
    }
    o.detail += (o.detail.empty() ? "" : "; ") + pair_label(c) + " dims " + dims;
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::size_t rows = 0;
  for (const auto& c : kCEPairs)
    for (const auto& d : ce_report(c).degrees) {
      ++rows;
      o.pass = o.pass && d.computed && d.finality &&
               d.dim_fusion_limit == d.dim_transporter_limit;
    }
  o.detail = std::to_string(rows) + " diagrams, fusion and transporter limits agree";
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::size_t positives = 0, negatives_failed = 0, negatives = 0;
  for (const char* name : {"S3", "A4"})
    for (const unsigned p : {2u, 3u}) {
      const auto g = grp::named_group(name);
      for (const auto& h : class_representatives(g)) {
        const auto m = rep::permutation_module(g, h, p);
        const auto r = mackey::verify_fixed_point_ce(m);
        o.pass = o.pass && r.pass() && r.same_subspace && r.dim_global == r.dim_limit;
        ++positives;
      }
    }
  const auto s3 = grp::named_group("S3");
  const auto a4 = grp::named_group("A4");
  const std::vector<std::pair<rep::KGModule, grp::Subgroup>> controls = {
      {rep::trivial_module(s3, 2), first_with_order(s3, 3)},
      {rep::permutation_module(a4, first_with_order(a4, 3), 2), first_with_order(a4, 2)}};
  for (const auto& [m, s] : controls) {
    ++negatives;
    if (!mackey::verify_fixed_point_ce(m, s).pass()) ++negatives_failed;
  }
  o.pass = o.pass && positives >= 10 && negatives_failed >= 1;
  o.detail = std::to_string(positives) + " permutation modules agree; " +
             std::to_string(negatives_failed) + "/" + std::to_string(negatives) +
             " non-Sylow controls fail";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::size_t pairs = 0;
  for (const char* name : {"S3", "A4"}) {
    const auto g = grp::named_group(name);
    const auto s = grp::sylow(g, 2).subgroup;
    std::vector<rep::KGModule> mods{rep::trivial_module(g, 2), rep::regular_module(g, 2)};
    for (const auto& h : class_representatives(g))
      if (h.order() > 1 && h.order() < g->order() && mods.size() < 4)
        mods.push_back(rep::permutation_module(g, h, 2));
    for (const auto& m : mods)
      for (const auto& n : mods) {
        const auto r = rep::hom_limit_over_transporter(g, s, m, n, false);
        const auto direct = rep::hom_space(m, n).space.dim();
        o.pass = o.pass && r.claim && r.injective && r.dim_global == r.dim_limit &&
                 r.iso() && direct == r.dim_global;
        ++pairs;
      }
  }
  o.detail = std::to_string(pairs) + " module pairs: Hom over kG injects onto the limit";
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto r = coh::verify_tate_ce(grp::named_group("A4"), 2, 3, store());
  std::string dims;
  for (const auto& d : r.degrees) {
    o.pass = o.pass && d.agree();
    dims += std::to_string(d.dim_stable_global) + "=" + std::to_string(d.dim_transporter_limit) +
            "=" + std::to_string(d.dim_cohomology) + " ";
  }
  o.pass = o.pass && r.degrees.size() == 3;
  o.detail = "A4@2 n=1..3: " + dims;
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::size_t pairs = 0, witnesses = 0;
  for (const char* name : {"S3", "A4"})
    for (const unsigned p : {2u, 3u}) {
      const auto g = grp::named_group(name);
      for (const auto& h : class_representatives(g)) {
        const auto md = mackey::fixed_point_mackey(rep::permutation_module(g, h, p),
                                                   grp::Subgroup::whole(g));
        const auto r = mackey::check_cohomological(md);
        o.pass = o.pass && r.pass();
        pairs += r.pairs_checked;
      }
    }
  for (const auto& c : kCEPairs) {
    const auto g = grp::named_group(c.group);
    for (const auto& h : class_representatives(g)) {
      const auto r = mackey::monadicity_section_witness(rep::permutation_module(g, h, c.p));
      o.pass = o.pass && r.pass();
      ++witnesses;
    }
  }
  o.detail = std::to_string(pairs) + " subgroup pairs satisfy tr o res = index; " +
             std::to_string(witnesses) + " monadicity witnesses";
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto family = bilim::generated_family();
  std::size_t homs = 0, objects = 0;
  for (const auto& d : family) {
    const auto s = bilim::summarize_bilimit(d);
    o.pass = o.pass && s.pass() && s.identities_forced;
    for (const auto& h : s.homs) o.pass = o.pass && h.bijection && h.enumerated == h.limit;
    homs += s.homs.size();
    objects += s.objects;
  }
  o.pass = o.pass && family.size() >= 50;
  o.detail = std::to_string(family.size()) + " diagrams, " + std::to_string(objects) +
             " objects, " + std::to_string(homs) + " Hom-sets biject with limits";
  return o;
}

/// Exhaustive unit and associativity check, independent of FinCat::build.
bool category_laws(const fincat::FinCat& c) {
  for (fincat::MorphismId f = 0; f < c.morphism_count(); ++f) {
    if (c.compose(c.identity(c.dst(f)), f) != f) return false;
    if (c.compose(f, c.identity(c.src(f))) != f) return false;
    for (const auto g : c.out(c.dst(f))) {
      const auto gf = c.compose(g, f);
      if (c.src(gf) != c.src(f) || c.dst(gf) != c.dst(g)) return false;
      for (const auto h : c.out(c.dst(g)))
        if (c.compose(h, gf) != c.compose(c.compose(h, g), f)) return false;
    }
  }
  return true;
}

/// ∂_j ∘ ∂_{j+1} = 0 on the free resolution, column by column.
bool free_d_squared(const grp::PermGroup& g, unsigned p, std::size_t j) {
  const auto lo = coh::free_boundary(g, p, j);
  const auto hi = coh::free_boundary(g, p, j + 1);
  std::vector<std::uint64_t> acc(lo.rows());
  for (std::size_t c = 0; c < hi.cols(); ++c) {
    std::fill(acc.begin(), acc.end(), 0);
    for (const auto& e : hi.column(c))
      for (const auto& f : lo.column(e.index)) acc[f.index] += std::uint64_t(e.value) * f.value;
    for (const auto v : acc)
      if (v % p != 0) return false;
  }
  return true;
}

Outcome criterion8() {
  Outcome o;
  std::size_t resolutions = 0, categories = 0, functors = 0;
  for (const auto& c : kCEPairs) {
    const auto g = grp::named_group(c.group);
    const auto bar = coh::BarResolution::build(g, c.p, c.n);
    o.pass = o.pass && bar.verify_d_squared();
    ++resolutions;
    const auto s = grp::sylow(g, c.p).subgroup;
    for (const auto& h : grp::subgroups_of(s)) {
      const auto sub = coh::BarResolution::build(grp::materialize(h).group, c.p,
                                                 std::min<std::size_t>(c.n, 4));
      o.pass = o.pass && sub.verify_d_squared();
      ++resolutions;
    }
    const auto f = fincat::build_fusion_category(g, s);
    const auto t = fincat::build_transporter_category(g, s);
    o.pass = o.pass && category_laws(*f.category) && category_laws(*t.category);
    categories += 2;
    const auto pi = fincat::projection_functor(t, f);
    pi.validate();
    ++functors;
  }
  for (std::size_t j = 0; j + 1 < 3; ++j) {
    o.pass = o.pass && free_d_squared(*grp::named_group("A4"), 2, j);
    ++resolutions;
  }
  for (const auto& d : bilim::generated_family()) {
    o.pass = o.pass && category_laws(d.index->one_cells());
    for (const auto& v : d.values) o.pass = o.pass && category_laws(*v);
    const auto l = bilim::enumerate_bilimit(d);
    o.pass = o.pass && category_laws(*l.category);
    d.validate();
    for (const auto& fn : d.on_one_cells) fn.validate();
    categories += 2 + d.values.size();
    functors += d.on_one_cells.size();
  }

  cli::RunConfig cfg;
  cfg.group = "A4";
  cfg.p = 2;
  const auto a = cli::render_json(cli::run("verify ce", cfg));
  const auto b = cli::render_json(cli::run("verify ce", cfg));
  const auto sa = cli::render_json(cli::run_suite(std::nullopt, cfg));
  const auto sb = cli::render_json(cli::run_suite(std::nullopt, cfg));
  const bool deterministic = a == b && sa == sb;
  o.pass = o.pass && deterministic;
  o.detail = std::to_string(resolutions) + " resolutions with d o d = 0, " +
             std::to_string(categories) + " categories, " + std::to_string(functors) +
             " functors; reports " + (deterministic ? "deterministic" : "differ");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"Cartan-Eilenberg cohomology", criterion1},
      {"finality of the projection", criterion2},
      {"Mackey-functor stable elements", criterion3},
      {"Hom-set limit over the transporter category", criterion4},
      {"stable Hom and Tate cohomology", criterion5},
      {"cohomological axiom and monadicity", criterion6},
      {"bilimit Hom-set formula", criterion7},
      {"infrastructure invariants", criterion8},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu %s: %s [%s] (%.2fs)\n", i + 1, o.pass ? "PASS" : "FAIL",
                criteria[i].first, o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
