#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fusionlim/bilim/two_category.hpp"
#include "fusionlim/cli/run.hpp"
#include "fusionlim/coh/cohomology.hpp"
#include "fusionlim/grp/perm_group.hpp"
#include "fusionlim/rep/module.hpp"

namespace fusionlim::cli {

/// Per-run state: the resolved group, a cohomology store and memoized
/// subgroup data.
class Context {
 public:
  Context(const RunConfig& cfg, Report& report);
  ~Context();

  const RunConfig& cfg;
  Report& report;
  grp::GroupPtr group;
  std::unique_ptr<coh::CohomologyStore> store;

  /// The configured degree, or the default capped at `fallback_cap`.
  /// Throws BudgetExceeded over the cap unless forced.
  std::size_t degree(std::size_t fallback_cap = 64) const;
  const std::vector<grp::Subgroup>& subgroups();
  /// Smallest index of a conjugate, per subgroup.
  const std::vector<std::size_t>& class_of();
  grp::Subgroup pick_subgroup(const std::string& spec);
  grp::Subgroup sylow_or_chosen();
  std::optional<grp::Subgroup> chosen_subgroup();
  rep::KGModule module(const std::string& spec);
  /// The configured modules, or one permutation module per conjugacy class
  /// of subgroups.
  std::vector<std::string> fixed_point_modules();
  /// The configured modules, or trivial, regular and permutation modules on
  /// the two largest proper nontrivial subgroup orders.
  std::vector<std::string> hom_modules();
  const coh::CEReport& ce_report();
  /// Moves cache hits and warnings into the report.
  void finish();

 private:
  std::optional<std::vector<grp::Subgroup>> all_subgroups_;
  std::optional<std::vector<std::size_t>> class_of_;
  std::optional<coh::CEReport> ce_;
};

nlohmann::json config_inputs(const RunConfig& cfg, const grp::PermGroup& g);
void run_check(Context& ctx, const std::string& check);
std::vector<bilim::CatValued2Functor> resolve_diagrams(const std::string& spec);

}  // namespace fusionlim::cli
