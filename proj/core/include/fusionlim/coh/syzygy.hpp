#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fusionlim/coh/cohomology.hpp"
#include "fusionlim/fpla/sparse_matrix.hpp"
#include "fusionlim/rep/hom.hpp"
#include "fusionlim/rep/module.hpp"

namespace fusionlim::coh {

/// Normalized bar resolution of k as free kG-modules: B_j has basis
/// g_0[g_1|...|g_j], indexed g_0·m^j + tuple_index, with
/// ∂(g_0[g_1..g_j]) = g_0g_1[g_2..g_j] + Σ_i (−1)^i g_0[..g_ig_{i+1}..]
///                    + (−1)^j g_0[g_1..g_{j−1}],
/// and ∂_0 the augmentation B_0 = kG → k.
fpla::SparseFpMatrix free_boundary(const grp::PermGroup& g, unsigned p, std::size_t j);

struct SyzygyModule {
  std::size_t degree = 0;
  /// Ω^n k = ker ∂_{n−1} ⊆ B_{n−1}; Ω^0 = k.
  rep::KGModule module;
  std::size_t ambient_dim = 0;
};

/// Throws BudgetExceeded when dim B_{n−1} exceeds the budget, and Error if
/// the kernel is not closed under the action or ∂∘∂ ≠ 0.
SyzygyModule syzygy(const grp::GroupPtr& g, unsigned p, std::size_t n,
                    std::size_t budget = kDefaultBudget);

struct TateDegree {
  std::size_t degree = 0;
  std::size_t dim_stable_global = 0;
  std::size_t dim_transporter_limit = 0;
  std::size_t dim_cohomology = 0;
  rep::HomLimitReport limit_report;

  bool agree() const noexcept {
    return dim_stable_global == dim_transporter_limit &&
           dim_transporter_limit == dim_cohomology && limit_report.iso();
  }
};

struct TateReport {
  grp::GroupPtr group;
  unsigned p = 2;
  std::vector<TateDegree> degrees;
  bool all_pass() const;
};

/// For 1 ≤ n ≤ n_max: dim stHom_kG(Ω^n k, k), the transporter limit of the
/// P-local stable Homs, and dim H^n(G; F_p).
TateReport verify_tate_ce(const grp::GroupPtr& g, unsigned p, std::size_t n_max,
                          CohomologyStore& store);

}  // namespace fusionlim::coh
