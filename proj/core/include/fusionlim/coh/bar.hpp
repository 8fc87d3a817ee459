#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fusionlim/fpla/sparse_matrix.hpp"
#include "fusionlim/grp/perm_group.hpp"

namespace fusionlim::coh {

/// Largest cochain space a resolution may build, (|G| − 1)^(N+1).
inline constexpr std::size_t kDefaultBudget = 300000;

/// Default N: 4 for |G| ≤ 12, 3 for |G| ≤ 24, otherwise the largest N
/// within the budget.
std::size_t default_max_degree(std::size_t group_order, std::size_t budget = kDefaultBudget);

/// Largest N with (|G| − 1)^(N+1) ≤ budget (capped at 64).
std::size_t max_degree_within(std::size_t group_order, std::size_t budget);

/// Bytes needed to hold the differentials up to degree N, roughly.
std::size_t memory_estimate(std::size_t group_order, std::size_t max_degree);

/// Normalized cochains C^n = maps(Ḡ^n → F_p), Ḡ = G \ {1}. A tuple
/// (g_1, ..., g_n) of non-identity ids has index Σ (g_i − 1)·m^(n−i),
/// m = |G| − 1.
std::size_t tuple_index(std::span<const grp::ElementId> tuple, std::size_t m);
void tuple_from_index(std::size_t index, std::size_t m, std::span<grp::ElementId> tuple);
std::size_t power(std::size_t base, std::size_t exponent);

/// Normalized inhomogeneous bar complex truncated at degree N:
/// (d f)(g_1..g_{n+1}) = f(g_2..g_{n+1}) + Σ_i (−1)^i f(..g_i g_{i+1}..)
///                       + (−1)^{n+1} f(g_1..g_n).
class BarResolution {
 public:
  /// Builds d^0..d^N and checks d^{n+1} d^n = 0. Throws BudgetExceeded
  /// naming the budget unless force is set.
  static BarResolution build(grp::GroupPtr g, unsigned p, std::size_t max_degree,
                             std::size_t budget = kDefaultBudget, bool force = false);

  const grp::GroupPtr& group() const noexcept { return group_; }
  unsigned p() const noexcept { return p_; }
  std::size_t max_degree() const noexcept { return max_degree_; }
  std::size_t cochain_dim(std::size_t n) const { return power(group_->order() - 1, n); }
  /// d^n: C^n → C^{n+1}, a cochain_dim(n+1) × cochain_dim(n) matrix.
  const fpla::SparseFpMatrix& differential(std::size_t n) const { return d_.at(n); }

  /// Recomputes every d^{n+1} d^n exactly.
  bool verify_d_squared() const;

 private:
  grp::GroupPtr group_;
  unsigned p_ = 2;
  std::size_t max_degree_ = 0;
  std::vector<fpla::SparseFpMatrix> d_;
};

fpla::SparseFpMatrix bar_differential(const grp::PermGroup& g, unsigned p, std::size_t n);

}  // namespace fusionlim::coh
