#include "fusionlim/coh/bar.hpp"

#include <string>

#include "fusionlim/error.hpp"

namespace fusionlim::coh {

using grp::ElementId;

std::size_t power(std::size_t base, std::size_t exponent) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exponent; ++i) r *= base;
  return r;
}

std::size_t max_degree_within(std::size_t group_order, std::size_t budget) {
  const std::size_t m = group_order > 0 ? group_order - 1 : 0;
  if (m <= 1) return 64;
  std::size_t n = 0;
  // (m)^(n+2) ≤ budget means degree n + 1 still fits.
  while (n < 64 && power(m, n + 2) <= budget) ++n;
  return n;
}

std::size_t default_max_degree(std::size_t group_order, std::size_t budget) {
  const auto fits = max_degree_within(group_order, budget);
  if (group_order <= 12) return std::min<std::size_t>(4, fits);
  if (group_order <= 24) return std::min<std::size_t>(3, fits);
  return fits;
}

std::size_t memory_estimate(std::size_t group_order, std::size_t max_degree) {
  const std::size_t m = group_order > 0 ? group_order - 1 : 0;
  const std::size_t top = power(m, max_degree + 1);
  const std::size_t rank_bound = power(m, max_degree);
  // Differential entries twice (matrix and transpose) plus a packed echelon
  // basis of the top kernel computation.
  return 2 * top * (max_degree + 2) * 8 + rank_bound * (rank_bound / 8 + 8);
}

std::size_t tuple_index(std::span<const ElementId> tuple, std::size_t m) {
  std::size_t idx = 0;
  for (const auto g : tuple) idx = idx * m + (g - 1);
  return idx;
}

void tuple_from_index(std::size_t index, std::size_t m, std::span<ElementId> tuple) {
  for (std::size_t i = tuple.size(); i-- > 0;) {
    tuple[i] = static_cast<ElementId>(index % m + 1);
    index /= m;
  }
}

fpla::SparseFpMatrix bar_differential(const grp::PermGroup& g, unsigned p, std::size_t n) {
  const std::size_t m = g.order() - 1;
  const std::size_t rows = power(m, n + 1), cols = power(m, n);
  std::vector<fpla::Triplet> triplets;
  if (m == 0) return fpla::SparseFpMatrix::from_triplets(p, rows, cols, {});
  triplets.reserve(rows * (n + 2));
  std::vector<ElementId> t(n + 1);
  const std::size_t mn = cols;
  for (std::size_t r = 0; r < rows; ++r) {
    tuple_from_index(r, m, t);
    const auto row = static_cast<std::uint32_t>(r);
    triplets.push_back({row, static_cast<std::uint32_t>(r % mn), 1});
    // Merging positions i−1 and i (1-based i): prefix·m^(n−i+1) + (x−1)·m^(n−i) + suffix.
    std::size_t prefix = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      const ElementId x = g.multiply(t[i - 1], t[i]);
      if (x != grp::PermGroup::identity()) {
        const std::size_t tail = power(m, n - i);
        const std::size_t suffix = r % tail;
        const std::size_t col = (prefix * m + (x - 1)) * tail + suffix;
        triplets.push_back({row, static_cast<std::uint32_t>(col), (i % 2) ? -1 : 1});
      }
      prefix = prefix * m + (t[i - 1] - 1);
    }
    triplets.push_back({row, static_cast<std::uint32_t>(r / m), ((n + 1) % 2) ? -1 : 1});
  }
  return fpla::SparseFpMatrix::from_triplets(p, rows, cols, std::move(triplets));
}

BarResolution BarResolution::build(grp::GroupPtr g, unsigned p, std::size_t max_degree,
                                   std::size_t budget, bool force) {
  const std::size_t m = g->order() - 1;
  if (!force && m > 1 && max_degree >= max_degree_within(g->order(), budget) + 1)
    throw BudgetExceeded("degree cap: (|G| - 1)^(N+1) = " + std::to_string(m) + "^" +
                         std::to_string(max_degree + 1) + " exceeds the budget of " +
                         std::to_string(budget) + " cochains");
  BarResolution bar;
  bar.group_ = std::move(g);
  bar.p_ = p;
  bar.max_degree_ = max_degree;
  for (std::size_t n = 0; n <= max_degree; ++n)
    bar.d_.push_back(bar_differential(*bar.group_, p, n));
  if (!bar.verify_d_squared()) throw Error("bar resolution: d∘d ≠ 0");
  return bar;
}

bool BarResolution::verify_d_squared() const {
  for (std::size_t n = 0; n + 1 < d_.size(); ++n)
    if (!(d_[n + 1] * d_[n]).is_zero()) return false;
  return true;
}

}  // namespace fusionlim::coh
