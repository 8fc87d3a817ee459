#include "fusionlim/coh/syzygy.hpp"

#include "fusionlim/error.hpp"
#include "fusionlim/fpla/linalg.hpp"

namespace fusionlim::coh {

using fpla::FpMatrix;
using fpla::Vector;
using grp::ElementId;

fpla::SparseFpMatrix free_boundary(const grp::PermGroup& g, unsigned p, std::size_t j) {
  const std::size_t order = g.order(), m = order - 1;
  if (j == 0) {
    std::vector<fpla::Triplet> t;
    for (std::size_t c = 0; c < order; ++c) t.push_back({0, static_cast<std::uint32_t>(c), 1});
    return fpla::SparseFpMatrix::from_triplets(p, 1, order, std::move(t));
  }
  const std::size_t tuples = power(m, j), lower = power(m, j - 1);
  std::vector<fpla::Triplet> t;
  std::vector<ElementId> tup(j), merged;
  for (ElementId g0 = 0; g0 < order; ++g0)
    for (std::size_t k = 0; k < tuples; ++k) {
      tuple_from_index(k, m, tup);
      const auto col = static_cast<std::uint32_t>(g0 * tuples + k);
      // g_0 g_1 [g_2..g_j]
      t.push_back({static_cast<std::uint32_t>(g.multiply(g0, tup[0]) * lower + k % lower), col, 1});
      for (std::size_t i = 1; i < j; ++i) {
        const ElementId x = g.multiply(tup[i - 1], tup[i]);
        if (x == grp::PermGroup::identity()) continue;
        merged.assign(tup.begin(), tup.end());
        merged[i - 1] = x;
        merged.erase(merged.begin() + static_cast<std::ptrdiff_t>(i));
        t.push_back({static_cast<std::uint32_t>(g0 * lower + tuple_index(merged, m)), col,
                     (i % 2) ? -1 : 1});
      }
      t.push_back({static_cast<std::uint32_t>(g0 * lower + k / m), col, (j % 2) ? -1 : 1});
    }
  return fpla::SparseFpMatrix::from_triplets(p, order * lower, order * tuples, std::move(t));
}

SyzygyModule syzygy(const grp::GroupPtr& g, unsigned p, std::size_t n, std::size_t budget) {
  SyzygyModule out;
  out.degree = n;
  if (n == 0) {
    out.module = rep::trivial_module(g, p);
    out.ambient_dim = 1;
    return out;
  }
  const std::size_t order = g->order(), m = order - 1;
  const std::size_t ambient = order * power(m, n - 1);
  if (ambient > budget)
    throw BudgetExceeded("degree cap: syzygy ambient dimension " + std::to_string(ambient) +
                         " exceeds the budget of " + std::to_string(budget));
  const auto boundary = free_boundary(*g, p, n - 1);
  if (n >= 2 && !(free_boundary(*g, p, n - 2) * boundary).is_zero())
    throw Error("free resolution: ∂∘∂ ≠ 0");
  const auto kernel = fpla::kernel_basis(boundary);
  out.ambient_dim = ambient;

  const auto basis = kernel.basis();
  const std::size_t block = power(m, n - 1);
  std::vector<FpMatrix> gens;
  for (const auto& s : g->generators()) {
    const ElementId sid = g->index_of(s);
    std::vector<Vector> columns;
    Vector moved(ambient);
    for (const auto& v : basis) {
      std::fill(moved.begin(), moved.end(), 0);
      for (std::size_t i = 0; i < ambient; ++i)
        if (v[i]) moved[g->multiply(sid, static_cast<ElementId>(i / block)) * block + i % block] = v[i];
      auto c = kernel.coordinates(moved);
      if (!c) throw Error("syzygy is not closed under the group action");
      columns.push_back(std::move(*c));
    }
    gens.push_back(FpMatrix::from_column_vectors(p, kernel.dim(), columns));
  }
  out.module = rep::KGModule::from_generators(g, p, kernel.dim(), gens,
                                              "syzygy" + std::to_string(n));
  return out;
}

bool TateReport::all_pass() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const TateDegree& d) { return d.agree(); });
}

TateReport verify_tate_ce(const grp::GroupPtr& g, unsigned p, std::size_t n_max,
                          CohomologyStore& store) {
  TateReport report;
  report.group = g;
  report.p = p;
  const auto s = grp::sylow(g, p).subgroup;
  const auto k = rep::trivial_module(g, p);
  const auto gc = store.get(g, p, n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    TateDegree row;
    row.degree = n;
    const auto omega = syzygy(g, p, n, store.options().budget);
    row.dim_stable_global = rep::stable_hom(omega.module, k).dim();
    row.limit_report = rep::hom_limit_over_transporter(g, s, omega.module, k, true);
    row.dim_transporter_limit = row.limit_report.dim_limit;
    row.dim_cohomology = (*gc)[n].dim();
    report.degrees.push_back(std::move(row));
  }
  return report;
}

}  // namespace fusionlim::coh
