#include "fusionlim/coh/cohomology.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "fusionlim/error.hpp"
#include "fusionlim/fpla/linalg.hpp"
#include "fusionlim/fpla/matrix_io.hpp"

namespace fusionlim::coh {

using fpla::FpMatrix;
using fpla::Subspace;
using fpla::Vector;
using grp::ElementId;

namespace {

Subspace boundaries_of(const BarResolution& bar, std::size_t n) {
  if (n == 0) return Subspace(bar.p(), 1);
  return fpla::image_basis(bar.differential(n - 1));
}

Subspace reduced_span(const Subspace& b, std::size_t ambient, unsigned p,
                      const std::vector<Vector>& vectors) {
  Subspace out(p, ambient);
  for (const auto& v : vectors) out.insert(b.reduce(v));
  return out;
}

}  // namespace

CohomologyGroup::CohomologyGroup(std::shared_ptr<const BarResolution> bar, std::size_t n,
                                 Subspace boundaries, Subspace classes)
    : bar_(std::move(bar)), n_(n), boundaries_(std::move(boundaries)),
      classes_(std::move(classes)) {}

bool CohomologyGroup::is_cocycle(const Vector& f) const {
  if (f.size() != cochain_dim()) return false;
  const auto& d = bar_->differential(n_);
  // d f = Σ_c f_c · column c.
  const fpla::PrimeField field(p());
  std::vector<fpla::Residue> out(d.rows(), 0);
  for (std::size_t c = 0; c < d.cols(); ++c) {
    if (!f[c]) continue;
    for (const auto& e : d.column(c))
      out[e.index] = field.add(out[e.index], field.mul(e.value, f[c]));
  }
  return std::all_of(out.begin(), out.end(), [](fpla::Residue x) { return x == 0; });
}

std::optional<Vector> CohomologyGroup::coordinates(const Vector& f) const {
  if (!is_cocycle(f)) return std::nullopt;
  auto c = classes_.coordinates(boundaries_.reduce(f));
  if (!c) throw Error("cocycle outside the span of the cohomology representatives");
  return c;
}

GroupCohomology compute_cohomology(std::shared_ptr<const BarResolution> bar) {
  GroupCohomology gc;
  gc.bar = bar;
  for (std::size_t n = 0; n <= bar->max_degree(); ++n) {
    auto b = boundaries_of(*bar, n);
    const auto z = fpla::kernel_basis(bar->differential(n));
    auto classes = reduced_span(b, bar->cochain_dim(n), bar->p(), z.basis());
    gc.degrees.emplace_back(bar, n, std::move(b), std::move(classes));
  }
  return gc;
}

CohomologyStore::CohomologyStore(StoreOptions options) : options_(std::move(options)) {}

std::size_t CohomologyStore::cache_hits() const {
  std::lock_guard lock(mutex_);
  return cache_hits_;
}

std::vector<std::string> CohomologyStore::warnings() const {
  std::lock_guard lock(mutex_);
  return warnings_;
}

std::filesystem::path CohomologyStore::cache_file(std::uint64_t digest, unsigned p,
                                                  std::size_t n) const {
  char name[64];
  std::snprintf(name, sizeof name, "coh-%016llx-p%u-n%zu.fpmx",
                static_cast<unsigned long long>(digest), p, n);
  return *options_.cache_dir / name;
}

std::optional<GroupCohomology> CohomologyStore::load(
    const std::shared_ptr<const BarResolution>& bar) {
  const auto path = cache_file(bar->group()->digest(), bar->p(), bar->max_degree());
  if (!std::filesystem::exists(path)) return std::nullopt;
  try {
    std::ifstream in(path, std::ios::binary);
    GroupCohomology gc;
    gc.bar = bar;
    gc.from_cache = true;
    for (std::size_t n = 0; n <= bar->max_degree(); ++n) {
      const auto reps = fpla::read_dense_matrix(in);
      if (reps.p() != bar->p() || reps.cols() != bar->cochain_dim(n))
        throw Error("record shape does not match the resolution");
      auto b = boundaries_of(*bar, n);
      std::vector<Vector> rows;
      for (std::size_t r = 0; r < reps.rows(); ++r)
        rows.emplace_back(reps.row(r).begin(), reps.row(r).end());
      auto classes = reduced_span(b, bar->cochain_dim(n), bar->p(), rows);
      CohomologyGroup h(bar, n, std::move(b), std::move(classes));
      if (h.dim() != rows.size()) throw Error("representatives are dependent");
      for (const auto& v : rows)
        if (!h.is_cocycle(v)) throw Error("representative is not a cocycle");
      gc.degrees.push_back(std::move(h));
    }
    if (in.peek() != std::char_traits<char>::eof()) throw Error("trailing data");
    return gc;
  } catch (const Error& e) {
    warnings_.push_back("cache file " + path.string() + " is corrupt (" + e.what() +
                        "); recomputing");
    return std::nullopt;
  }
}

void CohomologyStore::save(const GroupCohomology& c) const {
  std::filesystem::create_directories(*options_.cache_dir);
  const auto path = cache_file(c.bar->group()->digest(), c.bar->p(), c.bar->max_degree());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    for (const auto& h : c.degrees)
      fpla::write_matrix(out, FpMatrix::from_row_vectors(h.p(), h.cochain_dim(),
                                                         h.representatives()));
    if (!out) throw Error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::shared_ptr<const GroupCohomology> CohomologyStore::get(const grp::GroupPtr& g, unsigned p,
                                                            std::size_t max_degree) {
  std::lock_guard lock(mutex_);
  const auto key = std::make_pair(g->digest(), p);
  if (const auto it = memo_.find(key);
      it != memo_.end() && it->second->bar->max_degree() >= max_degree)
    return it->second;
  auto bar = std::make_shared<const BarResolution>(
      BarResolution::build(g, p, max_degree, options_.budget, options_.force));
  std::optional<GroupCohomology> gc;
  if (options_.cache_dir) {
    gc = load(bar);
    if (gc) ++cache_hits_;
  }
  if (!gc) {
    gc = compute_cohomology(bar);
    if (options_.cache_dir) save(*gc);
  }
  auto shared = std::make_shared<const GroupCohomology>(std::move(*gc));
  memo_[key] = shared;
  return shared;
}

std::shared_ptr<const GroupCohomology> CohomologyStore::get(const grp::Subgroup& h, unsigned p,
                                                            std::size_t max_degree) {
  return get(grp::materialize(h).group, p, max_degree);
}

Vector pull_back_cochain(const Vector& f, std::size_t n, const std::vector<ElementId>& table,
                         std::size_t target_order) {
  const std::size_t ms = table.size() - 1, mt = target_order - 1;
  const std::size_t len = power(ms, n);
  if (f.size() != power(mt, n)) throw InvalidArgument("pull_back_cochain: length mismatch");
  Vector out(len);
  std::vector<ElementId> t(n);
  for (std::size_t i = 0; i < len; ++i) {
    tuple_from_index(i, ms, t);
    for (auto& x : t) x = table[x];
    out[i] = f[tuple_index(t, mt)];
  }
  return out;
}

FpMatrix induced_map(const CohomologyGroup& source, const CohomologyGroup& target,
                     const std::vector<ElementId>& table) {
  std::vector<Vector> columns;
  for (const auto& rep : source.representatives()) {
    auto c = target.coordinates(
        pull_back_cochain(rep, source.degree(), table, source.group()->order()));
    if (!c) throw Error("pulled back cochain is not a cocycle");
    columns.push_back(std::move(*c));
  }
  return FpMatrix::from_column_vectors(source.p(), target.dim(), columns);
}

CohMap restriction_map(const grp::GroupPtr& g, const grp::Subgroup& h, unsigned p,
                       std::size_t n, CohomologyStore& store) {
  if (h.parent() != g) throw InvalidArgument("restriction: H is not a subgroup of G");
  const auto& src = (*store.get(g, p, n))[n];
  const auto& dst = (*store.get(h, p, n))[n];
  return {n, src.dim(), dst.dim(), induced_map(src, dst, h.elements())};
}

CohMap conjugation_map(ElementId g, const grp::Subgroup& p_sub, const grp::Subgroup& q,
                       unsigned p, std::size_t n, CohomologyStore& store) {
  const auto& parent = *p_sub.parent();
  std::vector<ElementId> table;
  for (const auto x : p_sub.elements()) {
    const auto y = parent.conjugate(g, x);
    if (!q.contains(y)) throw InvalidArgument("conjugation: gPg⁻¹ is not contained in Q");
    table.push_back(static_cast<ElementId>(q.position(y)));
  }
  const auto& src = (*store.get(q, p, n))[n];
  const auto& dst = (*store.get(p_sub, p, n))[n];
  return {n, src.dim(), dst.dim(), induced_map(src, dst, table)};
}

CohomologyDiagram cohomology_diagram(const fincat::SubgroupCategory& c, unsigned p,
                                     std::size_t n, CohomologyStore& store) {
  CohomologyDiagram cd;
  cd.degree = n;
  cd.diagram.index = c.category;
  cd.diagram.p = p;
  cd.diagram.variance = fincat::Variance::contravariant;
  for (const auto& obj : c.objects) {
    cd.values.push_back(store.get(obj, p, n));
    cd.diagram.dims.push_back((*cd.values.back())[n].dim());
  }
  const auto& cat = *c.category;
  for (fincat::MorphismId f = 0; f < cat.morphism_count(); ++f) {
    const auto a = cat.src(f), b = cat.dst(f);
    std::vector<ElementId> table;
    for (const auto y : c.maps[f])
      table.push_back(static_cast<ElementId>(c.objects[b].position(y)));
    cd.diagram.maps.push_back(induced_map((*cd.values[b])[n], (*cd.values[a])[n], table));
  }
  cd.diagram.validate();
  return cd;
}

Subspace stable_elements(const grp::GroupPtr& g, const grp::Subgroup& s, unsigned p,
                         std::size_t n, CohomologyStore& store) {
  const auto f = fincat::build_fusion_category(g, s);
  const auto cd = cohomology_diagram(f, p, n, store);
  return fincat::limit_contravariant(cd.diagram).component(f.object_of(s));
}

bool CEReport::all_pass() const {
  return std::all_of(degrees.begin(), degrees.end(),
                     [](const CEDegree& d) { return d.iso() && d.finality; });
}

CEReport verify_cartan_eilenberg(const grp::GroupPtr& g, unsigned p, std::size_t n_max,
                                 CohomologyStore& store) {
  CEReport report;
  report.group = g;
  report.p = p;
  const auto syl = grp::sylow(g, p);
  report.sylow = syl.subgroup;
  report.p_divides_order = syl.p_divides_order;
  if (!syl.p_divides_order) report.note = "p coprime to |G|";
  const auto& s = syl.subgroup;

  std::size_t feasible = n_max;
  if (!store.options().force)
    feasible = std::min(n_max, max_degree_within(g->order(), store.options().budget));

  const auto gc = store.get(g, p, feasible);
  const auto fusion = fincat::build_fusion_category(g, s);
  const auto transporter = fincat::build_transporter_category(g, s);
  const auto pi = fincat::projection_functor(transporter, fusion);
  const auto s_obj = fusion.object_of(s);

  for (std::size_t n = 0; n <= n_max; ++n) {
    CEDegree row;
    row.degree = n;
    if (n > feasible) {
      row.note = "degree cap: (|G| - 1)^" + std::to_string(n + 1) + " exceeds the budget of " +
                 std::to_string(store.options().budget);
      report.degrees.push_back(std::move(row));
      continue;
    }
    row.computed = true;
    const auto& hg = (*gc)[n];
    row.dim_global = hg.dim();

    const auto fd = cohomology_diagram(fusion, p, n, store);
    const auto td = cohomology_diagram(transporter, p, n, store);
    const auto lim_f = fincat::limit(fd.diagram);
    const auto lim_t = fincat::limit(td.diagram);
    row.dim_fusion_limit = lim_f.dim();
    row.dim_transporter_limit = lim_t.dim();
    const auto pulled = fincat::pull_back(fd.diagram, pi);
    row.finality = lim_f.space == lim_t.space &&
                   lim_f.component(s_obj) == lim_t.component(s_obj) &&
                   pulled.maps == td.diagram.maps &&
                   fincat::compare_along(fd.diagram, pi).same_subspace;

    std::size_t total = 0;
    for (const auto d : fd.diagram.dims) total += d;
    Subspace image(p, total);
    row.image_in_limit = true;
    for (const auto& rep : hg.representatives()) {
      Vector x;
      for (fincat::ObjectId a = 0; a < fusion.objects.size(); ++a) {
        const auto& obj = fusion.objects[a];
        auto c = (*fd.values[a])[n].coordinates(
            pull_back_cochain(rep, n, obj.elements(), g->order()));
        if (!c) throw Error("restricted cocycle is not a cocycle");
        x.insert(x.end(), c->begin(), c->end());
      }
      row.image_in_limit = row.image_in_limit && lim_f.space.contains(x);
      image.insert(x);
    }
    row.comparison_rank = image.dim();
    report.degrees.push_back(std::move(row));
  }
  return report;
}

}  // namespace fusionlim::coh
