#include "fusionlim/mackey/mackey.hpp"

#include <algorithm>
#include <functional>

#include "fusionlim/error.hpp"
#include "fusionlim/fpla/field.hpp"
#include "fusionlim/fpla/linalg.hpp"

namespace fusionlim::mackey {

using fpla::FpMatrix;
using fpla::Subspace;
using fpla::Vector;
using grp::ElementId;
using grp::Subgroup;

namespace {

Subspace fixed_vectors(const rep::KGModule& m, const std::vector<ElementId>& seeds) {
  const std::size_t n = m.dim();
  FpMatrix stacked(m.p(), seeds.size() * n, n);
  const fpla::PrimeField f(m.p());
  for (std::size_t k = 0; k < seeds.size(); ++k) {
    const auto& a = m.action(seeds[k]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        stacked.set(k * n + i, j, i == j ? f.sub(a(i, j), 1) : a(i, j));
  }
  return fpla::kernel_basis(stacked);
}

std::vector<ElementId> coset_reps(const Subgroup& p_sub, const Subgroup& q) {
  const auto& g = *q.parent();
  std::vector<bool> covered(g.order(), false);
  std::vector<ElementId> reps;
  for (const auto x : q.elements()) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (const auto y : p_sub.elements()) covered[g.multiply(x, y)] = true;
  }
  return reps;
}

Vector coords_or_throw(const Subspace& space, const Vector& v, const char* what) {
  auto c = space.coordinates(v);
  if (!c) throw FunctorialityError(std::string("fixed-point data: ") + what +
                                   " leaves the target value");
  return std::move(*c);
}

FpMatrix matrix_in_bases(const Subspace& from, const Subspace& to,
                         const std::function<Vector(const Vector&)>& map, const char* what) {
  std::vector<Vector> cols;
  for (const auto& b : from.basis()) cols.push_back(coords_or_throw(to, map(b), what));
  return FpMatrix::from_column_vectors(to.p(), to.dim(), cols);
}

Vector sum_of_translates(const rep::KGModule& m, const std::vector<ElementId>& reps,
                         const Vector& v) {
  const fpla::PrimeField f(m.p());
  Vector out(m.dim(), 0);
  for (const auto r : reps) {
    const auto w = m.action(r).apply(v);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(out[i], w[i]);
  }
  return out;
}

std::string vector_label(const Vector& v) {
  std::string s;
  for (const auto x : v) s += std::to_string(x);
  return s;
}

void init_lattice(MackeyData& md, const grp::GroupPtr& g, const Subgroup& s, unsigned p) {
  if (s.parent() != g) throw InvalidArgument("mackey: S is not a subgroup of G");
  md.group = g;
  md.p = p;
  md.lattice = grp::subgroups_of(s);
}

std::string pair_label(const MackeyData& md, LatticeIndex a, LatticeIndex b) {
  return "(" + grp::structure_label(md.lattice[a]) + "#" + std::to_string(a) + ", " +
         grp::structure_label(md.lattice[b]) + "#" + std::to_string(b) + ")";
}

}  // namespace

LatticeIndex MackeyData::index_of(const Subgroup& h) const {
  const auto it = std::find(lattice.begin(), lattice.end(), h);
  if (it == lattice.end()) throw InvalidArgument("mackey: subgroup not in the lattice of S");
  return static_cast<LatticeIndex>(it - lattice.begin());
}

void MackeyData::validate() const {
  if (dims.size() != lattice.size()) throw FunctorialityError("mackey: one value per subgroup");
  for (const auto& [key, m] : res)
    if (m.rows() != dims[key.second] || m.cols() != dims[key.first])
      throw FunctorialityError("mackey: res" + pair_label(*this, key.first, key.second) +
                               " has the wrong shape");
  for (const auto& [key, m] : conj) {
    const auto target = index_of(grp::conjugate_subgroup(key.first, lattice[key.second]));
    if (m.rows() != dims[target] || m.cols() != dims[key.second])
      throw FunctorialityError("mackey: conj has the wrong shape");
    if (lattice[key.second].contains(key.first) && !m.is_identity())
      throw FunctorialityError("mackey: conj by an element of " +
                               grp::structure_label(lattice[key.second]) + "#" +
                               std::to_string(key.second) + " is not the identity");
  }
  if (transfer)
    for (const auto& [key, m] : *transfer)
      if (m.rows() != dims[key.second] || m.cols() != dims[key.first])
        throw FunctorialityError("mackey: transfer" + pair_label(*this, key.first, key.second) +
                                 " has the wrong shape");
  transporter_diagram(*this, fincat::build_transporter_category(group, s())).validate();
}

MackeyData fixed_point_mackey(const rep::KGModule& m, const Subgroup& s) {
  MackeyData md;
  init_lattice(md, m.group(), s, m.p());
  md.label = "fixed-point:" + m.label();
  const auto& g = *md.group;
  std::vector<Subspace> values;
  for (const auto& h : md.lattice) {
    values.push_back(fixed_vectors(m, h.generators()));
    md.dims.push_back(values.back().dim());
    std::vector<std::string> labels;
    for (const auto& b : values.back().basis()) labels.push_back(vector_label(b));
    md.basis_labels.push_back(std::move(labels));
  }
  const auto identity = [](const Vector& v) { return v; };
  md.transfer.emplace();
  for (LatticeIndex q = 0; q < md.lattice.size(); ++q)
    for (LatticeIndex a = 0; a < md.lattice.size(); ++a) {
      if (!md.lattice[a].is_subgroup_of(md.lattice[q])) continue;
      md.res.emplace(std::pair{q, a}, matrix_in_bases(values[q], values[a], identity, "res"));
      const auto reps = coset_reps(md.lattice[a], md.lattice[q]);
      md.transfer->emplace(
          std::pair{a, q},
          matrix_in_bases(values[a], values[q],
                          [&](const Vector& v) { return sum_of_translates(m, reps, v); },
                          "transfer"));
    }
  for (ElementId x = 0; x < g.order(); ++x)
    for (LatticeIndex a = 0; a < md.lattice.size(); ++a) {
      const auto c = grp::conjugate_subgroup(x, md.lattice[a]);
      if (!c.is_subgroup_of(s)) continue;
      md.conj.emplace(std::pair{x, a},
                      matrix_in_bases(values[a], values[md.index_of(c)],
                                      [&](const Vector& v) { return m.action(x).apply(v); },
                                      "conj"));
    }
  md.validate();
  return md;
}

MackeyData cohomology_mackey(const grp::GroupPtr& g, const Subgroup& s, unsigned p,
                             std::size_t n, coh::CohomologyStore& store) {
  MackeyData md;
  init_lattice(md, g, s, p);
  md.label = "cohomology:H^" + std::to_string(n);
  for (const auto& h : md.lattice) {
    md.dims.push_back((*store.get(h, p, n))[n].dim());
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < md.dims.back(); ++j)
      labels.push_back("H" + std::to_string(n) + "(" + grp::structure_label(h) + ")." +
                       std::to_string(j));
    md.basis_labels.push_back(std::move(labels));
  }
  for (LatticeIndex q = 0; q < md.lattice.size(); ++q)
    for (LatticeIndex a = 0; a < md.lattice.size(); ++a)
      if (md.lattice[a].is_subgroup_of(md.lattice[q]))
        md.res.emplace(std::pair{q, a},
                       coh::conjugation_map(grp::PermGroup::identity(), md.lattice[a],
                                            md.lattice[q], p, n, store)
                           .matrix);
  for (ElementId x = 0; x < g->order(); ++x)
    for (LatticeIndex a = 0; a < md.lattice.size(); ++a) {
      const auto c = grp::conjugate_subgroup(x, md.lattice[a]);
      if (!c.is_subgroup_of(s)) continue;
      md.conj.emplace(std::pair{x, a},
                      coh::conjugation_map(g->inverse(x), c, md.lattice[a], p, n, store).matrix);
    }
  md.validate();
  return md;
}

fincat::VectDiagram transporter_diagram(const MackeyData& md, const fincat::SubgroupCategory& t) {
  if (t.kind != fincat::IndexKind::transporter || t.objects != md.lattice)
    throw InvalidArgument("mackey: transporter category of a different lattice");
  fincat::VectDiagram d;
  d.index = t.category;
  d.p = md.p;
  d.variance = fincat::Variance::contravariant;
  d.dims = md.dims;
  const auto& cat = *t.category;
  const auto& g = *md.group;
  for (fincat::MorphismId f = 0; f < cat.morphism_count(); ++f) {
    const auto x = t.witness[f];
    const auto q = cat.dst(f);
    const auto image = md.index_of(grp::conjugate_subgroup(x, md.lattice[cat.src(f)]));
    d.maps.push_back(md.conj.at({g.inverse(x), image}) * md.res.at({q, image}));
  }
  return d;
}

fincat::VectDiagram fusion_diagram(const MackeyData& md, const fincat::SubgroupCategory& f,
                                   const fincat::SubgroupCategory& t) {
  if (f.kind != fincat::IndexKind::fusion || f.objects != md.lattice)
    throw InvalidArgument("mackey: fusion category of a different lattice");
  const auto td = transporter_diagram(md, t);
  const auto pi = fincat::projection_functor(t, f);
  fincat::VectDiagram d;
  d.index = f.category;
  d.p = md.p;
  d.variance = fincat::Variance::contravariant;
  d.dims = md.dims;
  const auto& fc = *f.category;
  std::vector<std::optional<fincat::MorphismId>> chosen(fc.morphism_count());
  d.maps.resize(fc.morphism_count());
  for (fincat::MorphismId m = 0; m < t.category->morphism_count(); ++m) {
    const auto image = pi.morphism_map[m];
    if (!chosen[image]) {
      chosen[image] = m;
      d.maps[image] = td.maps[m];
    } else if (d.maps[image] != td.maps[m]) {
      const auto& g = *md.group;
      throw FunctorialityError(
          "mackey: transporter morphisms " + g.element(t.witness[*chosen[image]]).cycle_string() +
          " and " + g.element(t.witness[m]).cycle_string() + " induce the same fusion map " +
          fc.morphism(image).label + " but act differently");
    }
  }
  d.validate();
  return d;
}

StableElements stable_elements_limit(const MackeyData& md, fincat::IndexKind index) {
  const auto t = fincat::build_transporter_category(md.group, md.s());
  StableElements out{index, {}, {}};
  if (index == fincat::IndexKind::transporter) {
    auto d = transporter_diagram(md, t);
    d.validate();
    out.limit = fincat::limit_contravariant(d);
    out.s_component = out.limit.component(t.object_of(md.s()));
  } else {
    const auto f = fincat::build_fusion_category(md.group, md.s());
    out.limit = fincat::limit_contravariant(fusion_diagram(md, f, t));
    out.s_component = out.limit.component(f.object_of(md.s()));
  }
  return out;
}

FixedPointCEReport verify_fixed_point_ce(const rep::KGModule& m, std::optional<Subgroup> s) {
  const auto& g = m.group();
  const auto syl = grp::sylow(g, m.p());
  const Subgroup chosen = s ? *s : syl.subgroup;
  FixedPointCEReport r;
  r.module = m.label();
  r.s_label = grp::structure_label(chosen);
  r.s_is_sylow = chosen.order() == syl.subgroup.order();
  r.index = g->order() / chosen.order();
  r.index_invertible = r.index % m.p() != 0;

  const auto md = fixed_point_mackey(m, chosen);
  const auto st = stable_elements_limit(md, fincat::IndexKind::transporter);
  const auto ms = fixed_vectors(m, chosen.generators());
  const auto mg = fixed_vectors(m, Subgroup::whole(g).generators());
  r.dim_global = mg.dim();
  r.dim_limit = st.dim();

  Subspace global_in_s(m.p(), ms.dim());
  for (const auto& v : mg.basis()) global_in_s.insert(*ms.coordinates(v));
  r.same_subspace = global_in_s == st.s_component;

  const auto reps = grp::left_transversal(g, chosen).reps;
  const auto to_module = [&](const Vector& c) {
    Vector v(m.dim(), 0);
    const fpla::PrimeField f(m.p());
    const auto basis = ms.basis();
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t k = 0; k < v.size(); ++k) v[k] = f.add(v[k], f.mul(c[i], basis[i][k]));
    return v;
  };
  Subspace transferred(m.p(), m.dim());
  for (const auto& y : st.s_component.basis())
    transferred.insert(sum_of_translates(m, reps, to_module(y)));
  r.transfer_surjective = transferred == mg;

  r.section = r.index_invertible;
  if (r.section) {
    const fpla::PrimeField f(m.p());
    const auto inv = f.inv(f.reduce(static_cast<long long>(r.index)));
    const auto scaled_transfer = [&](const Vector& v) {
      auto w = sum_of_translates(m, reps, v);
      for (auto& x : w) x = f.mul(x, inv);
      return w;
    };
    for (const auto& x : mg.basis()) r.section = r.section && scaled_transfer(x) == x;
    for (const auto& y : st.s_component.basis()) {
      const auto v = to_module(y);
      r.section = r.section && scaled_transfer(v) == v;
    }
  }
  return r;
}

CohomologicalReport check_cohomological(const MackeyData& md) {
  if (!md.transfer) throw InvalidArgument("cohomological axiom: transfers are absent");
  CohomologicalReport r;
  const fpla::PrimeField f(md.p);
  for (const auto& [key, tr] : *md.transfer) {
    const auto [a, q] = key;
    const auto index = md.lattice[q].order() / md.lattice[a].order();
    const auto expected =
        FpMatrix::identity(md.p, md.dims[q]).scaled(f.reduce(static_cast<long long>(index)));
    ++r.pairs_checked;
    if (tr * md.res.at({q, a}) != expected)
      r.failures.push_back({a, q, "transfer∘res ≠ [Q:P]·id on " + pair_label(md, a, q)});
  }
  return r;
}

MonadicityReport monadicity_section_witness(const rep::KGModule& m, std::optional<Subgroup> s) {
  const auto& g = m.group();
  const Subgroup chosen = s ? *s : grp::sylow(g, m.p()).subgroup;
  MonadicityReport r;
  r.module = m.label();
  r.index = g->order() / chosen.order();
  r.index_invertible = r.index % m.p() != 0;
  const auto mg = fixed_vectors(m, Subgroup::whole(g).generators());
  const auto ms = fixed_vectors(m, chosen.generators());
  r.dim_global = mg.dim();
  const auto reps = grp::left_transversal(g, chosen).reps;
  const fpla::PrimeField f(m.p());
  const auto scalar = f.reduce(static_cast<long long>(r.index));
  r.composite_is_index = ms.contains(mg);
  for (const auto& x : mg.basis()) {
    auto expected = x;
    for (auto& v : expected) v = f.mul(v, scalar);
    r.composite_is_index = r.composite_is_index && sum_of_translates(m, reps, x) == expected;
  }
  return r;
}

}  // namespace fusionlim::mackey
