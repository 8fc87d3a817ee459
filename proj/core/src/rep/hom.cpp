#include "fusionlim/rep/hom.hpp"

#include "fusionlim/error.hpp"
#include "fusionlim/fpla/linalg.hpp"
#include "fusionlim/grp/perm_group.hpp"

namespace fusionlim::rep {

using fpla::FpMatrix;
using fpla::Residue;
using fpla::Subspace;
using fpla::Vector;
using grp::ElementId;

namespace {

/// (a, b)-entry of Σ_h ρ_N(h) E_ij ρ_M(h)⁻¹ accumulated into out.
void add_trace_of_unit(const KGModule& m, const KGModule& n, const grp::Subgroup& h,
                       std::size_t i, std::size_t j, const fpla::PrimeField& f, Vector& out) {
  const auto& g = *m.group();
  const std::size_t dm = m.dim(), dn = n.dim();
  for (const auto x : h.elements()) {
    const auto& rn = n.action(x);
    const auto& rm_inv = m.action(g.inverse(x));
    for (std::size_t a = 0; a < dn; ++a) {
      const Residue u = rn(a, i);
      if (!u) continue;
      const auto row = rm_inv.row(j);
      for (std::size_t b = 0; b < dm; ++b)
        if (row[b]) out[a * dm + b] = f.add(out[a * dm + b], f.mul(u, row[b]));
    }
  }
}

}  // namespace

Vector vectorize(const FpMatrix& phi) {
  return {phi.data().begin(), phi.data().end()};
}

FpMatrix unvectorize(unsigned p, std::size_t rows, std::size_t cols, const Vector& x) {
  if (x.size() != rows * cols) throw InvalidArgument("unvectorize: length mismatch");
  FpMatrix m(p, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, x[r * cols + c]);
  return m;
}

std::vector<FpMatrix> HomSpace::basis() const {
  std::vector<FpMatrix> out;
  for (std::size_t i = 0; i < space.dim(); ++i) out.push_back(as_matrix(space.basis_vector(i)));
  return out;
}

FpMatrix HomSpace::as_matrix(const Vector& x) const {
  return unvectorize(source.p(), target.dim(), source.dim(), x);
}

HomSpace hom_space(const KGModule& m, const KGModule& n) {
  return hom_space(m, n, grp::Subgroup::whole(m.group()));
}

HomSpace hom_space(const KGModule& m, const KGModule& n, const grp::Subgroup& h) {
  require_compatible(m, n);
  if (h.parent() != m.group()) throw InvalidArgument("hom_space: H is not a subgroup of G");
  const fpla::PrimeField f(m.p());
  const std::size_t dm = m.dim(), dn = n.dim(), total = dm * dn;
  Subspace equations(m.p(), total);
  Vector row(total);
  for (const auto s : h.generators()) {
    const auto& rm = m.action(s);
    const auto& rn = n.action(s);
    // (φρ_M(s) − ρ_N(s)φ)(i, j) = Σ_k φ(i,k) ρ_M(s)(k,j) − Σ_k ρ_N(s)(i,k) φ(k,j).
    for (std::size_t i = 0; i < dn; ++i)
      for (std::size_t j = 0; j < dm; ++j) {
        std::fill(row.begin(), row.end(), 0);
        for (std::size_t k = 0; k < dm; ++k)
          if (const Residue v = rm(k, j)) row[i * dm + k] = f.add(row[i * dm + k], v);
        for (std::size_t k = 0; k < dn; ++k)
          if (const Residue v = rn(i, k)) row[k * dm + j] = f.sub(row[k * dm + j], v);
        equations.insert(row);
      }
  }
  return {m, n, h, equations.annihilator()};
}

Subspace projective_trace_subspace(const KGModule& m, const KGModule& n) {
  return projective_trace_subspace(m, n, grp::Subgroup::whole(m.group()));
}

Subspace projective_trace_subspace(const KGModule& m, const KGModule& n,
                                   const grp::Subgroup& h) {
  require_compatible(m, n);
  const fpla::PrimeField f(m.p());
  const std::size_t dm = m.dim(), dn = n.dim();
  const auto hom = hom_space(m, n, h);
  Subspace out(m.p(), dm * dn);
  Vector t(dm * dn);
  for (std::size_t i = 0; i < dn && out.dim() < hom.dim(); ++i)
    for (std::size_t j = 0; j < dm && out.dim() < hom.dim(); ++j) {
      std::fill(t.begin(), t.end(), 0);
      add_trace_of_unit(m, n, h, i, j, f, t);
      out.insert(t);
    }
  return out;
}

StableHom stable_hom(const KGModule& m, const KGModule& n) {
  return stable_hom(m, n, grp::Subgroup::whole(m.group()));
}

StableHom stable_hom(const KGModule& m, const KGModule& n, const grp::Subgroup& h) {
  auto hom = hom_space(m, n, h);
  auto phom = projective_trace_subspace(m, n, h);
  fpla::Subquotient q(hom.space, phom);
  return {std::move(hom), std::move(phom), std::move(q)};
}

Vector conj_twist(const KGModule& m, const KGModule& n, ElementId g, const grp::Subgroup& p,
                  const grp::Subgroup& q, const Vector& phi) {
  require_compatible(m, n);
  const auto& grp_ = *m.group();
  for (const auto x : p.elements())
    if (!q.contains(grp_.conjugate(g, x)))
      throw InvalidArgument("conj_twist: gPg⁻¹ is not contained in Q");
  const auto mat = unvectorize(m.p(), n.dim(), m.dim(), phi);
  return vectorize(n.action(grp_.inverse(g)) * mat * m.action(g));
}

Vector relative_trace(const KGModule& m, const KGModule& n, const grp::Subgroup& h,
                      const Vector& phi) {
  require_compatible(m, n);
  const auto& g = *m.group();
  const auto mat = unvectorize(m.p(), n.dim(), m.dim(), phi);
  FpMatrix sum(m.p(), n.dim(), m.dim());
  for (const auto r : grp::left_transversal(m.group(), h).reps)
    sum = sum + n.action(r) * mat * m.action(g.inverse(r));
  return vectorize(sum);
}

Vector HomDiagram::coordinates(fincat::ObjectId p, const Vector& phi) const {
  auto c = stable ? quotients[p].coordinates(phi) : homs[p].space.coordinates(phi);
  if (!c) throw Error("map is not equivariant for the object's subgroup");
  return *c;
}

HomDiagram hom_diagram(const fincat::SubgroupCategory& t, const KGModule& m,
                       const KGModule& n, bool stable) {
  if (t.kind != fincat::IndexKind::transporter)
    throw InvalidArgument("hom diagram is indexed by the transporter category");
  HomDiagram d;
  d.stable = stable;
  d.diagram.index = t.category;
  d.diagram.p = m.p();
  d.diagram.variance = fincat::Variance::contravariant;
  std::vector<std::vector<Vector>> reps;
  for (const auto& p : t.objects) {
    if (stable) {
      auto sh = stable_hom(m, n, p);
      reps.push_back(sh.quotient.representatives());
      d.homs.push_back(std::move(sh.hom));
      d.quotients.push_back(std::move(sh.quotient));
    } else {
      d.homs.push_back(hom_space(m, n, p));
      reps.push_back(d.homs.back().space.basis());
    }
    d.diagram.dims.push_back(reps.back().size());
  }
  const auto& c = *t.category;
  for (fincat::MorphismId f = 0; f < c.morphism_count(); ++f) {
    const auto a = c.src(f), b = c.dst(f);
    std::vector<Vector> columns;
    for (const auto& phi : reps[b])
      columns.push_back(d.coordinates(a, conj_twist(m, n, t.witness[f], t.objects[a],
                                                    t.objects[b], phi)));
    d.diagram.maps.push_back(FpMatrix::from_column_vectors(m.p(), reps[a].size(), columns));
  }
  d.diagram.validate();
  return d;
}

HomLimitReport hom_limit_over_transporter(const grp::GroupPtr& g, const grp::Subgroup& s,
                                          const KGModule& m, const KGModule& n, bool stable) {
  require_compatible(m, n);
  HomLimitReport r;
  const unsigned p = m.p();
  r.claim = grp::p_part(g->order(), p) == s.order() && grp::p_part(s.order(), p) == s.order();
  const auto t = fincat::build_transporter_category(g, s);
  const auto d = hom_diagram(t, m, n, stable);
  const auto lim = fincat::limit_contravariant(d.diagram);
  r.dim_limit = lim.dim();

  const auto whole = grp::Subgroup::whole(g);
  std::vector<Vector> global;
  if (stable) {
    global = stable_hom(m, n, whole).quotient.representatives();
  } else {
    global = hom_space(m, n, whole).space.basis();
  }
  r.dim_global = global.size();

  std::size_t total = 0;
  for (const auto x : d.diagram.dims) total += x;
  Subspace image(p, total);
  r.image_in_limit = true;
  for (const auto& phi : global) {
    Vector x;
    x.reserve(total);
    for (fincat::ObjectId a = 0; a < t.objects.size(); ++a) {
      const auto c = d.coordinates(a, phi);
      x.insert(x.end(), c.begin(), c.end());
    }
    r.image_in_limit = r.image_in_limit && lim.space.contains(x);
    image.insert(x);
  }
  r.comparison_rank = image.dim();
  r.injective = r.comparison_rank == r.dim_global;
  r.surjective = r.image_in_limit && r.comparison_rank == r.dim_limit;
  return r;
}

std::optional<FusionObstruction> fusion_obstruction(const fincat::SubgroupCategory& t,
                                                    const fincat::SubgroupCategory& f,
                                                    const HomDiagram& d) {
  const auto pi = fincat::projection_functor(t, f);
  const auto& c = *t.category;
  for (fincat::MorphismId a = 0; a < c.morphism_count(); ++a)
    for (fincat::MorphismId b = a + 1; b < c.morphism_count(); ++b)
      if (pi.morphism_map[a] == pi.morphism_map[b] && d.diagram.maps[a] != d.diagram.maps[b])
        return FusionObstruction{
            a, b,
            "'" + c.morphism(a).label + "' and '" + c.morphism(b).label +
                "' induce the same fusion map '" +
                f.category->morphism(pi.morphism_map[a]).label +
                "' but act differently on Hom"};
  return std::nullopt;
}

}  // namespace fusionlim::rep
