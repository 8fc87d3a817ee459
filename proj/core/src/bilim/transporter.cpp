#include "fusionlim/bilim/transporter.hpp"

#include "fusionlim/error.hpp"
#include "fusionlim/rep/hom.hpp"

namespace fusionlim::bilim {

using fpla::FpMatrix;

TransporterConstructionReport check_transporter_construction(const fincat::SubgroupCategory& t,
                                                             const rep::KGModule& m,
                                                             const rep::KGModule& n) {
  if (t.kind != fincat::IndexKind::transporter)
    throw InvalidArgument("transporter construction: index is not a transporter category");
  rep::require_compatible(m, n);
  const auto& g = *t.group;
  const auto& cat = *t.category;
  const auto hd = rep::hom_diagram(t, m, n, false);
  const auto structure = [&](const rep::KGModule& x, fincat::MorphismId f) {
    return x.action(g.inverse(t.witness[f]));
  };

  TransporterConstructionReport r;
  r.morphisms = cat.morphism_count();
  r.structure_maps_linear = r.cocycle = r.inclusions_identity = true;
  r.general_matches = r.simplified_matches = true;
  for (fincat::MorphismId f = 0; f < cat.morphism_count(); ++f) {
    const auto x = t.witness[f];
    const auto& p = t.objects[cat.src(f)];
    const auto q = cat.dst(f);
    const auto dm = structure(m, f);
    const auto dn = structure(n, f);
    for (const auto y : p.generators())
      for (const auto* mod : {&m, &n}) {
        const auto d = mod == &m ? dm : dn;
        if (d * mod->action(g.conjugate(x, y)) != mod->action(y) * d)
          r.structure_maps_linear = false;
      }
    if (x == grp::PermGroup::identity() && !(dm.is_identity() && dn.is_identity()))
      r.inclusions_identity = false;
    for (const auto h : cat.out(q)) {
      const auto hf = cat.compose(h, f);
      if (structure(m, hf) != dm * structure(m, h) || structure(n, hf) != dn * structure(n, h))
        r.cocycle = false;
    }

    // d'_g ∘ φ ∘ d_g⁻¹ on a basis of Hom_{kQ}(M, N), in Hom_{kP} coordinates.
    const auto dm_inv = m.action(x);
    std::vector<fpla::Vector> general, restricted;
    for (const auto& phi : hd.homs[q].basis()) {
      general.push_back(hd.coordinates(cat.src(f), rep::vectorize(dn * phi * dm_inv)));
      if (x == grp::PermGroup::identity())
        restricted.push_back(hd.coordinates(cat.src(f), rep::vectorize(phi)));
    }
    const auto rows = hd.diagram.dims[cat.src(f)];
    if (FpMatrix::from_column_vectors(m.p(), rows, general) != hd.diagram.maps[f])
      r.general_matches = false;
    if (x == grp::PermGroup::identity() &&
        FpMatrix::from_column_vectors(m.p(), rows, restricted) != hd.diagram.maps[f])
      r.simplified_matches = false;
  }
  return r;
}

}  // namespace fusionlim::bilim
