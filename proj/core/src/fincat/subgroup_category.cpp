#include "fusionlim/fincat/subgroup_category.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "fusionlim/error.hpp"

namespace fusionlim::fincat {

namespace {

using grp::ElementId;

std::vector<std::string> object_labels(const std::vector<grp::Subgroup>& objects) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < objects.size(); ++i)
    labels.push_back("P" + std::to_string(i) + ":" + grp::structure_label(objects[i]));
  return labels;
}

bool conjugates_into(const grp::PermGroup& g, ElementId x, const grp::Subgroup& p,
                     const grp::Subgroup& q) {
  return std::all_of(p.elements().begin(), p.elements().end(),
                     [&](ElementId y) { return q.contains(g.conjugate(x, y)); });
}

std::vector<ElementId> conjugation_table(const grp::PermGroup& g, ElementId x,
                                         const grp::Subgroup& p) {
  std::vector<ElementId> images;
  images.reserve(p.order());
  for (const auto y : p.elements()) images.push_back(g.conjugate(x, y));
  return images;
}

SubgroupCategory skeleton(IndexKind kind, const grp::GroupPtr& g, const grp::Subgroup& s) {
  if (s.parent() != g) throw InvalidArgument("S is not a subgroup of G");
  return {kind, g, s, grp::subgroups_of(s), nullptr, {}, {}};
}

}  // namespace

std::string to_string(IndexKind k) {
  return k == IndexKind::fusion ? "fusion" : "transporter";
}

ObjectId SubgroupCategory::object_of(const grp::Subgroup& p) const {
  const auto it = std::lower_bound(objects.begin(), objects.end(), p);
  if (it == objects.end() || !(*it == p))
    throw InvalidArgument("subgroup is not an object of the category");
  return static_cast<ObjectId>(it - objects.begin());
}

SubgroupCategory build_transporter_category(const grp::GroupPtr& g, const grp::Subgroup& s) {
  auto sc = skeleton(IndexKind::transporter, g, s);
  const auto labels = object_labels(sc.objects);
  const std::size_t n = sc.objects.size();
  std::vector<Morphism> morphisms;
  // id_of[(a, b, x)] for composition lookups.
  std::vector<std::vector<MorphismId>> lookup(n * n, std::vector<MorphismId>(g->order(), kNoMorphism));
  for (ObjectId a = 0; a < n; ++a)
    for (ObjectId b = 0; b < n; ++b)
      for (ElementId x = 0; x < g->order(); ++x) {
        if (!conjugates_into(*g, x, sc.objects[a], sc.objects[b])) continue;
        lookup[a * n + b][x] = static_cast<MorphismId>(morphisms.size());
        morphisms.push_back({a, b, g->element(x).cycle_string() + ":" + labels[a] + "->" + labels[b]});
        sc.witness.push_back(x);
        sc.maps.push_back(conjugation_table(*g, x, sc.objects[a]));
      }
  std::vector<MorphismId> identities;
  for (ObjectId a = 0; a < n; ++a) identities.push_back(lookup[a * n + a][grp::PermGroup::identity()]);
  const auto compose = [&](MorphismId h, MorphismId f) {
    return lookup[morphisms[f].src * n + morphisms[h].dst]
                 [g->multiply(sc.witness[h], sc.witness[f])];
  };
  sc.category = std::make_shared<const FinCat>(
      FinCat::build(labels, morphisms, identities, compose));
  return sc;
}

SubgroupCategory build_fusion_category(const grp::GroupPtr& g, const grp::Subgroup& s) {
  auto sc = skeleton(IndexKind::fusion, g, s);
  const auto labels = object_labels(sc.objects);
  const std::size_t n = sc.objects.size();
  std::vector<Morphism> morphisms;
  std::map<std::tuple<ObjectId, ObjectId, std::vector<ElementId>>, MorphismId> lookup;
  for (ObjectId a = 0; a < n; ++a)
    for (ObjectId b = 0; b < n; ++b)
      for (ElementId x = 0; x < g->order(); ++x) {
        if (!conjugates_into(*g, x, sc.objects[a], sc.objects[b])) continue;
        auto table = conjugation_table(*g, x, sc.objects[a]);
        auto key = std::make_tuple(a, b, table);
        if (lookup.count(key)) continue;
        lookup.emplace(std::move(key), static_cast<MorphismId>(morphisms.size()));
        morphisms.push_back({a, b, "c" + g->element(x).cycle_string() + ":" + labels[a] + "->" + labels[b]});
        sc.witness.push_back(x);
        sc.maps.push_back(std::move(table));
      }
  std::vector<MorphismId> identities;
  for (ObjectId a = 0; a < n; ++a)
    identities.push_back(lookup.at({a, a, sc.objects[a].elements()}));
  const auto compose = [&](MorphismId h, MorphismId f) {
    // (h ∘ f)(y) = h(f(y)); f(y) lies in the middle object.
    const auto& mid = sc.objects[morphisms[h].src];
    std::vector<ElementId> table;
    for (const auto y : sc.maps[f]) table.push_back(sc.maps[h][mid.position(y)]);
    const auto it = lookup.find({morphisms[f].src, morphisms[h].dst, table});
    return it == lookup.end() ? kNoMorphism : it->second;
  };
  sc.category = std::make_shared<const FinCat>(
      FinCat::build(labels, morphisms, identities, compose));
  return sc;
}

SubgroupCategory build_subgroup_category(IndexKind kind, const grp::GroupPtr& g,
                                         const grp::Subgroup& s) {
  return kind == IndexKind::fusion ? build_fusion_category(g, s)
                                   : build_transporter_category(g, s);
}

Functor projection_functor(const SubgroupCategory& t, const SubgroupCategory& f) {
  if (t.kind != IndexKind::transporter || f.kind != IndexKind::fusion)
    throw InvalidArgument("projection needs a transporter and a fusion category");
  if (t.group != f.group || !(t.s == f.s))
    throw InvalidArgument("transporter and fusion categories come from different (G, S)");
  Functor pi{t.category, f.category, {}, {}};
  for (ObjectId a = 0; a < t.objects.size(); ++a) pi.object_map.push_back(a);
  for (MorphismId m = 0; m < t.category->morphism_count(); ++m) {
    const auto a = t.category->src(m), b = t.category->dst(m);
    MorphismId image = kNoMorphism;
    for (const auto c : f.category->hom(a, b))
      if (f.maps[c] == t.maps[m]) image = c;
    if (image == kNoMorphism) throw Error("transporter morphism without a fusion image");
    pi.morphism_map.push_back(image);
  }
  pi.validate();
  if (!pi.is_identity_on_objects() || !pi.is_full())
    throw Error("projection functor is not full and identity on objects");
  return pi;
}

}  // namespace fusionlim::fincat
