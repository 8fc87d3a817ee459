#include "fusionlim/bilim/bilimit.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <tuple>

#include "fusionlim/error.hpp"

namespace fusionlim::bilim {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::size_t max_isos(const FinCat& c) {
  std::size_t best = 0;
  for (ObjectId x = 0; x < c.object_count(); ++x)
    for (ObjectId y = 0; y < c.object_count(); ++y) {
      std::size_t k = 0;
      for (const auto m : c.hom(x, y))
        if (c.inverse(m)) ++k;
      best = std::max(best, k);
    }
  return best;
}

struct ObjectConstraints {
  /// Non-identity 2-cells and composable pairs, keyed by the largest 1-cell id involved.
  std::vector<std::vector<TwoCellId>> two_cells;
  std::vector<std::vector<std::pair<MorphismId, MorphismId>>> cocycles;
};

ObjectConstraints constraints_of(const CatValued2Functor& d) {
  const auto& c = d.index->one_cells();
  ObjectConstraints k;
  k.two_cells.resize(c.morphism_count());
  k.cocycles.resize(c.morphism_count());
  for (TwoCellId a = 0; a < d.index->two_cell_count(); ++a) {
    const auto& cell = d.index->two_cell(a);
    if (cell.src != cell.dst) k.two_cells[std::max(cell.src, cell.dst)].push_back(a);
  }
  for (MorphismId f = 0; f < c.morphism_count(); ++f)
    for (const auto g : c.out(c.dst(f)))
      k.cocycles[std::max({f, g, c.compose(g, f)})].emplace_back(f, g);
  return k;
}

bool two_cell_holds(const CatValued2Functor& d, const BilimObject& o, TwoCellId a) {
  const auto& cell = d.index->two_cell(a);
  const auto& c = d.index->one_cells();
  const auto& target = *d.values[c.dst(cell.src)];
  const auto component = d.on_two_cells[a].components[o.d_obj[c.src(cell.src)]];
  return target.compose(o.d_cell[cell.dst], component) == o.d_cell[cell.src];
}

bool cocycle_holds(const CatValued2Functor& d, const BilimObject& o, MorphismId f, MorphismId g) {
  const auto& c = d.index->one_cells();
  const auto& target = *d.values[c.dst(g)];
  return o.d_cell[c.compose(g, f)] ==
         target.compose(o.d_cell[g], d.on_one_cells[g].morphism_map[o.d_cell[f]]);
}

bool square_holds(const CatValued2Functor& d, const BilimObject& a, const BilimObject& b,
                  const std::vector<MorphismId>& delta, MorphismId f) {
  const auto& c = d.index->one_cells();
  const auto i = c.src(f), j = c.dst(f);
  const auto& target = *d.values[j];
  return target.compose(b.d_cell[f], d.on_one_cells[f].morphism_map[delta[i]]) ==
         target.compose(delta[j], a.d_cell[f]);
}

bool is_bilim_object(const CatValued2Functor& d, const BilimObject& o) {
  const auto& c = d.index->one_cells();
  if (o.d_obj.size() != c.object_count() || o.d_cell.size() != c.morphism_count()) return false;
  for (ObjectId i = 0; i < c.object_count(); ++i)
    if (o.d_obj[i] >= d.values[i]->object_count()) return false;
  for (MorphismId f = 0; f < c.morphism_count(); ++f) {
    const auto& target = *d.values[c.dst(f)];
    const auto m = o.d_cell[f];
    if (m >= target.morphism_count() ||
        target.src(m) != d.on_one_cells[f].object_map[o.d_obj[c.src(f)]] ||
        target.dst(m) != o.d_obj[c.dst(f)] || !target.inverse(m))
      return false;
  }
  const auto k = constraints_of(d);
  for (MorphismId f = 0; f < c.morphism_count(); ++f) {
    for (const auto a : k.two_cells[f])
      if (!two_cell_holds(d, o, a)) return false;
    for (const auto& [x, y] : k.cocycles[f])
      if (!cocycle_holds(d, o, x, y)) return false;
  }
  return true;
}

std::string join_labels(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

}  // namespace

bool BilimCategory::identities_forced(const CatValued2Functor& d) const {
  const auto& c = d.index->one_cells();
  for (const auto& o : objects)
    for (ObjectId a = 0; a < c.object_count(); ++a)
      if (o.d_cell[c.identity(a)] != d.values[a]->identity(o.d_obj[a])) return false;
  return true;
}

std::size_t BilimCategory::skeleton_size() const {
  std::vector<std::size_t> parent(objects.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (MorphismId m = 0; m < category->morphism_count(); ++m)
    if (category->inverse(m)) parent[find(category->src(m))] = find(category->dst(m));
  std::size_t roots = 0;
  for (std::size_t x = 0; x < objects.size(); ++x)
    if (find(x) == x) ++roots;
  return roots;
}

std::uint64_t bilimit_search_bound(const CatValued2Functor& d) {
  const auto& c = d.index->one_cells();
  std::uint64_t bound = 1;
  for (ObjectId i = 0; i < c.object_count(); ++i)
    bound = saturating_mul(bound, d.values[i]->object_count());
  std::vector<std::size_t> isos;
  for (const auto& v : d.values) isos.push_back(max_isos(*v));
  for (MorphismId f = 0; f < c.morphism_count(); ++f)
    bound = saturating_mul(bound, isos[c.dst(f)]);
  return bound;
}

BilimCategory enumerate_bilimit(const CatValued2Functor& d, std::uint64_t budget) {
  d.validate();
  BilimCategory l;
  l.search_bound = bilimit_search_bound(d);
  if (l.search_bound > budget)
    throw BudgetExceeded("bilimit search bound " + std::to_string(l.search_bound) +
                         " exceeds the budget of " + std::to_string(budget));
  const auto& c = d.index->one_cells();
  const std::size_t n = c.object_count();
  const std::size_t m = c.morphism_count();
  const auto k = constraints_of(d);

  BilimObject cur{std::vector<ObjectId>(n, 0), std::vector<MorphismId>(m, fincat::kNoMorphism)};
  std::function<void(MorphismId)> assign_cell = [&](MorphismId f) {
    if (f == m) {
      l.objects.push_back(cur);
      return;
    }
    const auto& target = *d.values[c.dst(f)];
    const auto from = d.on_one_cells[f].object_map[cur.d_obj[c.src(f)]];
    for (const auto cand : target.hom(from, cur.d_obj[c.dst(f)])) {
      ++l.candidates;
      if (!target.inverse(cand)) continue;
      cur.d_cell[f] = cand;
      bool ok = true;
      for (const auto a : k.two_cells[f]) ok = ok && two_cell_holds(d, cur, a);
      for (const auto& [x, y] : k.cocycles[f]) ok = ok && cocycle_holds(d, cur, x, y);
      if (ok) assign_cell(f + 1);
    }
  };
  std::function<void(ObjectId)> assign_obj = [&](ObjectId i) {
    if (i == n) {
      assign_cell(0);
      return;
    }
    for (ObjectId x = 0; x < d.values[i]->object_count(); ++x) {
      cur.d_obj[i] = x;
      assign_obj(i + 1);
    }
  };
  assign_obj(0);

  // Square checks for f are run once both endpoints of f are assigned.
  std::vector<std::vector<MorphismId>> squares(n);
  for (MorphismId f = 0; f < m; ++f) squares[std::max(c.src(f), c.dst(f))].push_back(f);
  std::map<std::tuple<std::size_t, std::size_t, std::vector<MorphismId>>, MorphismId> lookup;
  std::vector<fincat::Morphism> cells;
  for (std::size_t a = 0; a < l.objects.size(); ++a)
    for (std::size_t b = 0; b < l.objects.size(); ++b) {
      const auto& oa = l.objects[a];
      const auto& ob = l.objects[b];
      std::vector<MorphismId> delta(n, fincat::kNoMorphism);
      std::function<void(ObjectId)> assign = [&](ObjectId i) {
        if (i == n) {
          std::vector<std::string> parts;
          for (ObjectId j = 0; j < n; ++j) parts.push_back(d.values[j]->morphism(delta[j]).label);
          lookup.emplace(std::tuple{a, b, delta}, static_cast<MorphismId>(l.morphisms.size()));
          cells.push_back({static_cast<ObjectId>(a), static_cast<ObjectId>(b),
                           "(" + join_labels(parts, ", ") + ")"});
          l.morphisms.push_back({a, b, delta});
          return;
        }
        for (const auto cand : d.values[i]->hom(oa.d_obj[i], ob.d_obj[i])) {
          delta[i] = cand;
          bool ok = true;
          for (const auto f : squares[i]) ok = ok && square_holds(d, oa, ob, delta, f);
          if (ok) assign(i + 1);
        }
      };
      assign(0);
    }

  std::vector<std::string> labels;
  std::vector<MorphismId> identities;
  for (std::size_t a = 0; a < l.objects.size(); ++a) {
    const auto& o = l.objects[a];
    std::vector<std::string> objs, structure;
    std::vector<MorphismId> ids;
    for (ObjectId i = 0; i < n; ++i) {
      objs.push_back(d.values[i]->object_label(o.d_obj[i]));
      ids.push_back(d.values[i]->identity(o.d_obj[i]));
    }
    for (MorphismId f = 0; f < m; ++f)
      structure.push_back(d.values[c.dst(f)]->morphism(o.d_cell[f]).label);
    labels.push_back("(" + join_labels(objs, ", ") + " | " + join_labels(structure, ", ") + ")");
    identities.push_back(lookup.at({a, a, ids}));
  }
  const auto& morphs = l.morphisms;
  l.category = std::make_shared<const FinCat>(FinCat::build(
      std::move(labels), std::move(cells), std::move(identities),
      [&](MorphismId g, MorphismId f) {
        std::vector<MorphismId> delta(n);
        for (ObjectId i = 0; i < n; ++i)
          delta[i] = d.values[i]->compose(morphs[g].delta[i], morphs[f].delta[i]);
        const auto it = lookup.find({morphs[f].src, morphs[g].dst, delta});
        if (it == lookup.end())
          throw InvalidArgument("bilimit: componentwise composite is not enumerated");
        return it->second;
      }));
  return l;
}

HomSetDiagram hom_set_diagram(const CatValued2Functor& d, const BilimObject& a,
                              const BilimObject& b) {
  if (!is_bilim_object(d, a) || !is_bilim_object(d, b))
    throw InvalidArgument("hom diagram: argument is not an object of the bilimit");
  const auto& c = d.index->one_cells();
  HomSetDiagram h;
  h.diagram.index = d.index->one_cells_ptr();
  for (ObjectId i = 0; i < c.object_count(); ++i) {
    h.elements.push_back(d.values[i]->hom(a.d_obj[i], b.d_obj[i]));
    h.diagram.sizes.push_back(h.elements.back().size());
  }
  for (MorphismId f = 0; f < c.morphism_count(); ++f) {
    const auto i = c.src(f), j = c.dst(f);
    const auto& target = *d.values[j];
    const auto inv = *target.inverse(a.d_cell[f]);
    std::vector<std::size_t> map;
    for (const auto phi : h.elements[i]) {
      const auto psi =
          target.compose(b.d_cell[f], target.compose(d.on_one_cells[f].morphism_map[phi], inv));
      const auto& row = h.elements[j];
      map.push_back(static_cast<std::size_t>(std::find(row.begin(), row.end(), psi) - row.begin()));
    }
    h.diagram.maps.push_back(std::move(map));
  }
  h.diagram.validate();
  return h;
}

SimplifiedHomDiagram simplified_hom_diagram(const CatValued2Functor& d, const BilimObject& a,
                                            const BilimObject& b) {
  if (!is_bilim_object(d, a) || !is_bilim_object(d, b))
    throw InvalidArgument("simplified hom diagram: argument is not an object of the bilimit");
  const auto& c = d.index->one_cells();
  for (MorphismId f = 0; f < c.morphism_count(); ++f) {
    const auto& target = *d.values[c.dst(f)];
    if (!target.is_identity(a.d_cell[f]) || !target.is_identity(b.d_cell[f]))
      throw InvalidArgument("simplified hom diagram: structure map at '" + c.morphism(f).label +
                            "' is not an identity");
  }
  SimplifiedHomDiagram s;
  s.diagram.diagram.index = d.index->one_cells_ptr();
  for (ObjectId i = 0; i < c.object_count(); ++i) {
    s.diagram.elements.push_back(d.values[i]->hom(a.d_obj[i], b.d_obj[i]));
    s.diagram.diagram.sizes.push_back(s.diagram.elements.back().size());
  }
  for (MorphismId f = 0; f < c.morphism_count(); ++f) {
    const auto& row = s.diagram.elements[c.dst(f)];
    std::vector<std::size_t> map;
    for (const auto phi : s.diagram.elements[c.src(f)]) {
      const auto psi = d.on_one_cells[f].morphism_map[phi];
      map.push_back(static_cast<std::size_t>(std::find(row.begin(), row.end(), psi) - row.begin()));
    }
    s.diagram.diagram.maps.push_back(std::move(map));
  }
  s.diagram.diagram.validate();
  s.matches_general = hom_set_diagram(d, a, b).diagram.maps == s.diagram.diagram.maps;
  return s;
}

HomFormulaCheck hom_via_limit(const CatValued2Functor& d, const BilimCategory& l, std::size_t a,
                              std::size_t b) {
  if (a >= l.objects.size() || b >= l.objects.size())
    throw InvalidArgument("hom formula: object index out of range");
  const auto h = hom_set_diagram(d, l.objects[a], l.objects[b]);
  std::vector<std::vector<MorphismId>> from_limit;
  for (const auto& family : set_limit(h.diagram)) {
    std::vector<MorphismId> delta;
    for (std::size_t i = 0; i < family.size(); ++i) delta.push_back(h.elements[i][family[i]]);
    from_limit.push_back(std::move(delta));
  }
  std::vector<std::vector<MorphismId>> enumerated;
  for (const auto m : l.category->hom(static_cast<ObjectId>(a), static_cast<ObjectId>(b)))
    enumerated.push_back(l.morphisms[m].delta);
  std::sort(from_limit.begin(), from_limit.end());
  std::sort(enumerated.begin(), enumerated.end());
  return {a, b, enumerated.size(), from_limit.size(), from_limit == enumerated};
}

ConeReport verify_canonical_cone(const CatValued2Functor& d, const BilimCategory& l) {
  const auto& c = d.index->one_cells();
  ConeReport r;
  r.projections_functorial = true;
  for (ObjectId i = 0; i < c.object_count(); ++i) {
    Functor pr{l.category, d.values[i], {}, {}};
    for (const auto& o : l.objects) pr.object_map.push_back(o.d_obj[i]);
    for (const auto& m : l.morphisms) pr.morphism_map.push_back(m.delta[i]);
    try {
      pr.validate();
    } catch (const FunctorialityError&) {
      r.projections_functorial = false;
    }
  }
  r.pseudonatural = true;
  for (const auto& m : l.morphisms)
    for (MorphismId f = 0; f < c.morphism_count(); ++f) {
      ++r.squares_checked;
      r.pseudonatural =
          r.pseudonatural && square_holds(d, l.objects[m.src], l.objects[m.dst], m.delta, f);
    }
  return r;
}

bool BilimSummary::pass() const {
  return identities_forced && cone.pass() &&
         std::all_of(homs.begin(), homs.end(), [](const HomFormulaCheck& h) { return h.bijection; });
}

BilimSummary summarize_bilimit(const CatValued2Functor& d, std::uint64_t budget) {
  const auto l = enumerate_bilimit(d, budget);
  BilimSummary s;
  s.name = d.name;
  s.search_bound = l.search_bound;
  s.objects = l.objects.size();
  s.morphisms = l.morphisms.size();
  s.skeleton = l.skeleton_size();
  s.identities_forced = l.identities_forced(d);
  s.cone = verify_canonical_cone(d, l);
  for (std::size_t a = 0; a < l.objects.size(); ++a)
    for (std::size_t b = 0; b < l.objects.size(); ++b) s.homs.push_back(hom_via_limit(d, l, a, b));
  return s;
}

}  // namespace fusionlim::bilim
