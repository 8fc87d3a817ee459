#include "fusionlim/bilim/generate.hpp"

#include <algorithm>
#include <set>

#include "fusionlim/error.hpp"

namespace fusionlim::bilim {

namespace {

FinCatPtr make(FinCat c) { return std::make_shared<const FinCat>(std::move(c)); }

bool bijective(const Functor& f) {
  std::set<ObjectId> objs(f.object_map.begin(), f.object_map.end());
  std::set<MorphismId> morphs(f.morphism_map.begin(), f.morphism_map.end());
  return objs.size() == f.target->object_count() && morphs.size() == f.target->morphism_count();
}

bool same_functor(const Functor& a, const Functor& b) {
  return a.object_map == b.object_map && a.morphism_map == b.morphism_map;
}

Functor power(const Functor& f, std::size_t k) {
  auto out = fincat::identity_functor(f.source);
  for (std::size_t i = 0; i < k; ++i) out = fincat::compose(f, out);
  return out;
}

/// Components x ↦ η_x ∈ Hom(F x, G x), every choice, in lexicographic order.
std::vector<std::vector<MorphismId>> component_choices(const FinCat& target, const Functor& f,
                                                       const Functor& g, std::size_t limit) {
  std::vector<std::vector<MorphismId>> out;
  const std::size_t n = f.object_map.size();
  std::vector<MorphismId> cur(n);
  std::function<void(std::size_t)> go = [&](std::size_t x) {
    if (out.size() >= limit) return;
    if (x == n) {
      out.push_back(cur);
      return;
    }
    for (const auto m : target.hom(f.object_map[x], g.object_map[x])) {
      if (!target.inverse(m)) continue;
      cur[x] = m;
      go(x + 1);
    }
  };
  go(0);
  return out;
}

std::vector<MorphismId> inverse_components(const FinCat& c, const std::vector<MorphismId>& eta) {
  std::vector<MorphismId> out;
  for (const auto m : eta) out.push_back(*c.inverse(m));
  return out;
}

bool try_add(std::vector<CatValued2Functor>& out, CatValued2Functor d) {
  try {
    d.validate();
  } catch (const FunctorialityError&) {
    return false;
  }
  out.push_back(std::move(d));
  return true;
}

std::size_t cyclic_mul(std::size_t n, std::size_t a, std::size_t b) { return (a + b) % n; }

}  // namespace

FinCatPtr discrete_category(std::size_t n, const std::string& prefix) {
  std::vector<std::string> objects;
  std::vector<fincat::Morphism> morphisms;
  std::vector<MorphismId> ids;
  for (std::size_t i = 0; i < n; ++i) {
    objects.push_back(prefix + std::to_string(i));
    morphisms.push_back({static_cast<ObjectId>(i), static_cast<ObjectId>(i), "1_" + objects.back()});
    ids.push_back(static_cast<MorphismId>(i));
  }
  return make(FinCat::build(objects, morphisms, ids, [](MorphismId g, MorphismId) { return g; }));
}

FinCatPtr chaotic_category(std::size_t n, const std::string& prefix) {
  std::vector<std::string> objects;
  for (std::size_t i = 0; i < n; ++i) objects.push_back(prefix + std::to_string(i));
  std::vector<fincat::Morphism> morphisms;
  std::vector<MorphismId> ids;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) ids.push_back(static_cast<MorphismId>(morphisms.size()));
      morphisms.push_back({static_cast<ObjectId>(i), static_cast<ObjectId>(j),
                           i == j ? "1_" + objects[i] : objects[i] + ">" + objects[j]});
    }
  return make(FinCat::build(objects, morphisms, ids, [n](MorphismId g, MorphismId f) {
    return static_cast<MorphismId>((f / n) * n + g % n);
  }));
}

FinCatPtr chain_category(std::size_t n) {
  std::vector<std::string> objects;
  for (std::size_t i = 0; i < n; ++i) objects.push_back(std::to_string(i));
  std::vector<fincat::Morphism> morphisms;
  std::vector<MorphismId> ids(n);
  std::vector<std::vector<MorphismId>> arrow(n, std::vector<MorphismId>(n, fincat::kNoMorphism));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      arrow[i][j] = static_cast<MorphismId>(morphisms.size());
      if (i == j) ids[i] = arrow[i][j];
      morphisms.push_back({static_cast<ObjectId>(i), static_cast<ObjectId>(j),
                           i == j ? "1_" + objects[i] : objects[i] + "<" + objects[j]});
    }
  const auto ms = morphisms;
  return make(FinCat::build(objects, morphisms, ids, [arrow, ms](MorphismId g, MorphismId f) {
    return arrow[ms[f].src][ms[g].dst];
  }));
}

FinCatPtr one_object_category(std::size_t order,
                              const std::function<std::size_t(std::size_t, std::size_t)>& multiply,
                              const std::string& name) {
  std::vector<fincat::Morphism> morphisms;
  for (std::size_t x = 0; x < order; ++x) morphisms.push_back({0, 0, name + "." + std::to_string(x)});
  return make(FinCat::build({name}, morphisms, {0}, [&](MorphismId g, MorphismId f) {
    return static_cast<MorphismId>(multiply(g, f));
  }));
}

FinCatPtr cyclic_group_category(std::size_t n) {
  return one_object_category(n, [n](std::size_t a, std::size_t b) { return cyclic_mul(n, a, b); },
                             "BC" + std::to_string(n));
}

FinCatPtr klein_group_category() {
  return one_object_category(4, [](std::size_t a, std::size_t b) { return a ^ b; }, "BV4");
}

FinCatPtr coproduct(const FinCatPtr& a, const FinCatPtr& b) {
  std::vector<std::string> objects;
  std::vector<fincat::Morphism> morphisms;
  std::vector<MorphismId> ids;
  const auto na = static_cast<ObjectId>(a->object_count());
  const auto ma = static_cast<MorphismId>(a->morphism_count());
  for (ObjectId x = 0; x < a->object_count(); ++x) objects.push_back("L" + a->object_label(x));
  for (ObjectId x = 0; x < b->object_count(); ++x) objects.push_back("R" + b->object_label(x));
  for (MorphismId f = 0; f < ma; ++f)
    morphisms.push_back({a->src(f), a->dst(f), "L" + a->morphism(f).label});
  for (MorphismId f = 0; f < b->morphism_count(); ++f)
    morphisms.push_back({static_cast<ObjectId>(na + b->src(f)),
                         static_cast<ObjectId>(na + b->dst(f)), "R" + b->morphism(f).label});
  for (ObjectId x = 0; x < a->object_count(); ++x) ids.push_back(a->identity(x));
  for (ObjectId x = 0; x < b->object_count(); ++x) ids.push_back(ma + b->identity(x));
  return make(FinCat::build(objects, morphisms, ids, [&](MorphismId g, MorphismId f) {
    if (f < ma) return a->compose(g, f);
    return static_cast<MorphismId>(ma + b->compose(g - ma, f - ma));
  }));
}

std::vector<Functor> all_functors(const FinCatPtr& c, const FinCatPtr& d, std::size_t limit) {
  std::vector<Functor> out;
  const std::size_t n = c->object_count();
  const std::size_t m = c->morphism_count();
  if (n > 0 && d->object_count() == 0) return out;
  std::vector<std::vector<std::tuple<MorphismId, MorphismId, MorphismId>>> checks(m);
  for (MorphismId f = 0; f < m; ++f)
    for (const auto g : c->out(c->dst(f))) {
      const auto h = c->compose(g, f);
      checks[std::max({f, g, h})].emplace_back(f, g, h);
    }
  Functor cur{c, d, std::vector<ObjectId>(n, 0), std::vector<MorphismId>(m, 0)};
  std::function<void(MorphismId)> assign = [&](MorphismId f) {
    if (out.size() >= limit) return;
    if (f == m) {
      out.push_back(cur);
      return;
    }
    const auto x = cur.object_map[c->src(f)], y = cur.object_map[c->dst(f)];
    for (const auto cand : d->hom(x, y)) {
      if (c->is_identity(f) && cand != d->identity(x)) continue;
      cur.morphism_map[f] = cand;
      bool ok = true;
      for (const auto& [a, b, h] : checks[f])
        ok = ok && cur.morphism_map[h] == d->compose(cur.morphism_map[b], cur.morphism_map[a]);
      if (ok) assign(f + 1);
    }
  };
  while (true) {
    assign(0);
    std::size_t i = 0;
    while (i < n && ++cur.object_map[i] == d->object_count()) cur.object_map[i++] = 0;
    if (i == n || out.size() >= limit) break;
  }
  return out;
}

std::vector<Functor> automorphisms(const FinCatPtr& c) {
  std::vector<Functor> out;
  for (auto& f : all_functors(c, c))
    if (bijective(f)) out.push_back(std::move(f));
  return out;
}

TwoCat group_2category(std::size_t order,
                       const std::function<std::size_t(std::size_t, std::size_t)>& multiply,
                       const std::function<bool(std::size_t, std::size_t)>& same_class,
                       const std::string& name) {
  auto one = one_object_category(order, multiply, name);
  std::vector<TwoCell> cells;
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y)
      if (x != y && same_class(x, y))
        cells.push_back({static_cast<MorphismId>(x), static_cast<MorphismId>(y),
                         std::to_string(x) + "=>" + std::to_string(y)});
  return TwoCat::build(*one, std::move(cells));
}

TwoCat terminal_2category() { return TwoCat::build(*discrete_category(1, "*"), {}); }

TwoCat walking_arrow_2category() {
  return TwoCat::build(*chain_category(2), {});
}

TwoCat span_2category() {
  std::vector<fincat::Morphism> ms{{0, 0, "1_0"}, {1, 1, "1_1"}, {2, 2, "1_2"}, {0, 1, "u"},
                                   {0, 2, "v"}};
  auto c = FinCat::build({"0", "1", "2"}, ms, {0, 1, 2}, [](MorphismId g, MorphismId f) {
    return g < 3 ? f : g;
  });
  return TwoCat::build(std::move(c), {});
}

TwoCat parallel_iso_2category() {
  std::vector<fincat::Morphism> ms{{0, 0, "1_0"}, {1, 1, "1_1"}, {0, 1, "u"}, {0, 1, "v"}};
  auto c = FinCat::build({"0", "1"}, ms, {0, 1},
                         [](MorphismId g, MorphismId f) { return g < 2 ? f : g; });
  return TwoCat::build(std::move(c), {{2, 3, "alpha"}, {3, 2, "alpha^-1"}});
}

CatValued2Functor group_action_diagram(
    const TwoCatPtr& index, const FinCatPtr& value, std::vector<Functor> act,
    const std::function<MorphismId(TwoCellId, ObjectId)>& component, std::string name) {
  CatValued2Functor d;
  d.index = index;
  d.values = {value};
  d.on_one_cells = std::move(act);
  d.name = std::move(name);
  for (TwoCellId a = 0; a < index->two_cell_count(); ++a) {
    NatTrans t;
    const auto& F = d.on_one_cells[index->two_cell(a).src];
    for (ObjectId x = 0; x < value->object_count(); ++x)
      t.components.push_back(index->is_identity2(a) ? value->identity(F.object_map[x])
                                                    : component(a, x));
    d.on_two_cells.push_back(std::move(t));
  }
  return d;
}

CatValued2Functor terminal_diagram(const FinCatPtr& c) {
  auto index = std::make_shared<const TwoCat>(terminal_2category());
  return group_action_diagram(index, c, {fincat::identity_functor(c)},
                              [](TwoCellId, ObjectId) { return fincat::kNoMorphism; },
                              "terminal");
}

CatValued2Functor swap_walking_iso() {
  std::vector<fincat::Morphism> ms{{0, 0, "1a"}, {1, 1, "1b"}, {0, 1, "u"}, {1, 0, "u^-1"}};
  // Morphism ids: 0 = 1a, 1 = 1b, 2 = u, 3 = u⁻¹.
  const std::vector<std::vector<MorphismId>> table{
      {0, fincat::kNoMorphism, fincat::kNoMorphism, 3},
      {fincat::kNoMorphism, 1, 2, fincat::kNoMorphism},
      {2, fincat::kNoMorphism, fincat::kNoMorphism, 1},
      {fincat::kNoMorphism, 3, 0, fincat::kNoMorphism}};
  auto iso = make(FinCat::build({"a", "b"}, ms, {0, 1},
                                [table](MorphismId g, MorphismId f) { return table[g][f]; }));
  auto index = std::make_shared<const TwoCat>(
      group_2category(2, [](std::size_t a, std::size_t b) { return a ^ b; },
                      [](std::size_t, std::size_t) { return false; }, "C2"));
  Functor swap{iso, iso, {1, 0}, {1, 0, 3, 2}};
  return group_action_diagram(index, iso, {fincat::identity_functor(iso), swap},
                              [](TwoCellId, ObjectId) { return fincat::kNoMorphism; },
                              "swap_walking_iso");
}

CatValued2Functor rotation_discrete3() {
  auto c = discrete_category(3);
  auto index = std::make_shared<const TwoCat>(
      group_2category(3, [](std::size_t a, std::size_t b) { return cyclic_mul(3, a, b); },
                      [](std::size_t, std::size_t) { return false; }, "C3"));
  Functor r{c, c, {1, 2, 0}, {1, 2, 0}};
  return group_action_diagram(index, c, {fincat::identity_functor(c), r, power(r, 2)},
                              [](TwoCellId, ObjectId) { return fincat::kNoMorphism; },
                              "rotation_discrete3");
}

CatValued2Functor swap_discrete2() {
  auto c = discrete_category(2);
  auto index = std::make_shared<const TwoCat>(
      group_2category(2, [](std::size_t a, std::size_t b) { return a ^ b; },
                      [](std::size_t, std::size_t) { return false; }, "C2"));
  Functor s{c, c, {1, 0}, {1, 0}};
  return group_action_diagram(index, c, {fincat::identity_functor(c), s},
                              [](TwoCellId, ObjectId) { return fincat::kNoMorphism; },
                              "swap_discrete2");
}

std::vector<CatValued2Functor> generated_family() {
  const std::vector<std::pair<std::string, FinCatPtr>> pool{
      {"disc1", discrete_category(1)},
      {"disc2", discrete_category(2)},
      {"disc3", discrete_category(3)},
      {"iso2", chaotic_category(2)},
      {"chaotic3", chaotic_category(3)},
      {"chain2", chain_category(2)},
      {"chain3", chain_category(3)},
      {"BC2", cyclic_group_category(2)},
      {"BC3", cyclic_group_category(3)},
      {"BV4", klein_group_category()},
      {"iso2+pt", coproduct(chaotic_category(2), discrete_category(1))},
      {"BC2+BC2", coproduct(cyclic_group_category(2), cyclic_group_category(2))},
      {"chaotic5", chaotic_category(5)},
  };
  const auto none = [](TwoCellId, ObjectId) { return fincat::kNoMorphism; };
  const auto never = [](std::size_t, std::size_t) { return false; };
  const auto xor_mul = [](std::size_t a, std::size_t b) { return a ^ b; };
  auto terminal = std::make_shared<const TwoCat>(terminal_2category());
  auto c2 = std::make_shared<const TwoCat>(group_2category(2, xor_mul, never, "C2"));
  auto c3 = std::make_shared<const TwoCat>(group_2category(
      3, [](std::size_t a, std::size_t b) { return cyclic_mul(3, a, b); }, never, "C3"));
  auto v4 = std::make_shared<const TwoCat>(group_2category(4, xor_mul, never, "V4"));
  auto c2_thick = std::make_shared<const TwoCat>(
      group_2category(2, xor_mul, [](std::size_t, std::size_t) { return true; }, "C2/C2"));
  auto c4_mod2 = std::make_shared<const TwoCat>(group_2category(
      4, [](std::size_t a, std::size_t b) { return cyclic_mul(4, a, b); },
      [](std::size_t a, std::size_t b) { return (a + 4 - b) % 2 == 0; }, "C4/C2"));
  auto arrow = std::make_shared<const TwoCat>(walking_arrow_2category());
  auto span = std::make_shared<const TwoCat>(span_2category());
  auto parallel = std::make_shared<const TwoCat>(parallel_iso_2category());

  std::vector<CatValued2Functor> out;
  out.push_back(swap_walking_iso());
  out.push_back(rotation_discrete3());
  out.push_back(swap_discrete2());

  for (const auto& [name, c] : pool) {
    try_add(out, group_action_diagram(terminal, c, {fincat::identity_functor(c)}, none,
                                      "terminal/" + name));
    if (c->morphism_count() > 9) continue;
    const auto autos = automorphisms(c);
    std::size_t added = 0;
    for (const auto& theta : autos) {
      if (added >= 3) break;
      if (!same_functor(power(theta, 2), fincat::identity_functor(c))) continue;
      if (try_add(out, group_action_diagram(c2, c, {fincat::identity_functor(c), theta}, none,
                                            "C2/" + name + "/" + std::to_string(added))))
        ++added;
    }
    added = 0;
    for (const auto& theta : autos) {
      if (added >= 2) break;
      if (!same_functor(power(theta, 3), fincat::identity_functor(c))) continue;
      if (try_add(out, group_action_diagram(
                           c3, c, {fincat::identity_functor(c), theta, power(theta, 2)}, none,
                           "C3/" + name + "/" + std::to_string(added))))
        ++added;
    }
    added = 0;
    for (std::size_t i = 0; i < autos.size() && added < 2; ++i)
      for (std::size_t j = i; j < autos.size() && added < 2; ++j) {
        const auto& a = autos[i];
        const auto& b = autos[j];
        const auto ab = fincat::compose(a, b);
        if (!same_functor(ab, fincat::compose(b, a)) ||
            !same_functor(power(a, 2), fincat::identity_functor(c)) ||
            !same_functor(power(b, 2), fincat::identity_functor(c)))
          continue;
        if (try_add(out, group_action_diagram(v4, c, {fincat::identity_functor(c), a, b, ab},
                                              none, "V4/" + name + "/" + std::to_string(added))))
          ++added;
      }
    added = 0;
    for (const auto& theta : autos) {
      if (added >= 2) break;
      if (!same_functor(power(theta, 2), fincat::identity_functor(c))) continue;
      const auto id = fincat::identity_functor(c);
      for (const auto& eta : component_choices(*c, id, theta, 16)) {
        const auto inv = inverse_components(*c, eta);
        auto d = group_action_diagram(
            c2_thick, c, {id, theta},
            [&](TwoCellId a, ObjectId x) { return c2_thick->two_cell(a).src == 0 ? eta[x] : inv[x]; },
            "C2/C2/" + name + "/" + std::to_string(added));
        if (try_add(out, std::move(d))) {
          ++added;
          break;
        }
      }
    }
    added = 0;
    for (const auto& theta : autos) {
      if (added >= 1) break;
      if (!same_functor(power(theta, 2), fincat::identity_functor(c))) continue;
      const auto id = fincat::identity_functor(c);
      std::vector<Functor> act{id, theta, id, theta};
      for (const auto& eta : component_choices(*c, id, id, 16)) {
        if (std::all_of(eta.begin(), eta.end(), [&](MorphismId m) { return c->is_identity(m); }) &&
            c->morphism_count() > c->object_count())
          continue;
        const auto inv = inverse_components(*c, eta);
        auto d = group_action_diagram(
            c4_mod2, c, act,
            [&](TwoCellId a, ObjectId x) {
              return c4_mod2->two_cell(a).src < 2 ? eta[x] : inv[x];
            },
            "C4/C2/" + name + "/" + std::to_string(added));
        if (try_add(out, std::move(d))) {
          ++added;
          break;
        }
      }
    }
  }

  const std::vector<std::size_t> small{0, 1, 3, 5, 7, 8, 10};
  for (const auto i : small)
    for (const auto j : small) {
      const auto& [ni, ci] = pool[i];
      const auto& [nj, cj] = pool[j];
      std::size_t k = 0;
      for (auto& f : all_functors(ci, cj, 2)) {
        CatValued2Functor d;
        d.index = arrow;
        d.values = {ci, cj};
        d.on_one_cells = {fincat::identity_functor(ci), fincat::identity_functor(cj), f};
        d.on_two_cells = {{std::vector<MorphismId>(ci->object_count())},
                          {std::vector<MorphismId>(cj->object_count())},
                          {std::vector<MorphismId>(ci->object_count())}};
        for (ObjectId x = 0; x < ci->object_count(); ++x) {
          d.on_two_cells[0].components[x] = ci->identity(x);
          d.on_two_cells[2].components[x] = cj->identity(f.object_map[x]);
        }
        for (ObjectId x = 0; x < cj->object_count(); ++x)
          d.on_two_cells[1].components[x] = cj->identity(x);
        d.name = "arrow/" + ni + "->" + nj + "/" + std::to_string(k++);
        try_add(out, std::move(d));
      }
    }

  const std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> spans{
      {1, 3, 3}, {3, 4, 3}, {5, 5, 6}, {7, 8, 1}, {2, 3, 4}, {10, 3, 1}};
  for (const auto& [i0, i1, i2] : spans) {
    const auto& c0 = pool[i0].second;
    const auto& c1 = pool[i1].second;
    const auto& c2v = pool[i2].second;
    const auto us = all_functors(c0, c1, 2);
    const auto vs = all_functors(c0, c2v, 2);
    for (std::size_t a = 0; a < us.size(); ++a)
      for (std::size_t b = 0; b < vs.size(); ++b) {
        CatValued2Functor d;
        d.index = span;
        d.values = {c0, c1, c2v};
        d.on_one_cells = {fincat::identity_functor(c0), fincat::identity_functor(c1),
                          fincat::identity_functor(c2v), us[a], vs[b]};
        for (TwoCellId t = 0; t < span->two_cell_count(); ++t) {
          const auto& F = d.on_one_cells[span->two_cell(t).src];
          NatTrans n;
          for (ObjectId x = 0; x < F.source->object_count(); ++x)
            n.components.push_back(F.target->identity(F.object_map[x]));
          d.on_two_cells.push_back(std::move(n));
        }
        d.name = "span/" + pool[i0].first + "/" + pool[i1].first + "," + pool[i2].first + "/" +
                 std::to_string(a) + std::to_string(b);
        try_add(out, std::move(d));
      }
  }

  const std::vector<std::pair<std::size_t, std::size_t>> parallels{
      {1, 3}, {1, 4}, {0, 7}, {3, 4}, {0, 9}, {5, 3}};
  for (const auto& [i0, i1] : parallels) {
    const auto& c0 = pool[i0].second;
    const auto& c1 = pool[i1].second;
    const auto fs = all_functors(c0, c1, 3);
    std::size_t added = 0;
    for (const auto& u : fs)
      for (const auto& v : fs) {
        if (added >= 3) break;
        for (const auto& eta : component_choices(*c1, u, v, 64)) {
          CatValued2Functor d;
          d.index = parallel;
          d.values = {c0, c1};
          d.on_one_cells = {fincat::identity_functor(c0), fincat::identity_functor(c1), u, v};
          const auto inv = inverse_components(*c1, eta);
          for (TwoCellId t = 0; t < parallel->two_cell_count(); ++t) {
            const auto& cell = parallel->two_cell(t);
            const auto& F = d.on_one_cells[cell.src];
            NatTrans n;
            for (ObjectId x = 0; x < F.source->object_count(); ++x)
              n.components.push_back(cell.src == cell.dst ? F.target->identity(F.object_map[x])
                                     : cell.src == 2      ? eta[x]
                                                          : inv[x]);
            d.on_two_cells.push_back(std::move(n));
          }
          d.name = "parallel/" + pool[i0].first + "->" + pool[i1].first + "/" +
                   std::to_string(added);
          if (try_add(out, std::move(d))) {
            ++added;
            break;
          }
        }
      }
  }
  return out;
}

}  // namespace fusionlim::bilim
