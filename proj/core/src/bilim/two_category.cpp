#include "fusionlim/bilim/two_category.hpp"

#include <algorithm>
#include <numeric>

#include "fusionlim/error.hpp"

namespace fusionlim::bilim {

namespace {

std::string cell_name(const FinCat& c, MorphismId f) { return "'" + c.morphism(f).label + "'"; }

bool same_tables(const Functor& a, const Functor& b) {
  return a.object_map == b.object_map && a.morphism_map == b.morphism_map;
}

bool same_category(const FinCatPtr& a, const FinCatPtr& b) {
  return a == b || (a && b && a->digest() == b->digest() &&
                    a->object_count() == b->object_count() &&
                    a->morphism_count() == b->morphism_count());
}

}  // namespace

TwoCat TwoCat::build(FinCat one_cells, std::vector<TwoCell> two_cells) {
  TwoCat t;
  t.one_ = std::make_shared<const FinCat>(std::move(one_cells));
  const auto& c = *t.one_;
  for (MorphismId f = 0; f < c.morphism_count(); ++f) {
    t.between_.emplace(std::pair{f, f}, static_cast<TwoCellId>(t.cells_.size()));
    t.cells_.push_back({f, f, "id_" + c.morphism(f).label});
  }
  for (auto& a : two_cells) {
    if (a.src >= c.morphism_count() || a.dst >= c.morphism_count())
      throw InvalidArgument("2-cell '" + a.label + "' has an unknown endpoint");
    if (c.src(a.src) != c.src(a.dst) || c.dst(a.src) != c.dst(a.dst))
      throw InvalidArgument("2-cell '" + a.label + "' joins non-parallel 1-cells");
    if (a.src == a.dst) continue;
    if (t.between_.count({a.src, a.dst}))
      throw InvalidArgument("2-cell '" + a.label + "' duplicates an existing 2-cell");
    t.between_.emplace(std::pair{a.src, a.dst}, static_cast<TwoCellId>(t.cells_.size()));
    t.cells_.push_back(std::move(a));
  }
  for (const auto& a : t.cells_)
    if (!t.between_.count({a.dst, a.src}))
      throw InvalidArgument("2-cell '" + a.label + "' has no inverse");
  for (const auto& a : t.cells_)
    for (const auto& b : t.cells_)
      if (a.dst == b.src && !t.between_.count({a.src, b.dst}))
        throw InvalidArgument("vertical composite of '" + a.label + "' and '" + b.label +
                              "' is missing");
  for (const auto& a : t.cells_)
    for (const auto& b : t.cells_)
      if (c.dst(a.src) == c.src(b.src) &&
          !t.between_.count({c.compose(b.src, a.src), c.compose(b.dst, a.dst)}))
        throw InvalidArgument("horizontal composite of '" + b.label + "' and '" + a.label +
                              "' is missing");
  t.check_laws();
  return t;
}

std::optional<TwoCellId> TwoCat::between(MorphismId f, MorphismId g) const {
  const auto it = between_.find({f, g});
  if (it == between_.end()) return std::nullopt;
  return it->second;
}

TwoCellId TwoCat::vertical(TwoCellId beta, TwoCellId alpha) const {
  if (cells_.at(alpha).dst != cells_.at(beta).src)
    throw InvalidArgument("vertical composition of non-composable 2-cells");
  return between_.at({cells_[alpha].src, cells_[beta].dst});
}

TwoCellId TwoCat::horizontal(TwoCellId beta, TwoCellId alpha) const {
  const auto& a = cells_.at(alpha);
  const auto& b = cells_.at(beta);
  if (one_->dst(a.src) != one_->src(b.src))
    throw InvalidArgument("horizontal composition of non-composable 2-cells");
  return between_.at({one_->compose(b.src, a.src), one_->compose(b.dst, a.dst)});
}

void TwoCat::check_laws() const {
  const auto n = static_cast<TwoCellId>(cells_.size());
  const auto& c = *one_;
  for (TwoCellId a = 0; a < n; ++a) {
    if (vertical(identity2(cells_[a].dst), a) != a || vertical(a, identity2(cells_[a].src)) != a)
      throw InvalidArgument("vertical unit law fails at '" + cells_[a].label + "'");
    const auto id_src = identity2(c.identity(c.src(cells_[a].src)));
    const auto id_dst = identity2(c.identity(c.dst(cells_[a].src)));
    if (horizontal(a, id_src) != a || horizontal(id_dst, a) != a)
      throw InvalidArgument("horizontal unit law fails at '" + cells_[a].label + "'");
  }
  for (TwoCellId a = 0; a < n; ++a)
    for (TwoCellId b = 0; b < n; ++b) {
      if (cells_[a].dst == cells_[b].src)
        for (TwoCellId x = 0; x < n; ++x)
          if (cells_[b].dst == cells_[x].src &&
              vertical(x, vertical(b, a)) != vertical(vertical(x, b), a))
            throw InvalidArgument("vertical associativity fails");
      if (c.dst(cells_[a].src) != c.src(cells_[b].src)) continue;
      for (TwoCellId x = 0; x < n; ++x)
        if (c.dst(cells_[b].src) == c.src(cells_[x].src) &&
            horizontal(x, horizontal(b, a)) != horizontal(horizontal(x, b), a))
          throw InvalidArgument("horizontal associativity fails");
      for (TwoCellId a2 = 0; a2 < n; ++a2) {
        if (cells_[a].dst != cells_[a2].src) continue;
        for (TwoCellId b2 = 0; b2 < n; ++b2)
          if (cells_[b].dst == cells_[b2].src &&
              horizontal(vertical(b2, b), vertical(a2, a)) !=
                  vertical(horizontal(b2, a2), horizontal(b, a)))
            throw InvalidArgument("interchange law fails");
      }
    }
}

TwoCat op_2category(const TwoCat& i) {
  const auto& c = i.one_cells();
  std::vector<std::string> objects;
  for (ObjectId a = 0; a < c.object_count(); ++a) objects.push_back(c.object_label(a));
  std::vector<fincat::Morphism> reversed;
  std::vector<MorphismId> identities;
  for (MorphismId f = 0; f < c.morphism_count(); ++f)
    reversed.push_back({c.dst(f), c.src(f), c.morphism(f).label});
  for (ObjectId a = 0; a < c.object_count(); ++a) identities.push_back(c.identity(a));
  auto op = FinCat::build(std::move(objects), std::move(reversed), std::move(identities),
                          [&c](MorphismId g, MorphismId f) { return c.compose(f, g); });
  std::vector<TwoCell> cells;
  for (TwoCellId a = 0; a < i.two_cell_count(); ++a)
    if (!i.is_identity2(a)) cells.push_back(i.two_cell(a));
  return TwoCat::build(std::move(op), std::move(cells));
}

bool same_structure(const TwoCat& a, const TwoCat& b) {
  const auto& x = a.one_cells();
  const auto& y = b.one_cells();
  if (x.object_count() != y.object_count() || x.morphism_count() != y.morphism_count() ||
      a.two_cell_count() != b.two_cell_count())
    return false;
  for (ObjectId o = 0; o < x.object_count(); ++o)
    if (x.object_label(o) != y.object_label(o) || x.identity(o) != y.identity(o)) return false;
  for (MorphismId f = 0; f < x.morphism_count(); ++f)
    if (x.src(f) != y.src(f) || x.dst(f) != y.dst(f) ||
        x.morphism(f).label != y.morphism(f).label)
      return false;
  for (MorphismId f = 0; f < x.morphism_count(); ++f)
    for (const auto g : x.out(x.dst(f)))
      if (x.compose(g, f) != y.compose(g, f)) return false;
  for (TwoCellId c = 0; c < a.two_cell_count(); ++c) {
    const auto other = b.between(a.two_cell(c).src, a.two_cell(c).dst);
    if (!other || b.two_cell(*other).label != a.two_cell(c).label) return false;
  }
  return true;
}

FinCat underlying_1cat(const TwoCat& i) { return i.one_cells(); }

Truncation tau_1(const TwoCat& i) {
  const auto& c = i.one_cells();
  std::vector<MorphismId> rep(c.morphism_count());
  for (MorphismId f = 0; f < c.morphism_count(); ++f) {
    rep[f] = f;
    for (MorphismId g = 0; g < f; ++g)
      if (i.between(g, f)) {
        rep[f] = rep[g];
        break;
      }
  }
  Truncation t;
  std::vector<MorphismId> reps;
  std::vector<MorphismId> class_index(c.morphism_count(), fincat::kNoMorphism);
  for (MorphismId f = 0; f < c.morphism_count(); ++f)
    if (rep[f] == f) {
      class_index[f] = static_cast<MorphismId>(reps.size());
      reps.push_back(f);
    }
  for (MorphismId f = 0; f < c.morphism_count(); ++f) t.class_of.push_back(class_index[rep[f]]);
  for (MorphismId f = 0; f < c.morphism_count(); ++f)
    for (const auto g : c.out(c.dst(f)))
      if (t.class_of[c.compose(g, f)] != t.class_of[c.compose(reps[t.class_of[g]], reps[t.class_of[f]])])
        throw InvalidArgument("tau_1: composition does not respect 2-isomorphism at " +
                              cell_name(c, g) + " after " + cell_name(c, f));
  std::vector<std::string> objects;
  std::vector<MorphismId> identities;
  for (ObjectId a = 0; a < c.object_count(); ++a) {
    objects.push_back(c.object_label(a));
    identities.push_back(t.class_of[c.identity(a)]);
  }
  std::vector<fincat::Morphism> classes;
  for (const auto f : reps) classes.push_back({c.src(f), c.dst(f), "[" + c.morphism(f).label + "]"});
  const auto& cls = t.class_of;
  t.category = std::make_shared<const FinCat>(
      FinCat::build(std::move(objects), std::move(classes), std::move(identities),
                    [&](MorphismId g, MorphismId f) { return cls[c.compose(reps[g], reps[f])]; }));
  return t;
}

Functor truncation_functor(const TwoCat& i, const Truncation& t) {
  Functor f{i.one_cells_ptr(), t.category, {}, t.class_of};
  for (ObjectId a = 0; a < i.object_count(); ++a) f.object_map.push_back(a);
  f.validate();
  return f;
}

void CatValued2Functor::validate() const {
  if (!index) throw FunctorialityError("2-functor without an index");
  const auto& c = index->one_cells();
  if (values.size() != c.object_count() || on_one_cells.size() != c.morphism_count() ||
      on_two_cells.size() != index->two_cell_count())
    throw FunctorialityError("2-functor tables have the wrong size");
  for (MorphismId f = 0; f < c.morphism_count(); ++f) {
    const auto& F = on_one_cells[f];
    if (!same_category(F.source, values[c.src(f)]) || !same_category(F.target, values[c.dst(f)]))
      throw FunctorialityError("D" + cell_name(c, f) + " has the wrong endpoints");
    F.validate();
  }
  for (ObjectId a = 0; a < c.object_count(); ++a)
    if (!same_tables(on_one_cells[c.identity(a)], fincat::identity_functor(values[a])))
      throw FunctorialityError("D" + cell_name(c, c.identity(a)) + " is not the identity functor");
  for (MorphismId f = 0; f < c.morphism_count(); ++f)
    for (const auto g : c.out(c.dst(f)))
      if (!same_tables(on_one_cells[c.compose(g, f)],
                       fincat::compose(on_one_cells[g], on_one_cells[f])))
        throw FunctorialityError("D(" + cell_name(c, g) + " ∘ " + cell_name(c, f) +
                                 ") differs from the composite of the images");

  const auto n = static_cast<TwoCellId>(index->two_cell_count());
  for (TwoCellId a = 0; a < n; ++a) {
    const auto& cell = index->two_cell(a);
    const auto& F = on_one_cells[cell.src];
    const auto& G = on_one_cells[cell.dst];
    const auto& src_cat = *values[c.src(cell.src)];
    const auto& dst_cat = *values[c.dst(cell.src)];
    const auto& comp = on_two_cells[a].components;
    if (comp.size() != src_cat.object_count())
      throw FunctorialityError("D'" + cell.label + "' has the wrong number of components");
    for (ObjectId x = 0; x < src_cat.object_count(); ++x) {
      if (comp[x] >= dst_cat.morphism_count() || dst_cat.src(comp[x]) != F.object_map[x] ||
          dst_cat.dst(comp[x]) != G.object_map[x])
        throw FunctorialityError("component of D'" + cell.label + "' has the wrong endpoints");
      if (index->is_identity2(a) && comp[x] != dst_cat.identity(F.object_map[x]))
        throw FunctorialityError("D of an identity 2-cell is not an identity");
    }
    for (MorphismId m = 0; m < src_cat.morphism_count(); ++m) {
      const auto x = src_cat.src(m), y = src_cat.dst(m);
      if (dst_cat.compose(G.morphism_map[m], comp[x]) != dst_cat.compose(comp[y], F.morphism_map[m]))
        throw FunctorialityError("D'" + cell.label + "' is not natural at '" +
                                 src_cat.morphism(m).label + "'");
    }
  }
  for (TwoCellId a = 0; a < n; ++a)
    for (TwoCellId b = 0; b < n; ++b) {
      const auto& ca = index->two_cell(a);
      const auto& cb = index->two_cell(b);
      if (ca.dst == cb.src) {
        const auto v = index->vertical(b, a);
        const auto& dst_cat = *values[c.dst(ca.src)];
        for (ObjectId x = 0; x < values[c.src(ca.src)]->object_count(); ++x)
          if (on_two_cells[v].components[x] !=
              dst_cat.compose(on_two_cells[b].components[x], on_two_cells[a].components[x]))
            throw FunctorialityError("D does not preserve the vertical composite of '" +
                                     ca.label + "' and '" + cb.label + "'");
      }
      if (c.dst(ca.src) == c.src(cb.src)) {
        const auto h = index->horizontal(b, a);
        const auto& top = *values[c.dst(cb.src)];
        const auto& Fa2 = on_one_cells[ca.dst];
        const auto& Gb = on_one_cells[cb.src];
        for (ObjectId x = 0; x < values[c.src(ca.src)]->object_count(); ++x) {
          const auto expected =
              top.compose(on_two_cells[b].components[Fa2.object_map[x]],
                          Gb.morphism_map[on_two_cells[a].components[x]]);
          if (on_two_cells[h].components[x] != expected)
            throw FunctorialityError("D does not preserve the horizontal composite of '" +
                                     cb.label + "' and '" + ca.label + "'");
        }
      }
    }
}

void SetDiagram::validate() const {
  if (!index || sizes.size() != index->object_count() || maps.size() != index->morphism_count())
    throw FunctorialityError("set diagram tables have the wrong size");
  const auto& c = *index;
  for (MorphismId f = 0; f < c.morphism_count(); ++f) {
    if (maps[f].size() != sizes[c.src(f)])
      throw FunctorialityError("set map '" + c.morphism(f).label + "' has the wrong domain");
    for (const auto y : maps[f])
      if (y >= sizes[c.dst(f)])
        throw FunctorialityError("set map '" + c.morphism(f).label + "' leaves its codomain");
    if (c.is_identity(f))
      for (std::size_t x = 0; x < maps[f].size(); ++x)
        if (maps[f][x] != x) throw FunctorialityError("identity is not sent to the identity");
  }
  for (MorphismId f = 0; f < c.morphism_count(); ++f)
    for (const auto g : c.out(c.dst(f)))
      for (std::size_t x = 0; x < sizes[c.src(f)]; ++x)
        if (maps[c.compose(g, f)][x] != maps[g][maps[f][x]])
          throw FunctorialityError("set diagram is not functorial at " + cell_name(c, g) +
                                   " ∘ " + cell_name(c, f));
}

std::vector<std::vector<std::size_t>> set_limit(const SetDiagram& d) {
  const auto& c = *d.index;
  const std::size_t n = c.object_count();
  std::vector<std::vector<std::size_t>> out;
  if (n == 0) return {{}};
  for (const auto s : d.sizes)
    if (s == 0) return out;
  std::vector<std::size_t> x(n, 0);
  // Morphisms whose later endpoint is a, checked once a is assigned.
  std::vector<std::vector<MorphismId>> checks(n);
  for (MorphismId f = 0; f < c.morphism_count(); ++f)
    checks[std::max(c.src(f), c.dst(f))].push_back(f);
  const auto consistent = [&](ObjectId a) {
    for (const auto f : checks[a])
      if (d.maps[f][x[c.src(f)]] != x[c.dst(f)]) return false;
    return true;
  };
  std::size_t depth = 0;
  while (true) {
    if (consistent(static_cast<ObjectId>(depth))) {
      if (depth + 1 == n) {
        out.push_back(x);
      } else {
        ++depth;
        x[depth] = 0;
        continue;
      }
    }
    while (++x[depth] == d.sizes[depth]) {
      if (depth == 0) return out;
      --depth;
    }
  }
}

SetDiagram pull_back(const SetDiagram& d, const Functor& f) {
  SetDiagram out{f.source, {}, {}};
  for (const auto a : f.object_map) out.sizes.push_back(d.sizes[a]);
  for (const auto m : f.morphism_map) out.maps.push_back(d.maps[m]);
  return out;
}

}  // namespace fusionlim::bilim
