#include "fusionlim/fincat/category.hpp"

#include <algorithm>

#include "fusionlim/error.hpp"

namespace fusionlim::fincat {

namespace {

std::string pair_name(const FinCat& c, MorphismId g, MorphismId f) {
  return "(" + c.morphism(g).label + ", " + c.morphism(f).label + ")";
}

}  // namespace

FinCat FinCat::build(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                     std::vector<MorphismId> identities, const ComposeFn& compose) {
  FinCat c;
  c.objects_ = std::move(objects);
  c.morphisms_ = std::move(morphisms);
  c.identities_ = std::move(identities);
  if (c.identities_.size() != c.objects_.size())
    throw InvalidArgument("category needs one identity per object");
  for (const auto& m : c.morphisms_)
    if (m.src >= c.objects_.size() || m.dst >= c.objects_.size())
      throw InvalidArgument("morphism '" + m.label + "' has an unknown endpoint");
  for (ObjectId a = 0; a < c.objects_.size(); ++a) {
    const auto i = c.identities_[a];
    if (i >= c.morphisms_.size() || c.morphisms_[i].src != a || c.morphisms_[i].dst != a)
      throw InvalidArgument("identity of '" + c.objects_[a] + "' is not an endomorphism");
  }
  c.index();

  for (MorphismId f = 0; f < c.morphisms_.size(); ++f) {
    const auto& outs = c.out_[c.dst(f)];
    for (std::size_t k = 0; k < outs.size(); ++k) {
      const MorphismId g = outs[k];
      const MorphismId h = compose(g, f);
      if (h >= c.morphisms_.size() || c.src(h) != c.src(f) || c.dst(h) != c.dst(g))
        throw InvalidArgument("composite of " + pair_name(c, g, f) +
                              " is not a morphism between the right objects");
      c.table_[c.block_[f] + k] = h;
    }
  }
  c.validate();

  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) h = (h ^ ((v >> (8 * i)) & 0xff)) * 0x100000001b3ULL;
  };
  mix(c.objects_.size());
  for (const auto& m : c.morphisms_) {
    mix(m.src);
    mix(m.dst);
  }
  for (const auto i : c.identities_) mix(i);
  for (const auto x : c.table_) mix(x);
  c.digest_ = h;
  return c;
}

void FinCat::index() {
  const std::size_t n = objects_.size();
  hom_.assign(n * n, {});
  out_.assign(n, {});
  out_position_.assign(morphisms_.size(), 0);
  for (MorphismId f = 0; f < morphisms_.size(); ++f) {
    hom_[src(f) * n + dst(f)].push_back(f);
    out_position_[f] = static_cast<std::uint32_t>(out_[src(f)].size());
    out_[src(f)].push_back(f);
  }
  block_.assign(morphisms_.size() + 1, 0);
  for (MorphismId f = 0; f < morphisms_.size(); ++f)
    block_[f + 1] = block_[f] + out_[dst(f)].size();
  table_.assign(block_.back(), kNoMorphism);
}

MorphismId FinCat::compose(MorphismId g, MorphismId f) const {
  if (dst(f) != src(g))
    throw InvalidArgument("morphisms " + pair_name(*this, g, f) + " are not composable");
  return table_[block_[f] + out_position_[g]];
}

void FinCat::validate() const {
  for (MorphismId f = 0; f < morphisms_.size(); ++f) {
    if (compose(identities_[dst(f)], f) != f || compose(f, identities_[src(f)]) != f)
      throw InvalidArgument("unit law fails at '" + morphisms_[f].label + "'");
  }
  for (MorphismId f = 0; f < morphisms_.size(); ++f)
    for (const MorphismId g : out_[dst(f)]) {
      const MorphismId gf = compose(g, f);
      for (const MorphismId h : out_[dst(g)])
        if (compose(h, gf) != compose(compose(h, g), f))
          throw InvalidArgument("associativity fails at (" + morphisms_[h].label + ", " +
                                morphisms_[g].label + ", " + morphisms_[f].label + ")");
    }
}

std::optional<MorphismId> FinCat::inverse(MorphismId f) const {
  for (const MorphismId g : hom(dst(f), src(f)))
    if (compose(g, f) == identities_[src(f)] && compose(f, g) == identities_[dst(f)])
      return g;
  return std::nullopt;
}

FinCat FinCat::opposite() const {
  std::vector<Morphism> reversed;
  reversed.reserve(morphisms_.size());
  for (const auto& m : morphisms_) reversed.push_back({m.dst, m.src, m.label + "^op"});
  // In the opposite category g ∘op f = f ∘ g.
  return build(objects_, std::move(reversed), identities_,
               [this](MorphismId g, MorphismId f) { return compose(f, g); });
}

void Functor::validate() const {
  if (!source || !target) throw FunctorialityError("functor without categories");
  if (object_map.size() != source->object_count() ||
      morphism_map.size() != source->morphism_count())
    throw FunctorialityError("functor tables have the wrong size");
  for (const auto a : object_map)
    if (a >= target->object_count()) throw FunctorialityError("object image out of range");
  for (MorphismId f = 0; f < source->morphism_count(); ++f) {
    const MorphismId Ff = morphism_map[f];
    if (Ff >= target->morphism_count() || target->src(Ff) != object_map[source->src(f)] ||
        target->dst(Ff) != object_map[source->dst(f)])
      throw FunctorialityError("image of '" + source->morphism(f).label +
                               "' has the wrong endpoints");
  }
  for (ObjectId a = 0; a < source->object_count(); ++a)
    if (morphism_map[source->identity(a)] != target->identity(object_map[a]))
      throw FunctorialityError("identity of '" + source->object_label(a) + "' not preserved");
  for (MorphismId f = 0; f < source->morphism_count(); ++f)
    for (const MorphismId g : source->out(source->dst(f)))
      if (morphism_map[source->compose(g, f)] !=
          target->compose(morphism_map[g], morphism_map[f]))
        throw FunctorialityError("composition not preserved at (" +
                                 source->morphism(g).label + ", " +
                                 source->morphism(f).label + ")");
}

bool Functor::is_identity_on_objects() const {
  if (source->object_count() != target->object_count()) return false;
  for (ObjectId a = 0; a < object_map.size(); ++a)
    if (object_map[a] != a) return false;
  return true;
}

bool Functor::is_full() const {
  std::vector<bool> hit(target->morphism_count(), false);
  for (const auto m : morphism_map) hit[m] = true;
  for (ObjectId a = 0; a < source->object_count(); ++a)
    for (ObjectId b = 0; b < source->object_count(); ++b)
      for (const MorphismId m : target->hom(object_map[a], object_map[b]))
        if (!hit[m]) return false;
  return true;
}

Functor identity_functor(const FinCatPtr& c) {
  Functor f{c, c, {}, {}};
  for (ObjectId a = 0; a < c->object_count(); ++a) f.object_map.push_back(a);
  for (MorphismId m = 0; m < c->morphism_count(); ++m) f.morphism_map.push_back(m);
  return f;
}

Functor compose(const Functor& g, const Functor& f) {
  if (f.target != g.source && !(f.target && g.source && f.target->digest() == g.source->digest()))
    throw InvalidArgument("functors are not composable");
  Functor h{f.source, g.target, {}, {}};
  for (const auto a : f.object_map) h.object_map.push_back(g.object_map[a]);
  for (const auto m : f.morphism_map) h.morphism_map.push_back(g.morphism_map[m]);
  return h;
}

}  // namespace fusionlim::fincat
