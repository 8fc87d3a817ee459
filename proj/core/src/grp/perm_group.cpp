#include "fusionlim/grp/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "fusionlim/error.hpp"

namespace fusionlim::grp {

namespace {

constexpr std::size_t kTableLimit = 2048;

/// Closure of seeds inside a materialized group, as a sorted id list.
std::vector<ElementId> generate(const PermGroup& g, std::span<const ElementId> seeds) {
  std::vector<bool> in(g.order(), false);
  std::vector<ElementId> out{PermGroup::identity()};
  in[PermGroup::identity()] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto s : seeds) {
      const auto y = g.multiply(out[i], s);
      if (!in[y]) {
        in[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementId> greedy_generators(const PermGroup& g,
                                         const std::vector<ElementId>& elements,
                                         std::vector<ElementId>* closure_out) {
  std::vector<ElementId> gens;
  std::vector<ElementId> closure{PermGroup::identity()};
  for (const auto x : elements) {
    if (std::binary_search(closure.begin(), closure.end(), x)) continue;
    gens.push_back(x);
    closure = generate(g, gens);
  }
  if (closure_out) *closure_out = std::move(closure);
  return gens;
}

}  // namespace

GroupPtr PermGroup::closure(std::size_t degree, std::vector<Perm> generators,
                            std::string name, std::size_t cap) {
  for (const auto& s : generators)
    if (s.degree() != degree)
      throw InvalidArgument("generator of degree " + std::to_string(s.degree()) +
                            " in a group of degree " + std::to_string(degree));

  // Breadth-first Cayley closure, recording the spanning tree.
  std::map<Perm, std::size_t> seen;
  std::vector<Perm> found{Perm::identity(degree)};
  std::vector<std::size_t> parent{0};
  std::vector<std::size_t> via{0};
  seen.emplace(found.front(), 0);
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t k = 0; k < generators.size(); ++k) {
      Perm y = found[i] * generators[k];
      if (seen.count(y)) continue;
      if (found.size() >= cap)
        throw GroupTooLarge("group too large: more than " + std::to_string(cap) +
                            " elements");
      seen.emplace(y, found.size());
      found.push_back(std::move(y));
      parent.push_back(i);
      via.push_back(k);
    }

  auto group = std::shared_ptr<PermGroup>(new PermGroup());
  group->name_ = std::move(name);
  group->degree_ = degree;
  group->generators_ = std::move(generators);

  const std::size_t n = found.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return found[a] < found[b]; });
  std::vector<ElementId> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[order[i]] = static_cast<ElementId>(i);

  group->elements_.reserve(n);
  group->word_parent_.resize(n);
  group->word_generator_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    group->elements_.push_back(found[order[i]]);
    group->word_parent_[i] = rank[parent[order[i]]];
    group->word_generator_[i] = via[order[i]];
  }

  group->inverses_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    group->inverses_[i] = group->index_of(group->elements_[i].inverse());

  if (n <= kTableLimit) {
    group->table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        group->table_[a * n + b] =
            group->index_of(group->elements_[a] * group->elements_[b]);
  }

  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) h = (h ^ ((v >> (8 * i)) & 0xff)) * 0x100000001b3ULL;
  };
  mix(degree);
  mix(n);
  for (const auto& e : group->elements_)
    for (const auto x : e.images()) mix(x);
  group->digest_ = h;
  return group;
}

std::optional<ElementId> PermGroup::find(const Perm& g) const {
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
  if (it == elements_.end() || *it != g) return std::nullopt;
  return static_cast<ElementId>(it - elements_.begin());
}

ElementId PermGroup::index_of(const Perm& g) const {
  if (const auto id = find(g)) return *id;
  throw InvalidArgument("permutation " + g.cycle_string() + " is not in the group");
}

ElementId PermGroup::multiply(ElementId a, ElementId b) const {
  if (!table_.empty()) return table_[a * elements_.size() + b];
  return index_of(elements_[a] * elements_[b]);
}

std::size_t PermGroup::element_order(ElementId a) const {
  std::size_t k = 1;
  for (ElementId x = a; x != identity(); x = multiply(x, a)) ++k;
  return k;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<ElementId> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
  if (!parent_) throw InvalidArgument("subgroup without a parent group");
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (const auto x : elements_)
    if (x >= parent_->order()) throw InvalidArgument("subgroup element out of range");
  std::vector<ElementId> closure;
  generators_ = greedy_generators(*parent_, elements_, &closure);
  if (closure != elements_) throw InvalidArgument("element set is not a subgroup");
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<ElementId> all(parent->order());
  std::iota(all.begin(), all.end(), ElementId{0});
  return Subgroup(std::move(parent), std::move(all));
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  return Subgroup(std::move(parent), {PermGroup::identity()});
}

Subgroup Subgroup::generated(GroupPtr parent, std::span<const ElementId> seeds) {
  auto elements = generate(*parent, seeds);
  return Subgroup(std::move(parent), std::move(elements));
}

bool Subgroup::contains(ElementId g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  return parent_ == other.parent_ &&
         std::includes(other.elements_.begin(), other.elements_.end(),
                       elements_.begin(), elements_.end());
}

std::size_t Subgroup::position(ElementId g) const {
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
  if (it == elements_.end() || *it != g)
    throw InvalidArgument("element is not in the subgroup");
  return static_cast<std::size_t>(it - elements_.begin());
}

std::strong_ordering Subgroup::operator<=>(const Subgroup& other) const {
  if (auto c = elements_.size() <=> other.elements_.size(); c != 0) return c;
  return elements_ <=> other.elements_;
}

bool Subgroup::operator==(const Subgroup& other) const {
  return parent_ == other.parent_ && elements_ == other.elements_;
}

std::optional<ElementId> Embedding::from_parent(ElementId g) const {
  const auto it = std::lower_bound(to_parent.begin(), to_parent.end(), g);
  if (it == to_parent.end() || *it != g) return std::nullopt;
  return static_cast<ElementId>(it - to_parent.begin());
}

Embedding materialize(const Subgroup& h) {
  const auto& parent = *h.parent();
  std::vector<Perm> gens;
  for (const auto g : h.generators()) gens.push_back(parent.element(g));
  Embedding e;
  e.parent = h.parent();
  e.group = PermGroup::closure(parent.degree(), std::move(gens), structure_label(h));
  // Both element lists are sorted by image array, so positions line up.
  e.to_parent = h.elements();
  for (std::size_t i = 0; i < e.to_parent.size(); ++i)
    if (parent.element(e.to_parent[i]) != e.group->element(static_cast<ElementId>(i)))
      throw Error("subgroup materialization out of order");
  return e;
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
  // Every subgroup is a join of cyclic subgroups; close the lattice under
  // joins with cyclic subgroups.
  std::set<std::vector<ElementId>> cyclic_sets;
  for (ElementId x = 0; x < g->order(); ++x) {
    const ElementId seed[1] = {x};
    cyclic_sets.insert(generate(*g, seed));
  }
  std::vector<std::vector<ElementId>> cyclic(cyclic_sets.begin(), cyclic_sets.end());

  std::set<std::vector<ElementId>> known(cyclic.begin(), cyclic.end());
  std::deque<std::vector<ElementId>> queue(cyclic.begin(), cyclic.end());
  while (!queue.empty()) {
    const auto h = std::move(queue.front());
    queue.pop_front();
    for (const auto& c : cyclic) {
      if (std::includes(h.begin(), h.end(), c.begin(), c.end())) continue;
      std::vector<ElementId> seeds = h;
      seeds.insert(seeds.end(), c.begin(), c.end());
      auto j = generate(*g, seeds);
      if (known.insert(j).second) queue.push_back(std::move(j));
    }
  }

  std::vector<Subgroup> out;
  out.reserve(known.size());
  for (const auto& s : known) out.emplace_back(g, s);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> subgroups_of(const Subgroup& s) {
  std::vector<Subgroup> out;
  for (auto& h : all_subgroups(s.parent()))
    if (h.is_subgroup_of(s)) out.push_back(std::move(h));
  return out;
}

std::size_t p_part(std::size_t n, unsigned p) {
  std::size_t q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

SylowSubgroup sylow(const GroupPtr& g, unsigned p) {
  if (p < 2) throw InvalidArgument("sylow: p must be prime");
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) throw InvalidArgument("sylow: p must be prime");
  const std::size_t target = p_part(g->order(), p);
  if (target == 1) return {Subgroup::trivial(g), false};
  for (auto& h : all_subgroups(g))
    if (h.order() == target) return {std::move(h), true};
  throw Error("no Sylow subgroup found");  // unreachable by Sylow's theorem
}

Subgroup conjugate_subgroup(ElementId g, const Subgroup& p) {
  const auto& parent = *p.parent();
  if (g >= parent.order()) throw InvalidArgument("conjugating element not in parent group");
  std::vector<ElementId> out;
  out.reserve(p.order());
  for (const auto x : p.elements()) out.push_back(parent.conjugate(g, x));
  return Subgroup(p.parent(), std::move(out));
}

Subgroup conjugate_subgroup(const Perm& g, const Subgroup& p) {
  const auto id = p.parent()->find(g);
  if (!id) throw InvalidArgument("conjugating element not in parent group");
  return conjugate_subgroup(*id, p);
}

Transversal left_transversal(const GroupPtr& g, const Subgroup& h) {
  if (h.parent() != g) throw InvalidArgument("transversal: H is not a subgroup of G");
  std::vector<bool> covered(g->order(), false);
  Transversal t{h, {}};
  for (ElementId x = 0; x < g->order(); ++x) {
    if (covered[x]) continue;
    t.reps.push_back(x);
    for (const auto y : h.elements()) covered[g->multiply(x, y)] = true;
  }
  return t;
}

std::string structure_label(const PermGroup& g) {
  const std::size_t n = g.order();
  std::map<std::size_t, std::size_t> by_order;
  for (ElementId x = 0; x < n; ++x) ++by_order[g.element_order(x)];
  auto count = [&](std::size_t k) { return by_order.count(k) ? by_order[k] : 0; };
  if (n == 1) return "1";
  if (count(n) > 0) return "C" + std::to_string(n);
  switch (n) {
    case 4: return "V4";
    case 6: return "S3";
    case 8:
      switch (count(2)) {
        case 1: return "Q8";
        case 3: return "C4xC2";
        case 5: return "D8";
        case 7: return "C2^3";
      }
      break;
    case 9: return "C3xC3";
    case 12:
      if (count(2) == 3 && count(3) == 8) return "A4";
      if (count(2) == 7) return "D12";
      if (count(2) == 1) return "Dic12";
      if (count(2) == 3) return "C6xC2";
      break;
    case 24:
      if (count(2) == 9 && count(3) == 8 && count(4) == 6) return "S4";
      break;
  }
  return "G" + std::to_string(n);
}

std::string structure_label(const Subgroup& h) {
  std::vector<Perm> gens;
  for (const auto x : h.generators()) gens.push_back(h.parent()->element(x));
  return structure_label(*PermGroup::closure(h.parent()->degree(), std::move(gens)));
}

}  // namespace fusionlim::grp
