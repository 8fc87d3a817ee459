#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fusionlim/grp/perm.hpp"

namespace fusionlim::grp {

using ElementId = std::uint32_t;

inline constexpr std::size_t kDefaultElementCap = 10080;

class PermGroup;
using GroupPtr = std::shared_ptr<const PermGroup>;

/// Finite permutation group with a fully materialized element list.
///
/// Elements are sorted lexicographically by image array, so the identity is
/// always element 0. Immutable once built.
class PermGroup {
 public:
  /// Cayley closure of the generators by breadth-first products.
  /// Throws InvalidArgument on a degree mismatch and GroupTooLarge when the
  /// closure exceeds `cap` elements.
  static GroupPtr closure(std::size_t degree, std::vector<Perm> generators,
                          std::string name = {},
                          std::size_t cap = kDefaultElementCap);

  const std::string& name() const noexcept { return name_; }
  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Perm>& generators() const noexcept { return generators_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Perm>& elements() const noexcept { return elements_; }
  const Perm& element(ElementId id) const { return elements_.at(id); }

  static constexpr ElementId identity() noexcept { return 0; }
  std::optional<ElementId> find(const Perm& g) const;
  /// Throws InvalidArgument when g is not an element.
  ElementId index_of(const Perm& g) const;

  ElementId multiply(ElementId a, ElementId b) const;
  ElementId inverse(ElementId a) const { return inverses_[a]; }
  /// g x g⁻¹.
  ElementId conjugate(ElementId g, ElementId x) const {
    return multiply(multiply(g, x), inverses_[g]);
  }
  std::size_t element_order(ElementId a) const;

  /// Spanning tree of the Cayley graph: for each non-identity element e,
  /// e = word_parent(e) * generators()[word_generator(e)].
  ElementId word_parent(ElementId e) const { return word_parent_[e]; }
  std::size_t word_generator(ElementId e) const { return word_generator_[e]; }

  /// Stable content digest of the element list; names are ignored.
  std::uint64_t digest() const noexcept { return digest_; }

 private:
  PermGroup() = default;

  std::string name_;
  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::vector<ElementId> inverses_;
  std::vector<ElementId> table_;  // |G|² products when small enough
  std::vector<ElementId> word_parent_;
  std::vector<std::size_t> word_generator_;
  std::uint64_t digest_ = 0;
};

/// Subgroup of a materialized group, as a sorted set of element ids.
class Subgroup {
 public:
  /// Throws InvalidArgument unless `elements` is closed under products.
  Subgroup(GroupPtr parent, std::vector<ElementId> elements);
  static Subgroup whole(GroupPtr parent);
  static Subgroup trivial(GroupPtr parent);
  /// Subgroup generated by the given elements.
  static Subgroup generated(GroupPtr parent, std::span<const ElementId> seeds);

  const GroupPtr& parent() const noexcept { return parent_; }
  const std::vector<ElementId>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  /// A small generating set, chosen greedily in element order.
  const std::vector<ElementId>& generators() const noexcept { return generators_; }
  bool contains(ElementId g) const;
  bool is_subgroup_of(const Subgroup& other) const;
  /// Position of g in elements(); throws when g is not a member.
  std::size_t position(ElementId g) const;

  /// Order first, then the sorted element list.
  std::strong_ordering operator<=>(const Subgroup& other) const;
  bool operator==(const Subgroup& other) const;

 private:
  Subgroup() = default;

  GroupPtr parent_;
  std::vector<ElementId> elements_;
  std::vector<ElementId> generators_;
};

/// A subgroup rebuilt as a standalone group, with the identification back
/// into its parent.
struct Embedding {
  GroupPtr group;
  GroupPtr parent;
  /// to_parent[i] is the parent id of the standalone element i.
  std::vector<ElementId> to_parent;

  std::optional<ElementId> from_parent(ElementId g) const;
};

Embedding materialize(const Subgroup& h);

struct Transversal {
  Subgroup subgroup;
  /// One representative per left coset gH; reps.front() is the identity.
  std::vector<ElementId> reps;
};

/// Every subgroup exactly once, sorted by order then element set.
std::vector<Subgroup> all_subgroups(const GroupPtr& g);
/// Subgroups of `g` contained in `s`, in the same order.
std::vector<Subgroup> subgroups_of(const Subgroup& s);

struct SylowSubgroup {
  Subgroup subgroup;
  /// False when p does not divide |G|; the subgroup is then trivial.
  bool p_divides_order;
};

/// The first subgroup of order p^k, p^k ∥ |G|, in all_subgroups order.
SylowSubgroup sylow(const GroupPtr& g, unsigned p);

/// g P g⁻¹. Throws when g is not an element of P's parent.
Subgroup conjugate_subgroup(ElementId g, const Subgroup& p);
Subgroup conjugate_subgroup(const Perm& g, const Subgroup& p);

Transversal left_transversal(const GroupPtr& g, const Subgroup& h);

/// Largest power of p dividing n.
std::size_t p_part(std::size_t n, unsigned p);

/// Short isomorphism-type label for small groups ("C3", "V4", "A4", ...).
std::string structure_label(const PermGroup& g);
std::string structure_label(const Subgroup& h);

}  // namespace fusionlim::grp
