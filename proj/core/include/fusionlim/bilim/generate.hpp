#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fusionlim/bilim/two_category.hpp"

namespace fusionlim::bilim {

/// n objects, identities only.
FinCatPtr discrete_category(std::size_t n, const std::string& prefix = "x");
/// n objects, exactly one morphism between any two.
FinCatPtr chaotic_category(std::size_t n, const std::string& prefix = "x");
/// The poset 0 < 1 < … < n−1.
FinCatPtr chain_category(std::size_t n);
/// One object with morphisms {0, …, order−1}, composed by `multiply`; 0 is the unit.
FinCatPtr one_object_category(std::size_t order,
                              const std::function<std::size_t(std::size_t, std::size_t)>& multiply,
                              const std::string& name);
FinCatPtr cyclic_group_category(std::size_t n);
FinCatPtr klein_group_category();
FinCatPtr coproduct(const FinCatPtr& a, const FinCatPtr& b);

/// All functors C → D in lexicographic order of (object map, morphism map),
/// stopping after `limit`.
std::vector<Functor> all_functors(const FinCatPtr& c, const FinCatPtr& d,
                                  std::size_t limit = static_cast<std::size_t>(-1));
std::vector<Functor> automorphisms(const FinCatPtr& c);

/// One object, 1-cells the elements of a group with unit 0; a 2-cell x ⇒ y
/// whenever same_class(x, y) and x ≠ y.
TwoCat group_2category(std::size_t order,
                       const std::function<std::size_t(std::size_t, std::size_t)>& multiply,
                       const std::function<bool(std::size_t, std::size_t)>& same_class,
                       const std::string& name);
TwoCat terminal_2category();
/// 0 → 1.
TwoCat walking_arrow_2category();
/// 1 ← 0 → 2.
TwoCat span_2category();
/// u, v: 0 → 1 with an invertible 2-cell u ⇒ v.
TwoCat parallel_iso_2category();

/// Strict action of a one-object index by the functors `act[x]`, with 2-cell
/// components from `component(cell, object)`.
CatValued2Functor group_action_diagram(
    const TwoCatPtr& index, const FinCatPtr& value, std::vector<Functor> act,
    const std::function<MorphismId(TwoCellId, ObjectId)>& component, std::string name);

/// Identity-only index with D(*) = C.
CatValued2Functor terminal_diagram(const FinCatPtr& c);
/// C2 acting on the walking isomorphism {a ≅ b} by the swap.
CatValued2Functor swap_walking_iso();
/// C3 acting on three discrete objects by rotation.
CatValued2Functor rotation_discrete3();
/// C2 acting on two discrete objects by the swap.
CatValued2Functor swap_discrete2();

/// The exhaustive generated family used by the Hom-formula acceptance check:
/// index 2-categories with at most 3 objects and 8 one-cells, values with at
/// most 5 objects and 25 morphisms.
std::vector<CatValued2Functor> generated_family();

}  // namespace fusionlim::bilim
