#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fusionlim/bilim/two_category.hpp"

namespace fusionlim::bilim {

/// An object of L_D: d_i per index object, d_f: Df(d_i) → d_j per 1-cell.
struct BilimObject {
  std::vector<ObjectId> d_obj;
  std::vector<MorphismId> d_cell;

  bool operator==(const BilimObject&) const = default;
};

/// A morphism of L_D: δ_i: d_i → d'_i per index object.
struct BilimMorphism {
  std::size_t src = 0;
  std::size_t dst = 0;
  std::vector<MorphismId> delta;
};

struct BilimCategory {
  std::vector<BilimObject> objects;
  std::vector<BilimMorphism> morphisms;
  /// Morphism ids agree with `morphisms`; composition is componentwise and
  /// the category laws are checked on construction.
  FinCatPtr category;
  std::uint64_t search_bound = 0;
  std::uint64_t candidates = 0;

  /// Every enumerated object has d_id = id for each identity 1-cell.
  bool identities_forced(const CatValued2Functor& d) const;
  /// Number of isomorphism classes of objects.
  std::size_t skeleton_size() const;
};

inline constexpr std::uint64_t kDefaultBilimBudget = 10'000'000;

/// ∏_i |Obj D_i| · ∏_f (largest number of isomorphisms between two objects
/// of D(dst f)), saturating at UINT64_MAX.
std::uint64_t bilimit_search_bound(const CatValued2Functor& d);

/// Exhaustive enumeration of L_D in lexicographic order of choice tuples.
/// Objects are filtered by the isomorphism, 2-cell and cocycle conditions;
/// d_id is searched over like every other d_f. Throws BudgetExceeded when the
/// search bound exceeds the budget.
BilimCategory enumerate_bilimit(const CatValued2Functor& d,
                                std::uint64_t budget = kDefaultBilimBudget);

/// The Set-valued diagram D_{d,d'} on I^(1): i ↦ Hom_{Di}(d_i, d'_i) and
/// f ↦ (φ ↦ d'_f ∘ Df(φ) ∘ d_f⁻¹). elements[i] lists Hom_{Di}(d_i, d'_i).
struct HomSetDiagram {
  SetDiagram diagram;
  std::vector<std::vector<MorphismId>> elements;
};

/// Throws InvalidArgument unless d and d' are objects of L_D.
HomSetDiagram hom_set_diagram(const CatValued2Functor& d, const BilimObject& a,
                              const BilimObject& b);

struct SimplifiedHomDiagram {
  HomSetDiagram diagram;
  /// The transition maps φ ↦ Df(φ) agree pointwise with hom_set_diagram.
  bool matches_general = false;
};

/// Transition maps exactly Df. Throws InvalidArgument unless every d_f and
/// d'_f is an identity.
SimplifiedHomDiagram simplified_hom_diagram(const CatValued2Functor& d, const BilimObject& a,
                                            const BilimObject& b);

struct HomFormulaCheck {
  std::size_t src = 0;
  std::size_t dst = 0;
  std::size_t enumerated = 0;
  std::size_t limit = 0;
  /// The limit families are exactly the enumerated morphism families.
  bool bijection = false;
};

/// Compares L_D(a, b) with lim D_{a,b}, elementwise.
HomFormulaCheck hom_via_limit(const CatValued2Functor& d, const BilimCategory& l, std::size_t a,
                              std::size_t b);

struct ConeReport {
  /// Each projection L_D → D(i) is a functor.
  bool projections_functorial = false;
  /// d'_f ∘ Df(δ_i) = δ_j ∘ d_f for every 1-cell f and morphism δ.
  bool pseudonatural = false;
  std::size_t squares_checked = 0;

  bool pass() const noexcept { return projections_functorial && pseudonatural; }
};

ConeReport verify_canonical_cone(const CatValued2Functor& d, const BilimCategory& l);

struct BilimSummary {
  std::string name;
  std::uint64_t search_bound = 0;
  std::size_t objects = 0;
  std::size_t morphisms = 0;
  std::size_t skeleton = 0;
  bool identities_forced = false;
  ConeReport cone;
  std::vector<HomFormulaCheck> homs;

  bool pass() const;
};

/// Enumerates L_D and checks the Hom formula on every pair of objects.
BilimSummary summarize_bilimit(const CatValued2Functor& d,
                               std::uint64_t budget = kDefaultBilimBudget);

}  // namespace fusionlim::bilim
