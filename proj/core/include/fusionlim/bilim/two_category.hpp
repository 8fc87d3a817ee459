#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fusionlim/fincat/category.hpp"

namespace fusionlim::bilim {

using fincat::FinCat;
using fincat::FinCatPtr;
using fincat::Functor;
using fincat::MorphismId;
using fincat::ObjectId;
using TwoCellId = std::uint32_t;

struct TwoCell {
  MorphismId src;
  MorphismId dst;
  std::string label;
};

/// Finite strict 2-category whose hom-categories are thin groupoids: at most
/// one 2-cell f ⇒ g, and every 2-cell is invertible. Objects and 1-cells form
/// the FinCat one_cells(); identity 2-cells are added by build().
class TwoCat {
 public:
  TwoCat() = default;

  /// Adds identity 2-cells, tabulates vertical and horizontal composition and
  /// checks closure, inverses, units, associativity and interchange
  /// exhaustively. Throws InvalidArgument naming the first violation.
  static TwoCat build(FinCat one_cells, std::vector<TwoCell> two_cells);

  const FinCat& one_cells() const noexcept { return *one_; }
  const FinCatPtr& one_cells_ptr() const noexcept { return one_; }
  std::size_t object_count() const noexcept { return one_->object_count(); }
  std::size_t one_cell_count() const noexcept { return one_->morphism_count(); }
  std::size_t two_cell_count() const noexcept { return cells_.size(); }
  const TwoCell& two_cell(TwoCellId a) const { return cells_.at(a); }

  /// The 2-cell f ⇒ g, if any.
  std::optional<TwoCellId> between(MorphismId f, MorphismId g) const;
  TwoCellId identity2(MorphismId f) const { return *between(f, f); }
  bool is_identity2(TwoCellId a) const { return cells_[a].src == cells_[a].dst; }
  /// β · α for α: f ⇒ g, β: g ⇒ h.
  TwoCellId vertical(TwoCellId beta, TwoCellId alpha) const;
  /// β ∗ α: g∘f ⇒ g'∘f' for α: f ⇒ f', β: g ⇒ g' with dst(f) = src(g).
  TwoCellId horizontal(TwoCellId beta, TwoCellId alpha) const;
  TwoCellId inverse2(TwoCellId alpha) const { return *between(cells_[alpha].dst, cells_[alpha].src); }

 private:
  void check_laws() const;

  FinCatPtr one_;
  std::vector<TwoCell> cells_;
  std::map<std::pair<MorphismId, MorphismId>, TwoCellId> between_;
};

using TwoCatPtr = std::shared_ptr<const TwoCat>;

/// Same objects, 1-cells reversed with their labels, 2-cells kept.
TwoCat op_2category(const TwoCat& i);

/// Objects, 1-cells with labels and endpoints, composition and 2-cells agree.
bool same_structure(const TwoCat& a, const TwoCat& b);

/// I^(1): forgets the 2-cells.
FinCat underlying_1cat(const TwoCat& i);

struct Truncation {
  FinCatPtr category;
  /// Class of each 1-cell of I.
  std::vector<MorphismId> class_of;
};

/// τ_1(I): 1-cells modulo 2-isomorphism, composed on representatives.
Truncation tau_1(const TwoCat& i);

/// The quotient functor I^(1) → τ_1(I).
Functor truncation_functor(const TwoCat& i, const Truncation& t);

/// Natural transformation given by one component per source object.
struct NatTrans {
  std::vector<MorphismId> components;
};

/// Strict 2-functor I → Cat with finite values.
struct CatValued2Functor {
  TwoCatPtr index;
  std::vector<FinCatPtr> values;
  /// One functor per 1-cell of the index.
  std::vector<Functor> on_one_cells;
  /// One transformation per 2-cell of the index.
  std::vector<NatTrans> on_two_cells;
  std::string name;

  /// Strict functoriality on 1-cells and 2-cells and naturality of every
  /// component family, exhaustively. Throws FunctorialityError.
  void validate() const;
};

/// Covariant functor from a finite category to finite sets {0, …, n−1}.
struct SetDiagram {
  FinCatPtr index;
  std::vector<std::size_t> sizes;
  /// maps[f][x] for f: a → b and x < sizes[a].
  std::vector<std::vector<std::size_t>> maps;

  void validate() const;
};

/// Compatible families (x_a), enumerated lexicographically over the product.
std::vector<std::vector<std::size_t>> set_limit(const SetDiagram& d);

/// D ∘ F for F into D's index.
SetDiagram pull_back(const SetDiagram& d, const Functor& f);

}  // namespace fusionlim::bilim
