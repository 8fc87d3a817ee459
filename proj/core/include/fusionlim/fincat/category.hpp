#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fusionlim::fincat {

using ObjectId = std::uint32_t;
using MorphismId = std::uint32_t;

inline constexpr MorphismId kNoMorphism = 0xffffffffu;

struct Morphism {
  ObjectId src = 0;
  ObjectId dst = 0;
  std::string label;
};

/// Finite category with an explicit composition table.
///
/// Composition is stored only for composable pairs: for f: a → b the
/// composites g ∘ f with g ranging over out(b) occupy one contiguous block.
class FinCat {
 public:
  /// g ∘ f for composable f, g; must return an existing morphism id.
  using ComposeFn = std::function<MorphismId(MorphismId g, MorphismId f)>;

  FinCat() = default;

  /// Tabulates `compose` on every composable pair, then checks closure,
  /// unit and associativity laws exhaustively. Throws InvalidArgument
  /// naming the first offending pair or triple.
  static FinCat build(std::vector<std::string> objects,
                      std::vector<Morphism> morphisms,
                      std::vector<MorphismId> identities, const ComposeFn& compose);

  std::size_t object_count() const noexcept { return objects_.size(); }
  std::size_t morphism_count() const noexcept { return morphisms_.size(); }
  const std::string& object_label(ObjectId a) const { return objects_.at(a); }
  const Morphism& morphism(MorphismId f) const { return morphisms_.at(f); }
  ObjectId src(MorphismId f) const { return morphisms_[f].src; }
  ObjectId dst(MorphismId f) const { return morphisms_[f].dst; }
  MorphismId identity(ObjectId a) const { return identities_.at(a); }
  bool is_identity(MorphismId f) const { return identities_[src(f)] == f; }

  /// Morphisms a → b in increasing id order.
  const std::vector<MorphismId>& hom(ObjectId a, ObjectId b) const {
    return hom_[a * objects_.size() + b];
  }
  /// Morphisms with source a, in increasing id order.
  const std::vector<MorphismId>& out(ObjectId a) const { return out_[a]; }

  /// g ∘ f; throws InvalidArgument when dst(f) ≠ src(g).
  MorphismId compose(MorphismId g, MorphismId f) const;

  /// Some two-sided inverse of f, if f is an isomorphism.
  std::optional<MorphismId> inverse(MorphismId f) const;

  /// Same objects, every morphism reversed; composition transposed.
  FinCat opposite() const;

  /// Digest of the composition table (labels excluded).
  std::uint64_t digest() const noexcept { return digest_; }

 private:
  void index();
  void validate() const;

  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<MorphismId> identities_;
  std::vector<std::vector<MorphismId>> hom_;
  std::vector<std::vector<MorphismId>> out_;
  std::vector<std::uint32_t> out_position_;  // position of g within out(src g)
  std::vector<std::size_t> block_;           // start of f's composite block
  std::vector<MorphismId> table_;
  std::uint64_t digest_ = 0;
};

using FinCatPtr = std::shared_ptr<const FinCat>;

/// Functor between finite categories, given by its object and morphism maps.
struct Functor {
  FinCatPtr source;
  FinCatPtr target;
  std::vector<ObjectId> object_map;
  std::vector<MorphismId> morphism_map;

  /// Checks sources, targets, identities and composition exhaustively;
  /// throws FunctorialityError naming the offending pair.
  void validate() const;
  bool is_identity_on_objects() const;
  /// Every target morphism between image objects has a preimage.
  bool is_full() const;
};

Functor identity_functor(const FinCatPtr& c);
Functor compose(const Functor& g, const Functor& f);

}  // namespace fusionlim::fincat
