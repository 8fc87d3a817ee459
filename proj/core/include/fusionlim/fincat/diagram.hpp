#pragma once

#include <cstddef>
#include <vector>

#include "fusionlim/fincat/category.hpp"
#include "fusionlim/fpla/matrix.hpp"
#include "fusionlim/fpla/subspace.hpp"

namespace fusionlim::fincat {

enum class Variance { covariant, contravariant };

/// Functor from a finite category to finite-dimensional F_p-vector spaces.
///
/// For f: a → b, maps[f] is dims[b] × dims[a] when covariant and
/// dims[a] × dims[b] when contravariant (matrices act on column vectors).
struct VectDiagram {
  FinCatPtr index;
  unsigned p = 2;
  Variance variance = Variance::contravariant;
  std::vector<std::size_t> dims;
  std::vector<fpla::FpMatrix> maps;

  /// Checks shapes, identities and map(g ∘ f) against map(g)·map(f)
  /// (covariant) or map(f)·map(g) (contravariant) on every composable pair.
  /// Throws FunctorialityError naming the pair.
  void validate() const;
};

/// The limit as a subspace of ∏_a D(a), stored in block layout.
struct LimitResult {
  fpla::Subspace space;
  /// Coordinates of D(a) inside the product start at offsets[a].
  std::vector<std::size_t> offsets;
  std::vector<std::size_t> dims;

  std::size_t dim() const noexcept { return space.dim(); }
  /// Image of the limit under the projection to D(a).
  fpla::Subspace component(ObjectId a) const;
  /// The a-block of a product vector.
  fpla::Vector block(const fpla::Vector& x, ObjectId a) const;
};

/// Kernel of (x_a) ↦ (x_a − D(f) x_b)_{f: a → b} (contravariant) or of
/// (x_a) ↦ (x_b − D(f) x_a)_f (covariant).
LimitResult limit(const VectDiagram& d);
/// Same as limit(); throws InvalidArgument when d is covariant.
LimitResult limit_contravariant(const VectDiagram& d);

/// D ∘ F for a functor F into D's index category.
VectDiagram pull_back(const VectDiagram& d, const Functor& f);

struct FinalityComparison {
  std::size_t dim_over_target = 0;
  std::size_t dim_over_source = 0;
  /// Limits coincide as subspaces of the common product (F identity on objects).
  bool same_subspace = false;
};

/// Compares the limit of D over F's target with the limit of D ∘ F.
FinalityComparison compare_along(const VectDiagram& d, const Functor& f);

}  // namespace fusionlim::fincat
