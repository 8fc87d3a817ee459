#pragma once

#include <string>
#include <vector>

#include "fusionlim/fincat/category.hpp"
#include "fusionlim/grp/perm_group.hpp"

namespace fusionlim::fincat {

enum class IndexKind { fusion, transporter };

std::string to_string(IndexKind k);

/// F_S(G) or T_S(G): objects are all subgroups of S in all_subgroups order.
struct SubgroupCategory {
  IndexKind kind;
  grp::GroupPtr group;
  grp::Subgroup s;
  std::vector<grp::Subgroup> objects;
  FinCatPtr category;
  /// For every morphism f: P → Q an element g with gPg⁻¹ ⊆ Q inducing it.
  /// For the transporter category this is the morphism itself.
  std::vector<grp::ElementId> witness;
  /// For every morphism f: P → Q the images of P's elements (in P's order)
  /// under the induced homomorphism, as ids of G.
  std::vector<std::vector<grp::ElementId>> maps;

  /// Index of a subgroup of S among the objects.
  ObjectId object_of(const grp::Subgroup& p) const;
};

/// Objects: all subgroups of S. Morphisms P → Q: the distinct homomorphisms
/// c_g|P with gPg⁻¹ ⊆ Q. Throws InvalidArgument when S does not lie in G.
SubgroupCategory build_fusion_category(const grp::GroupPtr& g, const grp::Subgroup& s);

/// Objects: all subgroups of S. Hom(P, Q) = {g ∈ G : gPg⁻¹ ⊆ Q},
/// composition by multiplication in G.
SubgroupCategory build_transporter_category(const grp::GroupPtr& g, const grp::Subgroup& s);

SubgroupCategory build_subgroup_category(IndexKind kind, const grp::GroupPtr& g,
                                         const grp::Subgroup& s);

/// π: T_S(G) → F_S(G), g ↦ c_g. Throws InvalidArgument unless both come
/// from the same (G, S); the result is validated, identity on objects and full.
Functor projection_functor(const SubgroupCategory& t, const SubgroupCategory& f);

}  // namespace fusionlim::fincat
