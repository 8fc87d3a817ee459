#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "fusionlim/fpla/matrix.hpp"
#include "fusionlim/grp/perm_group.hpp"

namespace fusionlim::rep {

/// Finite-dimensional left F_p[G]-module: ρ(gh) = ρ(g)ρ(h), acting on
/// column vectors. The action of every element is materialized.
class KGModule {
 public:
  KGModule() = default;

  /// Extends generator matrices along the Cayley spanning tree and checks
  /// ρ(x)ρ(s) = ρ(xs) for every element x and generator s, which verifies
  /// every defining relation. Throws InvalidArgument on failure.
  static KGModule from_generators(grp::GroupPtr g, unsigned p, std::size_t dim,
                                  const std::vector<fpla::FpMatrix>& generator_actions,
                                  std::string label = {});
  /// One matrix per element id; checked like from_generators.
  static KGModule from_element_action(grp::GroupPtr g, unsigned p, std::size_t dim,
                                      std::vector<fpla::FpMatrix> actions,
                                      std::string label = {});

  unsigned p() const noexcept { return p_; }
  const grp::GroupPtr& group() const noexcept { return group_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::string& label() const noexcept { return label_; }
  const fpla::FpMatrix& action(grp::ElementId g) const { return (*actions_)[g]; }
  std::vector<fpla::FpMatrix> generator_actions() const;

 private:
  static void check(const KGModule& m);

  unsigned p_ = 2;
  grp::GroupPtr group_;
  std::size_t dim_ = 0;
  std::string label_;
  std::shared_ptr<const std::vector<fpla::FpMatrix>> actions_;
};

KGModule trivial_module(const grp::GroupPtr& g, unsigned p);
/// Basis e_x (x ∈ G in element order), g·e_x = e_{gx}.
KGModule regular_module(const grp::GroupPtr& g, unsigned p);
/// Basis the left cosets rH in left_transversal order, g·rH = (gr)H.
KGModule permutation_module(const grp::GroupPtr& g, const grp::Subgroup& h, unsigned p);

/// Block-diagonal A ⊕ B; throws InvalidArgument unless group and prime agree.
KGModule direct_sum(const KGModule& a, const KGModule& b);

/// M restricted to H, over the standalone group materialize(H).group.
struct RestrictedModule {
  KGModule module;
  grp::Embedding embedding;
};

/// Throws InvalidArgument when H does not lie in M's group.
RestrictedModule restrict(const KGModule& m, const grp::Subgroup& h);

/// Throws InvalidArgument unless M and N share group and prime.
void require_compatible(const KGModule& m, const KGModule& n);

}  // namespace fusionlim::rep
