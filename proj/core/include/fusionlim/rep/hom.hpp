#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fusionlim/fincat/diagram.hpp"
#include "fusionlim/fincat/subgroup_category.hpp"
#include "fusionlim/fpla/subspace.hpp"
#include "fusionlim/rep/module.hpp"

namespace fusionlim::rep {

/// φ: M → N is a dim N × dim M matrix, vectorized row-major as
/// x[i·dim M + j] = φ(i, j).
fpla::Vector vectorize(const fpla::FpMatrix& phi);
fpla::FpMatrix unvectorize(unsigned p, std::size_t rows, std::size_t cols,
                           const fpla::Vector& x);

/// Intertwiners M|H → N|H, as a subspace of vectorized dim N × dim M
/// matrices. H is a subgroup of the common group of M and N.
struct HomSpace {
  KGModule source;
  KGModule target;
  grp::Subgroup over;
  fpla::Subspace space;

  std::size_t dim() const noexcept { return space.dim(); }
  std::vector<fpla::FpMatrix> basis() const;
  fpla::FpMatrix as_matrix(const fpla::Vector& x) const;
};

/// Hom_{kG}(M, N): kernel of φ ↦ (φρ_M(s) − ρ_N(s)φ)_s over the generators.
HomSpace hom_space(const KGModule& m, const KGModule& n);
/// Hom_{kH}(M|H, N|H) for H ≤ G.
HomSpace hom_space(const KGModule& m, const KGModule& n, const grp::Subgroup& h);

/// Span of Tr(ψ) = Σ_{h∈H} ρ_N(h) ψ ρ_M(h)⁻¹ over ψ ∈ Hom_k(M, N): the
/// H-maps M → N factoring through a projective kH-module.
fpla::Subspace projective_trace_subspace(const KGModule& m, const KGModule& n);
fpla::Subspace projective_trace_subspace(const KGModule& m, const KGModule& n,
                                         const grp::Subgroup& h);

struct StableHom {
  HomSpace hom;
  fpla::Subspace phom;
  fpla::Subquotient quotient;

  std::size_t dim() const noexcept { return quotient.dim(); }
};

StableHom stable_hom(const KGModule& m, const KGModule& n);
StableHom stable_hom(const KGModule& m, const KGModule& n, const grp::Subgroup& h);

/// For g ∈ G with gPg⁻¹ ⊆ Q: φ ↦ ρ_N(g)⁻¹ φ ρ_M(g), sending vectorized
/// Hom_{kQ}(M, N) into Hom_{kP}(M, N). Throws InvalidArgument when the
/// conjugation condition fails.
fpla::Vector conj_twist(const KGModule& m, const KGModule& n, grp::ElementId g,
                        const grp::Subgroup& p, const grp::Subgroup& q,
                        const fpla::Vector& phi);

/// Relative trace Σ_{r ∈ G/H} ρ_N(r) φ ρ_M(r)⁻¹ over a left transversal.
fpla::Vector relative_trace(const KGModule& m, const KGModule& n, const grp::Subgroup& h,
                            const fpla::Vector& phi);

/// Contravariant diagram P ↦ Hom_{kP}(M, N) (or its stable quotient) over
/// T_S(G), acting by conj_twist, expressed in the chosen bases.
struct HomDiagram {
  fincat::VectDiagram diagram;
  std::vector<HomSpace> homs;
  /// Present when stable.
  std::vector<fpla::Subquotient> quotients;
  bool stable = false;

  /// Coordinates of a vectorized P-map in the basis of value(P).
  fpla::Vector coordinates(fincat::ObjectId p, const fpla::Vector& phi) const;
};

HomDiagram hom_diagram(const fincat::SubgroupCategory& t, const KGModule& m,
                       const KGModule& n, bool stable);

struct HomLimitReport {
  std::size_t dim_global = 0;
  std::size_t dim_limit = 0;
  std::size_t comparison_rank = 0;
  bool image_in_limit = false;
  bool injective = false;
  bool surjective = false;
  /// False when S is not a Sylow subgroup: the numbers are still computed
  /// but the isomorphism is not claimed.
  bool claim = true;
  bool iso() const noexcept { return image_in_limit && injective && surjective; }
};

/// Compares Hom_{kG}(M, N) (or stHom) with the limit over T_S(G)^op of the
/// P-local Hom spaces through restriction to every P.
HomLimitReport hom_limit_over_transporter(const grp::GroupPtr& g, const grp::Subgroup& s,
                                          const KGModule& m, const KGModule& n, bool stable);

/// Two transporter morphisms with the same image under π whose actions on
/// the Hom diagram differ, showing that the assignment does not factor
/// through the fusion category.
struct FusionObstruction {
  fincat::MorphismId first;
  fincat::MorphismId second;
  std::string description;
};

std::optional<FusionObstruction> fusion_obstruction(const fincat::SubgroupCategory& t,
                                                    const fincat::SubgroupCategory& f,
                                                    const HomDiagram& d);

}  // namespace fusionlim::rep
