#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fusionlim/coh/cohomology.hpp"
#include "fusionlim/fincat/diagram.hpp"
#include "fusionlim/fincat/subgroup_category.hpp"
#include "fusionlim/fpla/matrix.hpp"
#include "fusionlim/fpla/subspace.hpp"
#include "fusionlim/grp/perm_group.hpp"
#include "fusionlim/rep/module.hpp"

namespace fusionlim::mackey {

using LatticeIndex = std::size_t;

/// Restrictions, conjugations and (optionally) transfers on the subgroup
/// lattice of S ≤ G, in subgroups_of(S) order. Matrices act on columns:
/// res(Q, P) is dims[P] × dims[Q]; conj(g, P) maps value(P) to value(gPg⁻¹);
/// transfer(P, Q) maps value(P) to value(Q).
struct MackeyData {
  grp::GroupPtr group;
  unsigned p = 2;
  /// subgroups_of(S); S itself is the last entry.
  std::vector<grp::Subgroup> lattice;
  std::vector<std::size_t> dims;
  std::vector<std::vector<std::string>> basis_labels;
  std::string label;
  /// Keyed by (Q, P) with P ≤ Q.
  std::map<std::pair<LatticeIndex, LatticeIndex>, fpla::FpMatrix> res;
  /// Keyed by (g, P) for every g ∈ G with gPg⁻¹ ≤ S.
  std::map<std::pair<grp::ElementId, LatticeIndex>, fpla::FpMatrix> conj;
  /// Keyed by (P, Q) with P ≤ Q; absent for the cohomology instance.
  std::optional<std::map<std::pair<LatticeIndex, LatticeIndex>, fpla::FpMatrix>> transfer;

  const grp::Subgroup& s() const { return lattice.back(); }
  LatticeIndex index_of(const grp::Subgroup& h) const;
  bool has_transfer() const noexcept { return transfer.has_value(); }
  /// Checks shapes and contravariant functoriality over T_S(G); throws
  /// FunctorialityError naming the offending composable pair.
  void validate() const;
};

/// value(P) = M^P, res = inclusion, conj(g) = ρ(g), transfer(P → Q) = Σ ρ(r)
/// over a left transversal of P in Q. Throws InvalidArgument unless S ≤ G.
MackeyData fixed_point_mackey(const rep::KGModule& m, const grp::Subgroup& s);

/// value(P) = H^n(P; F_p) with restriction and conjugation; no transfers.
MackeyData cohomology_mackey(const grp::GroupPtr& g, const grp::Subgroup& s, unsigned p,
                             std::size_t n, coh::CohomologyStore& store);

/// The transporter diagram g: P → Q ↦ conj(g⁻¹, gPg⁻¹) · res(Q, gPg⁻¹).
fincat::VectDiagram transporter_diagram(const MackeyData& md, const fincat::SubgroupCategory& t);
/// The same data over F_S(G). Throws FunctorialityError when two transporter
/// morphisms with the same image in F_S(G) act differently.
fincat::VectDiagram fusion_diagram(const MackeyData& md, const fincat::SubgroupCategory& f,
                                   const fincat::SubgroupCategory& t);

struct StableElements {
  fincat::IndexKind index;
  fincat::LimitResult limit;
  /// Component of the limit in value(S), in value(S) coordinates.
  fpla::Subspace s_component;

  std::size_t dim() const noexcept { return limit.dim(); }
};

StableElements stable_elements_limit(const MackeyData& md, fincat::IndexKind index);

struct FixedPointCEReport {
  std::string module;
  std::string s_label;
  bool s_is_sylow = false;
  std::size_t index = 1;
  std::size_t dim_global = 0;
  std::size_t dim_limit = 0;
  /// M^G and the S component of the limit coincide inside M^S.
  bool same_subspace = false;
  bool index_invertible = false;
  /// tr_S^G applied to the S component spans M^G.
  bool transfer_surjective = false;
  /// (1/[G:S])·tr_S^G and res_S^G are mutually inverse on M^G and the limit.
  bool section = false;

  bool pass() const noexcept { return same_subspace && transfer_surjective && section; }
};

/// Compares M^G with the stable elements of fixed_point_mackey(M, S) over
/// T_S(G), including the transfer section from the limit back to M^G.
/// S defaults to the first Sylow p-subgroup.
FixedPointCEReport verify_fixed_point_ce(const rep::KGModule& m,
                                         std::optional<grp::Subgroup> s = std::nullopt);

struct AxiomFailure {
  LatticeIndex p_index = 0;
  LatticeIndex q_index = 0;
  std::string description;
};

struct CohomologicalReport {
  std::size_t pairs_checked = 0;
  std::vector<AxiomFailure> failures;

  bool pass() const noexcept { return failures.empty(); }
};

/// transfer(P, Q) · res(Q, P) = [Q:P]·id on value(Q) for every P ≤ Q.
/// Throws InvalidArgument when transfers are absent.
CohomologicalReport check_cohomological(const MackeyData& md);

struct MonadicityReport {
  std::string module;
  std::size_t index = 1;
  bool index_invertible = false;
  std::size_t dim_global = 0;
  /// tr_S^G · res_S^G = [G:S]·id on M^G.
  bool composite_is_index = false;

  bool pass() const noexcept { return index_invertible && composite_is_index; }
};

/// S defaults to the first Sylow p-subgroup of M's group.
MonadicityReport monadicity_section_witness(const rep::KGModule& m,
                                            std::optional<grp::Subgroup> s = std::nullopt);

}  // namespace fusionlim::mackey
