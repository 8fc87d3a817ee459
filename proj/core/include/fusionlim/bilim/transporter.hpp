#pragma once

#include <cstddef>

#include "fusionlim/fincat/subgroup_category.hpp"
#include "fusionlim/rep/module.hpp"

namespace fusionlim::bilim {

/// The transporter Hom diagram of M and N read as D_{d,d'} for the 2-functor
/// P ↦ mod kP, g ↦ c_g^*, with objects d_P = M|P, d'_P = N|P and structure
/// maps d_g = ρ_M(g)⁻¹, d'_g = ρ_N(g)⁻¹.
struct TransporterConstructionReport {
  std::size_t morphisms = 0;
  /// d_g intertwines c_g^*(M|Q) with M|P.
  bool structure_maps_linear = false;
  /// d_{h∘g} = d_g · d_h on composable transporter morphisms.
  bool cocycle = false;
  /// d_g is the identity on inclusions.
  bool inclusions_identity = false;
  /// φ ↦ d'_g ∘ φ ∘ d_g⁻¹ reproduces the transition maps of rep::hom_diagram.
  bool general_matches = false;
  /// On inclusions the transition maps are the plain restrictions.
  bool simplified_matches = false;

  bool pass() const noexcept {
    return structure_maps_linear && cocycle && inclusions_identity && general_matches &&
           simplified_matches;
  }
};

TransporterConstructionReport check_transporter_construction(const fincat::SubgroupCategory& t,
                                                             const rep::KGModule& m,
                                                             const rep::KGModule& n);

}  // namespace fusionlim::bilim
