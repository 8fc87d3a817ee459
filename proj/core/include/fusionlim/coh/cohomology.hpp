#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fusionlim/coh/bar.hpp"
#include "fusionlim/fincat/diagram.hpp"
#include "fusionlim/fincat/subgroup_category.hpp"
#include "fusionlim/fpla/matrix.hpp"
#include "fusionlim/fpla/subspace.hpp"

namespace fusionlim::coh {

/// H^n(G; F_p) = Z^n / B^n inside the normalized cochains C^n.
///
/// Classes are represented by cocycles reduced modulo B^n; their span is
/// kept in echelon form, so class coordinates are read off after reducing a
/// cocycle modulo B^n.
class CohomologyGroup {
 public:
  CohomologyGroup() = default;
  CohomologyGroup(std::shared_ptr<const BarResolution> bar, std::size_t n,
                  fpla::Subspace boundaries, fpla::Subspace classes);

  std::size_t degree() const noexcept { return n_; }
  std::size_t dim() const noexcept { return classes_.dim(); }
  const grp::GroupPtr& group() const { return bar_->group(); }
  unsigned p() const { return bar_->p(); }
  std::size_t cochain_dim() const { return bar_->cochain_dim(n_); }
  const fpla::Subspace& boundaries() const noexcept { return boundaries_; }
  const fpla::Subspace& classes() const noexcept { return classes_; }
  std::vector<fpla::Vector> representatives() const { return classes_.basis(); }

  bool is_cocycle(const fpla::Vector& f) const;
  /// Class of a cocycle in the representative basis; nullopt when f is not a
  /// cocycle.
  std::optional<fpla::Vector> coordinates(const fpla::Vector& f) const;

 private:
  std::shared_ptr<const BarResolution> bar_;
  std::size_t n_ = 0;
  fpla::Subspace boundaries_;
  fpla::Subspace classes_;
};

struct GroupCohomology {
  std::shared_ptr<const BarResolution> bar;
  std::vector<CohomologyGroup> degrees;
  bool from_cache = false;

  const CohomologyGroup& operator[](std::size_t n) const { return degrees.at(n); }
};

/// Computes every H^n for n ≤ N from an existing resolution.
GroupCohomology compute_cohomology(std::shared_ptr<const BarResolution> bar);

struct StoreOptions {
  std::optional<std::filesystem::path> cache_dir;
  std::size_t budget = kDefaultBudget;
  bool force = false;
};

/// Memoizes cohomology per (group digest, p) and optionally persists the
/// class representatives, one file per (digest, p, N).
class CohomologyStore {
 public:
  explicit CohomologyStore(StoreOptions options = {});

  /// Throws BudgetExceeded when N is over the degree cap.
  std::shared_ptr<const GroupCohomology> get(const grp::GroupPtr& g, unsigned p,
                                             std::size_t max_degree);
  /// Cohomology of a subgroup, computed on its standalone group; cochain
  /// indices follow the subgroup's element positions.
  std::shared_ptr<const GroupCohomology> get(const grp::Subgroup& h, unsigned p,
                                             std::size_t max_degree);

  const StoreOptions& options() const noexcept { return options_; }
  std::size_t cache_hits() const;
  std::vector<std::string> warnings() const;

  /// File holding the representatives for (digest, p, N).
  std::filesystem::path cache_file(std::uint64_t digest, unsigned p, std::size_t n) const;

 private:
  std::optional<GroupCohomology> load(const std::shared_ptr<const BarResolution>& bar);
  void save(const GroupCohomology& c) const;

  StoreOptions options_;
  mutable std::mutex mutex_;
  std::map<std::pair<std::uint64_t, unsigned>, std::shared_ptr<const GroupCohomology>> memo_;
  std::map<std::uint64_t, grp::GroupPtr> groups_;
  std::size_t cache_hits_ = 0;
  std::vector<std::string> warnings_;
};

/// Pulls a cochain on Q back along an injective homomorphism P → Q given by
/// `table` (P position ↦ Q position, identity to identity).
fpla::Vector pull_back_cochain(const fpla::Vector& f, std::size_t n,
                               const std::vector<grp::ElementId>& table,
                               std::size_t target_order);

/// Matrix of H^n(Q) → H^n(P) induced by the homomorphism `table`.
fpla::FpMatrix induced_map(const CohomologyGroup& source, const CohomologyGroup& target,
                           const std::vector<grp::ElementId>& table);

struct CohMap {
  std::size_t degree = 0;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  fpla::FpMatrix matrix;
};

/// res: H^n(G) → H^n(H).
CohMap restriction_map(const grp::GroupPtr& g, const grp::Subgroup& h, unsigned p,
                       std::size_t n, CohomologyStore& store);
/// c_g^*: H^n(Q) → H^n(P) for gPg⁻¹ ⊆ Q; throws InvalidArgument otherwise.
CohMap conjugation_map(grp::ElementId g, const grp::Subgroup& p_sub, const grp::Subgroup& q,
                       unsigned p, std::size_t n, CohomologyStore& store);

struct CohomologyDiagram {
  fincat::VectDiagram diagram;
  std::vector<std::shared_ptr<const GroupCohomology>> values;
  std::size_t degree = 0;
};

/// P ↦ H^n(P) over F_S(G) or T_S(G); f ↦ pullback along its conjugation
/// homomorphism. Functoriality is validated.
CohomologyDiagram cohomology_diagram(const fincat::SubgroupCategory& c, unsigned p,
                                     std::size_t n, CohomologyStore& store);

/// The H^n(S) component of the fusion limit.
fpla::Subspace stable_elements(const grp::GroupPtr& g, const grp::Subgroup& s, unsigned p,
                               std::size_t n, CohomologyStore& store);

struct CEDegree {
  std::size_t degree = 0;
  bool computed = false;
  std::size_t dim_global = 0;
  std::size_t dim_fusion_limit = 0;
  std::size_t dim_transporter_limit = 0;
  std::size_t comparison_rank = 0;
  bool image_in_limit = false;
  /// Limits over F and over T coincide as subspaces of ∏ H^n(P), and in
  /// their H^n(S) components; and the limit of the pulled-back diagram agrees.
  bool finality = false;
  std::string note;

  bool injective() const noexcept { return computed && comparison_rank == dim_global; }
  bool iso() const noexcept {
    return computed && image_in_limit && injective() && comparison_rank == dim_fusion_limit;
  }
};

struct CEReport {
  grp::GroupPtr group;
  unsigned p = 2;
  std::optional<grp::Subgroup> sylow;
  bool p_divides_order = false;
  std::vector<CEDegree> degrees;
  std::string note;

  bool all_pass() const;
};

/// H^n(G) from the bar resolution of G against the limit of P ↦ H^n(P) over
/// F_S(G), for n ≤ n_max, plus the transporter comparison. Degrees over the
/// cap are reported as not computed.
CEReport verify_cartan_eilenberg(const grp::GroupPtr& g, unsigned p, std::size_t n_max,
                                 CohomologyStore& store);

}  // namespace fusionlim::coh
