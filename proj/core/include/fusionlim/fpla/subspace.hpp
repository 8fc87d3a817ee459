#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fusionlim/fpla/field.hpp"
#include "fusionlim/fpla/matrix.hpp"
#include "fusionlim/fpla/sparse_matrix.hpp"

namespace fusionlim::fpla {

/// Subspace of F_p^n kept in reduced row echelon form.
///
/// Every basis vector has a pivot (its lowest nonzero coordinate) equal to 1,
/// and every other basis vector vanishes at that coordinate. Because of this,
/// the coordinates of a member vector are simply its values at the pivots.
///
/// Vectors are inserted incrementally. Reducing a new vector costs one row
/// operation per pivot where it is nonzero, so streaming many sparse rows
/// (the bar differentials) is cheap; the dominant cost is clearing each new
/// pivot column from the existing rows. Over F_2 rows are bit-packed.
class Subspace {
 public:
  Subspace() : Subspace(2, 0) {}
  Subspace(unsigned p, std::size_t ambient_dim);

  static Subspace span(unsigned p, std::size_t ambient_dim,
                       const std::vector<Vector>& vectors);
  static Subspace whole(unsigned p, std::size_t ambient_dim);

  unsigned p() const noexcept { return p_; }
  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t dim() const noexcept { return row_pivot_.size(); }

  /// Adds v to the spanning set; returns true when the dimension grew.
  bool insert(std::span<const Residue> v);
  bool insert_sparse(std::span<const SparseEntry> v);

  /// Pivot coordinates in increasing order; basis vector i has pivot
  /// pivots()[i].
  const std::vector<std::uint32_t>& pivots() const noexcept {
    return sorted_pivots_;
  }
  Vector basis_vector(std::size_t i) const;
  std::vector<Vector> basis() const;
  /// Basis as the rows of a dim × ambient_dim matrix.
  FpMatrix basis_matrix() const;

  /// v minus its projection onto the subspace along the pivot coordinates.
  Vector reduce(std::span<const Residue> v) const;
  bool contains(std::span<const Residue> v) const;
  bool contains(const Subspace& other) const;
  /// Coefficients of v in basis(), or nullopt when v is not a member.
  std::optional<Vector> coordinates(std::span<const Residue> v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersection(const Subspace& other) const;
  /// {x : <b, x> = 0 for every basis vector b}, i.e. the kernel of the
  /// matrix whose rows span this subspace.
  Subspace annihilator() const;

  bool operator==(const Subspace& other) const;

 private:
  Residue entry(std::size_t storage_row, std::size_t col) const noexcept;
  bool absorb(std::size_t lowest);

  unsigned p_;
  std::size_t n_;
  PrimeField field_;
  bool packed_;
  std::size_t stride_;
  std::vector<std::uint64_t> bits_;
  std::vector<Residue> bytes_;
  std::vector<std::int32_t> row_of_col_;
  std::vector<std::uint32_t> row_pivot_;
  std::vector<std::uint32_t> sorted_pivots_;
  mutable std::vector<std::uint64_t> scratch_bits_;
  mutable std::vector<Residue> scratch_bytes_;
};

/// Z / B for subspaces B ⊆ Z of a common ambient space.
///
/// The complement is spanned by vectors reduced modulo B, so its pivots are
/// disjoint from B's and quotient coordinates are read off directly.
class Subquotient {
 public:
  Subquotient() = default;
  /// Throws InvalidArgument unless denominator ⊆ numerator.
  Subquotient(Subspace numerator, Subspace denominator);

  std::size_t dim() const noexcept { return complement_.dim(); }
  const Subspace& numerator() const noexcept { return numerator_; }
  const Subspace& denominator() const noexcept { return denominator_; }
  const Subspace& complement() const noexcept { return complement_; }
  /// Lifted representatives of a basis of the quotient.
  std::vector<Vector> representatives() const { return complement_.basis(); }

  /// Class of v ∈ Z in the representative basis; nullopt when v ∉ Z.
  std::optional<Vector> coordinates(std::span<const Residue> v) const;

 private:
  Subspace numerator_;
  Subspace denominator_;
  Subspace complement_;
};

}  // namespace fusionlim::fpla
