#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fusionlim/fpla/field.hpp"
#include "fusionlim/fpla/matrix.hpp"

namespace fusionlim::fpla {

struct SparseEntry {
  std::uint32_t index;
  Residue value;

  bool operator==(const SparseEntry&) const = default;
};

struct Triplet {
  std::uint32_t row;
  std::uint32_t col;
  long long value;
};

/// Compressed-column sparse matrix over F_p. Within a column, entries are
/// sorted by row with no duplicates and no stored zeros.
class SparseFpMatrix {
 public:
  SparseFpMatrix() = default;
  SparseFpMatrix(unsigned p, std::size_t rows, std::size_t cols);

  /// Duplicate coordinates are summed; zero sums are dropped.
  static SparseFpMatrix from_triplets(unsigned p, std::size_t rows,
                                      std::size_t cols,
                                      std::vector<Triplet> triplets);
  static SparseFpMatrix from_dense(const FpMatrix& dense);

  unsigned p() const noexcept { return p_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nonzeros() const noexcept { return entries_.size(); }

  /// Entries of column c; SparseEntry::index is the row.
  std::span<const SparseEntry> column(std::size_t c) const noexcept {
    return {entries_.data() + starts_[c], starts_[c + 1] - starts_[c]};
  }

  SparseFpMatrix transposed() const;
  FpMatrix to_dense() const;
  SparseFpMatrix operator*(const SparseFpMatrix& rhs) const;
  bool is_zero() const noexcept { return entries_.empty(); }

  bool operator==(const SparseFpMatrix&) const = default;

 private:
  unsigned p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> starts_{0};
  std::vector<SparseEntry> entries_;
};

}  // namespace fusionlim::fpla
