#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fusionlim/fpla/field.hpp"

namespace fusionlim::fpla {

/// Dense matrix over F_p, row-major, entries reduced to [0, p).
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(unsigned p, std::size_t rows, std::size_t cols);

  static FpMatrix identity(unsigned p, std::size_t n);
  /// Entries may be arbitrary integers; they are reduced mod p.
  static FpMatrix from_rows(unsigned p,
                            const std::vector<std::vector<long long>>& rows);
  static FpMatrix from_row_vectors(unsigned p, std::size_t cols,
                                   const std::vector<Vector>& rows);
  static FpMatrix from_column_vectors(unsigned p, std::size_t rows,
                                      const std::vector<Vector>& columns);

  unsigned p() const noexcept { return p_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Residue operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, Residue v) noexcept {
    data_[r * cols_ + c] = v;
  }
  std::span<const Residue> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Residue> row(std::size_t r) noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  Vector column(std::size_t c) const;
  std::span<const Residue> data() const noexcept { return data_; }

  FpMatrix transposed() const;
  FpMatrix operator*(const FpMatrix& rhs) const;
  FpMatrix operator+(const FpMatrix& rhs) const;
  FpMatrix operator-(const FpMatrix& rhs) const;
  FpMatrix scaled(Residue s) const;
  /// Returns A·v.
  Vector apply(std::span<const Residue> v) const;
  /// Returns vᵀ·A.
  Vector apply_left(std::span<const Residue> v) const;

  bool is_zero() const noexcept;
  bool is_identity() const noexcept;

  bool operator==(const FpMatrix&) const = default;

 private:
  unsigned p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Residue> data_;
};

}  // namespace fusionlim::fpla
