#include "fusionlim/fpla/matrix.hpp"

#include <string>

#include "fusionlim/error.hpp"
#include "packed.hpp"

namespace fusionlim::fpla {

namespace {

void require_same_shape(const FpMatrix& a, const FpMatrix& b) {
  if (a.p() != b.p() || a.rows() != b.rows() || a.cols() != b.cols())
    throw InvalidArgument("matrix shape or modulus mismatch");
}

}  // namespace

FpMatrix::FpMatrix(unsigned p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  PrimeField{p};
}

FpMatrix FpMatrix::identity(unsigned p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FpMatrix FpMatrix::from_rows(unsigned p,
                             const std::vector<std::vector<long long>>& rows) {
  const PrimeField field(p);
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  FpMatrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidArgument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c)
      m.set(r, c, field.reduce(rows[r][c]));
  }
  return m;
}

FpMatrix FpMatrix::from_row_vectors(unsigned p, std::size_t cols,
                                    const std::vector<Vector>& rows) {
  FpMatrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidArgument("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

FpMatrix FpMatrix::from_column_vectors(unsigned p, std::size_t rows,
                                       const std::vector<Vector>& columns) {
  FpMatrix m(p, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows)
      throw InvalidArgument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, columns[c][r]);
  }
  return m;
}

Vector FpMatrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

FpMatrix FpMatrix::transposed() const {
  FpMatrix t(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, (*this)(r, c));
  return t;
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
  if (p_ != rhs.p_ || cols_ != rhs.rows_)
    throw InvalidArgument("matrix product: inner dimensions " +
                          std::to_string(cols_) + " and " +
                          std::to_string(rhs.rows_) + " differ");
  FpMatrix out(p_, rows_, rhs.cols_);
  if (rows_ == 0 || rhs.cols_ == 0) return out;

  if (p_ == 2) {
    const std::size_t words = detail::word_count(rhs.cols_);
    std::vector<detail::Word> packed(rhs.rows_ * words);
    for (std::size_t k = 0; k < rhs.rows_; ++k)
      detail::pack(rhs.row(k), packed.data() + k * words, words);
    std::vector<detail::Word> acc(words);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      const auto a = row(i);
      for (std::size_t k = 0; k < cols_; ++k)
        if (a[k]) detail::xor_words(acc.data(), packed.data() + k * words, 0,
                                    words);
      detail::unpack(acc.data(), rhs.cols_, out.row(i));
    }
    return out;
  }

  // Accumulate in 32 bits; (p-1)^2 * 65536 < 2^32 for p < 256.
  constexpr std::size_t kFlush = 65536;
  std::vector<std::uint32_t> acc(rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0u);
    const auto a = row(i);
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint32_t s = a[k];
      if (s == 0) continue;
      const auto b = rhs.row(k);
      for (std::size_t j = 0; j < rhs.cols_; ++j) acc[j] += s * b[j];
      if ((k + 1) % kFlush == 0)
        for (auto& x : acc) x %= p_;
    }
    auto o = out.row(i);
    for (std::size_t j = 0; j < rhs.cols_; ++j)
      o[j] = static_cast<Residue>(acc[j] % p_);
  }
  return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& rhs) const {
  require_same_shape(*this, rhs);
  const PrimeField field(p_);
  FpMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = field.add(data_[i], rhs.data_[i]);
  return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& rhs) const {
  require_same_shape(*this, rhs);
  const PrimeField field(p_);
  FpMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = field.sub(data_[i], rhs.data_[i]);
  return out;
}

FpMatrix FpMatrix::scaled(Residue s) const {
  const PrimeField field(p_);
  FpMatrix out(*this);
  for (auto& x : out.data_) x = field.mul(x, field.reduce(s));
  return out;
}

Vector FpMatrix::apply(std::span<const Residue> v) const {
  if (v.size() != cols_) throw InvalidArgument("vector length mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t s = 0;
    const auto a = row(r);
    for (std::size_t c = 0; c < cols_; ++c) s += unsigned{a[c]} * v[c];
    out[r] = static_cast<Residue>(s % p_);
  }
  return out;
}

Vector FpMatrix::apply_left(std::span<const Residue> v) const {
  if (v.size() != rows_) throw InvalidArgument("vector length mismatch");
  std::vector<std::uint64_t> acc(cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (v[r] == 0) continue;
    const auto a = row(r);
    for (std::size_t c = 0; c < cols_; ++c) acc[c] += unsigned{a[c]} * v[r];
  }
  Vector out(cols_);
  for (std::size_t c = 0; c < cols_; ++c)
    out[c] = static_cast<Residue>(acc[c] % p_);
  return out;
}

bool FpMatrix::is_zero() const noexcept {
  for (auto x : data_)
    if (x) return false;
  return true;
}

bool FpMatrix::is_identity() const noexcept {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

}  // namespace fusionlim::fpla
