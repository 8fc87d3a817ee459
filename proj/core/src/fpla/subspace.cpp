#include "fusionlim/fpla/subspace.hpp"

#include <algorithm>

#include "fusionlim/error.hpp"
#include "packed.hpp"

namespace fusionlim::fpla {

namespace {

void require_length(std::size_t got, std::size_t want) {
  if (got != want)
    throw InvalidArgument("vector length " + std::to_string(got) +
                          " does not match ambient dimension " +
                          std::to_string(want));
}

/// dst -= factor * src over [first, n), with a precomputed product table.
void axpy_bytes(Residue* dst, const Residue* src, Residue factor,
                std::size_t first, std::size_t n, const PrimeField& field) {
  const unsigned p = field.p();
  const Residue minus = field.neg(factor);
  Residue table[256];
  for (unsigned x = 0; x < p; ++x)
    table[x] = field.mul(static_cast<Residue>(x), minus);
  for (std::size_t i = first; i < n; ++i) {
    unsigned s = unsigned{dst[i]} + table[src[i]];
    dst[i] = static_cast<Residue>(s >= p ? s - p : s);
  }
}

}  // namespace

Subspace::Subspace(unsigned p, std::size_t ambient_dim)
    : p_(p),
      n_(ambient_dim),
      field_(p),
      packed_(p == 2),
      stride_(p == 2 ? detail::word_count(ambient_dim) : ambient_dim),
      row_of_col_(ambient_dim, -1) {}

Subspace Subspace::span(unsigned p, std::size_t ambient_dim,
                        const std::vector<Vector>& vectors) {
  Subspace s(p, ambient_dim);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Subspace Subspace::whole(unsigned p, std::size_t ambient_dim) {
  Subspace s(p, ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    SparseEntry e{static_cast<std::uint32_t>(i), 1};
    s.insert_sparse({&e, 1});
  }
  return s;
}

Residue Subspace::entry(std::size_t storage_row, std::size_t col) const noexcept {
  if (packed_)
    return static_cast<Residue>(
        detail::test_bit(bits_.data() + storage_row * stride_, col));
  return bytes_[storage_row * stride_ + col];
}

bool Subspace::insert(std::span<const Residue> v) {
  require_length(v.size(), n_);
  if (packed_) {
    scratch_bits_.assign(stride_, 0);
    detail::pack(v, scratch_bits_.data(), stride_);
    for (const auto c : sorted_pivots_)
      if (detail::test_bit(scratch_bits_.data(), c))
        detail::xor_words(scratch_bits_.data(),
                          bits_.data() + row_of_col_[c] * stride_, c >> 6,
                          stride_);
    return absorb(detail::lowest_bit(scratch_bits_.data(), stride_, n_));
  }
  scratch_bytes_.assign(v.begin(), v.end());
  for (auto& x : scratch_bytes_) x = static_cast<Residue>(x % p_);
  for (const auto c : sorted_pivots_)
    if (const Residue f = scratch_bytes_[c])
      axpy_bytes(scratch_bytes_.data(), bytes_.data() + row_of_col_[c] * stride_,
                 f, c, n_, field_);
  std::size_t lowest = 0;
  while (lowest < n_ && scratch_bytes_[lowest] == 0) ++lowest;
  return absorb(lowest);
}

bool Subspace::insert_sparse(std::span<const SparseEntry> v) {
  if (packed_) {
    scratch_bits_.assign(stride_, 0);
    for (const auto& e : v) {
      if (e.index >= n_) throw InvalidArgument("sparse index out of range");
      if (e.value & 1u) detail::flip_bit(scratch_bits_.data(), e.index);
    }
    // Pivot rows vanish at every other pivot, so the original entries are
    // exactly the elimination coefficients.
    for (const auto& e : v)
      if ((e.value & 1u) && row_of_col_[e.index] >= 0)
        detail::xor_words(scratch_bits_.data(),
                          bits_.data() + row_of_col_[e.index] * stride_,
                          e.index >> 6, stride_);
    return absorb(detail::lowest_bit(scratch_bits_.data(), stride_, n_));
  }
  scratch_bytes_.assign(n_, 0);
  for (const auto& e : v) {
    if (e.index >= n_) throw InvalidArgument("sparse index out of range");
    scratch_bytes_[e.index] =
        field_.add(scratch_bytes_[e.index], field_.reduce(e.value));
  }
  for (const auto& e : v) {
    if (row_of_col_[e.index] < 0) continue;
    // Re-read: duplicated indices were merged above.
    if (const Residue f = scratch_bytes_[e.index])
      axpy_bytes(scratch_bytes_.data(),
                 bytes_.data() + row_of_col_[e.index] * stride_, f, e.index, n_,
                 field_);
  }
  std::size_t lowest = 0;
  while (lowest < n_ && scratch_bytes_[lowest] == 0) ++lowest;
  return absorb(lowest);
}

bool Subspace::absorb(std::size_t lowest) {
  if (lowest >= n_) return false;
  const std::size_t rows = row_pivot_.size();
  if (packed_) {
    const std::size_t first = lowest >> 6;
    for (std::size_t r = 0; r < rows; ++r) {
      auto* row = bits_.data() + r * stride_;
      if (detail::test_bit(row, lowest))
        detail::xor_words(row, scratch_bits_.data(), first, stride_);
    }
    bits_.insert(bits_.end(), scratch_bits_.begin(), scratch_bits_.end());
  } else {
    const Residue scale = field_.inv(scratch_bytes_[lowest]);
    for (std::size_t i = lowest; i < n_; ++i)
      scratch_bytes_[i] = field_.mul(scratch_bytes_[i], scale);
    for (std::size_t r = 0; r < rows; ++r) {
      auto* row = bytes_.data() + r * stride_;
      if (const Residue f = row[lowest])
        axpy_bytes(row, scratch_bytes_.data(), f, lowest, n_, field_);
    }
    bytes_.insert(bytes_.end(), scratch_bytes_.begin(), scratch_bytes_.end());
  }
  row_of_col_[lowest] = static_cast<std::int32_t>(rows);
  row_pivot_.push_back(static_cast<std::uint32_t>(lowest));
  sorted_pivots_.insert(std::upper_bound(sorted_pivots_.begin(),
                                         sorted_pivots_.end(), lowest),
                        static_cast<std::uint32_t>(lowest));
  return true;
}

Vector Subspace::basis_vector(std::size_t i) const {
  const std::size_t r = static_cast<std::size_t>(row_of_col_[sorted_pivots_.at(i)]);
  Vector out(n_);
  if (packed_)
    detail::unpack(bits_.data() + r * stride_, n_, out);
  else
    std::copy_n(bytes_.data() + r * stride_, n_, out.begin());
  return out;
}

std::vector<Vector> Subspace::basis() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
  return out;
}

FpMatrix Subspace::basis_matrix() const {
  FpMatrix m(p_, dim(), n_);
  for (std::size_t i = 0; i < dim(); ++i) {
    const auto v = basis_vector(i);
    std::copy(v.begin(), v.end(), m.row(i).begin());
  }
  return m;
}

Vector Subspace::reduce(std::span<const Residue> v) const {
  require_length(v.size(), n_);
  Vector out(n_);
  if (packed_) {
    scratch_bits_.assign(stride_, 0);
    detail::pack(v, scratch_bits_.data(), stride_);
    for (const auto c : sorted_pivots_)
      if (detail::test_bit(scratch_bits_.data(), c))
        detail::xor_words(scratch_bits_.data(),
                          bits_.data() + row_of_col_[c] * stride_, c >> 6,
                          stride_);
    detail::unpack(scratch_bits_.data(), n_, out);
    return out;
  }
  for (std::size_t i = 0; i < n_; ++i) out[i] = static_cast<Residue>(v[i] % p_);
  for (const auto c : sorted_pivots_)
    if (const Residue f = out[c])
      axpy_bytes(out.data(), bytes_.data() + row_of_col_[c] * stride_, f, c, n_,
                 field_);
  return out;
}

bool Subspace::contains(std::span<const Residue> v) const {
  const auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Residue x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.n_ != n_ || other.p_ != p_) return false;
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

std::optional<Vector> Subspace::coordinates(std::span<const Residue> v) const {
  if (!contains(v)) return std::nullopt;
  Vector coords(dim());
  for (std::size_t i = 0; i < dim(); ++i)
    coords[i] = static_cast<Residue>(v[sorted_pivots_[i]] % p_);
  return coords;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.n_ != n_ || other.p_ != p_)
    throw InvalidArgument("subspace sum: ambient mismatch");
  Subspace out(*this);
  for (std::size_t i = 0; i < other.dim(); ++i) out.insert(other.basis_vector(i));
  return out;
}

Subspace Subspace::intersection(const Subspace& other) const {
  return annihilator().sum(other.annihilator()).annihilator();
}

Subspace Subspace::annihilator() const {
  Subspace out(p_, n_);
  Vector x(n_);
  for (std::size_t f = 0; f < n_; ++f) {
    if (row_of_col_[f] >= 0) continue;
    std::fill(x.begin(), x.end(), 0);
    x[f] = 1;
    for (std::size_t i = 0; i < row_pivot_.size(); ++i)
      if (const Residue e = entry(i, f)) x[row_pivot_[i]] = field_.neg(e);
    out.insert(x);
  }
  return out;
}

bool Subspace::operator==(const Subspace& other) const {
  if (p_ != other.p_ || n_ != other.n_ || sorted_pivots_ != other.sorted_pivots_)
    return false;
  for (std::size_t i = 0; i < dim(); ++i)
    if (basis_vector(i) != other.basis_vector(i)) return false;
  return true;
}

Subquotient::Subquotient(Subspace numerator, Subspace denominator)
    : numerator_(std::move(numerator)),
      denominator_(std::move(denominator)),
      complement_(numerator_.p(), numerator_.ambient_dim()) {
  if (!numerator_.contains(denominator_))
    throw InvalidArgument("subquotient: denominator is not contained in numerator");
  for (std::size_t i = 0; i < numerator_.dim(); ++i)
    complement_.insert(denominator_.reduce(numerator_.basis_vector(i)));
}

std::optional<Vector> Subquotient::coordinates(std::span<const Residue> v) const {
  if (!numerator_.contains(v)) return std::nullopt;
  return complement_.coordinates(denominator_.reduce(v));
}

}  // namespace fusionlim::fpla
