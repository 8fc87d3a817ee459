#include "fusionlim/fpla/sparse_matrix.hpp"

#include <algorithm>
#include <unordered_map>

#include "fusionlim/error.hpp"

namespace fusionlim::fpla {

SparseFpMatrix::SparseFpMatrix(unsigned p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), starts_(cols + 1, 0) {
  PrimeField{p};
}

SparseFpMatrix SparseFpMatrix::from_triplets(unsigned p, std::size_t rows,
                                             std::size_t cols,
                                             std::vector<Triplet> triplets) {
  const PrimeField field(p);
  SparseFpMatrix m(p, rows, cols);
  for (const auto& t : triplets)
    if (t.row >= rows || t.col >= cols)
      throw InvalidArgument("sparse triplet out of range");
  std::sort(triplets.begin(), triplets.end(),
            [](const Triplet& a, const Triplet& b) {
              return a.col != b.col ? a.col < b.col : a.row < b.row;
            });
  m.entries_.reserve(triplets.size());
  std::size_t i = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    m.starts_[c] = m.entries_.size();
    while (i < triplets.size() && triplets[i].col == c) {
      const auto r = triplets[i].row;
      long long sum = 0;
      while (i < triplets.size() && triplets[i].col == c &&
             triplets[i].row == r)
        sum += triplets[i++].value;
      const Residue v = field.reduce(sum);
      if (v != 0) m.entries_.push_back({r, v});
    }
  }
  m.starts_[cols] = m.entries_.size();
  return m;
}

SparseFpMatrix SparseFpMatrix::from_dense(const FpMatrix& dense) {
  SparseFpMatrix m(dense.p(), dense.rows(), dense.cols());
  for (std::size_t c = 0; c < dense.cols(); ++c) {
    m.starts_[c] = m.entries_.size();
    for (std::size_t r = 0; r < dense.rows(); ++r)
      if (dense(r, c) != 0)
        m.entries_.push_back({static_cast<std::uint32_t>(r), dense(r, c)});
  }
  m.starts_[dense.cols()] = m.entries_.size();
  return m;
}

SparseFpMatrix SparseFpMatrix::transposed() const {
  SparseFpMatrix t(p_, cols_, rows_);
  std::vector<std::size_t> counts(rows_ + 1, 0);
  for (const auto& e : entries_) ++counts[e.index + 1];
  for (std::size_t r = 0; r < rows_; ++r) counts[r + 1] += counts[r];
  t.starts_ = counts;
  t.entries_.resize(entries_.size());
  std::vector<std::size_t> fill(counts.begin(), counts.end() - 1);
  for (std::size_t c = 0; c < cols_; ++c)
    for (const auto& e : column(c))
      t.entries_[fill[e.index]++] = {static_cast<std::uint32_t>(c), e.value};
  return t;
}

FpMatrix SparseFpMatrix::to_dense() const {
  FpMatrix d(p_, rows_, cols_);
  for (std::size_t c = 0; c < cols_; ++c)
    for (const auto& e : column(c)) d.set(e.index, c, e.value);
  return d;
}

SparseFpMatrix SparseFpMatrix::operator*(const SparseFpMatrix& rhs) const {
  if (p_ != rhs.p_ || cols_ != rhs.rows_)
    throw InvalidArgument("sparse product: inner dimensions differ");
  const PrimeField field(p_);
  SparseFpMatrix out(p_, rows_, rhs.cols_);
  std::unordered_map<std::uint32_t, unsigned> acc;
  std::vector<std::uint32_t> keys;
  for (std::size_t c = 0; c < rhs.cols_; ++c) {
    out.starts_[c] = out.entries_.size();
    acc.clear();
    for (const auto& b : rhs.column(c))
      for (const auto& a : column(b.index)) {
        auto& slot = acc[a.index];
        slot = field.add(static_cast<Residue>(slot), field.mul(a.value, b.value));
      }
    keys.clear();
    for (const auto& [r, v] : acc)
      if (v != 0) keys.push_back(r);
    std::sort(keys.begin(), keys.end());
    for (auto r : keys)
      out.entries_.push_back({r, static_cast<Residue>(acc[r])});
  }
  out.starts_[rhs.cols_] = out.entries_.size();
  return out;
}

}  // namespace fusionlim::fpla
