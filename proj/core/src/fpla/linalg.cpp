#include "fusionlim/fpla/linalg.hpp"

#include "fusionlim/error.hpp"

namespace fusionlim::fpla {

Subspace row_space(const FpMatrix& a) {
  Subspace s(a.p(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) s.insert(a.row(r));
  return s;
}

Subspace row_space(const SparseFpMatrix& a) {
  const auto t = a.transposed();
  Subspace s(a.p(), a.cols());
  for (std::size_t r = 0; r < t.cols(); ++r) s.insert_sparse(t.column(r));
  return s;
}

std::size_t rank(const FpMatrix& a) {
  if (a.rows() < a.cols()) return row_space(a.transposed()).dim();
  return row_space(a).dim();
}

std::size_t rank(const SparseFpMatrix& a) {
  if (a.rows() <= a.cols()) {
    Subspace s(a.p(), a.rows());
    for (std::size_t c = 0; c < a.cols(); ++c) s.insert_sparse(a.column(c));
    return s.dim();
  }
  return row_space(a).dim();
}

Subspace kernel_basis(const FpMatrix& a) { return row_space(a).annihilator(); }

Subspace kernel_basis(const SparseFpMatrix& a) {
  return row_space(a).annihilator();
}

Subspace image_basis(const FpMatrix& a) { return row_space(a.transposed()); }

Subspace image_basis(const SparseFpMatrix& a) {
  Subspace s(a.p(), a.rows());
  for (std::size_t c = 0; c < a.cols(); ++c) s.insert_sparse(a.column(c));
  return s;
}

std::optional<Vector> solve(const FpMatrix& a, std::span<const Residue> b) {
  if (b.size() != a.rows()) throw InvalidArgument("solve: rhs length mismatch");
  const std::size_t n = a.cols();
  Subspace s(a.p(), n + 1);
  Vector row(n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::copy(a.row(r).begin(), a.row(r).end(), row.begin());
    row[n] = b[r];
    s.insert(row);
  }
  const auto& pivots = s.pivots();
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  Vector x(n, 0);
  for (std::size_t i = 0; i < s.dim(); ++i) x[pivots[i]] = s.basis_vector(i)[n];
  return x;
}

Subquotient subquotient(const Subspace& z, const Subspace& b) {
  return Subquotient(z, b);
}

bool is_injective(const FpMatrix& a) { return rank(a) == a.cols(); }

}  // namespace fusionlim::fpla
