#include "fusionlim/grp/perm.hpp"

#include <numeric>

#include "fusionlim/error.hpp"

namespace fusionlim::grp {

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (const auto x : images_) {
    if (x >= images_.size() || seen[x])
      throw InvalidArgument("image array is not a permutation");
    seen[x] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  Perm p;
  p.images_ = std::move(images);
  return p;
}

Perm Perm::from_cycles(std::size_t degree,
                       std::initializer_list<std::initializer_list<Point>> cycles) {
  auto images = identity(degree).images_;
  for (const auto& cycle : cycles) {
    const std::vector<Point> c(cycle);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree) throw InvalidArgument("cycle point out of range");
      images[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Perm(std::move(images));
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree()) throw InvalidArgument("permutation degree mismatch");
  Perm out;
  out.images_.resize(degree());
  for (std::size_t x = 0; x < degree(); ++x) out.images_[x] = images_[rhs.images_[x]];
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.images_.resize(degree());
  for (std::size_t x = 0; x < degree(); ++x) out.images_[images_[x]] = static_cast<Point>(x);
  return out;
}

bool Perm::is_identity() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::size_t Perm::order() const {
  std::size_t result = 1;
  std::vector<bool> seen(degree(), false);
  for (std::size_t x = 0; x < degree(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (auto y = static_cast<Point>(x); !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Perm::cycle_string() const {
  std::string out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t x = 0; x < degree(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    out += '(';
    for (auto y = static_cast<Point>(x); !seen[y]; y = images_[y]) {
      seen[y] = true;
      if (out.back() != '(') out += ' ';
      out += std::to_string(y);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace fusionlim::grp
