#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace fusionlim::grp {

using Point = std::uint32_t;

/// Permutation of {0, ..., degree − 1}, stored as its image array.
/// Products compose right to left: (a * b)(x) = a(b(x)).
class Perm {
 public:
  Perm() = default;
  /// Throws InvalidArgument unless images is a bijection.
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree);
  /// Builds a permutation from disjoint cycles, e.g. {{0, 1, 2}, {3, 4}}.
  static Perm from_cycles(std::size_t degree,
                          std::initializer_list<std::initializer_list<Point>> cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_.at(x); }
  const std::vector<Point>& images() const noexcept { return images_; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  bool is_identity() const noexcept;
  std::size_t order() const;

  std::string cycle_string() const;

  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<Point> images_;
};

}  // namespace fusionlim::grp
