#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace fusionlim::fpla {

using Residue = std::uint8_t;
using Vector = std::vector<Residue>;

/// Largest supported modulus; residues are stored in one byte.
inline constexpr unsigned kMaxPrime = 251;

bool is_prime(unsigned n) noexcept;

/// Arithmetic in F_p, p < 256.
class PrimeField {
 public:
  explicit PrimeField(unsigned p);

  unsigned p() const noexcept { return p_; }

  Residue reduce(long long v) const noexcept {
    long long r = v % static_cast<long long>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue a, Residue b) const noexcept {
    unsigned s = unsigned{a} + b;
    return static_cast<Residue>(s >= p_ ? s - p_ : s);
  }
  Residue sub(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(a >= b ? a - b : a + p_ - b);
  }
  Residue neg(Residue a) const noexcept {
    return static_cast<Residue>(a == 0 ? 0 : p_ - a);
  }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>((unsigned{a} * b) % p_);
  }
  Residue inv(Residue a) const;

 private:
  unsigned p_;
  std::array<Residue, 256> inverse_{};
};

}  // namespace fusionlim::fpla
