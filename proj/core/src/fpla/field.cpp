#include "fusionlim/fpla/field.hpp"

#include <string>

#include "fusionlim/error.hpp"

namespace fusionlim::fpla {

bool is_prime(unsigned n) noexcept {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(unsigned p) : p_(p) {
  if (!is_prime(p) || p > kMaxPrime)
    throw InvalidArgument("modulus " + std::to_string(p) +
                          " is not a prime below 256");
  for (unsigned a = 1; a < p; ++a)
    for (unsigned b = 1; b < p; ++b)
      if ((a * b) % p == 1) {
        inverse_[a] = static_cast<Residue>(b);
        break;
      }
}

Residue PrimeField::inv(Residue a) const {
  if (a == 0 || a >= p_) throw InvalidArgument("zero has no inverse");
  return inverse_[a];
}

}  // namespace fusionlim::fpla
