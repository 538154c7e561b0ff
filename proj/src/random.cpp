#include "derivring/random.hpp"

#include <limits>

namespace derivring {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("Rng::below needs a positive bound");
  // Largest multiple of bound that fits; values at or above it are rejected.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

RingValue random_value(Rng& rng, const RingDescriptor& ring, unsigned max_degree) {
  const std::size_t len = ring.is_poly() ? max_degree + 1 : 1;
  std::vector<std::uint64_t> coeffs(len);
  for (auto& c : coeffs) c = rng.below(ring.modulus());
  return RingValue::from_coefficients(ring, std::move(coeffs));
}

Matrix random_matrix(Rng& rng, const RingDescriptor& ring, std::size_t n, unsigned max_degree) {
  Matrix m(ring, n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) m.set(i, j, random_value(rng, ring, max_degree));
  }
  return m;
}

SymmetricMatrix random_symmetric(Rng& rng, const RingDescriptor& ring, std::size_t n,
                                 unsigned max_degree) {
  Matrix m(ring, n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      RingValue v = random_value(rng, ring, max_degree);
      m.set(j, i, v);
      m.set(i, j, std::move(v));
    }
  }
  return SymmetricMatrix(std::move(m));
}

}  // namespace derivring
