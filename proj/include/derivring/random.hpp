#pragma once

// Seeded sampling of ring values and matrices.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++ standard.
// Bounded integers are drawn by rejection sampling below rather than through
// std::uniform_int_distribution (whose algorithm is implementation-defined), so a
// given seed produces the same instances on every platform and standard library.

#include <cstdint>
#include <random>

#include "derivring/matrix.hpp"

namespace derivring {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Seed for instance `index` of a campaign with base seed `base` (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// Uniform element of Z_m, or a polynomial of degree <= max_degree with uniform coefficients.
RingValue random_value(Rng& rng, const RingDescriptor& ring, unsigned max_degree);
Matrix random_matrix(Rng& rng, const RingDescriptor& ring, std::size_t n, unsigned max_degree);
SymmetricMatrix random_symmetric(Rng& rng, const RingDescriptor& ring, std::size_t n,
                                 unsigned max_degree);

}  // namespace derivring
