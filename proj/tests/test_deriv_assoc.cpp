#include <bit>
#include <vector>

#include "doctest.h"

#include "derivring/deriv_assoc.hpp"
#include "derivring/random.hpp"

using namespace derivring;

namespace {

std::vector<std::pair<Matrix, Matrix>> random_pairs(Rng& rng, const RingDescriptor& ring, std::size_t n,
                                                    std::size_t count, unsigned degree) {
  std::vector<std::pair<Matrix, Matrix>> out;
  for (std::size_t k = 0; k < count; ++k) {
    auto x = random_matrix(rng, ring, n, degree);
    auto y = random_matrix(rng, ring, n, degree);
    out.emplace_back(std::move(x), std::move(y));
  }
  return out;
}

// Diagonal generator of the doubled extension, read off bit by bit: each of the k bits of
// the 0-based index contributes +½ when clear and -½ when set.
Matrix bitcount_generator(const RingDescriptor& ring, std::size_t n) {
  unsigned k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  Matrix u(ring, n);
  for (std::size_t p = 0; p < n; ++p) {
    const auto ones = static_cast<std::int64_t>(std::popcount(p));
    const auto zeros = static_cast<std::int64_t>(k) - ones;
    u.set(p + 1, p + 1, half(RingValue::from_int(ring, zeros - ones)));
  }
  return u;
}

}  // namespace

TEST_CASE("inner derivation worked example") {
  const auto z5 = RingDescriptor::zmod(5);
  const auto a = Matrix::from_ints(z5, {{1, 2}, {3, 4}});
  // a e12 - e12 a = [[0,1],[0,3]] - [[3,4],[0,0]]
  CHECK(inner_apply(a, matrix_unit(z5, 2, 1, 2)) == Matrix::from_ints(z5, {{2, 2}, {0, 3}}));
  CHECK(InnerDerivation(a)(a).is_zero());
}

TEST_CASE("inner derivations pass the Leibniz check") {
  Rng rng(1);
  for (auto ring : {RingDescriptor::zmod(9), RingDescriptor::poly_over(RingDescriptor::zmod(5))}) {
    for (std::size_t n = 2; n <= 4; ++n) {
      const InnerDerivation d(random_matrix(rng, ring, n, 2));
      const auto samples = random_pairs(rng, ring, n, 30, 2);
      const auto report = leibniz_check(d, samples);
      CHECK(report.ok());
      CHECK(report.checked == 30);
    }
  }
}

TEST_CASE("the checker catches non-derivations") {
  const auto z5 = RingDescriptor::zmod(5);
  const auto id = Matrix::identity(z5, 2);
  std::vector<std::pair<Matrix, Matrix>> samples{{id, id}};
  const auto identity_map = leibniz_check([](const Matrix& x) { return x; }, samples);
  REQUIRE_FALSE(identity_map.ok());
  CHECK(identity_map.violation->kind == "leibniz");
  // D(I*I) = I but D(I)I + ID(I) = 2I
  CHECK(identity_map.violation->rhs == RingValue::from_int(z5, 2) * id);

  const auto squaring = leibniz_check([](const Matrix& x) { return x * x; }, samples);
  REQUIRE_FALSE(squaring.ok());
  CHECK(squaring.violation->kind == "additivity");
}

TEST_CASE("2x2 extension worked examples") {
  const auto p5 = RingDescriptor::poly_over(RingDescriptor::zmod(5));
  const auto t = RingValue::variable(p5);
  const auto one = RingValue::from_int(p5, 1);
  const RingValue zero(p5);
  const auto d = extend_m2(BaseDerivation::formal(p5));
  const auto a = Matrix::from_rows(p5, {{t, one}, {zero, t * t}});
  const auto two_t = RingValue::from_int(p5, 2) * t;
  CHECK(d(a) == Matrix::from_rows(p5, {{one, one}, {zero, two_t}}));
  const auto b = Matrix::from_rows(p5, {{zero, t}, {t, zero}});
  // [[0, t+1], [1 - t, 0]] with -t = 4t
  CHECK(d(b) == Matrix::from_rows(p5, {{zero, t + one}, {RingValue::from_coefficients(p5, {1, 4}), zero}}));
}

TEST_CASE("tower extension matches the bit-count generator") {
  Rng rng(12);
  const auto p5 = RingDescriptor::poly_over(RingDescriptor::zmod(5));
  for (std::size_t n = 2; n <= 9; ++n) {
    for (const char* name : {"zero", "d/dt", "t*d/dt"}) {
      const auto delta = BaseDerivation::parse(p5, name);
      const auto tower = extend_tower(delta, n);
      const auto u = bitcount_generator(p5, n);
      CHECK(tower.inner_generator() == u);
      const auto dbar = entrywise(delta, n);
      for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_matrix(rng, p5, n, 3);
        CHECK(tower(a) == dbar(a) + commutator(u, a));
      }
    }
  }
}

TEST_CASE("tower agrees with the 2x2 extension and restricts to delta") {
  Rng rng(4);
  const auto p9 = RingDescriptor::poly_over(RingDescriptor::zmod(9));
  const auto delta = BaseDerivation::scaled(RingValue::variable(p9));
  const auto m2 = extend_m2(delta);
  const auto tower = extend_tower(delta, 2);
  CHECK(tower.depth() == 1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_matrix(rng, p9, 2, 3);
    CHECK(tower(a) == m2(a));
  }
  for (std::size_t n : {3u, 5u}) {
    const auto ext = extend_tower(delta, n);
    CHECK(ext.padded_size() >= n);
    const auto e11 = matrix_unit(p9, n, 1, 1);
    for (int trial = 0; trial < 20; ++trial) {
      const auto lambda = random_value(rng, p9, 4);
      CHECK(ext(lambda * e11) == delta(lambda) * e11);
    }
    CHECK(leibniz_check(ext, random_pairs(rng, p9, n, 25, 2)).ok());
  }
}

TEST_CASE("extension on Z_m is inner") {
  const auto z5 = RingDescriptor::zmod(5);
  const auto tower = extend_tower(BaseDerivation::zero(z5), 3);
  Rng rng(2);
  const auto a = random_matrix(rng, z5, 3, 0);
  CHECK(tower(a) == commutator(tower.inner_generator(), a));
  CHECK_THROWS_AS(extend_tower(BaseDerivation::zero(z5), 1), DomainError);
}

TEST_CASE("derivations of a ring generated by two elements") {
  const auto z5 = RingDescriptor::zmod(5);
  const auto x = matrix_unit(z5, 2, 1, 2);
  const auto y = matrix_unit(z5, 2, 2, 1);
  Rng rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    const auto d = random_matrix(rng, z5, 2, 0);
    const auto report = two_generator_check(x, y, d, 6);
    CHECK(report.ok());
    CHECK(report.words == 126);
    CHECK(report.splits == 516);
  }
  CHECK_THROWS_AS(two_generator_check(x, y, Matrix(z5, 2), 0), DomainError);
}
