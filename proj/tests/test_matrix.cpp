#include <cstdint>
#include <vector>

#include "doctest.h"

#include "derivring/matrix.hpp"
#include "derivring/random.hpp"

using namespace derivring;

namespace {

using Grid = std::vector<std::vector<std::uint64_t>>;

Grid to_grid(const Matrix& a) {
  Grid g(a.n(), std::vector<std::uint64_t>(a.n()));
  for (std::size_t i = 1; i <= a.n(); ++i)
    for (std::size_t j = 1; j <= a.n(); ++j) g[i - 1][j - 1] = a.entry(i, j).coefficient(0);
  return g;
}

// Schoolbook product over Z_m on plain integers.
Grid naive_mul(const Grid& a, const Grid& b, std::uint64_t m) {
  const std::size_t n = a.size();
  Grid c(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % m;
  return c;
}

}  // namespace

TEST_CASE("worked product in M_2(Z_5)") {
  const auto z5 = RingDescriptor::zmod(5);
  const auto a = Matrix::from_ints(z5, {{1, 2}, {3, 4}});
  const auto e12 = matrix_unit(z5, 2, 1, 2);
  const auto e21 = matrix_unit(z5, 2, 2, 1);
  CHECK(a * (e12 + e21) == Matrix::from_ints(z5, {{2, 1}, {4, 3}}));
  CHECK(a.entry(2, 1) == RingValue::from_int(z5, 3));
}

TEST_CASE("matrix unit algebra") {
  for (auto ring : {RingDescriptor::zmod(5), RingDescriptor::poly_over(RingDescriptor::zmod(9))}) {
    for (std::size_t n = 1; n <= 5; ++n) {
      const Matrix zero(ring, n);
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
          for (std::size_t k = 1; k <= n; ++k)
            for (std::size_t l = 1; l <= n; ++l) {
              const auto prod = matrix_unit(ring, n, i, j) * matrix_unit(ring, n, k, l);
              CHECK(prod == (j == k ? matrix_unit(ring, n, i, l) : zero));
            }
      Matrix sum(ring, n);
      for (std::size_t i = 1; i <= n; ++i) sum += matrix_unit(ring, n, i, i);
      CHECK(sum == Matrix::identity(ring, n));
    }
  }
}

TEST_CASE("products agree with a schoolbook oracle") {
  Rng rng(99);
  for (std::uint64_t m : {5u, 9u}) {
    const auto ring = RingDescriptor::zmod(m);
    for (std::size_t n = 1; n <= 5; ++n) {
      for (int trial = 0; trial < 40; ++trial) {
        const auto a = random_matrix(rng, ring, n, 0);
        const auto b = random_matrix(rng, ring, n, 0);
        CHECK(to_grid(a * b) == naive_mul(to_grid(a), to_grid(b), m));
      }
    }
  }
}

TEST_CASE("associative identities on random matrices") {
  Rng rng(5);
  const auto ring = RingDescriptor::poly_over(RingDescriptor::zmod(5));
  for (std::size_t n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 30; ++trial) {
      const auto a = random_matrix(rng, ring, n, 2);
      const auto b = random_matrix(rng, ring, n, 2);
      const auto c = random_matrix(rng, ring, n, 2);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(commutator(a, b) == -commutator(b, a));
      CHECK(transpose(a * b) == transpose(b) * transpose(a));
      // Jacobi
      const auto jac = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                       commutator(c, commutator(a, b));
      CHECK(jac.is_zero());
      // corner decomposition a = Σ e_ii a e_jj
      Matrix sum(ring, n);
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) sum += corner(a, i, j);
      CHECK(sum == a);
      CHECK(corner(a, 1, 2) == matrix_unit(ring, n, 1, 1) * a * matrix_unit(ring, n, 2, 2));
      const auto two = RingValue::from_int(ring, 2);
      CHECK(two * jordan_mul(a, b) == a * b + b * a);
    }
  }
}

TEST_CASE("symmetric matrices and the Jordan product") {
  Rng rng(8);
  const auto ring = RingDescriptor::zmod(9);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto a = random_symmetric(rng, ring, n, 0);
      const auto b = random_symmetric(rng, ring, n, 0);
      CHECK(is_symmetric(jordan_mul(a, b).matrix()));
      CHECK(is_skew(commutator(a.matrix(), b.matrix())));
      CHECK(has_zero_diagonal(commutator(a.matrix(), b.matrix())));
    }
  }
  const auto z5 = RingDescriptor::zmod(5);
  CHECK_THROWS_AS(SymmetricMatrix(Matrix::from_ints(z5, {{1, 2}, {3, 4}})), DomainError);
  CHECK_THROWS_AS(jordan_unit(z5, 3, 2, 2), DomainError);
  // e11 ∘ ē12 = ½ ē12 = 3 ē12 in Z_5
  const SymmetricMatrix e11(matrix_unit(z5, 2, 1, 1));
  const auto eb12 = jordan_unit(z5, 2, 1, 2);
  CHECK(jordan_mul(e11, eb12).matrix() == RingValue::from_int(z5, 3) * eb12.matrix());
  CHECK(eb12.matrix() == Matrix::from_ints(z5, {{0, 1}, {1, 0}}));
}

TEST_CASE("x0 is nilpotent of index n") {
  const auto ring = RingDescriptor::zmod(5);
  CHECK_THROWS_AS(probe_x0(ring, 1), DomainError);
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto x0 = probe_x0(ring, n);
    CHECK(power(x0, static_cast<unsigned>(n - 1)) == matrix_unit(ring, n, 1, n));
    CHECK(power(x0, static_cast<unsigned>(n)).is_zero());
    CHECK(power(x0, 0) == Matrix::identity(ring, n));
  }
}

TEST_CASE("shape and index errors") {
  const auto z5 = RingDescriptor::zmod(5);
  const Matrix a(z5, 2), b(z5, 3);
  CHECK_THROWS_AS(a + b, DomainError);
  CHECK_THROWS_AS(a * b, DomainError);
  CHECK_THROWS_AS(a.entry(0, 1), DomainError);
  CHECK_THROWS_AS(a.entry(3, 1), DomainError);
  CHECK_THROWS_AS(a + Matrix(RingDescriptor::zmod(7), 2), DomainError);
  CHECK(truncate(embed(Matrix::from_ints(z5, {{1, 2}, {3, 4}}), 4), 2) ==
        Matrix::from_ints(z5, {{1, 2}, {3, 4}}));
}
