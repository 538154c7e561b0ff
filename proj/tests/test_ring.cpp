#include <cstdint>
#include <vector>

#include "doctest.h"

#include "derivring/random.hpp"
#include "derivring/ring.hpp"

using namespace derivring;

namespace {

// Independent evaluation of a coefficient list at a point, plain 64-bit Horner.
std::uint64_t eval_at(const RingValue& p, std::uint64_t point) {
  const std::uint64_t m = p.ring().modulus();
  std::uint64_t acc = 0;
  auto c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) acc = (acc * point + c[k]) % m;
  return acc;
}

RingValue poly(const RingDescriptor& r, std::vector<std::uint64_t> c) {
  return RingValue::from_coefficients(r, std::move(c));
}

}  // namespace

TEST_CASE("ring descriptors") {
  CHECK(RingDescriptor::parse("zmod:5") == RingDescriptor::zmod(5));
  CHECK(RingDescriptor::parse("poly:zmod:9").is_poly());
  CHECK(RingDescriptor::parse("poly:zmod:9").to_string() == "poly:zmod:9");
  CHECK_THROWS_AS(RingDescriptor::zmod(6), InvalidRing);
  CHECK_THROWS_AS(RingDescriptor::zmod(2), InvalidRing);
  CHECK_THROWS_AS(RingDescriptor::zmod(1), InvalidRing);
  CHECK_THROWS_AS(RingDescriptor::parse("zmod:x"), InvalidRing);
  CHECK_THROWS_AS(RingDescriptor::parse("gf:5"), InvalidRing);
  try {
    RingDescriptor::zmod(6);
  } catch (const InvalidRing& e) {
    CHECK(std::string(e.what()).find("2 is invertible") != std::string::npos);
  }
}

TEST_CASE("canonical values") {
  const auto z5 = RingDescriptor::zmod(5);
  CHECK(RingValue::from_int(z5, -1) == RingValue::from_int(z5, 4));
  // -2^63 = -9223372036854775808 = 2 (mod 5)
  CHECK(RingValue::from_int(z5, INT64_MIN).coefficient(0) == 2);
  CHECK(RingValue::from_int(z5, 10).is_zero());
  CHECK_THROWS_AS(RingValue::from_coefficients(z5, {1, 2}), DomainError);
  CHECK_THROWS_AS(RingValue::variable(z5), DomainError);

  const auto p5 = RingDescriptor::poly_over(z5);
  const auto p = poly(p5, {1, 0, 5, 10});  // 1 + 5t^2 + 10t^3 = 1
  CHECK(p.degree() == 0);
  CHECK(p.coefficients().size() == 1);
}

TEST_CASE("small worked products") {
  const auto p5 = RingDescriptor::poly_over(RingDescriptor::zmod(5));
  // (t+1)(t+4) = t^2 + 5t + 4 = t^2 + 4
  CHECK(poly(p5, {1, 1}) * poly(p5, {4, 1}) == poly(p5, {4, 0, 1}));
  CHECK((poly(p5, {4, 0, 1})).to_string() == "t^2 + 4");
  const auto z9 = RingDescriptor::zmod(9);
  // 3 * 3 = 0 in Z_9; products in Z_9[t] may drop degree.
  const auto p9 = RingDescriptor::poly_over(z9);
  CHECK((poly(p9, {1, 3}) * poly(p9, {0, 3})) == poly(p9, {0, 3}));
}

TEST_CASE("half is the inverse of doubling") {
  for (std::uint64_t m : {3u, 5u, 9u, 15u, 1000001u}) {
    const auto r = RingDescriptor::zmod(m);
    for (std::int64_t v = 0; v < 20; ++v) {
      const auto x = RingValue::from_int(r, v);
      CHECK(half(x) + half(x) == x);
    }
  }
  const auto z5 = RingDescriptor::zmod(5);
  CHECK(half(RingValue::from_int(z5, 1)) == RingValue::from_int(z5, 3));
}

TEST_CASE("ring axioms against evaluation") {
  Rng rng(17);
  for (auto ring : {RingDescriptor::zmod(5), RingDescriptor::zmod(9),
                    RingDescriptor::poly_over(RingDescriptor::zmod(5)),
                    RingDescriptor::poly_over(RingDescriptor::zmod(9))}) {
    const std::uint64_t m = ring.modulus();
    for (int trial = 0; trial < 300; ++trial) {
      const auto a = random_value(rng, ring, 4);
      const auto b = random_value(rng, ring, 4);
      const auto c = random_value(rng, ring, 4);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == RingValue(ring));
      CHECK(a + (-a) == RingValue(ring));
      CHECK(a * RingValue::from_int(ring, 1) == a);
      for (std::uint64_t pt = 0; pt < m; ++pt) {
        CHECK(eval_at(a * b, pt) == eval_at(a, pt) * eval_at(b, pt) % m);
        CHECK(eval_at(a + b, pt) == (eval_at(a, pt) + eval_at(b, pt)) % m);
      }
    }
  }
}

TEST_CASE("ring mismatch is a domain error") {
  const auto a = RingValue::from_int(RingDescriptor::zmod(5), 1);
  const auto b = RingValue::from_int(RingDescriptor::zmod(7), 1);
  CHECK_THROWS_AS(a + b, DomainError);
  CHECK_THROWS_AS(a * b, DomainError);
  const auto c = RingValue::from_int(RingDescriptor::poly_over(RingDescriptor::zmod(5)), 1);
  CHECK_THROWS_AS(a - c, DomainError);
}

TEST_CASE("formal derivative") {
  const auto p5 = RingDescriptor::poly_over(RingDescriptor::zmod(5));
  // d/dt (2 + 3t + t^5 + 4t^6) = 3 + 5t^4 + 24t^5 = 3 + 4t^5
  CHECK(formal_derivative(poly(p5, {2, 3, 0, 0, 0, 1, 4})) == poly(p5, {3, 0, 0, 0, 0, 4}));
  CHECK(formal_derivative(poly(p5, {3})).is_zero());
  CHECK_THROWS_AS(formal_derivative(RingValue::from_int(RingDescriptor::zmod(5), 2)), DomainError);

  CHECK_THROWS_AS(BaseDerivation::formal(RingDescriptor::zmod(5)), DomainError);
  CHECK_THROWS_AS(BaseDerivation::parse(RingDescriptor::zmod(5), "t*d/dt"), DomainError);
  CHECK_THROWS_AS(BaseDerivation::parse(p5, "d/dx"), DomainError);
  CHECK(BaseDerivation::parse(RingDescriptor::zmod(5), "zero")(RingValue::from_int(RingDescriptor::zmod(5), 3))
            .is_zero());

  const auto t = RingValue::variable(p5);
  const auto tdt = BaseDerivation::parse(p5, "t*d/dt");
  CHECK(tdt(t * t * t) == RingValue::from_int(p5, 3) * t * t * t);
}

TEST_CASE("base derivations satisfy Leibniz") {
  Rng rng(3);
  for (auto ring : {RingDescriptor::poly_over(RingDescriptor::zmod(5)),
                    RingDescriptor::poly_over(RingDescriptor::zmod(9))}) {
    for (const char* name : {"zero", "d/dt", "t*d/dt"}) {
      const auto d = BaseDerivation::parse(ring, name);
      for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_value(rng, ring, 5);
        const auto b = random_value(rng, ring, 5);
        CHECK(d(a * b) == d(a) * b + a * d(b));
        CHECK(d(a + b) == d(a) + d(b));
      }
    }
  }
}

TEST_CASE("rng is pinned") {
  Rng a(42), b(42);
  for (int k = 0; k < 100; ++k) CHECK(a.next() == b.next());
  Rng c(1);
  for (int k = 0; k < 1000; ++k) {
    const auto v = c.below(7);
    CHECK(v < 7);
  }
  CHECK(derive_seed(5, 0) != derive_seed(5, 1));
  CHECK(derive_seed(5, 3) == derive_seed(5, 3));
}
