#include <set>

#include "doctest.h"
#include "sympow/errors.hpp"
#include "sympow/finite_field.hpp"

using namespace sympow;

namespace {

// Irreducible iff no monic factor of degree 1..deg/2 divides it.
bool irreducible_by_trial_division(const PrimePoly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
      PrimePoly g(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i, c /= p) g[i] = static_cast<std::uint32_t>(c % p);
      g[d] = 1;
      if (prime_poly::rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("prime powers") {
  CHECK(prime_power(8) == std::make_pair(2u, 3u));
  CHECK(prime_power(9) == std::make_pair(3u, 2u));
  CHECK(prime_power(7) == std::make_pair(7u, 1u));
  CHECK_FALSE(prime_power(6));
  CHECK_FALSE(prime_power(1));
  CHECK_FALSE(prime_power(0));
}

TEST_CASE("smallest irreducible moduli") {
  CHECK(prime_poly::smallest_irreducible(2, 2) == PrimePoly{1, 1, 1});
  CHECK(prime_poly::smallest_irreducible(2, 3) == PrimePoly{1, 1, 0, 1});
  CHECK(prime_poly::smallest_irreducible(2, 4) == PrimePoly{1, 1, 0, 0, 1});
  CHECK(prime_poly::smallest_irreducible(3, 2) == PrimePoly{1, 0, 1});
  CHECK(prime_poly::smallest_irreducible(5, 1) == PrimePoly{0, 1});
}

TEST_CASE("Ben-Or agrees with trial division") {
  for (std::uint32_t p : {2u, 3u, 5u})
    for (std::size_t deg = 1; deg <= (p == 2 ? 7u : 4u); ++deg) {
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < deg; ++i) total *= p;
      for (std::uint64_t code = 0; code < total; ++code) {
        PrimePoly f(deg + 1, 0);
        std::uint64_t c = code;
        for (std::size_t i = 0; i < deg; ++i, c /= p) f[i] = static_cast<std::uint32_t>(c % p);
        f[deg] = 1;
        CHECK(prime_poly::is_irreducible(f, p) == irreducible_by_trial_division(f, p));
      }
    }
}

TEST_CASE("field axioms exhaustively in small fields") {
  for (auto [p, k] : {std::pair{2u, 2u}, std::pair{2u, 3u}, std::pair{3u, 2u}, std::pair{5u, 1u}}) {
    const FiniteField f(p, k);
    const auto n = static_cast<FiniteField::value_type>(f.order());
    for (FiniteField::value_type a = 0; a < n; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.frobenius(f.add(a, 1)) == f.add(f.frobenius(a), 1));
      CHECK(f.pow(a, f.order()) == a);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      for (FiniteField::value_type b = 0; b < n; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
        for (FiniteField::value_type c = 0; c < n; c += 3) CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
}

TEST_CASE("digits are the residue polynomial") {
  const FiniteField f(3, 2);
  CHECK(f.digits(5) == PrimePoly{2, 1});
  CHECK(f.from_digits({2, 1}) == 5);
  CHECK(f.from_integer(-1) == 2);
  // t^2 = -1 with modulus t^2 + 1
  CHECK(f.mul(3, 3) == 2);
}

TEST_CASE("embeddings are injective ring maps") {
  for (auto [p, small, big] : {std::tuple{2u, 1u, 4u}, std::tuple{2u, 2u, 4u}, std::tuple{2u, 2u, 6u}, std::tuple{3u, 2u, 4u}}) {
    const FiniteField s(p, small);
    const FiniteField b(p, big);
    const auto image = embed(s, b);
    REQUIRE(image.size() == s.order());
    CHECK(std::set<FiniteField::value_type>(image.begin(), image.end()).size() == image.size());
    for (FiniteField::value_type x = 0; x < s.order(); ++x)
      for (FiniteField::value_type y = 0; y < s.order(); ++y) {
        CHECK(image[s.add(x, y)] == b.add(image[x], image[y]));
        CHECK(image[s.mul(x, y)] == b.mul(image[x], image[y]));
      }
  }
  CHECK_THROWS_AS(embed(FiniteField(2, 2), FiniteField(2, 3)), InvalidInput);
}

TEST_CASE("explicit moduli are validated") {
  CHECK_NOTHROW(FiniteField(2, PrimePoly{1, 0, 1, 1}));
  CHECK_THROWS_AS(FiniteField(2, PrimePoly{1, 0, 1}), InvalidInput);
  CHECK_THROWS_AS(FiniteField(4, 1), InvalidInput);
}
