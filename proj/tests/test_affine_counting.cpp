#include <random>

#include "doctest.h"
#include "sympow/acceptance.hpp"
#include "sympow/affine_counting.hpp"
#include "sympow/errors.hpp"

using namespace sympow;
using counting::AffineVarietySpec;

namespace {

// Direct evaluation over F_p, independent of the enumeration code.
std::uint64_t naive_count(const AffineVarietySpec& x) {
  const auto field = x.ring->field;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < x.nvars(); ++i) total *= x.q;
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<FieldElem> point;
    std::uint64_t c = code;
    for (std::size_t i = 0; i < x.nvars(); ++i, c /= x.q) point.emplace_back(field, static_cast<long>(c % x.q));
    bool zero = true;
    for (const auto& f : x.equations) zero = zero && f.evaluate(point).is_zero();
    if (zero) ++count;
  }
  return count;
}

// Necklace polynomial: monic irreducibles of degree d over F_Q.
mpz_class necklace(std::uint64_t big_q, unsigned d) {
  auto mobius = [](unsigned n) {
    int m = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
    return n > 1 ? -m : m;
  };
  mpz_class sum = 0;
  for (unsigned e = 1; e <= d; ++e) {
    if (d % e) continue;
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), big_q, d / e);
    sum += mobius(e) * power;
  }
  return sum / d;
}

mpz_class power(std::uint64_t base, std::size_t e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, e);
  return out;
}

}  // namespace

TEST_CASE("point counts agree with direct evaluation") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 40; ++i) {
    const std::uint64_t q = i % 3 == 0 ? 5 : (i % 2 ? 3 : 2);
    const auto x = acceptance::random_variety(rng, q, "V");
    CHECK(counting::count_points(x, 1) == naive_count(x));
    CHECK(counting::enumerate_points(x, 1).points.size() == naive_count(x));
  }
}

TEST_CASE("closed points of affine space follow the necklace formula") {
  for (std::uint64_t q : {2, 3, 4}) {
    for (std::size_t m : {1, 2}) {
      const auto inv = counting::closed_points(AffineVarietySpec::affine_space(q, m), 4);
      CHECK(inv.consistent());
      for (unsigned d = 1; d <= 4; ++d) CHECK(inv.c[d - 1] == necklace(power(q, m).get_ui(), d));
    }
  }
  const auto a1 = counting::closed_points(AffineVarietySpec::affine_space(2, 1), 5);
  CHECK(a1.c == std::vector<mpz_class>{2, 1, 2, 3, 6});
}

TEST_CASE("Sym^n of affine space") {
  for (std::uint64_t q : {2, 3})
    for (std::size_t m : {1, 2}) {
      const auto x = AffineVarietySpec::affine_space(q, m);
      for (std::size_t n = 0; n <= 4; ++n) CHECK(counting::sym_count(x, n).count == power(q, m * n));
    }
  CHECK(counting::sym_count(AffineVarietySpec::affine_space(2, 1), 2).count == 4);
}

TEST_CASE("point and empty variety") {
  for (std::size_t n = 0; n <= 5; ++n) {
    CHECK(counting::sym_count(AffineVarietySpec::point(3), n).count == 1);
    CHECK(counting::sym_count(AffineVarietySpec::empty(3), n).count == (n == 0 ? 1 : 0));
  }
}

TEST_CASE("conic without rational points") {
  const auto x = AffineVarietySpec::make("conic", 2, {"x"}, {"x^2 + x + 1"});
  const auto inv = counting::closed_points(x, 2);
  CHECK(inv.N == std::vector<mpz_class>{0, 2});
  CHECK(inv.c == std::vector<mpz_class>{0, 1});
  // the single degree-2 closed point
  CHECK(counting::sym_count(x, 2).count == 1);
  CHECK(counting::sym_count_oracle(x, 2).count == 1);
  CHECK(counting::sym_count_oracle(x, 1).count == 0);
}

TEST_CASE("generating function agrees with the orbit oracle") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 16; ++i) {
    const auto x = acceptance::random_variety(rng, i % 2 ? 3 : 2, "V");
    for (std::size_t n = 0; n <= 3; ++n) CHECK(counting::sym_count(x, n).count == counting::sym_count_oracle(x, n).count);
  }
  const auto circle = AffineVarietySpec::make("circle", 5, {"x", "y"}, {"x^2 + y^2 - 1"});
  for (std::size_t n = 0; n <= 2; ++n) CHECK(counting::sym_count(circle, n).count == counting::sym_count_oracle(circle, n).count);
}

TEST_CASE("Kunneth rule") {
  const auto a1 = AffineVarietySpec::affine_space(2, 1);
  const auto rep = counting::kunneth_verify(a1, a1, 2);
  CHECK(rep.lhs == 12);
  CHECK(rep.rhs == 12);
  CHECK(rep.ok);
  // (1 - 2t)^-2: coefficients (n + 1) 2^n
  for (std::size_t n = 0; n <= 5; ++n) CHECK(counting::kunneth_verify(a1, a1, n).lhs == mpz_class(n + 1) * power(2, n));
  CHECK_THROWS_AS(counting::kunneth_verify(a1, AffineVarietySpec::affine_space(3, 1), 1), InvalidInput);
}

TEST_CASE("disjoint union and product of inventories") {
  const auto a = counting::closed_points(AffineVarietySpec::affine_space(3, 1), 4);
  const auto b = counting::closed_points(AffineVarietySpec::make("c", 3, {"x", "y"}, {"x*y - 1"}), 4);
  const auto c = counting::closed_points(AffineVarietySpec::make("c", 3, {"x"}, {"x^2 + 1"}), 4);
  CHECK(counting::disjoint_union(a, b).c == counting::disjoint_union(b, a).c);
  CHECK(counting::disjoint_union(counting::disjoint_union(a, b), c).c ==
        counting::disjoint_union(a, counting::disjoint_union(b, c)).c);
  CHECK(counting::product(a, a).N == counting::closed_points(AffineVarietySpec::affine_space(3, 2), 4).N);
  CHECK(counting::product(a, a).c == counting::closed_points(AffineVarietySpec::affine_space(3, 2), 4).c);
}

TEST_CASE("Mobius inversion rejects impossible counts") {
  CHECK_THROWS_AS(counting::ClosedPointInventory::from_counts("bad", 2, {1, 2}), InvalidInput);
  CHECK_THROWS_AS(counting::ClosedPointInventory::from_counts("bad", 2, {3, 1}), InvalidInput);
  CHECK(counting::ClosedPointInventory::from_counts("ok", 2, {1, 3}).c == std::vector<mpz_class>{1, 1});
}

TEST_CASE("tower counts") {
  const auto a1 = AffineVarietySpec::affine_space(2, 1);
  const auto pt = AffineVarietySpec::point(2);
  auto r = counting::tower_counts(a1, pt, 2);
  CHECK(r.counts == std::vector<mpz_class>{4, 6, 7});
  CHECK(r.cone_counts == std::vector<mpz_class>{2, 1});
  CHECK(r.ok());
  r = counting::tower_counts(pt, pt, 2);
  CHECK(r.counts == std::vector<mpz_class>{1, 2, 3});
  CHECK(r.ok());
}

TEST_CASE("caps") {
  Caps caps;
  caps.max_points = 10;
  CHECK_THROWS_AS(counting::count_points(AffineVarietySpec::affine_space(2, 2), 2, caps), CapExceeded);
  CHECK_THROWS_AS(counting::count_points(AffineVarietySpec::affine_space(2, 4), 1), CapExceeded);
  CHECK_THROWS_AS(counting::sym_count_oracle(AffineVarietySpec::affine_space(3, 1), 5), CapExceeded);
  CHECK_THROWS_AS(AffineVarietySpec::affine_space(6, 1), InvalidInput);
}

TEST_CASE("extension fields of composite order") {
  // x^2 = x has exactly the points 0 and 1 over every F_{4^d}
  const auto x = AffineVarietySpec::make("idem", 4, {"x"}, {"x^2 - x"});
  const auto inv = counting::closed_points(x, 3);
  CHECK(inv.N == std::vector<mpz_class>{2, 2, 2});
  CHECK(counting::sym_count(x, 3).count == 4);
  CHECK(counting::sym_count_oracle(x, 3).count == 4);
}
