#include "doctest.h"
#include "sympow/errors.hpp"
#include "sympow/invariant_rings.hpp"
#include "sympow/polynomial.hpp"

using namespace sympow;

namespace {

// F_q-points of m^2 - stm + s^2 q + t^2 p - 4pq = 0 by plain integer arithmetic.
std::uint64_t relation_points(std::int64_t q) {
  std::uint64_t count = 0;
  for (std::int64_t s = 0; s < q; ++s)
    for (std::int64_t p = 0; p < q; ++p)
      for (std::int64_t t = 0; t < q; ++t)
        for (std::int64_t u = 0; u < q; ++u)
          for (std::int64_t m = 0; m < q; ++m) {
            const std::int64_t v = m * m - s * t * m + s * s * u + t * t * p - 4 * p * u;
            if (((v % q) + q) % q == 0) ++count;
          }
  return count;
}

}  // namespace

TEST_CASE("presentation of the invariant ring") {
  const auto pres = invariants::compute_presentation();
  CHECK(pres.ok());
  CHECK(pres.elimination_basis == std::vector<std::string>{"p*t^2 + s^2*q - s*t*m - 4*p*q + m^2"});
  CHECK(pres.relation == "p*t^2 + s^2*q - s*t*m - 4*p*q + m^2");
  CHECK(pres.cone_identity);
  CHECK(pres.coordinate_change_ok);
  REQUIRE(pres.generators.size() == 5);
  CHECK(pres.generators[4] == std::make_pair(std::string("m"), std::string("x2*y1 + x1*y2")));
}

TEST_CASE("the relation vanishes on images of points") {
  const auto ring = poly::make_ring({"s", "p", "t", "q", "m"}, Field::rationals());
  const auto rel = poly::parse_poly("m^2 - s*t*m + s^2*q + t^2*p - 4*p*q", ring);
  const Field f = Field::rationals();
  auto at = [&](long x1, long x2, long y1, long y2) {
    return rel.evaluate({FieldElem(f, x1 + x2), FieldElem(f, x1 * x2), FieldElem(f, y1 + y2), FieldElem(f, y1 * y2),
                         FieldElem(f, x1 * y2 + x2 * y1)});
  };
  CHECK(at(1, 0, 0, 1).is_zero());
  CHECK(at(2, 1, 1, 3).is_zero());
  CHECK(at(-3, 5, 7, 2).is_zero());
  // (s, p, t, q, m) = (3, 2, 4, 3, 8) is not the image of a point
  CHECK_FALSE(rel.evaluate({FieldElem(f, 3L), FieldElem(f, 2L), FieldElem(f, 4L), FieldElem(f, 3L), FieldElem(f, 8L)})
                  .is_zero());
}

TEST_CASE("cone singularity") {
  const auto rep = invariants::singularity_check();
  CHECK(rep.cone_equation == "-v^2 + u*w");
  CHECK(rep.origin_rank == 0);
  CHECK(rep.generic_rank == 1);
  CHECK(rep.ok());
}

TEST_CASE("dual point counts of Sym^2 A^2") {
  for (std::uint64_t q : {2, 3, 5}) {
    const auto cc = invariants::count_cross_check(q);
    CHECK(cc.method_a == q * q * q * q);
    CHECK(cc.method_b == relation_points(static_cast<std::int64_t>(q)));
    CHECK(cc.agree);
  }
  CHECK(invariants::count_cross_check(7, 0).method_a == 1);
  CHECK_THROWS_AS(invariants::count_cross_check(4), InvalidInput);
  CHECK_THROWS_AS(invariants::count_cross_check(3, 3), InvalidInput);
}
