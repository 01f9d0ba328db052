#include <random>

#include "doctest.h"
#include "sympow/caps.hpp"
#include "sympow/errors.hpp"
#include "sympow/field.hpp"
#include "sympow/linalg.hpp"

using namespace sympow;

namespace {

Matrix<mpq_class> random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long spread) {
  Matrix<mpq_class> m(rows, cols, mpq_class(0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      mpq_class v(static_cast<long>(rng() % (2 * spread + 1)) - spread, static_cast<unsigned long>(1 + rng() % 3));
      v.canonicalize();
      m(i, j) = v;
    }
  return m;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  const Field f7 = Field::prime(7);
  const FieldElem a(f7, 3L);
  const FieldElem b(f7, 5L);
  CHECK((a + b).residue() == 1);
  CHECK((a * b).residue() == 1);
  CHECK((a - b).residue() == 5);
  CHECK(a.inverse().residue() == 5);
  CHECK(FieldElem(f7, -1L).residue() == 6);
  CHECK(FieldElem(f7, mpq_class(1, 2)).residue() == 4);
  CHECK_THROWS_AS(FieldElem::zero(f7).inverse(), InvalidInput);
  CHECK_THROWS_AS(Field::prime(9), InvalidInput);
  CHECK_THROWS_AS(FieldElem(Field::prime(3), mpq_class(1, 3)), InvalidInput);
}

TEST_CASE("field axioms hold exhaustively in F_11") {
  const Field f = Field::prime(11);
  for (long x = 0; x < 11; ++x)
    for (long y = 0; y < 11; ++y) {
      const FieldElem a(f, x), b(f, y);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) - b == a);
      if (y != 0) CHECK((a / b) * b == a);
      for (long z = 0; z < 11; z += 5) {
        const FieldElem c(f, z);
        CHECK(a * (b + c) == a * b + a * c);
      }
    }
}

TEST_CASE("rational elements stay canonical") {
  const Field q = Field::rationals();
  const FieldElem a(q, mpq_class(6, 4));
  CHECK(a.rational() == mpq_class(3, 2));
  CHECK((a * FieldElem(q, 2L)).is_one() == false);
  CHECK((a / a).is_one());
}

TEST_CASE("rref of a fixed matrix") {
  const RationalField qf;
  const auto m = from_rows(qf, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  const auto e = rref(qf, m);
  CHECK(e.rank() == 2);
  CHECK(e.pivots == std::vector<std::size_t>{0, 1});
  CHECK(e.form(0, 2) == 1);
  CHECK(e.form(1, 2) == 1);
  const auto ns = nullspace(qf, m);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0] == std::vector<mpq_class>{-1, -1, 1});
}

TEST_CASE("rank-nullity and inverses on random rational matrices") {
  const RationalField qf;
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + rng() % 5;
    const std::size_t cols = 1 + rng() % 5;
    const auto m = random_matrix(rng, rows, cols, trial % 2 == 0 ? 1 : 4);
    const auto ns = nullspace(qf, m);
    CHECK(rank(qf, m) + ns.size() == cols);
    for (const auto& v : ns) {
      for (const auto& x : apply(qf, m, v)) CHECK(sgn(x) == 0);
    }
    CHECK(rank(qf, m) == rank(qf, transpose(m)));
    if (rows == cols) {
      const auto inv = inverse(qf, m);
      CHECK(inv.has_value() == (rank(qf, m) == rows));
      if (inv) {
        CHECK(multiply(qf, m, *inv) == identity(qf, rows));
        CHECK(multiply(qf, *inv, m) == identity(qf, rows));
      }
    }
  }
}

TEST_CASE("row space is canonical") {
  const RationalField qf;
  const auto a = from_rows(qf, {{1, 1, 0}, {0, 1, 1}}, 3);
  const auto b = from_rows(qf, {{1, 2, 1}, {1, 0, -1}, {2, 2, 0}}, 3);
  CHECK(row_space(qf, a) == row_space(qf, b));
}

TEST_CASE("linear algebra over a prime field") {
  const CoefficientField f{Field::prime(2)};
  Matrix<FieldElem> m(2, 2, FieldElem::one(f.field));
  CHECK(rank(f, m) == 1);
  m(1, 1) = FieldElem::zero(f.field);
  CHECK(rank(f, m) == 2);
  const auto inv = inverse(f, m);
  REQUIRE(inv);
  CHECK(multiply(f, m, *inv) == identity(f, 2));
}

TEST_CASE("caps are set by name") {
  Caps caps;
  CHECK(caps.set("max_vars", 5));
  CHECK(caps.max_vars == 5);
  CHECK(caps.set("max_points", 100));
  CHECK(caps.max_points == 100);
  CHECK_FALSE(caps.set("max_nothing", 1));
}
