#include <random>

#include "doctest.h"
#include "sympow/errors.hpp"
#include "sympow/polynomial.hpp"

using namespace sympow;
using poly::parse_poly;
using poly::Polynomial;

namespace {

poly::RingPtr qxyz() { return poly::make_ring({"x", "y", "z"}, Field::rationals()); }

Polynomial random_poly(std::mt19937_64& rng, const poly::RingPtr& ring, int terms) {
  std::string text = "0";
  for (int t = 0; t < terms; ++t) {
    text += " + " + std::to_string(static_cast<long>(rng() % 7) - 3);
    for (const auto& v : ring->vars) text += "*" + v + "^" + std::to_string(rng() % 3);
  }
  return parse_poly(text, ring);
}

std::vector<FieldElem> random_point(std::mt19937_64& rng, const poly::RingPtr& ring) {
  std::vector<FieldElem> p;
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    p.emplace_back(ring->field, mpq_class(static_cast<long>(rng() % 11) - 5, static_cast<unsigned long>(1 + rng() % 4)));
  return p;
}

}  // namespace

TEST_CASE("canonical printing") {
  const auto r = qxyz();
  CHECK(parse_poly("y + x", r).str() == "x + y");
  CHECK(parse_poly("x*y^2 + x^2", r).str() == "x*y^2 + x^2");
  CHECK(parse_poly("(x + 1)^2", r).str() == "x^2 + 2*x + 1");
  CHECK(parse_poly("1/2*x - 3/4", r).str() == "1/2*x - 3/4");
  CHECK(parse_poly("x - x", r).str() == "0");
  CHECK(parse_poly("-x^2", r).str() == "-x^2");
  CHECK(parse_poly("(x^2 - y)/2", r).str() == "1/2*x^2 - 1/2*y");
  CHECK(parse_poly("x^2 - y", r, poly::MonomialOrder::lex()).str() == "x^2 - y");
  CHECK(parse_poly("x - y^2", r, poly::MonomialOrder::lex()).str() == "x - y^2");
}

TEST_CASE("printing round-trips") {
  std::mt19937_64 rng(11);
  const auto r = qxyz();
  for (int i = 0; i < 50; ++i) {
    const auto f = random_poly(rng, r, 1 + static_cast<int>(rng() % 5));
    CHECK(parse_poly(f.str(), r) == f);
  }
}

TEST_CASE("coefficients reduce in F_p") {
  const auto r = poly::make_ring({"x"}, Field::prime(3));
  CHECK(parse_poly("4*x + 3", r).str() == "x");
  CHECK(parse_poly("x/2", r).str() == "2*x");
  CHECK_THROWS_AS(parse_poly("x/3", r), ParseError);
}

TEST_CASE("parse errors carry positions") {
  const auto r = qxyz();
  auto position = [&](const char* text) {
    try {
      parse_poly(text, r);
    } catch (const ParseError& e) {
      return std::make_pair(e.line(), e.column());
    }
    return std::make_pair(std::size_t{0}, std::size_t{0});
  };
  CHECK(position("2x").second == 2);
  CHECK(position("x +").second == 4);
  CHECK(position("x + w").second == 5);
  CHECK(position("(x + y").first == 1);
  CHECK(position("x\n+ ?") == std::make_pair(std::size_t{2}, std::size_t{3}));
  CHECK_THROWS_AS(parse_poly("x y", r), ParseError);
  CHECK_THROWS_AS(parse_poly("x^-1", r), ParseError);
  CHECK_THROWS_AS(parse_poly("", r), ParseError);
}

TEST_CASE("ring axioms and evaluation on random polynomials") {
  std::mt19937_64 rng(3);
  const auto r = qxyz();
  for (int i = 0; i < 30; ++i) {
    const auto f = random_poly(rng, r, 3);
    const auto g = random_poly(rng, r, 3);
    const auto h = random_poly(rng, r, 2);
    CHECK(f * g == g * f);
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f + g) - g == f);
    CHECK(f.pow(2) == f * f);
    const auto p = random_point(rng, r);
    CHECK((f * g).evaluate(p) == f.evaluate(p) * g.evaluate(p));
    CHECK((f + h).evaluate(p) == f.evaluate(p) + h.evaluate(p));
  }
}

TEST_CASE("substitution composes with evaluation") {
  std::mt19937_64 rng(5);
  const auto r = qxyz();
  const auto s = poly::make_ring({"u", "v"}, Field::rationals());
  for (int i = 0; i < 20; ++i) {
    const auto f = random_poly(rng, r, 3);
    const std::vector<Polynomial> images = {random_poly(rng, s, 2), random_poly(rng, s, 2), random_poly(rng, s, 1)};
    const auto p = random_point(rng, s);
    std::vector<FieldElem> inner;
    for (const auto& g : images) inner.push_back(g.evaluate(p));
    CHECK(f.substitute(images).evaluate(p) == f.evaluate(inner));
  }
}

TEST_CASE("derivatives") {
  const auto r = qxyz();
  const auto f = parse_poly("x^3*y + 2*x*z - y", r);
  CHECK(f.derivative(0).str() == "3*x^2*y + 2*z");
  CHECK(f.derivative(1).str() == "x^3 - 1");
  CHECK(f.derivative(2).str() == "2*x");
  CHECK(f.total_degree() == 4);
  CHECK(f.monic() == f);
  CHECK(parse_poly("2*x + 4", r).monic().str() == "x + 2");
}

TEST_CASE("ring validation") {
  CHECK_THROWS_AS(poly::make_ring({"x", "x"}, Field::rationals()), InvalidInput);
  CHECK_THROWS_AS(poly::make_ring({"1x"}, Field::rationals()), InvalidInput);
  const auto empty = poly::make_ring({}, Field::rationals());
  CHECK(parse_poly("3", empty).is_constant());
}

TEST_CASE("block order eliminates the leading variables") {
  const auto order = poly::MonomialOrder::elimination(1);
  // any monomial with x beats any monomial without it
  CHECK(order.compare({1, 0, 0}, {0, 5, 5}) > 0);
  CHECK(order.compare({1, 2, 0}, {1, 0, 1}) > 0);
  CHECK(poly::MonomialOrder::grevlex().compare({1, 0, 0}, {0, 1, 0}) > 0);
  CHECK(poly::MonomialOrder::grevlex().compare({2, 0, 1}, {1, 2, 0}) < 0);
}
