#include <random>

#include "doctest.h"
#include "sympow/errors.hpp"
#include "sympow/groebner.hpp"

using namespace sympow;
using poly::parse_poly;
using poly::Polynomial;

namespace {

std::vector<std::string> strings(const std::vector<Polynomial>& basis) {
  std::vector<std::string> out;
  for (const auto& g : basis) out.push_back(g.str());
  return out;
}

}  // namespace

TEST_CASE("reduced lex basis of a small system") {
  const auto r = poly::make_ring({"x", "y"}, Field::rationals());
  const auto lex = poly::MonomialOrder::lex();
  const auto basis = poly::buchberger({parse_poly("x^2 - y", r, lex), parse_poly("y^2 - x", r, lex)}, lex);
  CHECK(strings(basis) == std::vector<std::string>{"x - y^2", "y^4 - y"});
  CHECK(poly::is_reduced_basis(basis));
  CHECK(poly::satisfies_buchberger_criterion(basis));
}

TEST_CASE("twisted cubic") {
  const auto r = poly::make_ring({"t", "x", "y", "z"}, Field::rationals());
  const poly::Ideal graph(r, {parse_poly("x - t", r), parse_poly("y - t^2", r), parse_poly("z - t^3", r)});
  const auto cubic = poly::eliminate(graph, {"x", "y", "z"});
  REQUIRE(cubic.cached_basis());
  CHECK(strings(*cubic.cached_basis()) == std::vector<std::string>{"x^2 - y", "x*y - z", "y^2 - x*z"});
  CHECK(cubic.contains(parse_poly("x^3 - z", cubic.ring())));
  CHECK_FALSE(cubic.contains(parse_poly("x - y", cubic.ring())));
}

TEST_CASE("normal forms and membership") {
  const auto r = poly::make_ring({"x", "y"}, Field::rationals());
  const poly::Ideal i(r, {parse_poly("x*y - 1", r), parse_poly("x^2 + y^2 - 4", r)});
  CHECK(i.contains(parse_poly("x*y - 1", r) * parse_poly("x + 3", r)));
  CHECK_FALSE(i.contains(parse_poly("1", r)));
  const poly::Ideal unit(r, {parse_poly("x", r), parse_poly("x - 1", r)});
  CHECK(strings(poly::buchberger(unit, poly::MonomialOrder::grevlex())) == std::vector<std::string>{"1"});
  CHECK(poly::Ideal(r, {}).is_zero_ideal());
}

TEST_CASE("s-polynomial cancels leading terms") {
  const auto r = poly::make_ring({"x", "y"}, Field::rationals());
  const auto s = poly::s_polynomial(parse_poly("x^2 - y", r), parse_poly("x*y - 1", r));
  CHECK(s.str() == "-y^2 + x");
}

TEST_CASE("random ideals: generators reduce to zero and the basis is reduced") {
  std::mt19937_64 rng(17);
  for (std::uint32_t p : {0u, 5u}) {
    const auto r = poly::make_ring({"x", "y", "z"}, p == 0 ? Field::rationals() : Field::prime(p));
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<Polynomial> gens;
      for (int g = 0; g < 2 + trial % 2; ++g) {
        std::string text = "0";
        for (int t = 0; t < 3; ++t) {
          text += " + " + std::to_string(static_cast<long>(rng() % 5) - 2);
          for (const char* v : {"x", "y", "z"}) text += std::string("*") + v + "^" + std::to_string(rng() % 2);
        }
        gens.push_back(parse_poly(text, r));
      }
      Caps caps;
      const auto basis = poly::buchberger(gens, poly::MonomialOrder::grevlex(), caps);
      CHECK(poly::is_reduced_basis(basis));
      CHECK(poly::satisfies_buchberger_criterion(basis));
      for (const auto& g : gens) CHECK(poly::normal_form(g, basis).is_zero());
      // a reduced basis is unique: recomputing from it gives it back
      CHECK(strings(poly::buchberger(basis, poly::MonomialOrder::grevlex())) == strings(basis));
    }
  }
}

TEST_CASE("caps stop runaway computations") {
  const auto r = poly::make_ring({"x", "y", "z"}, Field::rationals());
  Caps caps;
  caps.max_reduction_steps = 3;
  CHECK_THROWS_AS(poly::buchberger({parse_poly("x^3 - y*z", r), parse_poly("y^3 - x*z", r), parse_poly("z^3 - x*y", r)},
                                   poly::MonomialOrder::grevlex(), caps),
                  CapExceeded);
}

TEST_CASE("jacobian rank") {
  const auto r = poly::make_ring({"u", "v", "w"}, Field::rationals());
  const auto cone = parse_poly("u*w - v^2", r);
  const Field q = Field::rationals();
  CHECK(poly::jacobian_rank_at({cone}, {FieldElem::zero(q), FieldElem::zero(q), FieldElem::zero(q)}) == 0);
  CHECK(poly::jacobian_rank_at({cone}, {FieldElem::one(q), FieldElem::one(q), FieldElem::one(q)}) == 1);
}
