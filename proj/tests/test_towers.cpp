#include "doctest.h"
#include "sympow/combinatorics.hpp"
#include "sympow/errors.hpp"
#include "sympow/permutation.hpp"
#include "sympow/towers.hpp"

using namespace sympow;
using towers::PointedSet;

namespace {

std::size_t sym_points(std::size_t k, std::size_t n) { return multisets(static_cast<std::uint32_t>(k), n).size(); }

}  // namespace

TEST_CASE("permutations") {
  const Perm a{1, 0, 2};
  const Perm b{0, 2, 1};
  CHECK(compose(a, b) == Perm{1, 2, 0});
  CHECK(compose(a, inverse(a)) == identity_perm(3));
  CHECK(cycle_string(Perm{1, 2, 0}) == "(1 2 3)");
  CHECK(cycle_string(identity_perm(3)) == "()");
  CHECK_FALSE(is_permutation(Perm{0, 0}));
  CHECK(group_closure(adjacent_transpositions(4), 4).size() == 24);
  CHECK(symmetric_group(3).size() == 6);
  CHECK(group_closure({Perm{1, 2, 0}}, 3).size() == 3);
  CHECK_THROWS_AS(group_closure(adjacent_transpositions(5), 5, 100), CapExceeded);
}

TEST_CASE("G-sets") {
  GSet s{3, {Perm{1, 0, 2}}, 2, {Perm{1, 0}}};
  CHECK(s.extend().size() == 2);
  GSet bad{3, {Perm{1, 0, 2}}, 3, {Perm{1, 2, 0}}};
  CHECK_THROWS_AS(bad.extend(), InvalidInput);
}

TEST_CASE("pointed set operations") {
  const auto x = PointedSet::generated(2, "a");
  const auto y = PointedSet::generated(3, "b");
  CHECK(x.size() == 3);
  CHECK(towers::wedge(x, y).size() == 6);
  CHECK(towers::smash(x, y).size() == 7);
  CHECK(towers::smash_power(x, 3).size() == 9);
  CHECK(towers::smash_power(x, 0).size() == 2);
  CHECK(towers::smash_power_sym(y, 2).points ==
        std::vector<std::string>{"[b1,b1]", "[b1,b2]", "[b1,b3]", "[b2,b2]", "[b2,b3]", "[b3,b3]"});
  CHECK_THROWS_AS(towers::wedge(x, x), InvalidInput);
  CHECK_THROWS_AS(PointedSet::make({"a", "b"}, "c"), InvalidInput);
  CHECK(PointedSet::make({"*", "a"}, "*").points == std::vector<std::string>{"a"});
}

TEST_CASE("smallest tower") {
  const towers::Coprojection f{PointedSet::generated(1, "a"), PointedSet::generated(1, "b")};
  const auto cat = towers::tower_categoric(f, 2);
  CHECK(cat.sizes() == std::vector<std::size_t>{2, 3, 4});
  CHECK(cat.increasing);
  CHECK(towers::box_object(f, 2, 1).size() == 4);
  const auto geo = towers::tower_geometric(f, 2);
  CHECK(geo.sizes() == std::vector<std::size_t>{2, 3, 4});
  CHECK(geo.terms[1].size() == 3);
}

TEST_CASE("ladder sizes follow the multiset counts") {
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b)
      for (std::size_t n = 1; n <= 3; ++n) {
        const towers::Coprojection f{PointedSet::generated(a, "a"), PointedSet::generated(b, "b")};
        const auto rep = towers::theta_ladder(f, n);
        CHECK(rep.ok());
        CHECK(rep.categoric_sizes == rep.geometric_sizes);
        CHECK(rep.categoric_sizes.front() == sym_points(a, n) + 1);
        CHECK(rep.categoric_sizes.back() == sym_points(a + b, n) + 1);
        for (std::size_t i = 1; i <= n; ++i) CHECK(rep.cone_sizes[i - 1] == sym_points(a, n - i) * sym_points(b, i));
      }
}

TEST_CASE("lambda audit") {
  const auto rep = towers::lambda_audit(2, 2, 2, 0);
  CHECK(rep.cone_counts == std::vector<std::size_t>{1, 1, 1});
  CHECK(rep.ok());
  CHECK(rep.morphisms_checked == 8);
  for (std::uint64_t seed = 0; seed < 5; ++seed) CHECK(towers::lambda_audit(3, 3, 3, seed).ok());
  CHECK_THROWS_AS(towers::lambda_audit(0, 2, 2, 0), InvalidInput);
}

TEST_CASE("lambda audit with explicit morphisms") {
  const auto x = PointedSet::generated(2, "a");
  const auto z = PointedSet::generated(1, "b");
  const towers::PointedMap collapse{2, 1, {1, 1}};
  const towers::PointedMap to_base{1, 3, {0}};
  const auto rep = towers::lambda_audit(x, towers::wedge(x, z), 3, {{collapse, to_base}});
  CHECK(rep.ok());
  CHECK(rep.smash_counts == std::vector<std::size_t>{4, 3, 2, 1});
}

TEST_CASE("corestriction orbits") {
  // G = Σ_3, H = <(1 2)> acting on two points by the swap
  const std::vector<Perm> g = {Perm{1, 0, 2}, Perm{1, 2, 0}};
  const GSet s{3, {Perm{1, 0, 2}}, 2, {Perm{1, 0}}};
  const auto rep = towers::cor_res_check(g, s);
  CHECK(rep.group_order == 6);
  CHECK(rep.induced_size == 6);
  CHECK(rep.lhs == 1);
  CHECK(rep.rhs == 1);
  CHECK(rep.bijection_ok);
  const GSet trivial{3, {Perm{1, 0, 2}}, 2, {Perm{0, 1}}};
  CHECK(towers::cor_res_check(g, trivial).lhs == 2);
  const GSet outside{3, {Perm{0, 2, 1}}, 1, {Perm{0}}};
  CHECK_THROWS_AS(towers::cor_res_check({Perm{1, 0, 2}}, outside), InvalidInput);
}

TEST_CASE("weight quotients") {
  const auto rep = towers::lemma16_check(PointedSet::generated(1, "a"), PointedSet::generated(1, "b"), 3, 1);
  CHECK(rep.lhs == 2);
  CHECK(rep.rhs == 2);
  CHECK(rep.bijection_ok);
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b)
      for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t j = 0; j <= n; ++j) {
          const auto r = towers::lemma16_check(PointedSet::generated(a, "a"), PointedSet::generated(b, "b"), n, j);
          CHECK(r.rhs == sym_points(a, n - j) * sym_points(b, j) + 1);
          CHECK(r.lhs == r.rhs);
        }
}
