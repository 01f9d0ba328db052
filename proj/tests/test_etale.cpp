#include <algorithm>
#include <set>

#include "doctest.h"
#include "sympow/combinatorics.hpp"
#include "sympow/errors.hpp"
#include "sympow/etale.hpp"

using namespace sympow;
using etale::ExtensionSpec;

namespace {

// Spec L is r points permuted cyclically by Frobenius; the factors of the
// invariant algebra are the Frobenius orbits on size-n multisets of them.
std::vector<std::size_t> orbit_degrees(std::uint32_t r, std::size_t n) {
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::size_t> out;
  for (const auto& m : multisets(r, n)) {
    if (seen.count(m)) continue;
    std::size_t size = 0;
    auto cur = m;
    do {
      seen.insert(cur);
      ++size;
      for (auto& v : cur) v = (v + 1) % r;
      std::sort(cur.begin(), cur.end());
    } while (cur != m);
    out.push_back(size);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("deterministic moduli") {
  CHECK(ExtensionSpec::make(2, 2).modulus_str() == "t^2 + t + 1");
  CHECK(ExtensionSpec::make(2, 3).modulus_str() == "t^3 + t + 1");
  CHECK(ExtensionSpec::make(3, 2).modulus_str() == "t^2 + 1");
  CHECK(ExtensionSpec::make(4, 2).modulus_str() == "t^2 + t + 2");
  CHECK(ExtensionSpec::make(5, 1).modulus_str() == "t");
}

TEST_CASE("irreducibility over F_q") {
  const FiniteField f4(2, 2);
  CHECK(etale::is_irreducible_over(f4, {2, 1, 1}));
  CHECK_FALSE(etale::is_irreducible_over(f4, {1, 1, 1}));
  CHECK_FALSE(etale::is_irreducible_over(f4, {1, 0, 1}));
  CHECK_THROWS_AS(ExtensionSpec::with_modulus(2, {1, 0, 1}), InvalidInput);
  CHECK_NOTHROW(ExtensionSpec::with_modulus(3, {2, 1, 1}));
}

TEST_CASE("field extension multiplication") {
  const auto l = etale::CommutativeAlgebra::field_extension(ExtensionSpec::make(2, 2));
  CHECK(l.multiply(l.basis_vector(1), l.basis_vector(1)) == etale::Vec{1, 1});
  const auto t = l.basis_vector(1);
  CHECK(l.pow(t, 3) == l.unit());
}

TEST_CASE("decomposition of known algebras") {
  const FiniteField f2(2, 1);
  CHECK(etale::decompose_etale(etale::CommutativeAlgebra::split(f2, 3)).degrees == std::vector<std::size_t>{1, 1, 1});
  const auto l3 = etale::CommutativeAlgebra::field_extension(ExtensionSpec::make(2, 3));
  CHECK(etale::decompose_etale(l3).degrees == std::vector<std::size_t>{3});
  const auto l2 = etale::CommutativeAlgebra::field_extension(ExtensionSpec::make(2, 2));
  const auto mixed = etale::CommutativeAlgebra::product(l2, etale::CommutativeAlgebra::split(f2, 1));
  const auto d = etale::decompose_etale(mixed);
  CHECK(d.degrees == std::vector<std::size_t>{1, 2});
  CHECK(d.idempotents.size() == 2);
  CHECK(etale::count_homs(d, 1) == 1);
  CHECK(etale::count_homs(d, 2) == 3);
}

TEST_CASE("a non-reduced algebra is rejected") {
  // F_2[e]/(e^2)
  const FiniteField f2(2, 1);
  const etale::CommutativeAlgebra dual(f2, {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}}, {1, 0});
  CHECK_THROWS_AS(etale::decompose_etale(dual), InvalidInput);
}

TEST_CASE("invariant subalgebras split along Frobenius orbits") {
  for (std::uint64_t q : {2, 3})
    for (std::uint32_t r = 1; r <= 3; ++r)
      for (std::size_t n = 1; n <= 3; ++n) {
        const auto l = ExtensionSpec::make(q, r);
        const auto inv = etale::build_invariants(l, n);
        CHECK(inv.dim() == binomial(r + n - 1, n));
        const auto d = etale::decompose_etale(inv.as_algebra());
        CHECK(d.degrees == orbit_degrees(r, n));
        CHECK(d.fixed_dim == d.degrees.size());
      }
  const auto d = etale::decompose_etale(etale::build_invariants(ExtensionSpec::make(2, 2), 2).as_algebra());
  CHECK(d.degrees == std::vector<std::size_t>{1, 2});
}

TEST_CASE("dimension reports") {
  const auto rep = etale::dimension_check(ExtensionSpec::make(3, 3), 2);
  CHECK(rep.dim_expected == 6);
  CHECK(rep.dim_actual == 6);
  CHECK(rep.ok());
  auto sizes = rep.orbit_sizes;
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 1, 1, 2, 2, 2});
}

TEST_CASE("theta bijection") {
  const auto a = etale::theta_bijection_check(ExtensionSpec::make(2, 2), 2);
  CHECK(a.source_size == 3);
  CHECK(a.image_size == 3);
  CHECK(a.bijection_ok);
  const auto b = etale::theta_bijection_check(ExtensionSpec::make(3, 3), 2);
  CHECK(b.source_size == 6);
  CHECK(b.bijection_ok);
  CHECK(b.homs == b.source_size);
  const auto c = etale::theta_bijection_check(ExtensionSpec::make(4, 2), 3);
  CHECK(c.source_size == 4);
  CHECK(c.bijection_ok);
}

TEST_CASE("elementary symmetric signature") {
  const FiniteField f5(5, 1);
  CHECK(etale::elementary_symmetric_signature(f5, {1, 2, 3}) == std::vector<etale::Elem>{1, 1, 1});
  CHECK(etale::elementary_symmetric_signature(f5, {2, 3}) == std::vector<etale::Elem>{0, 1});
}

TEST_CASE("tensor power caps") {
  Caps caps;
  caps.max_tensor_dim = 8;
  CHECK_THROWS_AS(etale::TensorPowerAlgebra(ExtensionSpec::make(2, 3), 2, caps), CapExceeded);
}
