#include "doctest.h"
#include "sympow/combinatorics.hpp"
#include "sympow/errors.hpp"
#include "sympow/transfer.hpp"

using namespace sympow;
using transfer::QMatrix;

namespace {

mpq_class trace(const QMatrix& m) {
  mpq_class t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

const QMatrix* element(const transfer::PermModule& m, const Perm& p) {
  for (const auto& [sigma, rho] : m.elements())
    if (sigma == p) return &rho;
  return nullptr;
}

// Tuples fixed by σ: d^(number of cycles).
std::uint64_t fixed_tuples(std::size_t d, const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = true;
    out *= d;
  }
  return out;
}

}  // namespace

TEST_CASE("characters of tensor power modules") {
  const auto m22 = transfer::tensor_power_module(2, 2);
  CHECK(trace(*element(m22, Perm{1, 0})) == 2);
  const auto m23 = transfer::tensor_power_module(2, 3);
  CHECK(trace(*element(m23, Perm{1, 2, 0})) == 2);
  for (std::size_t d = 1; d <= 3; ++d)
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto m = transfer::tensor_power_module(d, n);
      CHECK(m.elements().size() == factorial(n));
      for (const auto& [sigma, rho] : m.elements()) CHECK(trace(rho) == fixed_tuples(d, sigma));
    }
}

TEST_CASE("relations are validated") {
  QMatrix bad(2, 2, mpq_class(0));
  bad(0, 0) = 2;
  bad(1, 1) = 1;
  CHECK_THROWS_AS(transfer::PermModule(2, 2, {bad}), InvalidInput);
  Caps caps;
  caps.max_module_dim = 10;
  CHECK_THROWS_AS(transfer::tensor_power_module(3, 3, caps), CapExceeded);
}

TEST_CASE("symmetrizer") {
  for (std::size_t d = 1; d <= 3; ++d)
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto p = transfer::projector_sym(transfer::tensor_power_module(d, n));
      CHECK(p.idempotent);
      CHECK(p.dim == binomial(d + n - 1, n));
    }
  const auto reg = transfer::projector_sym(transfer::regular_module_s2());
  CHECK(reg.dim == 1);
  CHECK(reg.d_n(0, 1) == mpq_class(1, 2));
  CHECK(transfer::projector_sym(transfer::trivial_module(3, 3)).dim == 3);
}

TEST_CASE("coinvariants and transfer identities") {
  for (std::size_t d = 1; d <= 3; ++d)
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto m = transfer::tensor_power_module(d, n);
      const auto c = transfer::coinvariants(m);
      CHECK(c.dim() == binomial(d + n - 1, n));
      const auto pack = transfer::build_transfer(m);
      CHECK(pack.well_defined);
      CHECK(pack.pi_tr);
      CHECK(pack.tr_pi);
      CHECK(pack.norm_square);
    }
  const auto pack = transfer::build_transfer(transfer::regular_module_s2());
  CHECK(pack.ok());
  CHECK(pack.nm == QMatrix(2, 2, mpq_class(1)));
}

TEST_CASE("finite-set transfer") {
  for (std::size_t s = 1; s <= 3; ++s)
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto rep = transfer::finite_set_transfer(s, n);
      CHECK(rep.pi_tr);
      CHECK(rep.tr_pi);
      CHECK(rep.pi.rows() == binomial(s + n - 1, n));
    }
  // the multiset {0, 1} of a 2-element set has an orbit of size 2: weight 2!/2
  const auto rep = transfer::finite_set_transfer(2, 2);
  CHECK(rep.tr(1, 1) == 1);
  CHECK(rep.tr(0, 0) == 2);
}

TEST_CASE("linearization inverse") {
  for (std::size_t d = 1; d <= 3; ++d)
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto rep = transfer::prop81_verify(d, n);
      CHECK(rep.ok());
      CHECK(rep.coinvariant_dim == rep.multiset_count);
    }
}

TEST_CASE("pullback of functions on multisets") {
  for (std::size_t s = 1; s <= 3; ++s)
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto rep = transfer::lemma84_check(s, n);
      CHECK(rep.equal);
      CHECK(rep.image_dim == binomial(s + n - 1, n));
    }
}

TEST_CASE("Kunneth for modules") {
  CHECK(transfer::kunneth_modules(2, 1, 2).symmetrizer_rank == 6);
  CHECK(transfer::kunneth_modules(2, 2, 3).symmetrizer_rank == 20);
  const auto rep = transfer::kunneth_modules(1, 2, 3);
  CHECK(rep.ok);
  CHECK(rep.terms == std::vector<std::size_t>{4, 3, 2, 1});
}
