#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sympow/caps.hpp"
#include "sympow/polynomial.hpp"

namespace sympow::poly {

/// An ideal given by generators, optionally carrying a reduced Gröbner basis
/// for a named order. An ideal with no generators is the zero ideal.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool is_zero_ideal() const;

  const std::optional<std::vector<Polynomial>>& cached_basis() const { return basis_; }
  const std::optional<MonomialOrder>& cached_order() const { return basis_order_; }
  /// Copy of this ideal carrying the reduced basis for `order`.
  Ideal with_groebner(MonomialOrder order, const Caps& caps = {}) const;

  /// Membership by normal form against a reduced basis (computed on demand).
  bool contains(const Polynomial& f, const Caps& caps = {}) const;

  std::string str() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::optional<std::vector<Polynomial>> basis_;
  std::optional<MonomialOrder> basis_order_;
};

/// Full reduction of `f` modulo `basis` (all terms, not just the leading one).
/// Every polynomial is taken in the order of `f`.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis, const Caps& caps = {});

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Reduced, monic Gröbner basis. Throws CapExceeded when the configured term,
/// step or basis-size limit is hit.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators, MonomialOrder order,
                                   const Caps& caps = {});

/// Reduced basis of the ideal in the given order.
std::vector<Polynomial> buchberger(const Ideal& ideal, MonomialOrder order, const Caps& caps = {});

/// True when no leading monomial divides another term of a different element
/// and every element is monic.
bool is_reduced_basis(const std::vector<Polynomial>& basis);

/// Every S-polynomial of basis pairs reduces to zero.
bool satisfies_buchberger_criterion(const std::vector<Polynomial>& basis, const Caps& caps = {});

/// Elimination ideal I ∩ k[keep]. Computed with a block order that puts the
/// eliminated variables first; the result lives in the subring on `keep`
/// (variables in the ring's declaration order) and carries its grevlex basis.
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& keep, const Caps& caps = {});

/// Rank of the Jacobian matrix of `polys` evaluated at `point`.
std::size_t jacobian_rank_at(const std::vector<Polynomial>& polys, const std::vector<FieldElem>& point);

}  // namespace sympow::poly
