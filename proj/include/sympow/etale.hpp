#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sympow/caps.hpp"
#include "sympow/finite_field.hpp"

namespace sympow::etale {

using Elem = FiniteField::value_type;
using Vec = std::vector<Elem>;

/// Dense polynomial over F_q (coefficients in F_q's integer encoding), low degree first.
using FieldPoly = std::vector<Elem>;

/// Irreducibility over F_q: no root in F_{q^k} for any k <= deg/2.
bool is_irreducible_over(const FiniteField& fq, const FieldPoly& f);

/// L = F_q[t]/(modulus), an extension of degree r of F_q.
struct ExtensionSpec {
  std::uint64_t q = 0;
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::uint32_t r = 0;
  FieldPoly modulus;  // monic, degree r

  FiniteField base() const { return FiniteField(p, e); }

  /// Modulus: the monic irreducible of degree r over F_q with the smallest
  /// encoding sum c_i q^i.
  static ExtensionSpec make(std::uint64_t q, std::uint32_t r);
  /// Throws InvalidInput when the modulus is not monic irreducible of degree >= 1.
  static ExtensionSpec with_modulus(std::uint64_t q, FieldPoly modulus);

  std::string modulus_str() const;
};

/// A finite-dimensional commutative F_q-algebra given by structure constants:
/// e_i * e_j = sum_k table[i][j][k] e_k.
class CommutativeAlgebra {
 public:
  CommutativeAlgebra(FiniteField base, std::vector<std::vector<Vec>> table, Vec unit);

  /// L itself with basis 1, t, ..., t^(r-1).
  static CommutativeAlgebra field_extension(const ExtensionSpec& l);
  /// F_q^k with the standard idempotent basis.
  static CommutativeAlgebra split(const FiniteField& base, std::size_t k);
  static CommutativeAlgebra product(const CommutativeAlgebra& a, const CommutativeAlgebra& b);

  const FiniteField& base() const { return base_; }
  std::size_t dim() const { return table_.size(); }
  const Vec& unit() const { return unit_; }
  const Vec& product_of_basis(std::size_t i, std::size_t j) const { return table_[i][j]; }

  Vec basis_vector(std::size_t i) const;
  Vec add(const Vec& a, const Vec& b) const;
  Vec scale(Elem c, const Vec& a) const;
  Vec multiply(const Vec& a, const Vec& b) const;
  Vec pow(Vec a, std::uint64_t e) const;

 private:
  FiniteField base_;
  std::vector<std::vector<Vec>> table_;
  Vec unit_;
};

/// L^{⊗n} with basis v_{i_1} ⊗ ... ⊗ v_{i_n}, v_i = t^i, tuples in lexicographic order.
class TensorPowerAlgebra {
 public:
  TensorPowerAlgebra(ExtensionSpec l, std::size_t n, const Caps& caps = {});

  const ExtensionSpec& extension() const { return l_; }
  const FiniteField& base() const { return base_; }
  std::size_t n() const { return n_; }
  std::size_t dim() const { return tuples_.size(); }
  const std::vector<std::uint32_t>& tuple(std::size_t index) const { return tuples_[index]; }
  std::size_t index_of(const std::vector<std::uint32_t>& tuple) const;
  Vec unit() const;

  Vec multiply(const Vec& a, const Vec& b) const;
  /// Action of a permutation of tensor positions: v_{i_1..i_n} -> v_{i_perm^-1(1)..}.
  /// `perm[k]` is the position factor k moves to.
  Vec permute(const Vec& a, const std::vector<std::size_t>& perm) const;

 private:
  ExtensionSpec l_;
  FiniteField base_;
  std::size_t n_;
  std::vector<std::vector<std::uint32_t>> tuples_;
  std::vector<std::vector<Vec>> factor_products_;  // t^i * t^j in L
};

/// (L^{⊗n})^{Σ_n} with one orbit-sum basis vector per size-n multiset.
class InvariantSubalgebra {
 public:
  explicit InvariantSubalgebra(TensorPowerAlgebra parent);

  const TensorPowerAlgebra& parent() const { return parent_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::vector<std::uint32_t>>& multisets() const { return multisets_; }
  const std::vector<Vec>& basis() const { return basis_; }
  std::vector<std::size_t> orbit_sizes() const;

  /// Coordinates in the orbit-sum basis; false when `v` is not Σ_n-invariant.
  bool coordinates(const Vec& v, Vec& out) const;

  /// Structure constants from re-expanding products of basis vectors. Throws
  /// InvalidInput if some product leaves the subspace.
  CommutativeAlgebra as_algebra() const;

 private:
  TensorPowerAlgebra parent_;
  std::vector<std::vector<std::uint32_t>> multisets_;
  std::vector<Vec> basis_;
};

InvariantSubalgebra build_invariants(const ExtensionSpec& l, std::size_t n, const Caps& caps = {});

struct EtaleDecomposition {
  std::vector<std::size_t> degrees;  // ascending
  std::size_t fixed_dim = 0;         // dimension of the Frobenius-fixed subalgebra
  std::vector<Vec> idempotents;      // primitive idempotents, one per factor
};

/// Splits an étale algebra into field factors. Throws InvalidInput when
/// Frobenius is not invertible (the algebra is not reduced).
EtaleDecomposition decompose_etale(const CommutativeAlgebra& b, const Caps& caps = {});

/// sum of d_j over factors with d_j | m.
std::uint64_t count_homs(const EtaleDecomposition& decomposition, std::uint64_t m);
std::uint64_t count_homs(const CommutativeAlgebra& b, std::uint64_t m, const Caps& caps = {});

/// (e_1, ..., e_n) of the values.
std::vector<Elem> elementary_symmetric_signature(const FiniteField& k, const std::vector<Elem>& values);

struct DimensionReport {
  std::uint64_t q = 0;
  std::uint32_t r = 0;
  std::size_t n = 0;
  std::uint64_t dim_expected = 0;
  std::uint64_t dim_actual = 0;
  std::vector<std::size_t> orbit_sizes;
  bool invariant_basis = false;  // every basis vector fixed by every adjacent transposition
  bool ok() const { return invariant_basis && dim_expected == dim_actual; }
};

DimensionReport dimension_check(const ExtensionSpec& l, std::size_t n, const Caps& caps = {});

struct ThetaReport {
  std::uint64_t q = 0;
  std::uint32_t r = 0;
  std::size_t n = 0;
  std::uint32_t m = 0;  // K = F_{q^m}
  std::uint64_t dim_expected = 0;
  std::uint64_t dim_actual = 0;
  std::vector<std::size_t> factors;
  std::uint64_t homs = 0;
  std::uint64_t source_size = 0;  // size-n multisets of embeddings L -> K
  std::uint64_t image_size = 0;
  bool well_defined = false;
  bool homomorphisms = false;
  bool injective = false;
  bool signatures_distinct = false;
  bool bijection_ok = false;
};

ThetaReport theta_bijection_check(const ExtensionSpec& l, std::size_t n, const Caps& caps = {});

}  // namespace sympow::etale
