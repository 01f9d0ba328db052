#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "sympow/caps.hpp"
#include "sympow/linalg.hpp"
#include "sympow/permutation.hpp"

namespace sympow::transfer {

using QMatrix = Matrix<mpq_class>;

/// A rational representation of Σ_n given by the matrices of the adjacent
/// transpositions s_1, ..., s_(n-1).
class PermModule {
 public:
  /// Validates s_i^2 = 1, (s_i s_(i+1))^3 = 1 and (s_i s_j)^2 = 1 for |i - j| >= 2,
  /// then enumerates all n! group elements.
  PermModule(std::size_t dim, std::size_t n, std::vector<QMatrix> generator_actions, const Caps& caps = {});

  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return n_; }
  const std::vector<QMatrix>& generator_actions() const { return generators_; }
  /// (σ, ρ(σ)) for every σ in Σ_n, sorted by σ.
  const std::vector<std::pair<Perm, QMatrix>>& elements() const { return elements_; }

 private:
  std::size_t dim_;
  std::size_t n_;
  std::vector<QMatrix> generators_;
  std::vector<std::pair<Perm, QMatrix>> elements_;
};

/// Σ_n permuting the factors of (Q^d)^{⊗n}; basis tuples in lexicographic order.
PermModule tensor_power_module(std::size_t d, std::size_t n, const Caps& caps = {});
/// Every element acting as the identity.
PermModule trivial_module(std::size_t dim, std::size_t n, const Caps& caps = {});
/// Q[Σ_2].
PermModule regular_module_s2();

/// Sum of ρ(σ) over all σ.
QMatrix norm(const PermModule& m);

struct ProjectorReport {
  QMatrix d_n;          // Nm / n!
  bool idempotent = false;
  QMatrix image_basis;  // canonical rows spanning im d_n
  std::size_t dim = 0;
};

ProjectorReport projector_sym(const PermModule& m);

/// V / span{v - σv}, with quotient coordinates at the non-pivot columns of the
/// reduced row-echelon form of the relations.
struct Coinvariants {
  QMatrix relations;                  // RREF rows
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> basis;     // non-pivot coordinates, lifted as e_j
  QMatrix pi;                         // dim(quotient) x dim(V)
  std::size_t dim() const { return basis.size(); }
};

Coinvariants coinvariants(const PermModule& m);

struct NormTransferPack {
  QMatrix pi;  // V -> V_Σ
  QMatrix tr;  // V_Σ -> V, [v] -> Σ σv
  QMatrix nm;
  std::size_t n = 0;
  bool well_defined = false;  // Nm vanishes on the relations
  bool pi_tr = false;         // π ∘ tr = n! id
  bool tr_pi = false;         // tr ∘ π = Nm
  bool norm_square = false;   // Nm ∘ Nm = n! Nm
  bool ok() const { return well_defined && pi_tr && tr_pi && norm_square; }
};

NormTransferPack build_transfer(const PermModule& m);

/// Free linearization of a finite set S: π: Q[S^n] -> Q[Sym^n S] and
/// tr_n(M) = (n!/|orbit|) Σ_{t in orbit(M)} t.
struct FiniteSetTransferReport {
  std::size_t set_size = 0;
  std::size_t n = 0;
  QMatrix pi;
  QMatrix tr;
  QMatrix nm;
  bool pi_tr = false;  // π ∘ tr_n = n! id
  bool tr_pi = false;  // tr_n ∘ π = Σ_σ σ
  bool ok() const { return pi_tr && tr_pi; }
};

FiniteSetTransferReport finite_set_transfer(std::size_t set_size, std::size_t n, const Caps& caps = {});

/// u: Q[S]^{⊗n}_Σ -> Q[Sym^n S] induced by π, and ξ = ϱ ∘ tr_n.
struct LinearizationInverseReport {
  std::size_t d = 0;
  std::size_t n = 0;
  std::size_t coinvariant_dim = 0;
  std::size_t multiset_count = 0;
  QMatrix u;
  QMatrix xi;
  QMatrix u_inverse;  // ξ / n!
  bool u_well_defined = false;  // π kills the relations
  bool xi_u = false;            // ξ ∘ u = n! id
  bool u_xi = false;            // u ∘ (ξ / n!) = id
  bool ok() const { return u_well_defined && xi_u && u_xi; }
};

LinearizationInverseReport prop81_verify(std::size_t d, std::size_t n, const Caps& caps = {});

/// Functions on Sym^n S pulled back along π against Σ_n-invariant functions on S^n.
struct PullbackInvariantsReport {
  std::size_t set_size = 0;
  std::size_t n = 0;
  std::size_t ambient_dim = 0;
  std::size_t image_dim = 0;
  std::size_t invariant_dim = 0;
  bool equal = false;
};

PullbackInvariantsReport lemma84_check(std::size_t set_size, std::size_t n, const Caps& caps = {});

struct KunnethModulesReport {
  std::size_t dv = 0;
  std::size_t dw = 0;
  std::size_t n = 0;
  std::size_t symmetrizer_rank = 0;   // rank d_n on (V ⊕ W)^{⊗n}
  std::size_t coinvariant_dim = 0;
  std::uint64_t binomial = 0;         // binom(dv + dw + n - 1, n)
  std::vector<std::size_t> terms;     // dim Sym^i V * dim Sym^(n-i) W, i = 0..n
  std::size_t kunneth_sum = 0;
  bool ok = false;
};

KunnethModulesReport kunneth_modules(std::size_t dv, std::size_t dw, std::size_t n, const Caps& caps = {});

}  // namespace sympow::transfer
