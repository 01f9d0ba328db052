#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace sympow {

/// Resource limits. Exceeding any of them raises CapExceeded; nothing is truncated.
struct Caps {
  // Gröbner basis computations.
  std::size_t max_terms = 20000;            // terms in any intermediate polynomial
  std::size_t max_reduction_steps = 2000000;
  std::size_t max_basis_size = 2000;

  // Point enumeration: q^(d * #vars) candidate points.
  std::uint64_t max_points = std::uint64_t{1} << 22;
  // Frobenius-orbit oracle: q^L per coordinate.
  std::uint64_t max_oracle_field = std::uint64_t{1} << 12;
  // Variables in an affine variety.
  std::size_t max_vars = 3;

  // Tensor powers of field extensions: r^n.
  std::size_t max_tensor_dim = 256;
  // Exhaustive idempotent search: q^s elements of the Frobenius-fixed subalgebra.
  std::uint64_t max_idempotent_search = std::uint64_t{1} << 22;

  // Permutation modules: d^n.
  std::size_t max_module_dim = 4096;
  // Symmetric group degree for explicit closures.
  std::size_t max_symmetric_degree = 5;

  // Finite pointed sets.
  std::size_t max_pointed_size = 12;
  std::size_t max_power = 5;

  /// Sets one limit by name; returns false for an unknown name.
  bool set(std::string_view name, std::uint64_t value);
};

}  // namespace sympow
