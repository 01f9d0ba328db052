#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sympow {

/// A permutation of {0, ..., n-1} as its image list: i -> p[i].
using Perm = std::vector<std::uint32_t>;

Perm identity_perm(std::size_t n);
/// (a ∘ b)(i) = a(b(i)).
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
bool is_permutation(const Perm& p);
/// Cycle notation with 1-based points, "()" for the identity.
std::string cycle_string(const Perm& p);

/// All elements generated by `generators`, sorted. Throws CapExceeded when
/// the closure grows beyond `cap` elements.
std::vector<Perm> group_closure(const std::vector<Perm>& generators, std::size_t degree, std::size_t cap = 5040);

/// Σ_n in lexicographic order.
std::vector<Perm> symmetric_group(std::size_t n);
/// (0 1), (1 2), ..., (n-2 n-1).
std::vector<Perm> adjacent_transpositions(std::size_t n);

/// A finite group G ≤ Σ_degree acting on {0, ..., set_size - 1}: one
/// permutation of the set per group generator.
struct GSet {
  std::size_t degree = 0;
  std::vector<Perm> generators;
  std::size_t set_size = 0;
  std::vector<Perm> generator_actions;

  /// The action of every group element. Throws InvalidInput when the
  /// generator actions do not define a homomorphism.
  std::map<Perm, Perm> extend() const;
};

}  // namespace sympow
