#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sympow/affine_counting.hpp"
#include "sympow/caps.hpp"

namespace sympow::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  std::string anchor;
  bool ok = false;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string detail;         // first failure or error; empty when ok
  double seconds = 0;
  double limit_seconds = 0;   // 0: no limit

  bool within_limit() const { return limit_seconds == 0 || seconds <= limit_seconds; }
  bool passed() const { return ok && within_limit(); }
};

constexpr int kCriteria = 12;

/// Runs one criterion, 1..kCriteria. Errors are reported as failures.
CriterionResult run_criterion(int id, std::uint64_t seed, const Caps& caps = {});
std::vector<CriterionResult> run_all(std::uint64_t seed, const Caps& caps = {});

/// A variety over F_q in one or two variables cut out by up to two equations
/// of degree at most 2 with uniformly drawn coefficients.
counting::AffineVarietySpec random_variety(std::mt19937_64& rng, std::uint64_t q, const std::string& label);

struct VarietyPair {
  counting::AffineVarietySpec x;
  counting::AffineVarietySpec y;
};

/// The seeded grid of pairs shared by the counting criteria: q in {2, 3}.
std::vector<VarietyPair> variety_grid(std::uint64_t seed, std::size_t pairs = 20);

/// Pointed-set sizes (basepoint included) and degree of a seeded split
/// sequence X -> X ∨ Z -> Z, with the seed for its sampled morphisms.
struct SplitSequence {
  std::size_t x = 1;
  std::size_t z = 1;
  std::size_t n = 1;
  std::uint64_t morphism_seed = 0;
};

/// |X|, |Z| in 1..4 and n in 1..4.
std::vector<SplitSequence> split_sequences(std::uint64_t seed, std::size_t count = 10);

/// Sym^n A^1(F_p) counted as multisets of monic irreducibles of total degree n,
/// checking that their products are pairwise distinct monic polynomials.
struct MonicOracle {
  std::uint64_t multisets = 0;
  std::uint64_t distinct_products = 0;
};
MonicOracle monic_polynomial_oracle(std::uint32_t p, std::size_t n);

}  // namespace sympow::acceptance
