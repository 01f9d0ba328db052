#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace sympow {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);
std::uint64_t factorial(std::uint64_t n);

/// Size-n multisets of {0, ..., r-1} as sorted tuples, in lexicographic order.
std::vector<std::vector<std::uint32_t>> multisets(std::uint32_t r, std::size_t n);

/// All tuples of {0, ..., r-1}^n in lexicographic order (first entry slowest).
std::vector<std::vector<std::uint32_t>> tuples(std::uint32_t r, std::size_t n);

/// rng() % bound: a draw in [0, bound) that is identical on every platform.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound);

/// Distinct rearrangements of a tuple, in lexicographic order.
std::vector<std::vector<std::uint32_t>> distinct_permutations(std::vector<std::uint32_t> tuple);

}  // namespace sympow
