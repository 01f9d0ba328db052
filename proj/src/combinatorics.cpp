#include "sympow/combinatorics.hpp"

#include <algorithm>

namespace sympow {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

std::vector<std::vector<std::uint32_t>> multisets(std::uint32_t r, std::size_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  if (r == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  std::vector<std::uint32_t> cur(n, 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = n;
    while (i > 0 && cur[i - 1] == r - 1) --i;
    if (i == 0) break;
    const std::uint32_t v = cur[i - 1] + 1;
    for (std::size_t j = i - 1; j < n; ++j) cur[j] = v;
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> tuples(std::uint32_t r, std::size_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  if (r == 0 && n > 0) return out;
  std::vector<std::uint32_t> cur(n, 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = n;
    while (i > 0 && cur[i - 1] == r - 1) cur[--i] = 0;
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> distinct_permutations(std::vector<std::uint32_t> tuple) {
  std::sort(tuple.begin(), tuple.end());
  std::vector<std::vector<std::uint32_t>> out;
  do {
    out.push_back(tuple);
  } while (std::next_permutation(tuple.begin(), tuple.end()));
  return out;
}

}  // namespace sympow
