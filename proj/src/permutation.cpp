#include "sympow/permutation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "sympow/errors.hpp"

namespace sympow {

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw InvalidInput("composing permutations of different degrees");
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

Perm inverse(const Perm& p) {
  Perm inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<std::uint32_t>(i);
  return inv;
}

bool is_permutation(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::string cycle_string(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::vector<Perm> group_closure(const std::vector<Perm>& generators, std::size_t degree, std::size_t cap) {
  for (const auto& g : generators) {
    if (g.size() != degree || !is_permutation(g)) throw InvalidInput("generator is not a permutation of degree " + std::to_string(degree));
  }
  std::set<Perm> seen{identity_perm(degree)};
  std::deque<Perm> frontier{identity_perm(degree)};
  while (!frontier.empty()) {
    Perm h = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      Perm gh = compose(g, h);
      if (seen.insert(gh).second) {
        if (seen.size() > cap) throw CapExceeded("group closure exceeds " + std::to_string(cap) + " elements");
        frontier.push_back(std::move(gh));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Perm> symmetric_group(std::size_t n) {
  std::vector<Perm> out;
  Perm p = identity_perm(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Perm> adjacent_transpositions(std::size_t n) {
  std::vector<Perm> out;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Perm p = identity_perm(n);
    std::swap(p[i], p[i + 1]);
    out.push_back(std::move(p));
  }
  return out;
}

std::map<Perm, Perm> GSet::extend() const {
  if (generator_actions.size() != generators.size()) throw InvalidInput("one action per group generator is required");
  for (const auto& a : generator_actions) {
    if (a.size() != set_size || !is_permutation(a)) throw InvalidInput("generator action is not a bijection of the set");
  }
  for (const auto& g : generators) {
    if (g.size() != degree || !is_permutation(g)) throw InvalidInput("group generator is not a permutation of degree " + std::to_string(degree));
  }
  std::map<Perm, Perm> action{{identity_perm(degree), identity_perm(set_size)}};
  std::deque<Perm> frontier{identity_perm(degree)};
  while (!frontier.empty()) {
    const Perm h = frontier.front();
    frontier.pop_front();
    const Perm rho_h = action.at(h);
    for (std::size_t k = 0; k < generators.size(); ++k) {
      const Perm gh = compose(generators[k], h);
      const Perm rho = compose(generator_actions[k], rho_h);
      auto [it, inserted] = action.emplace(gh, rho);
      if (inserted) {
        frontier.push_back(gh);
      } else if (it->second != rho) {
        throw InvalidInput("generator actions violate the group relations");
      }
    }
  }
  return action;
}

}  // namespace sympow
