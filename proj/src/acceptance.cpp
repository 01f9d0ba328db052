#include "sympow/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "sympow/combinatorics.hpp"
#include "sympow/errors.hpp"
#include "sympow/etale.hpp"
#include "sympow/finite_field.hpp"
#include "sympow/invariant_rings.hpp"
#include "sympow/permutation.hpp"
#include "sympow/towers.hpp"
#include "sympow/transfer.hpp"

namespace sympow::acceptance {

namespace {

/// Counts cases and keeps the first failure message.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& describe) {
    ++cases_;
    if (ok) return;
    ++failures_;
    if (first_.empty()) first_ = describe();
  }
  void fill(CriterionResult& r) const {
    r.cases = cases_;
    r.failures = failures_;
    r.ok = failures_ == 0 && cases_ > 0;
    r.detail = first_;
  }

 private:
  std::size_t cases_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

template <typename... Args>
std::string cat(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

struct Meta {
  const char* name;
  const char* anchor;
  double limit;
};

const Meta kMeta[kCriteria] = {
    {"invariant dimension law", "invariant-dimension", 60},
    {"orbit-sum basis for r=3, n=2", "orbit-sum-basis", 0},
    {"theta bijection on sections", "theta-galois-bijection", 60},
    {"Kunneth rule for point counts", "kunneth-rule", 120},
    {"Kunneth tower counts", "kunneth-tower-counts", 0},
    {"generating function vs orbit oracle", "oracle-equivalence", 0},
    {"Sym^n A^1 has q^n points", "affine-line", 0},
    {"linearization inverse", "linearization-inverse", 60},
    {"norm, transfer and symmetrizer identities", "norm-transfer-identities", 0},
    {"Sym^2 A^2 relation and cone", "sym2-plane-cone", 120},
    {"lambda axioms and theta ladder", "lambda-axioms", 0},
    {"corestriction orbits and weight quotients", "corestriction-orbits", 0},
};

void dimension_law(Tally& t, const Caps& caps) {
  for (std::uint64_t q : {2, 3})
    for (std::uint32_t r = 1; r <= 4; ++r)
      for (std::size_t n = 1; n <= 4; ++n) {
        const auto rep = etale::dimension_check(etale::ExtensionSpec::make(q, r), n, caps);
        t.check(rep.ok() && rep.dim_actual == binomial(r + n - 1, n),
                [&] { return cat("q=", q, " r=", r, " n=", n, ": dim ", rep.dim_actual, ", expected ", rep.dim_expected); });
      }
}

void orbit_sum_basis(Tally& t, const Caps& caps) {
  for (std::uint64_t q : {2, 3}) {
    const auto inv = etale::build_invariants(etale::ExtensionSpec::make(q, 3), 2, caps);
    const auto& parent = inv.parent();
    t.check(inv.dim() == 6, [&] { return cat("q=", q, ": dimension ", inv.dim()); });
    std::size_t diagonal = 0;
    std::size_t off = 0;
    for (std::size_t b = 0; b < inv.dim(); ++b) {
      const auto& ms = inv.multisets()[b];
      etale::Vec expected(parent.dim(), 0);
      expected[parent.index_of({ms[0], ms[1]})] = 1;
      expected[parent.index_of({ms[1], ms[0]})] = 1;
      if (ms[0] == ms[1]) {
        ++diagonal;
      } else {
        ++off;
      }
      t.check(inv.basis()[b] == expected, [&] { return cat("q=", q, ": basis vector ", b, " is not an orbit sum"); });
    }
    auto sizes = inv.orbit_sizes();
    std::sort(sizes.begin(), sizes.end());
    t.check(diagonal == 3 && off == 3 && sizes == std::vector<std::size_t>{1, 1, 1, 2, 2, 2},
            [&] { return cat("q=", q, ": ", diagonal, " diagonal and ", off, " off-diagonal vectors"); });
  }
}

void theta_bijection(Tally& t, const Caps& caps) {
  for (std::uint64_t q : {2, 3})
    for (std::uint32_t r : {2, 3})
      for (std::size_t n : {2, 3}) {
        const auto rep = etale::theta_bijection_check(etale::ExtensionSpec::make(q, r), n, caps);
        t.check(rep.bijection_ok && rep.source_size == binomial(r + n - 1, n) && rep.image_size == rep.source_size,
                [&] { return cat("q=", q, " r=", r, " n=", n, ": ", rep.source_size, " -> ", rep.image_size); });
      }
}

struct GridInventories {
  std::vector<VarietyPair> pairs;
  std::vector<counting::ClosedPointInventory> x;
  std::vector<counting::ClosedPointInventory> y;
};

GridInventories grid_inventories(std::uint64_t seed, const Caps& caps) {
  GridInventories g;
  g.pairs = variety_grid(seed);
  for (const auto& p : g.pairs) {
    g.x.push_back(counting::closed_points(p.x, 4, caps));
    g.y.push_back(counting::closed_points(p.y, 4, caps));
  }
  return g;
}

void kunneth_rule(Tally& t, std::uint64_t seed, const Caps& caps) {
  const auto g = grid_inventories(seed, caps);
  for (std::size_t i = 0; i < g.pairs.size(); ++i)
    for (std::size_t n = 0; n <= 4; ++n) {
      const auto rep = counting::kunneth_verify(g.x[i], g.y[i], n);
      t.check(rep.ok, [&] { return cat("pair ", i, " n=", n, ": ", rep.lhs.get_str(), " != ", rep.rhs.get_str()); });
    }
}

void tower_count_law(Tally& t, std::uint64_t seed, const Caps& caps) {
  const auto g = grid_inventories(seed, caps);
  for (std::size_t i = 0; i < g.pairs.size(); ++i)
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto rep = counting::tower_counts(g.x[i], g.y[i], n);
      t.check(rep.ok(), [&] { return cat("pair ", i, " n=", n, ": tower counts fail"); });
    }
}

void oracle_equivalence(Tally& t, std::uint64_t seed, const Caps& caps) {
  const auto g = grid_inventories(seed, caps);
  for (std::size_t i = 0; i < g.pairs.size(); ++i) {
    const std::pair<const counting::AffineVarietySpec*, const counting::ClosedPointInventory*> sides[] = {
        {&g.pairs[i].x, &g.x[i]}, {&g.pairs[i].y, &g.y[i]}};
    for (const auto& [spec, inv] : sides)
      for (std::size_t n = 0; n <= 3; ++n) {
        const auto gf = counting::sym_count(*inv, n);
        const auto oracle = counting::sym_count_oracle(*spec, n, caps);
        t.check(gf.count == oracle.count, [&] {
          return cat(spec->label, " n=", n, ": generating function ", gf.count.get_str(), ", oracle ", oracle.count.get_str());
        });
      }
  }
}

void affine_line(Tally& t, const Caps& caps) {
  for (std::uint32_t q : {2u, 3u}) {
    const auto a1 = counting::closed_points(counting::AffineVarietySpec::affine_space(q, 1), 5, caps);
    std::uint64_t power = 1;
    for (std::size_t n = 1; n <= 5; ++n) {
      power *= q;
      const auto gf = counting::sym_count(a1, n);
      const auto oracle = monic_polynomial_oracle(q, n);
      t.check(gf.count == power && oracle.multisets == power && oracle.distinct_products == power, [&] {
        return cat("q=", q, " n=", n, ": generating function ", gf.count.get_str(), ", multisets ", oracle.multisets,
                   ", distinct products ", oracle.distinct_products);
      });
    }
  }
}

void linearization_inverse(Tally& t, const Caps& caps) {
  for (std::size_t d = 1; d <= 3; ++d)
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto rep = transfer::prop81_verify(d, n, caps);
      t.check(rep.ok(), [&] { return cat("d=", d, " n=", n, ": xi u ", rep.xi_u, ", u xi ", rep.u_xi); });
    }
}

void transfer_identities(Tally& t, const Caps& caps) {
  for (std::size_t d = 1; d <= 3; ++d)
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto module = transfer::tensor_power_module(d, n, caps);
      const auto pack = transfer::build_transfer(module);
      const auto proj = transfer::projector_sym(module);
      const auto fs = transfer::finite_set_transfer(d, n, caps);
      t.check(pack.ok() && fs.ok(), [&] { return cat("d=", d, " n=", n, ": norm/transfer identity fails"); });
      t.check(proj.idempotent && proj.dim == binomial(d + n - 1, n),
              [&] { return cat("d=", d, " n=", n, ": symmetrizer rank ", proj.dim); });
    }
  for (std::size_t s = 1; s <= 3; ++s)
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto rep = transfer::lemma84_check(s, n, caps);
      t.check(rep.equal, [&] { return cat("|S|=", s, " n=", n, ": pullback image ", rep.image_dim, ", invariants ", rep.invariant_dim); });
    }
}

void plane_cone(Tally& t, const Caps& caps) {
  const auto pres = invariants::compute_presentation(caps);
  t.check(pres.principal && pres.matches_expected && pres.relation_in_ideal && pres.ideal_in_relation,
          [&] { return cat("elimination basis has ", pres.elimination_basis.size(), " elements"); });
  t.check(pres.vanishes_on_generators && pres.generators_invariant, [] { return std::string("generators fail"); });
  t.check(pres.cone_identity && pres.reduces_mod_relation, [] { return std::string("cone identity fails"); });
  t.check(pres.coordinate_change_ok, [] { return std::string("coordinate change fails"); });
  const auto sing = invariants::singularity_check();
  t.check(sing.ok() && sing.origin_rank == 0, [&] { return cat("Jacobian rank at origin ", sing.origin_rank); });
  for (std::uint64_t q : {2, 3, 5}) {
    const auto cc = invariants::count_cross_check(q, 2, caps);
    t.check(cc.agree, [&] { return cat("q=", q, ": ", cc.method_a, " vs ", cc.method_b); });
  }
}

void lambda_and_ladder(Tally& t, std::uint64_t seed, const Caps& caps) {
  const auto sequences = split_sequences(seed);
  for (std::size_t k = 0; k < sequences.size(); ++k) {
    const auto [x, z, n, s] = sequences[k];
    const auto audit = towers::lambda_audit(x, z, n, s, caps);
    t.check(audit.ok(), [&] { return cat("sequence ", k, " (|X|=", x, ", |Z|=", z, ", n=", n, "): axioms fail"); });
    const towers::Coprojection f{towers::PointedSet::generated(x - 1, "a"), towers::PointedSet::generated(z - 1, "b")};
    const auto ladder = towers::theta_ladder(f, n, caps);
    t.check(ladder.ok(), [&] { return cat("sequence ", k, " (|X|=", x, ", |Z|=", z, ", n=", n, "): ladder fails"); });
  }
}

Perm cycle(std::initializer_list<std::initializer_list<std::uint32_t>> cycles) {
  Perm p = identity_perm(5);
  for (const auto& c : cycles) {
    const std::vector<std::uint32_t> v(c);
    for (std::size_t i = 0; i < v.size(); ++i) p[v[i]] = v[(i + 1) % v.size()];
  }
  return p;
}

/// One subgroup per element set, generated by one element when cyclic.
std::vector<std::vector<Perm>> subgroup_generators(const std::vector<Perm>& g) {
  std::set<std::vector<Perm>> seen;
  std::vector<std::vector<Perm>> out;
  auto consider = [&](std::vector<Perm> gens) {
    if (seen.insert(group_closure(gens, 5)).second) out.push_back(std::move(gens));
  };
  consider({});
  for (const auto& a : g) consider({a});
  for (const auto& a : g)
    for (const auto& b : g) consider({a, b});
  return out;
}

void corestriction_and_weights(Tally& t, const Caps& caps) {
  const std::vector<std::pair<const char*, std::vector<Perm>>> groups = {
      {"C1", {}},
      {"C2", {cycle({{0, 1}})}},
      {"C3", {cycle({{0, 1, 2}})}},
      {"C4", {cycle({{0, 1, 2, 3}})}},
      {"V4", {cycle({{0, 1}, {2, 3}}), cycle({{0, 2}, {1, 3}})}},
      {"C5", {cycle({{0, 1, 2, 3, 4}})}},
      {"C6", {cycle({{0, 1}, {2, 3, 4}})}},
      {"S3", {cycle({{0, 1}}), cycle({{0, 1, 2}})}},
  };
  for (const auto& [name, gens] : groups) {
    const auto g = group_closure(gens, 5);
    for (const auto& h : subgroup_generators(g))
      for (std::size_t m = 1; m <= 4; ++m) {
        const auto perms = symmetric_group(m);
        std::vector<std::size_t> choice(h.size(), 0);
        while (true) {
          GSet s{5, h, m, {}};
          for (auto c : choice) s.generator_actions.push_back(perms[c]);
          bool action = true;
          try {
            s.extend();
          } catch (const InvalidInput&) {
            action = false;
          }
          if (action) {
            const auto rep = towers::cor_res_check(gens, s, caps);
            t.check(rep.bijection_ok && rep.lhs == rep.rhs, [&] {
              return cat(name, " |H|=", rep.subgroup_order, " |S|=", m, ": ", rep.lhs, " != ", rep.rhs);
            });
          }
          std::size_t k = 0;
          while (k < choice.size() && ++choice[k] == perms.size()) choice[k++] = 0;
          if (k == choice.size()) break;
        }
      }
  }
  for (std::size_t a = 0; a <= 4; ++a)
    for (std::size_t b = 0; b <= 4; ++b)
      for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t j = 0; j <= n; ++j) {
          const auto rep = towers::lemma16_check(towers::PointedSet::generated(a, "a"),
                                                 towers::PointedSet::generated(b, "b"), n, j, caps);
          t.check(rep.well_defined && rep.bijection_ok, [&] {
            return cat("|X0|=", a + 1, " |X1|=", b + 1, " n=", n, " j=", j, ": ", rep.lhs, " != ", rep.rhs);
          });
        }
}

PrimePoly multiply(const PrimePoly& a, const PrimePoly& b, std::uint32_t p) {
  PrimePoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return out;
}

}  // namespace

counting::AffineVarietySpec random_variety(std::mt19937_64& rng, std::uint64_t q, const std::string& label) {
  const std::size_t nvars = 1 + draw(rng, 2);
  const std::vector<std::string> vars = nvars == 1 ? std::vector<std::string>{"x"} : std::vector<std::string>{"x", "y"};
  const std::vector<std::string> monomials =
      nvars == 1 ? std::vector<std::string>{"1", "x", "x^2"} : std::vector<std::string>{"1", "x", "y", "x^2", "x*y", "y^2"};
  const std::uint64_t p = prime_power(q)->first;
  std::vector<std::string> equations;
  const std::size_t count = draw(rng, 3);
  for (std::size_t e = 0; e < count; ++e) {
    std::string text;
    for (const auto& m : monomials) {
      const std::uint64_t c = draw(rng, p);
      if (c == 0) continue;
      if (!text.empty()) text += " + ";
      text += std::to_string(c) + "*" + m;
    }
    equations.push_back(text.empty() ? "0" : text);
  }
  return counting::AffineVarietySpec::make(label, q, vars, equations);
}

std::vector<VarietyPair> variety_grid(std::uint64_t seed, std::size_t pairs) {
  std::mt19937_64 rng(seed);
  std::vector<VarietyPair> out;
  for (std::size_t i = 0; i < pairs; ++i) {
    const std::uint64_t q = draw(rng, 2) == 0 ? 2 : 3;
    auto x = random_variety(rng, q, "X" + std::to_string(i));
    auto y = random_variety(rng, q, "Y" + std::to_string(i));
    out.push_back({std::move(x), std::move(y)});
  }
  return out;
}

std::vector<SplitSequence> split_sequences(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<SplitSequence> out;
  for (std::size_t k = 0; k < count; ++k) {
    SplitSequence s;
    s.x = 1 + draw(rng, 4);
    s.z = 1 + draw(rng, 4);
    s.n = 1 + draw(rng, 4);
    s.morphism_seed = rng();
    out.push_back(s);
  }
  return out;
}

MonicOracle monic_polynomial_oracle(std::uint32_t p, std::size_t n) {
  // Monic irreducibles by degree.
  std::vector<std::vector<PrimePoly>> irreducible(n + 1);
  for (std::size_t d = 1; d <= n; ++d) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
      PrimePoly f(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i, c /= p) f[i] = static_cast<std::uint32_t>(c % p);
      f[d] = 1;
      if (prime_poly::is_irreducible(f, p)) irreducible[d].push_back(std::move(f));
    }
  }
  // Multisets of (degree, index) with total degree n, in nondecreasing order.
  MonicOracle out;
  std::set<PrimePoly> products;
  std::function<void(std::size_t, std::size_t, std::size_t, const PrimePoly&)> extend =
      [&](std::size_t remaining, std::size_t min_degree, std::size_t min_index, const PrimePoly& acc) {
        if (remaining == 0) {
          ++out.multisets;
          products.insert(acc);
          return;
        }
        for (std::size_t d = min_degree; d <= remaining; ++d)
          for (std::size_t i = d == min_degree ? min_index : 0; i < irreducible[d].size(); ++i)
            extend(remaining - d, d, i, multiply(acc, irreducible[d][i], p));
      };
  extend(n, 1, 0, PrimePoly{1});
  out.distinct_products = products.size();
  return out;
}

CriterionResult run_criterion(int id, std::uint64_t seed, const Caps& caps) {
  if (id < 1 || id > kCriteria) throw InvalidInput("no acceptance criterion " + std::to_string(id));
  const Meta& meta = kMeta[id - 1];
  CriterionResult r;
  r.id = id;
  r.name = meta.name;
  r.anchor = meta.anchor;
  r.limit_seconds = meta.limit;
  const auto start = std::chrono::steady_clock::now();
  Tally t;
  try {
    switch (id) {
      case 1: dimension_law(t, caps); break;
      case 2: orbit_sum_basis(t, caps); break;
      case 3: theta_bijection(t, caps); break;
      case 4: kunneth_rule(t, seed, caps); break;
      case 5: tower_count_law(t, seed, caps); break;
      case 6: oracle_equivalence(t, seed, caps); break;
      case 7: affine_line(t, caps); break;
      case 8: linearization_inverse(t, caps); break;
      case 9: transfer_identities(t, caps); break;
      case 10: plane_cone(t, caps); break;
      case 11: lambda_and_ladder(t, seed, caps); break;
      case 12: corestriction_and_weights(t, caps); break;
    }
    t.fill(r);
  } catch (const std::exception& e) {
    t.fill(r);
    r.ok = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_all(std::uint64_t seed, const Caps& caps) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriteria; ++id) out.push_back(run_criterion(id, seed, caps));
  return out;
}

}  // namespace sympow::acceptance
