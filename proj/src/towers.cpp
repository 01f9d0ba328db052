#include "sympow/towers.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>

#include "sympow/combinatorics.hpp"
#include "sympow/errors.hpp"

namespace sympow::towers {

namespace {

using Tuple = std::vector<std::uint32_t>;

void check_caps(const PointedSet& x, std::size_t n, const Caps& caps) {
  if (x.size() > caps.max_pointed_size) {
    throw CapExceeded("pointed set of size " + std::to_string(x.size()) + " exceeds the cap " +
                      std::to_string(caps.max_pointed_size));
  }
  if (n > caps.max_power) {
    throw CapExceeded("power " + std::to_string(n) + " exceeds the cap " + std::to_string(caps.max_power));
  }
}

std::string join(const std::vector<std::string>& labels, const Tuple& t, char open, char close) {
  std::string out(1, open);
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k > 0) out += ",";
    out += labels[t[k]];
  }
  out += close;
  return out;
}

std::string pair_label(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

struct Split {
  std::size_t kx = 0;
  std::vector<std::string> labels;  // X points then Y points
  bool in_y(std::uint32_t idx) const { return idx >= kx; }
};

Split split_of(const Coprojection& f) {
  Split s;
  s.kx = f.source.points.size();
  s.labels = f.target().points;
  return s;
}

// X-part and Y-part of a sorted tuple over the wedge, as sym labels.
std::pair<std::string, std::string> parts(const Split& s, const Tuple& t) {
  Tuple xs, ys;
  for (auto v : t) (s.in_y(v) ? ys : xs).push_back(v);
  return {join(s.labels, xs, '[', ']'), join(s.labels, ys, '[', ']')};
}

std::size_t y_count(const Split& s, const Tuple& t) {
  return static_cast<std::size_t>(std::count_if(t.begin(), t.end(), [&](std::uint32_t v) { return s.in_y(v); }));
}

// Σ_n-orbits of the box tuples as sorted tuples.
std::vector<std::set<Tuple>> categoric_levels(const Split& s, std::size_t n) {
  const auto all = tuples(static_cast<std::uint32_t>(s.labels.size()), n);
  std::vector<std::set<Tuple>> levels(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    for (const auto& t : all) {
      if (y_count(s, t) > i) continue;
      Tuple orbit_min = t;
      std::sort(orbit_min.begin(), orbit_min.end());
      levels[i].insert(std::move(orbit_min));
    }
  }
  return levels;
}

std::set<std::string> label_set(const PointedSet& x) { return {x.points.begin(), x.points.end()}; }

}  // namespace

PointedSet PointedSet::make(const std::vector<std::string>& elements, const std::string& basepoint) {
  std::set<std::string> seen;
  PointedSet out;
  bool has_base = false;
  for (const auto& e : elements) {
    if (!seen.insert(e).second) throw InvalidInput("duplicate element '" + e + "'");
    if (e == basepoint) {
      has_base = true;
    } else {
      out.points.push_back(e);
    }
  }
  if (!has_base) throw InvalidInput("basepoint '" + basepoint + "' is not an element");
  return out;
}

PointedSet PointedSet::generated(std::size_t k, const std::string& prefix) {
  PointedSet out;
  for (std::size_t i = 1; i <= k; ++i) out.points.push_back(prefix + std::to_string(i));
  return out;
}

PointedSet wedge(const PointedSet& x, const PointedSet& y) {
  PointedSet out = x;
  std::set<std::string> seen(x.points.begin(), x.points.end());
  for (const auto& p : y.points) {
    if (!seen.insert(p).second) throw InvalidInput("wedge summands share the label '" + p + "'");
    out.points.push_back(p);
  }
  return out;
}

PointedSet smash(const PointedSet& x, const PointedSet& y) {
  PointedSet out;
  for (const auto& a : x.points)
    for (const auto& b : y.points) out.points.push_back(pair_label(a, b));
  return out;
}

PointedSet smash_power(const PointedSet& x, std::size_t n, const Caps& caps) {
  check_caps(x, n, caps);
  PointedSet out;
  for (const auto& t : tuples(static_cast<std::uint32_t>(x.points.size()), n)) out.points.push_back(join(x.points, t, '(', ')'));
  return out;
}

PointedSet smash_power_sym(const PointedSet& x, std::size_t n, const Caps& caps) {
  check_caps(x, n, caps);
  std::set<Tuple> orbits;
  for (auto t : tuples(static_cast<std::uint32_t>(x.points.size()), n)) {
    std::sort(t.begin(), t.end());
    orbits.insert(std::move(t));
  }
  PointedSet out;
  for (const auto& t : orbits) out.points.push_back(join(x.points, t, '[', ']'));
  return out;
}

PointedSet box_object(const Coprojection& f, std::size_t n, std::size_t i, const Caps& caps) {
  if (i > n) throw InvalidInput("box index " + std::to_string(i) + " out of range 0.." + std::to_string(n));
  const Split s = split_of(f);
  check_caps(f.target(), n, caps);
  PointedSet out;
  for (const auto& t : tuples(static_cast<std::uint32_t>(s.labels.size()), n)) {
    if (y_count(s, t) <= i) out.points.push_back(join(s.labels, t, '(', ')'));
  }
  return out;
}

std::vector<std::size_t> KunnethTower::sizes() const {
  std::vector<std::size_t> out;
  for (const auto& t : terms) out.push_back(t.size());
  return out;
}

namespace {

void finish_tower(KunnethTower& tower) {
  tower.increasing = true;
  for (std::size_t i = 1; i < tower.terms.size(); ++i) {
    const auto prev = label_set(tower.terms[i - 1]);
    const auto cur = label_set(tower.terms[i]);
    if (!std::includes(cur.begin(), cur.end(), prev.begin(), prev.end())) tower.increasing = false;
    std::size_t fresh = 0;
    for (const auto& p : cur) fresh += prev.count(p) ? 0 : 1;
    tower.cone_sizes.push_back(fresh);
  }
}

}  // namespace

KunnethTower tower_categoric(const Coprojection& f, std::size_t n, const Caps& caps) {
  check_caps(f.target(), n, caps);
  const Split s = split_of(f);
  KunnethTower tower;
  tower.n = n;
  tower.kind = TowerKind::Categoric;
  for (const auto& level : categoric_levels(s, n)) {
    PointedSet term;
    for (const auto& t : level) term.points.push_back(join(s.labels, t, '[', ']'));
    tower.terms.push_back(std::move(term));
  }
  finish_tower(tower);
  return tower;
}

KunnethTower tower_geometric(const Coprojection& f, std::size_t n, const Caps& caps) {
  check_caps(f.target(), n, caps);
  KunnethTower tower;
  tower.n = n;
  tower.kind = TowerKind::Geometric;
  std::vector<PointedSet> summands;  // summands[l] = Sym^l X ∧ Sym^(n-l) Y
  for (std::size_t l = 0; l <= n; ++l) {
    summands.push_back(smash(smash_power_sym(f.source, l, caps), smash_power_sym(f.witness, n - l, caps)));
  }
  for (std::size_t i = 0; i <= n; ++i) {
    PointedSet term;
    for (std::size_t l = n + 1; l-- > n - i;) {
      term.points.insert(term.points.end(), summands[l].points.begin(), summands[l].points.end());
    }
    tower.terms.push_back(std::move(term));
  }
  finish_tower(tower);
  return tower;
}

LadderReport theta_ladder(const Coprojection& f, std::size_t n, const Caps& caps) {
  check_caps(f.target(), n, caps);
  const Split s = split_of(f);
  const auto levels = categoric_levels(s, n);
  const KunnethTower geometric = tower_geometric(f, n, caps);

  LadderReport rep;
  rep.n = n;
  rep.theta_bijective = true;
  rep.squares_commute = true;
  rep.cones_ok = true;

  std::vector<std::map<Tuple, std::string>> theta(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const auto target = label_set(geometric.terms[i]);
    std::set<std::string> image;
    bool into = true;
    for (const auto& t : levels[i]) {
      auto [xs, ys] = parts(s, t);
      std::string v = pair_label(xs, ys);
      if (!target.count(v)) into = false;
      image.insert(v);
      theta[i].emplace(t, std::move(v));
    }
    const bool bij = into && image.size() == levels[i].size() && image.size() == target.size();
    rep.bijective.push_back(bij);
    rep.theta_bijective = rep.theta_bijective && bij;
    rep.categoric_sizes.push_back(levels[i].size() + 1);
    rep.geometric_sizes.push_back(geometric.terms[i].size());
  }
  for (std::size_t i = 1; i <= n; ++i) {
    // ϑ_i ∘ (L_(i-1) ⊆ L_i) = (𝓛_(i-1) ⊆ 𝓛_i) ∘ ϑ_(i-1)
    for (const auto& [t, v] : theta[i - 1]) {
      auto it = theta[i].find(t);
      if (it == theta[i].end() || it->second != v) rep.squares_commute = false;
    }
    // L_i \ L_(i-1) against the non-base points of Sym^(n-i) X ∧ Sym^i Y.
    const auto cone = label_set(smash(smash_power_sym(f.source, n - i, caps), smash_power_sym(f.witness, i, caps)));
    std::set<std::string> hit;
    for (const auto& t : levels[i]) {
      if (levels[i - 1].count(t)) continue;
      auto [xs, ys] = parts(s, t);
      const std::string v = pair_label(xs, ys);
      if (!cone.count(v) || !hit.insert(v).second) rep.cones_ok = false;
    }
    if (hit.size() != cone.size()) rep.cones_ok = false;
    rep.cone_sizes.push_back(hit.size());
  }

  auto labels_of = [&](const std::set<Tuple>& level) {
    std::set<std::string> out;
    for (const auto& t : level) out.insert(join(s.labels, t, '[', ']'));
    return out;
  };
  const auto sym_x = smash_power_sym(f.source, n, caps);
  const auto sym_y = smash_power_sym(f.target(), n, caps);
  rep.endpoints_ok = labels_of(levels.front()) == label_set(sym_x) && labels_of(levels.back()) == label_set(sym_y);
  rep.kunneth_ok = sym_y.size() == geometric.terms.back().size();
  return rep;
}

namespace {

// Image of a sorted wedge tuple under fX ∨ fZ; nullopt is the basepoint.
std::optional<Tuple> push_forward(const Split& s, const Split& t, const PointedMap& fx, const PointedMap& fz,
                                  const Tuple& u) {
  Tuple out;
  for (auto v : u) {
    const std::uint32_t img = s.in_y(v) ? fz.image[v - s.kx] : fx.image[v];
    if (img == 0) return std::nullopt;
    out.push_back(s.in_y(v) ? static_cast<std::uint32_t>(t.kx) + img - 1 : img - 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void check_map(const PointedMap& m, std::size_t source_points) {
  if (m.source_points != source_points || m.image.size() != source_points) {
    throw InvalidInput("pointed map does not match its source");
  }
  for (auto v : m.image) {
    if (v > m.target_points) throw InvalidInput("pointed map image out of range");
  }
}

}  // namespace

LambdaAuditReport lambda_audit(const PointedSet& x, const PointedSet& y, std::size_t n,
                               const std::vector<std::pair<PointedMap, PointedMap>>& morphisms, const Caps& caps) {
  const std::set<std::string> ys(y.points.begin(), y.points.end());
  PointedSet z;
  for (const auto& p : x.points) {
    if (!ys.count(p)) throw InvalidInput("sequence is not split: '" + p + "' is not a point of Y");
  }
  const std::set<std::string> xs(x.points.begin(), x.points.end());
  for (const auto& p : y.points) {
    if (!xs.count(p)) z.points.push_back(p);
  }
  check_caps(y, n, caps);

  LambdaAuditReport rep;
  rep.x = x.size();
  rep.z = z.size();
  rep.n = n;

  // (i) Λ^0 = unit, Λ^1 = id.
  rep.unit_axiom = true;
  const PointedSet* sets[] = {&x, &y, &z};
  for (const auto* s : sets) {
    if (smash_power_sym(*s, 0, caps).points.size() != 1) rep.unit_axiom = false;
    const auto one = smash_power_sym(*s, 1, caps);
    if (one.points.size() != s->points.size()) rep.unit_axiom = false;
    for (std::size_t k = 0; k < one.points.size() && rep.unit_axiom; ++k) {
      if (one.points[k] != "[" + s->points[k] + "]") rep.unit_axiom = false;
    }
  }

  // (ii) the tower and its cones.
  const Coprojection f{x, z};
  const KunnethTower tower = tower_categoric(f, n, caps);
  const LadderReport ladder = theta_ladder(f, n, caps);
  rep.cone_counts.push_back(tower.terms.front().points.size());
  for (auto c : tower.cone_sizes) rep.cone_counts.push_back(c);
  for (std::size_t i = 0; i <= n; ++i) {
    rep.smash_counts.push_back(smash(smash_power_sym(x, n - i, caps), smash_power_sym(z, i, caps)).points.size());
  }
  rep.tower_axiom = tower.increasing && rep.cone_counts == rep.smash_counts && ladder.ok() &&
                    label_set(tower.terms.back()) == label_set(smash_power_sym(f.target(), n, caps));

  // (iii) functoriality on morphisms of split sequences.
  const Split s = split_of(f);
  const auto levels = categoric_levels(s, n);
  rep.functoriality = true;
  for (const auto& [fx, fz] : morphisms) {
    check_map(fx, x.points.size());
    check_map(fz, z.points.size());
    const Coprojection g{PointedSet::generated(fx.target_points, "u"), PointedSet::generated(fz.target_points, "w")};
    check_caps(g.target(), n, caps);
    const Split t = split_of(g);
    const auto target_levels = categoric_levels(t, n);
    for (std::size_t i = 0; i <= n; ++i) {
      for (const auto& u : levels[i]) {
        const auto img = push_forward(s, t, fx, fz, u);
        // filtration preserved
        if (img && !target_levels[i].count(*img)) rep.functoriality = false;
        // ladder: the map on L_(i-1) is the restriction of the map on L_i
        if (i > 0 && levels[i - 1].count(u)) {
          if (push_forward(s, t, fx, fz, u) != img) rep.functoriality = false;
          continue;
        }
        // cone: Sym^(n-i) fX ∧ Sym^i fZ on ϑ(u)
        std::optional<std::pair<std::string, std::string>> via_cone;
        {
          Tuple xs, zs;
          bool base = false;
          for (auto v : u) {
            const std::uint32_t im = s.in_y(v) ? fz.image[v - s.kx] : fx.image[v];
            if (im == 0) base = true;
            (s.in_y(v) ? zs : xs).push_back(im - 1);
          }
          if (!base) {
            std::sort(xs.begin(), xs.end());
            std::sort(zs.begin(), zs.end());
            via_cone.emplace(join(g.source.points, xs, '[', ']'), join(g.witness.points, zs, '[', ']'));
          }
        }
        std::optional<std::pair<std::string, std::string>> via_tower;
        if (img && (i == 0 || !target_levels[i - 1].count(*img))) via_tower = parts(t, *img);
        if (via_cone != via_tower) rep.functoriality = false;
      }
    }
    ++rep.morphisms_checked;
  }
  return rep;
}

LambdaAuditReport lambda_audit(std::size_t x, std::size_t z, std::size_t n, std::uint64_t seed, const Caps& caps) {
  if (x == 0 || z == 0) throw InvalidInput("pointed sets have at least the basepoint");
  const PointedSet px = PointedSet::generated(x - 1, "a");
  const PointedSet pz = PointedSet::generated(z - 1, "b");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<PointedMap, PointedMap>> morphisms;
  auto identity = [](std::size_t k) {
    PointedMap m{k, k, {}};
    for (std::size_t i = 1; i <= k; ++i) m.image.push_back(static_cast<std::uint32_t>(i));
    return m;
  };
  morphisms.emplace_back(identity(x - 1), identity(z - 1));
  morphisms.emplace_back(PointedMap{x - 1, 1, std::vector<std::uint32_t>(x - 1, 0)},
                         PointedMap{z - 1, 1, std::vector<std::uint32_t>(z - 1, 1)});
  for (int k = 0; k < 6; ++k) {
    PointedMap fx{x - 1, static_cast<std::size_t>(draw(rng, 4)), {}};
    PointedMap fz{z - 1, static_cast<std::size_t>(draw(rng, 4)), {}};
    for (std::size_t i = 0; i < fx.source_points; ++i) fx.image.push_back(static_cast<std::uint32_t>(draw(rng, fx.target_points + 1)));
    for (std::size_t i = 0; i < fz.source_points; ++i) fz.image.push_back(static_cast<std::uint32_t>(draw(rng, fz.target_points + 1)));
    morphisms.emplace_back(std::move(fx), std::move(fz));
  }
  return lambda_audit(px, wedge(px, pz), n, morphisms, caps);
}

CorResReport cor_res_check(const std::vector<Perm>& g_generators, const GSet& s, const Caps& caps) {
  const auto g = group_closure(g_generators, s.degree, factorial(caps.max_power));
  const auto h = group_closure(s.generators, s.degree, factorial(caps.max_power));
  for (const auto& e : h) {
    if (!std::binary_search(g.begin(), g.end(), e)) throw InvalidInput("H is not a subgroup of G");
  }
  if (s.set_size > 8 || g.size() > 24) throw CapExceeded("cor/res check is limited to |G| <= 24 and |S| <= 8");
  const auto rho = s.extend();
  const std::size_t m = s.set_size;

  std::map<Perm, std::size_t> index;
  for (std::size_t i = 0; i < g.size(); ++i) index[g[i]] = i;

  std::vector<std::size_t> parent;
  auto reset = [&](std::size_t size) {
    parent.resize(size);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  };
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
  auto classes = [&] {
    std::set<std::size_t> roots;
    for (std::size_t a = 0; a < parent.size(); ++a) roots.insert(find(a));
    return roots.size();
  };

  CorResReport rep;
  rep.group_order = g.size();
  rep.subgroup_order = h.size();
  rep.set_size = m;

  // (gh, s) ~ (g, hs)
  auto induce = [&] {
    reset(g.size() * m);
    for (std::size_t gi = 0; gi < g.size(); ++gi)
      for (const auto& [he, act] : rho)
        for (std::size_t x = 0; x < m; ++x) unite(index.at(compose(g[gi], he)) * m + x, gi * m + act[x]);
  };
  induce();
  rep.induced_size = classes();
  for (std::size_t gi = 0; gi < g.size(); ++gi)
    for (const auto& gen : g_generators)
      for (std::size_t x = 0; x < m; ++x) unite(gi * m + x, index.at(compose(gen, g[gi])) * m + x);
  rep.lhs = classes();
  std::vector<std::size_t> cor_class(g.size() * m);
  for (std::size_t a = 0; a < cor_class.size(); ++a) cor_class[a] = find(a);

  reset(m);
  for (const auto& [he, act] : rho)
    for (std::size_t x = 0; x < m; ++x) unite(x, act[x]);
  rep.rhs = classes();

  const std::size_t e = index.at(identity_perm(s.degree));
  std::map<std::size_t, std::size_t> phi;  // H-orbit root -> cor/G class
  bool well_defined = true;
  for (std::size_t x = 0; x < m; ++x) {
    auto [it, inserted] = phi.emplace(find(x), cor_class[e * m + x]);
    if (!inserted && it->second != cor_class[e * m + x]) well_defined = false;
  }
  std::set<std::size_t> image;
  for (const auto& [root, cls] : phi) image.insert(cls);
  const std::set<std::size_t> all(cor_class.begin(), cor_class.end());
  rep.bijection_ok = well_defined && image.size() == phi.size() && image == all && rep.lhs == rep.rhs;
  return rep;
}

WeightQuotientReport lemma16_check(const PointedSet& x0, const PointedSet& x1, std::size_t n, std::size_t j,
                            const Caps& caps) {
  check_caps(x0, n, caps);
  check_caps(x1, n, caps);
  if (j > n) throw InvalidInput("weight " + std::to_string(j) + " exceeds n = " + std::to_string(n));
  using Entry = std::pair<std::uint32_t, std::uint32_t>;  // (summand, point)
  using Elem = std::vector<Entry>;
  const std::uint32_t k0 = static_cast<std::uint32_t>(x0.points.size());
  const std::uint32_t k1 = static_cast<std::uint32_t>(x1.points.size());

  std::vector<Elem> lhs_points;
  for (const auto& word : tuples(2, n)) {
    if (static_cast<std::size_t>(std::count(word.begin(), word.end(), 1u)) != j) continue;
    std::vector<std::uint32_t> ranges;
    for (auto w : word) ranges.push_back(w == 0 ? k0 : k1);
    // all tuples with t_k in X_{w_k}
    Tuple t(n, 0);
    bool empty = std::any_of(ranges.begin(), ranges.end(), [](std::uint32_t r) { return r == 0; });
    while (!empty) {
      Elem e;
      for (std::size_t k = 0; k < n; ++k) e.emplace_back(word[k], t[k]);
      lhs_points.push_back(std::move(e));
      std::size_t k = n;
      while (k > 0 && t[k - 1] + 1 == ranges[k - 1]) t[--k] = 0;
      if (k == 0) break;
      ++t[k - 1];
    }
  }

  const auto perms = symmetric_group(n);
  auto act = [&](const Perm& sigma, const Elem& e) {
    Elem out(e.size());
    for (std::size_t k = 0; k < e.size(); ++k) out[sigma[k]] = e[k];
    return out;
  };
  auto image_of = [&](const Elem& e) {
    Tuple a, b;
    for (const auto& [w, p] : e) (w == 0 ? a : b).push_back(p);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return pair_label(join(x0.points, a, '[', ']'), join(x1.points, b, '[', ']'));
  };

  WeightQuotientReport rep;
  rep.n = n;
  rep.j = j;
  rep.well_defined = true;
  std::map<Elem, std::string> orbit_image;
  for (const auto& e : lhs_points) {
    Elem canonical = e;
    const std::string v = image_of(e);
    for (const auto& sigma : perms) {
      Elem moved = act(sigma, e);
      if (image_of(moved) != v) rep.well_defined = false;
      canonical = std::min(canonical, std::move(moved));
    }
    orbit_image.emplace(std::move(canonical), v);
  }
  const auto rhs = label_set(smash(smash_power_sym(x0, n - j, caps), smash_power_sym(x1, j, caps)));
  std::set<std::string> image;
  bool into = true;
  for (const auto& [orbit, v] : orbit_image) {
    image.insert(v);
    if (!rhs.count(v)) into = false;
  }
  rep.lhs = orbit_image.size() + 1;
  rep.rhs = rhs.size() + 1;
  rep.bijection_ok = rep.well_defined && into && image.size() == orbit_image.size() && image.size() == rhs.size();
  return rep;
}

}  // namespace sympow::towers
