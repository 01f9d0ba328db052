#include "sympow/affine_counting.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sympow/errors.hpp"

namespace sympow::counting {

namespace {

std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint64_t q) {
  auto pe = prime_power(q);
  if (!pe) throw InvalidInput("q = " + std::to_string(q) + " is not a prime power");
  return *pe;
}

// Equations with coefficients mapped into a concrete finite field.
struct CompiledSystem {
  struct Monomial {
    FiniteField::value_type coeff;
    std::vector<std::uint32_t> exponents;
  };
  std::vector<std::vector<Monomial>> equations;
  std::uint32_t max_degree = 0;

  CompiledSystem(const AffineVarietySpec& x, const FiniteField& f) {
    for (const auto& eq : x.equations) {
      std::vector<Monomial> terms;
      for (const auto& t : eq.terms()) {
        terms.push_back({f.from_integer(t.coeff.residue()), t.exponents});
        for (auto e : t.exponents) max_degree = std::max(max_degree, e);
      }
      equations.push_back(std::move(terms));
    }
  }

  bool satisfied(const FiniteField& f, const Point& pt, std::vector<std::vector<FiniteField::value_type>>& powers) const {
    for (std::size_t v = 0; v < pt.size(); ++v) {
      auto& row = powers[v];
      row.assign(max_degree + 1, 1);
      for (std::uint32_t k = 1; k <= max_degree; ++k) row[k] = f.mul(row[k - 1], pt[v]);
    }
    for (const auto& eq : equations) {
      FiniteField::value_type acc = 0;
      for (const auto& m : eq) {
        FiniteField::value_type term = m.coeff;
        for (std::size_t v = 0; v < pt.size() && term != 0; ++v) {
          if (m.exponents[v] != 0) term = f.mul(term, powers[v][m.exponents[v]]);
        }
        acc = f.add(acc, term);
      }
      if (acc != 0) return false;
    }
    return true;
  }
};

FiniteField extension_field(const AffineVarietySpec& x, std::uint32_t d, const Caps& caps) {
  if (d == 0) throw InvalidInput("extension degree must be positive");
  if (x.nvars() > caps.max_vars) {
    throw CapExceeded("variety has " + std::to_string(x.nvars()) + " variables, cap is " + std::to_string(caps.max_vars));
  }
  std::uint64_t field_order = 1;
  for (std::uint32_t i = 0; i < x.e * d; ++i) {
    field_order *= x.p;
    if (field_order > caps.max_points || field_order > FiniteField::kMaxOrder) {
      throw CapExceeded("enumeration over F_" + std::to_string(x.q) + "^" + std::to_string(d) + " exceeds the point cap");
    }
  }
  std::uint64_t total = 1;
  for (std::size_t v = 0; v < x.nvars(); ++v) {
    total *= field_order;
    if (total > caps.max_points) {
      throw CapExceeded("enumeration of " + std::to_string(x.nvars()) + " coordinates over F_" +
                        std::to_string(field_order) + " exceeds the point cap " + std::to_string(caps.max_points));
    }
  }
  return FiniteField(x.p, x.e * d);
}

template <typename Visit>
void for_each_point(const AffineVarietySpec& x, const FiniteField& f, Visit&& visit) {
  CompiledSystem sys(x, f);
  const std::size_t nv = x.nvars();
  const auto order = static_cast<FiniteField::value_type>(f.order());
  Point pt(nv, 0);
  std::vector<std::vector<FiniteField::value_type>> powers(nv);
  while (true) {
    if (sys.satisfied(f, pt, powers)) visit(pt);
    std::size_t v = nv;
    while (v > 0) {
      --v;
      if (++pt[v] < order) break;
      pt[v] = 0;
      if (v == 0) return;
    }
    if (nv == 0) return;
  }
}

int mobius(std::uint64_t n) {
  int result = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

std::vector<mpz_class> mobius_invert(const std::vector<mpz_class>& n) {
  std::vector<mpz_class> c(n.size());
  for (std::size_t d = 1; d <= n.size(); ++d) {
    mpz_class sum = 0;
    for (std::size_t e = 1; e <= d; ++e) {
      if (d % e == 0) sum += mobius(d / e) * n[e - 1];
    }
    if (sum % mpz_class(static_cast<unsigned long>(d)) != 0) {
      throw InvalidInput("point counts are not those of a variety: degree " + std::to_string(d) + " is fractional");
    }
    c[d - 1] = sum / mpz_class(static_cast<unsigned long>(d));
    if (c[d - 1] < 0) {
      throw InvalidInput("point counts are not those of a variety: negative count in degree " + std::to_string(d));
    }
  }
  return c;
}

void require_same_q(const ClosedPointInventory& x, const ClosedPointInventory& y) {
  if (x.q != y.q) {
    throw InvalidInput("mismatched base fields: q = " + std::to_string(x.q) + " and q = " + std::to_string(y.q));
  }
}

std::size_t lcm_up_to(std::size_t n) {
  std::size_t l = 1;
  for (std::size_t k = 2; k <= n; ++k) l = std::lcm(l, k);
  return l;
}

}  // namespace

AffineVarietySpec AffineVarietySpec::make(std::string label, std::uint64_t q, std::vector<std::string> vars,
                                          const std::vector<std::string>& equations) {
  auto [p, e] = split_prime_power(q);
  AffineVarietySpec x;
  x.label = std::move(label);
  x.q = q;
  x.p = p;
  x.e = e;
  x.ring = poly::make_ring(std::move(vars), Field::prime(p));
  for (const auto& src : equations) {
    auto f = poly::parse_poly(src, x.ring);
    if (!f.is_zero()) x.equations.push_back(std::move(f));
  }
  return x;
}

AffineVarietySpec AffineVarietySpec::affine_space(std::uint64_t q, std::size_t nvars) {
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < nvars; ++i) vars.push_back("x" + std::to_string(i + 1));
  return make("A" + std::to_string(nvars), q, std::move(vars), {});
}

AffineVarietySpec AffineVarietySpec::point(std::uint64_t q) { return make("point", q, {}, {}); }

AffineVarietySpec AffineVarietySpec::empty(std::uint64_t q) { return make("empty", q, {}, {"1"}); }

PointSet enumerate_points(const AffineVarietySpec& x, std::uint32_t d, const Caps& caps) {
  PointSet out{extension_field(x, d, caps), {}};
  for_each_point(x, out.field, [&](const Point& pt) { out.points.push_back(pt); });
  return out;
}

std::uint64_t count_points(const AffineVarietySpec& x, std::uint32_t d, const Caps& caps) {
  const FiniteField f = extension_field(x, d, caps);
  std::uint64_t count = 0;
  for_each_point(x, f, [&](const Point&) { ++count; });
  return count;
}

bool ClosedPointInventory::consistent() const {
  if (c.size() != N.size()) return false;
  for (std::size_t m = 1; m <= N.size(); ++m) {
    if (c[m - 1] < 0) return false;
    mpz_class sum = 0;
    for (std::size_t d = 1; d <= m; ++d) {
      if (m % d == 0) sum += mpz_class(static_cast<unsigned long>(d)) * c[d - 1];
    }
    if (sum != N[m - 1]) return false;
  }
  return true;
}

ClosedPointInventory ClosedPointInventory::from_counts(std::string label, std::uint64_t q, std::vector<mpz_class> n) {
  ClosedPointInventory inv;
  inv.label = std::move(label);
  inv.q = q;
  inv.c = mobius_invert(n);
  inv.N = std::move(n);
  return inv;
}

ClosedPointInventory closed_points(const AffineVarietySpec& x, std::size_t depth, const Caps& caps) {
  std::vector<mpz_class> n;
  for (std::size_t d = 1; d <= depth; ++d) {
    n.emplace_back(static_cast<unsigned long>(count_points(x, static_cast<std::uint32_t>(d), caps)));
  }
  return ClosedPointInventory::from_counts(x.label, x.q, std::move(n));
}

ClosedPointInventory disjoint_union(const ClosedPointInventory& x, const ClosedPointInventory& y) {
  require_same_q(x, y);
  const std::size_t depth = std::min(x.depth(), y.depth());
  ClosedPointInventory u;
  u.label = x.label + " + " + y.label;
  u.q = x.q;
  for (std::size_t d = 0; d < depth; ++d) {
    u.N.push_back(x.N[d] + y.N[d]);
    u.c.push_back(x.c[d] + y.c[d]);
  }
  return u;
}

ClosedPointInventory product(const ClosedPointInventory& x, const ClosedPointInventory& y) {
  require_same_q(x, y);
  const std::size_t depth = std::min(x.depth(), y.depth());
  std::vector<mpz_class> n;
  for (std::size_t d = 0; d < depth; ++d) n.push_back(x.N[d] * y.N[d]);
  return ClosedPointInventory::from_counts(x.label + " x " + y.label, x.q, std::move(n));
}

std::vector<mpz_class> sym_series(const ClosedPointInventory& inv, std::size_t n) {
  if (inv.depth() < n) {
    throw InvalidInput("inventory of depth " + std::to_string(inv.depth()) + " cannot give Sym^" + std::to_string(n));
  }
  std::vector<mpz_class> series(n + 1, 0);
  series[0] = 1;
  for (std::size_t d = 1; d <= n; ++d) {
    const mpz_class& c = inv.c[d - 1];
    if (c == 0) continue;
    // (1 - t^d)^(-c) = sum_k binom(c + k - 1, k) t^(dk)
    std::vector<mpz_class> factor(n + 1, 0);
    mpz_class coeff = 1;
    for (std::size_t k = 0; d * k <= n; ++k) {
      if (k > 0) coeff = coeff * (c + static_cast<unsigned long>(k - 1)) / static_cast<unsigned long>(k);
      factor[d * k] = coeff;
    }
    std::vector<mpz_class> next(n + 1, 0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (series[i] == 0) continue;
      for (std::size_t j = 0; i + j <= n; j += d) next[i + j] += series[i] * factor[j];
    }
    series = std::move(next);
  }
  return series;
}

SymCountReport sym_count(const ClosedPointInventory& inv, std::size_t n) {
  return {inv.label, inv.q, n, sym_series(inv, n)[n], SymMethod::GeneratingFunction};
}

SymCountReport sym_count(const AffineVarietySpec& x, std::size_t n, const Caps& caps) {
  return sym_count(closed_points(x, n, caps), n);
}

SymCountReport sym_count_oracle(const AffineVarietySpec& x, std::size_t n, const Caps& caps) {
  SymCountReport report{x.label, x.q, n, 0, SymMethod::OrbitOracle};
  if (n == 0) {
    report.count = 1;
    return report;
  }
  const std::size_t l = lcm_up_to(n);
  std::uint64_t per_coordinate = 1;
  for (std::size_t i = 0; i < l; ++i) {
    per_coordinate *= x.q;
    if (per_coordinate > caps.max_oracle_field) {
      throw CapExceeded("orbit oracle needs F_" + std::to_string(x.q) + "^" + std::to_string(l) +
                        ", above the oracle field cap " + std::to_string(caps.max_oracle_field));
    }
  }
  const PointSet all = enumerate_points(x, static_cast<std::uint32_t>(l), caps);
  const FiniteField& f = all.field;

  auto frobenius = [&](const Point& pt) {
    Point out(pt.size());
    for (std::size_t v = 0; v < pt.size(); ++v) out[v] = f.pow(pt[v], x.q);
    return out;
  };
  // A point in a stable multiset of size n has a Frobenius orbit of size <= n.
  std::vector<Point> pts;
  for (const auto& pt : all.points) {
    Point y = frobenius(pt);
    std::size_t orbit = 1;
    while (y != pt && orbit <= n) {
      y = frobenius(y);
      ++orbit;
    }
    if (orbit <= n) pts.push_back(pt);
  }
  std::vector<std::size_t> image(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Point y = frobenius(pts[i]);
    image[i] = static_cast<std::size_t>(std::lower_bound(pts.begin(), pts.end(), y) - pts.begin());
  }

  // Sorted tuples i_1 <= ... <= i_n, grouped as (index, multiplicity).
  std::vector<std::pair<std::size_t, std::size_t>> chosen;
  mpz_class count = 0;
  auto multiplicity = [&](std::size_t idx) -> std::size_t {
    for (const auto& [i, m] : chosen) {
      if (i == idx) return m;
    }
    return 0;
  };
  auto stable = [&] {
    std::vector<std::size_t> tuple, moved;
    for (const auto& [i, m] : chosen) {
      for (std::size_t k = 0; k < m; ++k) {
        tuple.push_back(i);
        moved.push_back(image[i]);
      }
    }
    std::sort(moved.begin(), moved.end());
    return tuple == moved;
  };
  auto search = [&](auto&& self, std::size_t start, std::size_t remaining) -> void {
    if (remaining == 0) {
      if (stable()) ++count;
      return;
    }
    for (std::size_t x_idx = start; x_idx < pts.size(); ++x_idx) {
      // Multiplicities of indices below x_idx are final: an element whose
      // image lies below x_idx must already be balanced.
      bool dead = false;
      for (const auto& [i, m] : chosen) {
        if (image[i] < x_idx && multiplicity(image[i]) != m) dead = true;
      }
      if (dead) break;
      for (std::size_t m = 1; m <= remaining; ++m) {
        chosen.emplace_back(x_idx, m);
        std::size_t owed = 0;
        bool ok = true;
        for (const auto& [i, mi] : chosen) {
          if (image[i] > x_idx) {
            owed += mi;
          } else if (multiplicity(image[i]) != mi) {
            ok = false;
          }
        }
        if (ok && owed <= remaining - m) self(self, x_idx + 1, remaining - m);
        chosen.pop_back();
      }
    }
  };
  search(search, 0, n);
  report.count = count;
  return report;
}

KunnethReport kunneth_verify(const ClosedPointInventory& x, const ClosedPointInventory& y, std::size_t n) {
  require_same_q(x, y);
  KunnethReport r;
  r.label = x.label + " + " + y.label;
  r.q = x.q;
  r.n = n;
  r.sym_x = sym_series(x, n);
  r.sym_y = sym_series(y, n);
  r.lhs = sym_series(disjoint_union(x, y), n)[n];
  r.rhs = 0;
  for (std::size_t i = 0; i <= n; ++i) r.rhs += r.sym_x[i] * r.sym_y[n - i];
  r.ok = r.lhs == r.rhs;
  return r;
}

KunnethReport kunneth_verify(const AffineVarietySpec& x, const AffineVarietySpec& y, std::size_t n, const Caps& caps) {
  if (x.q != y.q) {
    throw InvalidInput("mismatched base fields: q = " + std::to_string(x.q) + " and q = " + std::to_string(y.q));
  }
  return kunneth_verify(closed_points(x, n, caps), closed_points(y, n, caps), n);
}

TowerCountReport tower_counts(const ClosedPointInventory& x, const ClosedPointInventory& y, std::size_t n) {
  require_same_q(x, y);
  TowerCountReport r;
  r.label = x.label + " -> " + x.label + " + " + y.label;
  r.q = x.q;
  r.n = n;
  const auto sx = sym_series(x, n);
  const auto sy = sym_series(y, n);
  for (std::size_t i = 0; i <= n; ++i) {
    mpz_class t = 0;
    for (std::size_t j = n - i; j <= n; ++j) t += sx[j] * sy[n - j];
    r.counts.push_back(t);
  }
  for (std::size_t i = 1; i <= n; ++i) r.cone_counts.push_back(sx[n - i] * sy[i]);
  r.sym_union = sym_series(disjoint_union(x, y), n)[n];

  r.monotone = true;
  r.differences_ok = true;
  for (std::size_t i = 1; i <= n; ++i) {
    if (r.counts[i] < r.counts[i - 1]) r.monotone = false;
    if (r.counts[i] - r.counts[i - 1] != r.cone_counts[i - 1]) r.differences_ok = false;
  }
  r.endpoints_ok = r.counts.front() == sx[n] && r.counts.back() == r.sym_union;
  return r;
}

TowerCountReport tower_counts(const AffineVarietySpec& x, const AffineVarietySpec& y, std::size_t n, const Caps& caps) {
  if (x.q != y.q) {
    throw InvalidInput("mismatched base fields: q = " + std::to_string(x.q) + " and q = " + std::to_string(y.q));
  }
  return tower_counts(closed_points(x, n, caps), closed_points(y, n, caps), n);
}

}  // namespace sympow::counting
