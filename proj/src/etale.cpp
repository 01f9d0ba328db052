#include "sympow/etale.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "sympow/combinatorics.hpp"
#include "sympow/errors.hpp"
#include "sympow/linalg.hpp"

namespace sympow::etale {

namespace {

Elem eval_poly(const FiniteField& k, const std::vector<Elem>& image, const FieldPoly& f, Elem x) {
  Elem acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = k.add(k.mul(acc, x), image[f[i]]);
  return acc;
}

FieldPoly trim(FieldPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

// Powers t^0 .. t^(2r-2) reduced modulo the monic modulus, as coordinate vectors.
std::vector<Vec> reduced_powers(const FiniteField& fq, const FieldPoly& modulus) {
  const std::size_t r = modulus.size() - 1;
  std::vector<Vec> powers;
  Vec cur(r, 0);
  cur[0] = 1;
  const std::size_t count = r == 1 ? 1 : 2 * r - 1;
  for (std::size_t k = 0; k < count; ++k) {
    powers.push_back(cur);
    // multiply by t: shift, then replace t^r by -(m_0 + ... + m_{r-1} t^{r-1})
    const Elem top = cur[r - 1];
    for (std::size_t i = r - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (std::size_t i = 0; i < r; ++i) cur[i] = fq.sub(cur[i], fq.mul(top, modulus[i]));
    }
  }
  return powers;
}

void check_dim(const Vec& v, std::size_t dim) {
  if (v.size() != dim) throw InvalidInput("vector of length " + std::to_string(v.size()) + " in algebra of dimension " + std::to_string(dim));
}

}  // namespace

bool is_irreducible_over(const FiniteField& fq, const FieldPoly& f_in) {
  const FieldPoly f = trim(f_in);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  for (std::size_t k = 1; k <= deg / 2; ++k) {
    const FiniteField big(fq.characteristic(), fq.degree() * static_cast<std::uint32_t>(k));
    const auto image = embed(fq, big);
    for (std::uint64_t x = 0; x < big.order(); ++x) {
      if (eval_poly(big, image, f, static_cast<Elem>(x)) == 0) return false;
    }
  }
  return true;
}

ExtensionSpec ExtensionSpec::make(std::uint64_t q, std::uint32_t r) {
  auto pe = prime_power(q);
  if (!pe) throw InvalidInput("q = " + std::to_string(q) + " is not a prime power");
  if (r == 0) throw InvalidInput("extension degree must be positive");
  ExtensionSpec l;
  l.q = q;
  l.p = pe->first;
  l.e = pe->second;
  l.r = r;
  const FiniteField fq = l.base();
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    count *= q;
    if (count > FiniteField::kMaxOrder) throw CapExceeded("modulus search space exceeds the field-order cap");
  }
  for (std::uint64_t code = 0; code < count; ++code) {
    FieldPoly f(r + 1, 0);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < r; ++i, c /= q) f[i] = static_cast<Elem>(c % q);
    f[r] = 1;
    if (is_irreducible_over(fq, f)) {
      l.modulus = std::move(f);
      return l;
    }
  }
  throw InvalidInput("no irreducible polynomial found");  // unreachable
}

ExtensionSpec ExtensionSpec::with_modulus(std::uint64_t q, FieldPoly modulus) {
  auto pe = prime_power(q);
  if (!pe) throw InvalidInput("q = " + std::to_string(q) + " is not a prime power");
  modulus = trim(std::move(modulus));
  for (auto c : modulus) {
    if (c >= q) throw InvalidInput("modulus coefficient " + std::to_string(c) + " is not an element of F_" + std::to_string(q));
  }
  if (modulus.size() < 2 || modulus.back() != 1) throw InvalidInput("modulus must be monic of positive degree");
  ExtensionSpec l;
  l.q = q;
  l.p = pe->first;
  l.e = pe->second;
  l.r = static_cast<std::uint32_t>(modulus.size() - 1);
  l.modulus = std::move(modulus);
  if (!is_irreducible_over(l.base(), l.modulus)) throw InvalidInput("modulus " + l.modulus_str() + " is reducible");
  return l;
}

std::string ExtensionSpec::modulus_str() const {
  std::string out;
  for (std::size_t i = modulus.size(); i-- > 0;) {
    const Elem c = modulus[i];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

CommutativeAlgebra::CommutativeAlgebra(FiniteField base, std::vector<std::vector<Vec>> table, Vec unit)
    : base_(std::move(base)), table_(std::move(table)), unit_(std::move(unit)) {
  const std::size_t n = table_.size();
  check_dim(unit_, n);
  for (const auto& row : table_) {
    if (row.size() != n) throw InvalidInput("structure constant table is not square");
    for (const auto& v : row) check_dim(v, n);
  }
}

CommutativeAlgebra CommutativeAlgebra::field_extension(const ExtensionSpec& l) {
  const FiniteField fq = l.base();
  const auto powers = reduced_powers(fq, l.modulus);
  std::vector<std::vector<Vec>> table(l.r, std::vector<Vec>(l.r));
  for (std::size_t i = 0; i < l.r; ++i)
    for (std::size_t j = 0; j < l.r; ++j) table[i][j] = powers[i + j];
  Vec unit(l.r, 0);
  unit[0] = 1;
  return CommutativeAlgebra(fq, std::move(table), std::move(unit));
}

CommutativeAlgebra CommutativeAlgebra::split(const FiniteField& base, std::size_t k) {
  std::vector<std::vector<Vec>> table(k, std::vector<Vec>(k, Vec(k, 0)));
  for (std::size_t i = 0; i < k; ++i) table[i][i][i] = 1;
  return CommutativeAlgebra(base, std::move(table), Vec(k, 1));
}

CommutativeAlgebra CommutativeAlgebra::product(const CommutativeAlgebra& a, const CommutativeAlgebra& b) {
  if (!(a.base() == b.base())) throw InvalidInput("product of algebras over different fields");
  const std::size_t n = a.dim() + b.dim();
  std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n, Vec(n, 0)));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) table[i][j][k] = a.table_[i][j][k];
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k) table[a.dim() + i][a.dim() + j][a.dim() + k] = b.table_[i][j][k];
  Vec unit = a.unit();
  unit.insert(unit.end(), b.unit().begin(), b.unit().end());
  return CommutativeAlgebra(a.base(), std::move(table), std::move(unit));
}

Vec CommutativeAlgebra::basis_vector(std::size_t i) const {
  Vec v(dim(), 0);
  v.at(i) = 1;
  return v;
}

Vec CommutativeAlgebra::add(const Vec& a, const Vec& b) const {
  check_dim(a, dim());
  check_dim(b, dim());
  Vec out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = base_.add(a[i], b[i]);
  return out;
}

Vec CommutativeAlgebra::scale(Elem c, const Vec& a) const {
  check_dim(a, dim());
  Vec out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = base_.mul(c, a[i]);
  return out;
}

Vec CommutativeAlgebra::multiply(const Vec& a, const Vec& b) const {
  check_dim(a, dim());
  check_dim(b, dim());
  Vec out(dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j] == 0) continue;
      const Elem c = base_.mul(a[i], b[j]);
      const Vec& t = table_[i][j];
      for (std::size_t k = 0; k < dim(); ++k) {
        if (t[k] != 0) out[k] = base_.add(out[k], base_.mul(c, t[k]));
      }
    }
  }
  return out;
}

Vec CommutativeAlgebra::pow(Vec a, std::uint64_t e) const {
  Vec result = unit_;
  for (; e > 0; e >>= 1) {
    if (e & 1) result = multiply(result, a);
    if (e > 1) a = multiply(a, a);
  }
  return result;
}

TensorPowerAlgebra::TensorPowerAlgebra(ExtensionSpec l, std::size_t n, const Caps& caps)
    : l_(std::move(l)), base_(l_.base()), n_(n) {
  std::uint64_t dim = 1;
  for (std::size_t i = 0; i < n; ++i) {
    dim *= l_.r;
    if (dim > caps.max_tensor_dim) {
      throw CapExceeded("tensor power of dimension " + std::to_string(l_.r) + "^" + std::to_string(n) +
                        " exceeds the cap " + std::to_string(caps.max_tensor_dim));
    }
  }
  tuples_ = tuples(l_.r, n);
  const auto powers = reduced_powers(base_, l_.modulus);
  factor_products_.assign(l_.r, std::vector<Vec>(l_.r));
  for (std::size_t i = 0; i < l_.r; ++i)
    for (std::size_t j = 0; j < l_.r; ++j) factor_products_[i][j] = powers[i + j];
}

std::size_t TensorPowerAlgebra::index_of(const std::vector<std::uint32_t>& tuple) const {
  if (tuple.size() != n_) throw InvalidInput("tuple length does not match the tensor power");
  std::size_t index = 0;
  for (auto i : tuple) {
    if (i >= l_.r) throw InvalidInput("tuple entry out of range");
    index = index * l_.r + i;
  }
  return index;
}

Vec TensorPowerAlgebra::unit() const {
  Vec v(dim(), 0);
  v[0] = 1;
  return v;
}

Vec TensorPowerAlgebra::multiply(const Vec& a, const Vec& b) const {
  check_dim(a, dim());
  check_dim(b, dim());
  Vec out(dim(), 0);
  std::vector<std::pair<std::size_t, Elem>> expansion, next;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j] == 0) continue;
      expansion.assign(1, {0, base_.mul(a[i], b[j])});
      for (std::size_t k = 0; k < n_; ++k) {
        const Vec& factor = factor_products_[tuples_[i][k]][tuples_[j][k]];
        next.clear();
        for (const auto& [idx, c] : expansion) {
          for (std::size_t l = 0; l < l_.r; ++l) {
            if (factor[l] != 0) next.emplace_back(idx * l_.r + l, base_.mul(c, factor[l]));
          }
        }
        expansion.swap(next);
      }
      for (const auto& [idx, c] : expansion) out[idx] = base_.add(out[idx], c);
    }
  }
  return out;
}

Vec TensorPowerAlgebra::permute(const Vec& a, const std::vector<std::size_t>& perm) const {
  check_dim(a, dim());
  if (perm.size() != n_) throw InvalidInput("permutation degree does not match the tensor power");
  Vec out(dim(), 0);
  std::vector<std::uint32_t> moved(n_);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t k = 0; k < n_; ++k) moved[perm[k]] = tuples_[i][k];
    const std::size_t j = index_of(moved);
    out[j] = base_.add(out[j], a[i]);
  }
  return out;
}

InvariantSubalgebra::InvariantSubalgebra(TensorPowerAlgebra parent) : parent_(std::move(parent)) {
  multisets_ = sympow::multisets(parent_.extension().r, parent_.n());
  for (const auto& m : multisets_) {
    Vec v(parent_.dim(), 0);
    for (const auto& t : distinct_permutations(m)) v[parent_.index_of(t)] = 1;
    basis_.push_back(std::move(v));
  }
}

std::vector<std::size_t> InvariantSubalgebra::orbit_sizes() const {
  std::vector<std::size_t> sizes;
  for (const auto& v : basis_) sizes.push_back(static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem c) { return c != 0; })));
  return sizes;
}

bool InvariantSubalgebra::coordinates(const Vec& v, Vec& out) const {
  check_dim(v, parent_.dim());
  const FiniteField& f = parent_.base();
  out.assign(dim(), 0);
  Vec rebuilt(parent_.dim(), 0);
  for (std::size_t m = 0; m < dim(); ++m) {
    out[m] = v[parent_.index_of(multisets_[m])];
    if (out[m] == 0) continue;
    for (std::size_t i = 0; i < rebuilt.size(); ++i) {
      if (basis_[m][i] != 0) rebuilt[i] = f.add(rebuilt[i], f.mul(out[m], basis_[m][i]));
    }
  }
  return rebuilt == v;
}

CommutativeAlgebra InvariantSubalgebra::as_algebra() const {
  const std::size_t s = dim();
  std::vector<std::vector<Vec>> table(s, std::vector<Vec>(s));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = i; j < s; ++j) {
      Vec coords;
      if (!coordinates(parent_.multiply(basis_[i], basis_[j]), coords)) {
        throw InvalidInput("product of invariant basis vectors is not invariant");
      }
      table[i][j] = coords;
      table[j][i] = std::move(coords);
    }
  }
  Vec unit;
  if (!coordinates(parent_.unit(), unit)) throw InvalidInput("unit is not invariant");
  return CommutativeAlgebra(parent_.base(), std::move(table), std::move(unit));
}

InvariantSubalgebra build_invariants(const ExtensionSpec& l, std::size_t n, const Caps& caps) {
  return InvariantSubalgebra(TensorPowerAlgebra(l, n, caps));
}

EtaleDecomposition decompose_etale(const CommutativeAlgebra& b, const Caps& caps) {
  const FiniteField& f = b.base();
  const std::size_t s = b.dim();
  EtaleDecomposition out;
  if (s == 0) return out;

  // Frobenius x -> x^q is F_q-linear; column i is the image of e_i.
  const std::uint64_t q = f.order();
  Matrix<Elem> frob(s, s, 0);
  for (std::size_t i = 0; i < s; ++i) {
    const Vec image = b.pow(b.basis_vector(i), q);
    for (std::size_t k = 0; k < s; ++k) frob(k, i) = image[k];
  }
  if (rank(f, frob) != s) throw InvalidInput("algebra is not étale: Frobenius is not invertible");

  Matrix<Elem> shifted = frob;
  for (std::size_t i = 0; i < s; ++i) shifted(i, i) = f.sub(shifted(i, i), 1);
  const auto kernel = nullspace(f, shifted);
  const auto fixed = rref(f, from_rows(f, kernel, s));
  const std::size_t m = fixed.rank();
  out.fixed_dim = m;

  std::uint64_t search = 1;
  for (std::size_t i = 0; i < m; ++i) {
    search *= q;
    if (search > caps.max_idempotent_search) {
      throw CapExceeded("idempotent search over F_" + std::to_string(q) + "^" + std::to_string(m) + " exceeds the cap");
    }
  }

  // Structure constants of the fixed subalgebra in the RREF basis: coordinates
  // of a vector in the span are its entries at the pivot columns.
  std::vector<Vec> w(m);
  for (std::size_t a = 0; a < m; ++a) w[a] = fixed.form.row(a);
  auto to_big = [&](const Vec& c) {
    Vec v(s, 0);
    for (std::size_t a = 0; a < m; ++a) {
      if (c[a] != 0) v = b.add(v, b.scale(c[a], w[a]));
    }
    return v;
  };
  std::vector<std::vector<Vec>> gamma(m, std::vector<Vec>(m, Vec(m, 0)));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t c = 0; c < m; ++c) {
      const Vec prod = b.multiply(w[a], w[c]);
      for (std::size_t k = 0; k < m; ++k) gamma[a][c][k] = prod[fixed.pivots[k]];
      if (to_big(gamma[a][c]) != prod) throw InvalidInput("Frobenius-fixed vectors are not closed under multiplication");
    }
  }
  auto small_mul = [&](const Vec& x, const Vec& y) {
    Vec z(m, 0);
    for (std::size_t a = 0; a < m; ++a) {
      if (x[a] == 0) continue;
      for (std::size_t c = 0; c < m; ++c) {
        if (y[c] == 0) continue;
        const Elem xy = f.mul(x[a], y[c]);
        for (std::size_t k = 0; k < m; ++k) {
          if (gamma[a][c][k] != 0) z[k] = f.add(z[k], f.mul(xy, gamma[a][c][k]));
        }
      }
    }
    return z;
  };

  std::vector<Vec> idempotents;
  Vec c(m, 0);
  for (std::uint64_t code = 1; code < search; ++code) {
    std::uint64_t rest = code;
    for (std::size_t a = 0; a < m; ++a, rest /= q) c[a] = static_cast<Elem>(rest % q);
    if (small_mul(c, c) == c) idempotents.push_back(c);
  }
  // Primitive idempotents: e * A is one-dimensional.
  std::vector<std::pair<std::size_t, Vec>> factors;
  for (const auto& e : idempotents) {
    Matrix<Elem> mult_small(m, m, 0);
    for (std::size_t a = 0; a < m; ++a) {
      Vec basis(m, 0);
      basis[a] = 1;
      const Vec col = small_mul(e, basis);
      for (std::size_t k = 0; k < m; ++k) mult_small(k, a) = col[k];
    }
    if (rank(f, mult_small) != 1) continue;
    const Vec big = to_big(e);
    Matrix<Elem> mult(s, s, 0);
    for (std::size_t i = 0; i < s; ++i) {
      const Vec col = b.multiply(big, b.basis_vector(i));
      for (std::size_t k = 0; k < s; ++k) mult(k, i) = col[k];
    }
    factors.emplace_back(rank(f, mult), big);
  }
  std::sort(factors.begin(), factors.end());

  Vec total(s, 0);
  std::size_t dim_sum = 0;
  for (auto& [d, e] : factors) {
    out.degrees.push_back(d);
    total = b.add(total, e);
    dim_sum += d;
    out.idempotents.push_back(std::move(e));
  }
  if (factors.size() != m || dim_sum != s || total != b.unit()) {
    throw InvalidInput("idempotent decomposition is incomplete");
  }
  return out;
}

std::uint64_t count_homs(const EtaleDecomposition& decomposition, std::uint64_t m) {
  std::uint64_t total = 0;
  for (auto d : decomposition.degrees) {
    if (m % d == 0) total += d;
  }
  return total;
}

std::uint64_t count_homs(const CommutativeAlgebra& b, std::uint64_t m, const Caps& caps) {
  return count_homs(decompose_etale(b, caps), m);
}

std::vector<Elem> elementary_symmetric_signature(const FiniteField& k, const std::vector<Elem>& values) {
  std::vector<Elem> e(values.size() + 1, 0);
  e[0] = 1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j > 0; --j) e[j] = k.add(e[j], k.mul(values[i], e[j - 1]));
  }
  return std::vector<Elem>(e.begin() + 1, e.end());
}

DimensionReport dimension_check(const ExtensionSpec& l, std::size_t n, const Caps& caps) {
  const InvariantSubalgebra inv = build_invariants(l, n, caps);
  const TensorPowerAlgebra& t = inv.parent();
  const FiniteField& f = t.base();
  DimensionReport r;
  r.q = l.q;
  r.r = l.r;
  r.n = n;
  r.dim_expected = binomial(l.r + n - 1, n);
  r.orbit_sizes = inv.orbit_sizes();

  // Invariants computed independently: common kernel of (sigma - 1) over the
  // adjacent transpositions.
  std::vector<std::vector<std::size_t>> transpositions;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[k], perm[k + 1]);
    transpositions.push_back(std::move(perm));
  }
  const std::size_t dim = t.dim();
  Matrix<Elem> stacked(transpositions.size() * dim, dim, 0);
  for (std::size_t g = 0; g < transpositions.size(); ++g) {
    for (std::size_t i = 0; i < dim; ++i) {
      Vec e(dim, 0);
      e[i] = 1;
      const Vec moved = t.permute(e, transpositions[g]);
      for (std::size_t k = 0; k < dim; ++k) stacked(g * dim + k, i) = f.sub(moved[k], e[k]);
    }
  }
  r.dim_actual = dim - rank(f, stacked);

  r.invariant_basis = true;
  for (const auto& v : inv.basis()) {
    for (const auto& perm : transpositions) {
      if (t.permute(v, perm) != v) r.invariant_basis = false;
    }
  }
  return r;
}

ThetaReport theta_bijection_check(const ExtensionSpec& l, std::size_t n, const Caps& caps) {
  const InvariantSubalgebra inv = build_invariants(l, n, caps);
  const CommutativeAlgebra b = inv.as_algebra();
  const EtaleDecomposition dec = decompose_etale(b, caps);
  const FiniteField fq = l.base();

  ThetaReport rep;
  rep.q = l.q;
  rep.r = l.r;
  rep.n = n;
  rep.dim_expected = binomial(l.r + n - 1, n);
  rep.dim_actual = b.dim();
  rep.factors = dec.degrees;
  std::uint64_t m = l.r;
  for (auto d : dec.degrees) m = std::lcm(m, static_cast<std::uint64_t>(d));
  rep.m = static_cast<std::uint32_t>(m);
  rep.homs = count_homs(dec, m);

  const FiniteField k(l.p, l.e * rep.m);
  const auto iota = embed(fq, k);
  std::vector<Elem> roots;
  for (std::uint64_t x = 0; x < k.order(); ++x) {
    if (eval_poly(k, iota, l.modulus, static_cast<Elem>(x)) == 0) roots.push_back(static_cast<Elem>(x));
  }
  if (roots.size() != l.r) throw InvalidInput("modulus does not split into distinct roots in F_q^" + std::to_string(m));

  // Values alpha^i of each embedding on the basis t^i of L.
  std::vector<std::vector<Elem>> root_powers(roots.size(), std::vector<Elem>(l.r));
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::uint32_t i = 0; i < l.r; ++i) root_powers[a][i] = k.pow(roots[a], i);

  const auto& basis_multisets = inv.multisets();
  std::vector<std::vector<std::vector<std::uint32_t>>> orbits;
  for (const auto& ms : basis_multisets) orbits.push_back(distinct_permutations(ms));

  // f_1 ⊗ ... ⊗ f_n restricted to the orbit-sum basis.
  auto restrict = [&](const std::vector<std::uint32_t>& embeddings) {
    Vec h(b.dim(), 0);
    for (std::size_t c = 0; c < b.dim(); ++c) {
      Elem acc = 0;
      for (const auto& tuple : orbits[c]) {
        Elem term = 1;
        for (std::size_t j = 0; j < n; ++j) term = k.mul(term, root_powers[embeddings[j]][tuple[j]]);
        acc = k.add(acc, term);
      }
      h[c] = acc;
    }
    return h;
  };
  auto apply_hom = [&](const Vec& h, const Vec& x) {
    Elem acc = 0;
    for (std::size_t c = 0; c < x.size(); ++c) acc = k.add(acc, k.mul(iota[x[c]], h[c]));
    return acc;
  };

  const auto sources = multisets(l.r, n);
  rep.source_size = sources.size();
  rep.well_defined = true;
  rep.homomorphisms = true;
  std::set<Vec> images;
  std::set<std::vector<Elem>> signatures;
  for (const auto& src : sources) {
    const Vec h = restrict(src);
    for (const auto& ordering : distinct_permutations(src)) {
      if (restrict(ordering) != h) rep.well_defined = false;
    }
    if (apply_hom(h, b.unit()) != 1) rep.homomorphisms = false;
    for (std::size_t i = 0; i < b.dim() && rep.homomorphisms; ++i) {
      for (std::size_t j = i; j < b.dim(); ++j) {
        if (apply_hom(h, b.product_of_basis(i, j)) != k.mul(h[i], h[j])) {
          rep.homomorphisms = false;
          break;
        }
      }
    }
    images.insert(h);
    std::vector<Elem> values;
    for (auto a : src) values.push_back(roots[a]);
    signatures.insert(elementary_symmetric_signature(k, values));
  }
  rep.image_size = images.size();
  rep.injective = images.size() == sources.size();
  rep.signatures_distinct = signatures.size() == sources.size();
  rep.bijection_ok = rep.well_defined && rep.homomorphisms && rep.injective && rep.source_size == rep.homs &&
                     rep.image_size == rep.homs && rep.dim_actual == rep.dim_expected;
  return rep;
}

}  // namespace sympow::etale
