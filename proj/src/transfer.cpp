#include "sympow/transfer.hpp"

#include <deque>
#include <map>
#include <string>

#include "sympow/combinatorics.hpp"
#include "sympow/errors.hpp"
#include "sympow/field.hpp"

namespace sympow::transfer {

namespace {

const RationalField kQ{};

QMatrix zero_matrix(std::size_t rows, std::size_t cols) { return QMatrix(rows, cols, mpq_class(0)); }

QMatrix scaled_identity(std::size_t n, const mpq_class& c) {
  QMatrix m = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

bool is_zero_matrix(const QMatrix& m) {
  for (const auto& v : m.data()) {
    if (sgn(v) != 0) return false;
  }
  return true;
}

void check_module_caps(std::size_t d, std::size_t n, const Caps& caps) {
  if (n > caps.max_symmetric_degree) {
    throw CapExceeded("symmetric group degree " + std::to_string(n) + " exceeds the cap " +
                      std::to_string(caps.max_symmetric_degree));
  }
  std::uint64_t dim = 1;
  for (std::size_t i = 0; i < n; ++i) {
    dim *= d;
    if (dim > caps.max_module_dim) {
      throw CapExceeded("module dimension " + std::to_string(d) + "^" + std::to_string(n) + " exceeds the cap " +
                        std::to_string(caps.max_module_dim));
    }
  }
}

// The element σ moves factor k to position σ(k).
Perm act_on_tuple(const Perm& sigma, const std::vector<std::uint32_t>& t) {
  Perm out(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) out[sigma[k]] = t[k];
  return out;
}

std::size_t tuple_index(const std::vector<std::uint32_t>& t, std::size_t d) {
  std::size_t idx = 0;
  for (auto v : t) idx = idx * d + v;
  return idx;
}

// E(π): Q[S^n] -> Q[Sym^n S], a tuple to its multiset.
QMatrix quotient_map(std::size_t d, std::size_t n) {
  const auto ms = multisets(static_cast<std::uint32_t>(d), n);
  std::map<std::vector<std::uint32_t>, std::size_t> row;
  for (std::size_t i = 0; i < ms.size(); ++i) row[ms[i]] = i;
  const auto all = tuples(static_cast<std::uint32_t>(d), n);
  QMatrix pi = zero_matrix(ms.size(), all.size());
  for (std::size_t c = 0; c < all.size(); ++c) {
    auto sorted = all[c];
    std::sort(sorted.begin(), sorted.end());
    pi(row.at(sorted), c) = 1;
  }
  return pi;
}

}  // namespace

PermModule::PermModule(std::size_t dim, std::size_t n, std::vector<QMatrix> generator_actions, const Caps& caps)
    : dim_(dim), n_(n), generators_(std::move(generator_actions)) {
  if (n > caps.max_symmetric_degree) {
    throw CapExceeded("symmetric group degree " + std::to_string(n) + " exceeds the cap");
  }
  const std::size_t expected = n == 0 ? 0 : n - 1;
  if (generators_.size() != expected) {
    throw InvalidInput("Σ_" + std::to_string(n) + " needs " + std::to_string(expected) + " generator matrices");
  }
  const QMatrix id = scaled_identity(dim, 1);
  for (const auto& g : generators_) {
    if (g.rows() != dim || g.cols() != dim) throw InvalidInput("generator matrix has the wrong shape");
  }
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (!(multiply(kQ, generators_[i], generators_[i]) == id)) throw InvalidInput("s_" + std::to_string(i + 1) + "^2 != 1");
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      const QMatrix st = multiply(kQ, generators_[i], generators_[j]);
      QMatrix power = j == i + 1 ? multiply(kQ, multiply(kQ, st, st), st) : multiply(kQ, st, st);
      if (!(power == id)) {
        throw InvalidInput("braid relation fails for s_" + std::to_string(i + 1) + ", s_" + std::to_string(j + 1));
      }
    }
  }

  const auto transpositions = adjacent_transpositions(n);
  std::map<Perm, QMatrix> found{{identity_perm(n), id}};
  std::deque<Perm> frontier{identity_perm(n)};
  const std::uint64_t order = factorial(n);
  while (!frontier.empty()) {
    const Perm h = frontier.front();
    frontier.pop_front();
    const QMatrix rho_h = found.at(h);
    for (std::size_t k = 0; k < transpositions.size(); ++k) {
      Perm sh = compose(transpositions[k], h);
      QMatrix rho = multiply(kQ, generators_[k], rho_h);
      auto [it, inserted] = found.emplace(sh, rho);
      if (inserted) {
        if (found.size() > order) throw InvalidInput("group closure exceeds n!");
        frontier.push_back(std::move(sh));
      } else if (!(it->second == rho)) {
        throw InvalidInput("generator matrices do not define a representation of Σ_" + std::to_string(n));
      }
    }
  }
  elements_.assign(found.begin(), found.end());
}

PermModule tensor_power_module(std::size_t d, std::size_t n, const Caps& caps) {
  check_module_caps(d, n, caps);
  const auto all = tuples(static_cast<std::uint32_t>(d), n);
  std::vector<QMatrix> gens;
  for (const auto& s : adjacent_transpositions(n)) {
    QMatrix m = zero_matrix(all.size(), all.size());
    for (std::size_t c = 0; c < all.size(); ++c) m(tuple_index(act_on_tuple(s, all[c]), d), c) = 1;
    gens.push_back(std::move(m));
  }
  return PermModule(all.size(), n, std::move(gens), caps);
}

PermModule trivial_module(std::size_t dim, std::size_t n, const Caps& caps) {
  std::vector<QMatrix> gens(n == 0 ? 0 : n - 1, scaled_identity(dim, 1));
  return PermModule(dim, n, std::move(gens), caps);
}

PermModule regular_module_s2() {
  QMatrix swap = zero_matrix(2, 2);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  return PermModule(2, 2, {swap});
}

QMatrix norm(const PermModule& m) {
  QMatrix sum = zero_matrix(m.dim(), m.dim());
  for (const auto& [sigma, rho] : m.elements()) sum = add(kQ, sum, rho);
  return sum;
}

ProjectorReport projector_sym(const PermModule& m) {
  ProjectorReport rep;
  rep.d_n = scale(kQ, mpq_class(1, static_cast<unsigned long>(factorial(m.degree()))), norm(m));
  rep.idempotent = multiply(kQ, rep.d_n, rep.d_n) == rep.d_n;
  rep.image_basis = row_space(kQ, transpose(rep.d_n));
  rep.dim = rep.image_basis.rows();
  return rep;
}

Coinvariants coinvariants(const PermModule& m) {
  const std::size_t dim = m.dim();
  QMatrix spanning = zero_matrix(m.generator_actions().size() * dim, dim);
  for (std::size_t g = 0; g < m.generator_actions().size(); ++g) {
    const QMatrix& s = m.generator_actions()[g];
    // row (g, j) = e_j - s e_j
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t i = 0; i < dim; ++i) spanning(g * dim + j, i) = (i == j ? mpq_class(1) : mpq_class(0)) - s(i, j);
  }
  auto ech = rref(kQ, spanning);
  Coinvariants c;
  c.relations = std::move(ech.form);
  c.pivots = std::move(ech.pivots);
  std::vector<bool> is_pivot(dim, false);
  for (auto p : c.pivots) is_pivot[p] = true;
  for (std::size_t j = 0; j < dim; ++j) {
    if (!is_pivot[j]) c.basis.push_back(j);
  }
  c.pi = zero_matrix(c.basis.size(), dim);
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<mpq_class> v(dim, 0);
    v[j] = 1;
    for (std::size_t r = 0; r < c.pivots.size(); ++r) {
      const mpq_class factor = v[c.pivots[r]];
      if (sgn(factor) == 0) continue;
      for (std::size_t k = 0; k < dim; ++k) v[k] -= factor * c.relations(r, k);
    }
    for (std::size_t b = 0; b < c.basis.size(); ++b) c.pi(b, j) = v[c.basis[b]];
  }
  return c;
}

NormTransferPack build_transfer(const PermModule& m) {
  const Coinvariants c = coinvariants(m);
  NormTransferPack pack;
  pack.n = m.degree();
  pack.nm = norm(m);
  pack.pi = c.pi;
  pack.tr = zero_matrix(m.dim(), c.dim());
  for (std::size_t b = 0; b < c.dim(); ++b)
    for (std::size_t i = 0; i < m.dim(); ++i) pack.tr(i, b) = pack.nm(i, c.basis[b]);
  pack.well_defined = is_zero_matrix(multiply(kQ, pack.nm, transpose(c.relations)));
  const mpq_class nfact(static_cast<unsigned long>(factorial(m.degree())));
  pack.pi_tr = multiply(kQ, pack.pi, pack.tr) == scaled_identity(c.dim(), nfact);
  pack.tr_pi = multiply(kQ, pack.tr, pack.pi) == pack.nm;
  pack.norm_square = multiply(kQ, pack.nm, pack.nm) == scale(kQ, nfact, pack.nm);
  return pack;
}

FiniteSetTransferReport finite_set_transfer(std::size_t set_size, std::size_t n, const Caps& caps) {
  const PermModule m = tensor_power_module(set_size, n, caps);
  FiniteSetTransferReport rep;
  rep.set_size = set_size;
  rep.n = n;
  rep.pi = quotient_map(set_size, n);
  rep.nm = norm(m);
  const auto ms = multisets(static_cast<std::uint32_t>(set_size), n);
  const std::uint64_t nfact = factorial(n);
  rep.tr = zero_matrix(m.dim(), ms.size());
  for (std::size_t c = 0; c < ms.size(); ++c) {
    const auto orbit = distinct_permutations(ms[c]);
    const mpq_class weight = mpq_class(static_cast<unsigned long>(nfact)) / static_cast<unsigned long>(orbit.size());
    for (const auto& t : orbit) rep.tr(tuple_index(t, set_size), c) = weight;
  }
  rep.pi_tr = multiply(kQ, rep.pi, rep.tr) == scaled_identity(ms.size(), mpq_class(static_cast<unsigned long>(nfact)));
  rep.tr_pi = multiply(kQ, rep.tr, rep.pi) == rep.nm;
  return rep;
}

LinearizationInverseReport prop81_verify(std::size_t d, std::size_t n, const Caps& caps) {
  const PermModule m = tensor_power_module(d, n, caps);
  const Coinvariants c = coinvariants(m);
  const FiniteSetTransferReport fs = finite_set_transfer(d, n, caps);

  LinearizationInverseReport rep;
  rep.d = d;
  rep.n = n;
  rep.coinvariant_dim = c.dim();
  rep.multiset_count = fs.pi.rows();
  rep.u_well_defined = is_zero_matrix(multiply(kQ, fs.pi, transpose(c.relations)));
  // u ∘ ϱ = E(π): evaluate E(π) on the lifts e_b of the quotient basis.
  rep.u = zero_matrix(rep.multiset_count, c.dim());
  for (std::size_t b = 0; b < c.dim(); ++b)
    for (std::size_t r = 0; r < rep.multiset_count; ++r) rep.u(r, b) = fs.pi(r, c.basis[b]);
  rep.xi = multiply(kQ, c.pi, fs.tr);
  const mpq_class nfact(static_cast<unsigned long>(factorial(n)));
  rep.u_inverse = scale(kQ, mpq_class(1) / nfact, rep.xi);
  rep.xi_u = multiply(kQ, rep.xi, rep.u) == scaled_identity(c.dim(), nfact);
  rep.u_xi = multiply(kQ, rep.u, rep.u_inverse) == scaled_identity(rep.multiset_count, 1);
  return rep;
}

PullbackInvariantsReport lemma84_check(std::size_t set_size, std::size_t n, const Caps& caps) {
  const PermModule m = tensor_power_module(set_size, n, caps);
  const QMatrix pi = quotient_map(set_size, n);
  PullbackInvariantsReport rep;
  rep.set_size = set_size;
  rep.n = n;
  rep.ambient_dim = m.dim();

  // π* f = f ∘ π has coordinates π^T f: the image is the row space of π.
  const QMatrix image = row_space(kQ, pi);
  rep.image_dim = image.rows();

  // f is invariant when f(σ t) = f(t) for the generators: (P_s^T - 1) f = 0.
  QMatrix stacked = zero_matrix(m.generator_actions().size() * m.dim(), m.dim());
  for (std::size_t g = 0; g < m.generator_actions().size(); ++g) {
    const QMatrix& s = m.generator_actions()[g];
    for (std::size_t i = 0; i < m.dim(); ++i)
      for (std::size_t j = 0; j < m.dim(); ++j) stacked(g * m.dim() + i, j) = s(j, i) - (i == j ? 1 : 0);
  }
  const auto invariant = nullspace(kQ, stacked);
  const QMatrix inv_space = row_space(kQ, from_rows(kQ, invariant, m.dim()));
  rep.invariant_dim = inv_space.rows();
  rep.equal = image == inv_space;
  return rep;
}

KunnethModulesReport kunneth_modules(std::size_t dv, std::size_t dw, std::size_t n, const Caps& caps) {
  KunnethModulesReport rep;
  rep.dv = dv;
  rep.dw = dw;
  rep.n = n;
  const PermModule m = tensor_power_module(dv + dw, n, caps);
  rep.symmetrizer_rank = projector_sym(m).dim;
  rep.coinvariant_dim = coinvariants(m).dim();
  rep.binomial = binomial(dv + dw + n - 1, n);
  for (std::size_t i = 0; i <= n; ++i) {
    const std::size_t a = projector_sym(tensor_power_module(dv, i, caps)).dim;
    const std::size_t b = projector_sym(tensor_power_module(dw, n - i, caps)).dim;
    rep.terms.push_back(a * b);
    rep.kunneth_sum += a * b;
  }
  rep.ok = rep.symmetrizer_rank == rep.coinvariant_dim && rep.symmetrizer_rank == rep.binomial &&
           rep.kunneth_sum == rep.symmetrizer_rank;
  return rep;
}

}  // namespace sympow::transfer
