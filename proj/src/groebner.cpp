#include "sympow/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "sympow/errors.hpp"
#include "sympow/linalg.hpp"

namespace sympow::poly {

namespace {

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents lcm_of(const Exponents& a, const Exponents& b) {
  Exponents l(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
  return l;
}

Exponents quotient(const Exponents& a, const Exponents& b) {
  Exponents q(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) q[i] = a[i] - b[i];
  return q;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

void check_terms(const Polynomial& p, const Caps& caps) {
  if (p.size() > caps.max_terms)
    throw CapExceeded("desk scale exceeded: intermediate polynomial has " + std::to_string(p.size()) +
                      " terms (max_terms = " + std::to_string(caps.max_terms) + ")");
}

struct StepCounter {
  const Caps& caps;
  std::size_t steps = 0;
  void tick() {
    if (++steps > caps.max_reduction_steps)
      throw CapExceeded("desk scale exceeded: more than " + std::to_string(caps.max_reduction_steps) +
                        " reduction steps");
  }
};

Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& basis, StepCounter& counter) {
  Polynomial p = f;
  Polynomial r(f.ring(), f.order());
  std::vector<Term> rest;
  while (!p.is_zero()) {
    const Term& lt = p.leading();
    const Polynomial* divisor = nullptr;
    for (const auto& g : basis)
      if (!g.is_zero() && divides(g.leading().exponents, lt.exponents)) {
        divisor = &g;
        break;
      }
    counter.tick();
    if (divisor) {
      FieldElem c = lt.coeff / divisor->leading().coeff;
      p = p - divisor->times_monomial(quotient(lt.exponents, divisor->leading().exponents), c);
      check_terms(p, counter.caps);
    } else {
      rest.push_back(lt);
      p = p - Polynomial::monomial(p.ring(), lt.exponents, lt.coeff, p.order());
    }
  }
  return Polynomial(f.ring(), std::move(rest), f.order());
}

std::vector<Polynomial> in_order(const std::vector<Polynomial>& ps, MonomialOrder order) {
  std::vector<Polynomial> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(p.order() == order ? p : p.with_order(order));
  return out;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (!(*g.ring() == *ring_)) throw InvalidInput("ideal generator from a different ring");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

bool Ideal::is_zero_ideal() const { return generators_.empty(); }

Ideal Ideal::with_groebner(MonomialOrder order, const Caps& caps) const {
  Ideal copy = *this;
  copy.basis_ = buchberger(*this, order, caps);
  copy.basis_order_ = order;
  return copy;
}

bool Ideal::contains(const Polynomial& f, const Caps& caps) const {
  if (basis_) return normal_form(f.with_order(*basis_order_), *basis_, caps).is_zero();
  auto basis = buchberger(*this, MonomialOrder::grevlex(), caps);
  return normal_form(f.with_order(MonomialOrder::grevlex()), basis, caps).is_zero();
}

std::string Ideal::str() const {
  if (generators_.empty()) return "<0>";
  std::string out = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ", ";
    out += generators_[i].str();
  }
  return out + ">";
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis, const Caps& caps) {
  StepCounter counter{caps};
  return reduce_full(f, in_order(basis, f.order()), counter);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring(), f.order());
  const Term& a = f.leading();
  const Term& b = g.leading();
  Exponents l = lcm_of(a.exponents, b.exponents);
  return f.times_monomial(quotient(l, a.exponents), a.coeff.inverse()) -
         g.times_monomial(quotient(l, b.exponents), b.coeff.inverse());
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators, MonomialOrder order, const Caps& caps) {
  if (generators.empty()) throw InvalidInput("Gröbner basis of an empty generator list");
  StepCounter counter{caps};
  std::vector<Polynomial> basis;
  for (const auto& g : in_order(generators, order))
    if (!g.is_zero()) basis.push_back(g.monic());
  if (basis.empty()) return {};

  // Pending pairs (i < j).
  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});

  auto pair_lcm = [&](const std::pair<std::size_t, std::size_t>& pr) {
    return lcm_of(basis[pr.first].leading().exponents, basis[pr.second].leading().exponents);
  };
  auto is_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };

  while (!pending.empty()) {
    // Normal selection strategy: smallest lcm first.
    auto best = pending.begin();
    Exponents best_lcm = pair_lcm(*best);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Exponents l = pair_lcm(*it);
      if (order.compare(l, best_lcm) < 0) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    auto [i, j] = *best;
    pending.erase(best);

    const Exponents& li = basis[i].leading().exponents;
    const Exponents& lj = basis[j].leading().exponents;
    if (coprime(li, lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (divides(basis[k].leading().exponents, best_lcm) && !is_pending(i, k) && !is_pending(j, k)) chain = true;
    }
    if (chain) continue;

    Polynomial h = reduce_full(s_polynomial(basis[i], basis[j]), basis, counter);
    if (h.is_zero()) continue;
    basis.push_back(h.monic());
    if (basis.size() > caps.max_basis_size)
      throw CapExceeded("desk scale exceeded: Gröbner basis grew beyond " + std::to_string(caps.max_basis_size) +
                        " elements");
    std::size_t n = basis.size() - 1;
    for (std::size_t k = 0; k < n; ++k) pending.insert({k, n});
  }

  // Minimize: drop elements whose leading monomial is divisible by another's.
  std::vector<Polynomial> minimal;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < basis.size() && !redundant; ++b) {
      if (a == b) continue;
      const auto& ea = basis[a].leading().exponents;
      const auto& eb = basis[b].leading().exponents;
      if (divides(eb, ea) && (eb != ea || b < a)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[a]);
  }
  // Interreduce tails.
  std::vector<Polynomial> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<Polynomial> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    reduced.push_back(reduce_full(minimal[a], others, counter).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& x, const Polynomial& y) {
    return order.compare(x.leading().exponents, y.leading().exponents) > 0;
  });
  return reduced;
}

std::vector<Polynomial> buchberger(const Ideal& ideal, MonomialOrder order, const Caps& caps) {
  if (ideal.is_zero_ideal()) return {};
  return buchberger(ideal.generators(), order, caps);
}

bool is_reduced_basis(const std::vector<Polynomial>& basis) {
  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (basis[a].is_zero() || !basis[a].leading().coeff.is_one()) return false;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (a == b) continue;
      for (const auto& t : basis[b].terms())
        if (divides(basis[a].leading().exponents, t.exponents)) return false;
    }
  }
  return true;
}

bool satisfies_buchberger_criterion(const std::vector<Polynomial>& basis, const Caps& caps) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis, caps).is_zero()) return false;
  return true;
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& keep, const Caps& caps) {
  const Ring& ring = *ideal.ring();
  std::vector<bool> kept(ring.nvars(), false);
  for (const auto& name : keep) {
    long idx = ring.index_of(name);
    if (idx < 0) throw InvalidInput("cannot keep unknown variable '" + name + "'");
    kept[static_cast<std::size_t>(idx)] = true;
  }

  // Eliminated variables first, then kept ones, each block in declaration order.
  std::vector<std::string> reordered;
  std::vector<std::string> sub_vars;
  for (std::size_t i = 0; i < ring.nvars(); ++i)
    if (!kept[i]) reordered.push_back(ring.vars[i]);
  std::size_t eliminated = reordered.size();
  for (std::size_t i = 0; i < ring.nvars(); ++i)
    if (kept[i]) {
      reordered.push_back(ring.vars[i]);
      sub_vars.push_back(ring.vars[i]);
    }
  auto work_ring = make_ring(reordered, ring.field);
  auto sub_ring = make_ring(sub_vars, ring.field);

  std::vector<std::size_t> to_work(ring.nvars());
  for (std::size_t i = 0; i < ring.nvars(); ++i)
    to_work[i] = static_cast<std::size_t>(work_ring->index_of(ring.vars[i]));

  auto order = MonomialOrder::elimination(eliminated);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.relabel(work_ring, to_work, order));

  std::vector<Polynomial> result;
  if (!gens.empty()) {
    std::vector<std::size_t> to_sub(work_ring->nvars(), work_ring->nvars() + 1);
    for (std::size_t i = eliminated; i < work_ring->nvars(); ++i) to_sub[i] = i - eliminated;
    for (const auto& g : buchberger(gens, order, caps)) {
      auto sup = g.support();
      if (std::all_of(sup.begin(), sup.end(), [&](std::size_t v) { return v >= eliminated; }))
        result.push_back(g.relabel(sub_ring, to_sub, MonomialOrder::grevlex()));
    }
  }
  Ideal out(sub_ring, result);
  if (out.is_zero_ideal()) return out;
  return out.with_groebner(MonomialOrder::grevlex(), caps);
}

std::size_t jacobian_rank_at(const std::vector<Polynomial>& polys, const std::vector<FieldElem>& point) {
  if (polys.empty()) return 0;
  const RingPtr& ring = polys[0].ring();
  for (const auto& p : polys)
    if (!(*p.ring() == *ring)) throw InvalidInput("Jacobian of polynomials from different rings");
  if (point.size() != ring->nvars())
    throw InvalidInput("point has " + std::to_string(point.size()) + " coordinates, ring has " +
                       std::to_string(ring->nvars()) + " variables");
  CoefficientField f{ring->field};
  Matrix<FieldElem> jac(polys.size(), ring->nvars(), f.zero());
  for (std::size_t r = 0; r < polys.size(); ++r)
    for (std::size_t c = 0; c < ring->nvars(); ++c) jac(r, c) = polys[r].derivative(c).evaluate(point);
  return rank(f, jac);
}

}  // namespace sympow::poly
