#include "sympow/invariant_rings.hpp"

#include "sympow/affine_counting.hpp"
#include "sympow/errors.hpp"
#include "sympow/groebner.hpp"
#include "sympow/polynomial.hpp"

namespace sympow::invariants {

namespace {

using poly::Ideal;
using poly::Polynomial;

constexpr const char* kRelation = "m^2 - s*t*m + s^2*q + t^2*p - 4*p*q";
constexpr const char* kCone = "u*w - v^2";

const std::vector<std::pair<std::string, std::string>> kGenerators = {
    {"s", "x1 + x2"}, {"p", "x1*x2"}, {"t", "y1 + y2"}, {"q", "y1*y2"}, {"m", "x1*y2 + x2*y1"}};

}  // namespace

InvariantPresentation compute_presentation(const Caps& caps) {
  InvariantPresentation out;
  const auto field = Field::rationals();
  const auto base = poly::make_ring({"x1", "x2", "y1", "y2"}, field);
  const auto full = poly::make_ring({"x1", "x2", "y1", "y2", "s", "p", "t", "q", "m"}, field);

  std::vector<Polynomial> defs;
  std::vector<Polynomial> graph;
  for (const auto& [name, def] : kGenerators) {
    out.generators.emplace_back(name, poly::parse_poly(def, base).str());
    defs.push_back(poly::parse_poly(def, base));
    graph.push_back(poly::parse_poly(name + " - (" + def + ")", full));
  }

  const std::vector<Polynomial> swap = {poly::parse_poly("x2", base), poly::parse_poly("x1", base),
                                        poly::parse_poly("y2", base), poly::parse_poly("y1", base)};
  out.generators_invariant = true;
  for (const auto& d : defs) {
    if (!(d.substitute(swap) == d)) out.generators_invariant = false;
  }

  const Ideal elim = poly::eliminate(Ideal(full, graph), {"s", "p", "t", "q", "m"}, caps);
  const auto& sub = elim.ring();
  const auto& basis = *elim.cached_basis();
  for (const auto& g : basis) out.elimination_basis.push_back(g.str());

  const Polynomial rel = poly::parse_poly(kRelation, sub);
  out.relation = rel.str();
  out.principal = basis.size() == 1;
  out.matches_expected = out.principal && basis.front() == rel.monic();
  out.relation_in_ideal = elim.contains(rel, caps);
  const std::vector<Polynomial> rel_basis = {rel.monic()};
  out.ideal_in_relation = true;
  for (const auto& g : basis) {
    if (!poly::normal_form(g, rel_basis, caps).is_zero()) out.ideal_in_relation = false;
  }
  out.vanishes_on_generators = rel.substitute(defs).is_zero();

  const Polynomial c = poly::parse_poly("2*m - s*t", sub);
  const Polynomial a = poly::parse_poly("s^2 - 4*p", sub);
  const Polynomial b = poly::parse_poly("t^2 - 4*q", sub);
  const Polynomial diff = c * c - a * b;
  out.cone_identity = diff == rel.scaled(FieldElem(field, 4L));
  out.reduces_mod_relation = poly::normal_form(diff, rel_basis, caps).is_zero();

  const auto coords = poly::make_ring({"s", "t", "u", "v", "w"}, field);
  // images of (s, p, t, q, m)
  const std::vector<Polynomial> change = {
      poly::parse_poly("s", coords), poly::parse_poly("(s^2 - u)/4", coords), poly::parse_poly("t", coords),
      poly::parse_poly("(t^2 - w)/4", coords), poly::parse_poly("(v + s*t)/2", coords)};
  const Polynomial cone = poly::parse_poly(kCone, coords);
  out.cone_equation = cone.str();
  out.coordinate_change_ok = rel.substitute(change) == cone.scaled(FieldElem(field, mpq_class(-1, 4)));
  return out;
}

SingularityReport singularity_check() {
  SingularityReport out;
  const auto field = Field::rationals();
  const auto ring = poly::make_ring({"u", "v", "w"}, field);
  const Polynomial cone = poly::parse_poly(kCone, ring);
  out.cone_equation = cone.str();
  out.codimension = 1;
  const std::vector<FieldElem> origin(3, FieldElem::zero(field));
  const std::vector<FieldElem> generic(3, FieldElem::one(field));
  out.origin_rank = poly::jacobian_rank_at({cone}, origin);
  out.generic_rank = poly::jacobian_rank_at({cone}, generic);
  out.singular_at_origin = out.origin_rank < out.codimension;
  out.smooth_at_generic = out.generic_rank == out.codimension;
  out.affine_space_smooth = poly::jacobian_rank_at({}, std::vector<FieldElem>(4, FieldElem::zero(field))) == 0;
  return out;
}

CountCrossCheck count_cross_check(std::uint64_t q, std::size_t n, const Caps& caps) {
  if (!is_prime(q)) throw InvalidInput("cross-check needs a prime q, got " + std::to_string(q));
  if (n != 0 && n != 2) throw InvalidInput("cross-check is defined for n = 0 and n = 2");
  CountCrossCheck out;
  out.q = q;
  out.n = n;
  const auto plane = counting::AffineVarietySpec::affine_space(q, 2);
  out.method_a = counting::sym_count(plane, n, caps).count.get_ui();
  if (n == 0) {
    out.method_b = counting::count_points(counting::AffineVarietySpec::point(q), 1, caps);
  } else {
    Caps wide = caps;
    wide.max_vars = std::max<std::size_t>(wide.max_vars, 5);
    const auto model = counting::AffineVarietySpec::make("Sym2A2-model", q, {"s", "p", "t", "q", "m"}, {kRelation});
    out.method_b = counting::count_points(model, 1, wide);
  }
  out.agree = out.method_a == out.method_b;
  return out;
}

}  // namespace sympow::invariants
