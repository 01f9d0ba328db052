#include "sympow/reports.hpp"

#include "sympow/combinatorics.hpp"

namespace sympow::reports {

namespace {

Json numbers(const std::vector<mpz_class>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(number(x));
  return out;
}

const char* method_name(counting::SymMethod m) {
  return m == counting::SymMethod::GeneratingFunction ? "generating-function" : "frobenius-orbit-oracle";
}

}  // namespace

Json number(const mpz_class& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Json to_json(const counting::SymCountReport& gf, const counting::SymCountReport* oracle,
             const std::vector<mpz_class>& counts) {
  Json j;
  j["anchor"] = "sym-count";
  j["label"] = gf.label;
  j["q"] = gf.q;
  j["n"] = gf.n;
  j["count"] = number(gf.count);
  j["counts"] = numbers(counts);
  j["method"] = method_name(gf.method);
  j["lhs"] = number(gf.count);
  if (oracle) {
    j["identity_checked"] = "generating-function = frobenius-orbit-oracle";
    j["rhs"] = number(oracle->count);
    j["ok"] = gf.count == oracle->count;
  } else {
    j["identity_checked"] = nullptr;
    j["rhs"] = nullptr;
    j["ok"] = true;
  }
  return j;
}

Json to_json(const counting::KunnethReport& r) {
  Json j;
  j["anchor"] = "kunneth-rule";
  j["label"] = r.label;
  j["q"] = r.q;
  j["n"] = r.n;
  j["counts"] = {{"sym_x", numbers(r.sym_x)}, {"sym_y", numbers(r.sym_y)}};
  j["method"] = "generating-function";
  j["identity_checked"] = "#Sym^n(X+Y) = sum_{i+j=n} #Sym^i X * #Sym^j Y";
  j["lhs"] = number(r.lhs);
  j["rhs"] = number(r.rhs);
  j["ok"] = r.ok;
  return j;
}

Json to_json(const counting::TowerCountReport& r) {
  Json j;
  j["anchor"] = "kunneth-tower-counts";
  j["label"] = r.label;
  j["q"] = r.q;
  j["n"] = r.n;
  j["counts"] = numbers(r.counts);
  j["cone_counts"] = numbers(r.cone_counts);
  j["method"] = "generating-function";
  j["identity_checked"] = "t_i - t_(i-1) = #Sym^(n-i) X * #Sym^i Y, t_0 = #Sym^n X, t_n = #Sym^n(X+Y)";
  j["lhs"] = r.counts.empty() ? Json(nullptr) : number(r.counts.back());
  j["rhs"] = number(r.sym_union);
  j["monotone"] = r.monotone;
  j["differences_ok"] = r.differences_ok;
  j["endpoints_ok"] = r.endpoints_ok;
  j["ok"] = r.ok();
  return j;
}

Json to_json(const etale::DimensionReport& r, const etale::EtaleDecomposition* decomposition) {
  Json j;
  j["anchor"] = "invariant-dimension";
  j["q"] = r.q;
  j["r"] = r.r;
  j["n"] = r.n;
  j["dim_expected"] = r.dim_expected;
  j["dim_actual"] = r.dim_actual;
  j["orbit_sizes"] = r.orbit_sizes;
  j["invariant_basis"] = r.invariant_basis;
  if (decomposition) {
    j["factors"] = decomposition->degrees;
    j["fixed_dim"] = decomposition->fixed_dim;
  }
  j["ok"] = r.ok();
  return j;
}

Json to_json(const etale::ThetaReport& r) {
  Json j;
  j["anchor"] = "theta-galois-bijection";
  j["q"] = r.q;
  j["r"] = r.r;
  j["n"] = r.n;
  j["m"] = r.m;
  j["dim_expected"] = r.dim_expected;
  j["dim_actual"] = r.dim_actual;
  j["factors"] = r.factors;
  j["homs"] = r.homs;
  j["source_size"] = r.source_size;
  j["image_size"] = r.image_size;
  j["well_defined"] = r.well_defined;
  j["homomorphisms"] = r.homomorphisms;
  j["injective"] = r.injective;
  j["signatures_distinct"] = r.signatures_distinct;
  j["bijection_ok"] = r.bijection_ok;
  j["ok"] = r.bijection_ok;
  return j;
}

Json to_json(const towers::LadderReport& r) {
  Json j;
  j["anchor"] = "theta-ladder";
  j["n"] = r.n;
  j["sizes"] = {{"categoric", r.categoric_sizes}, {"geometric", r.geometric_sizes}};
  j["cone_sizes"] = r.cone_sizes;
  j["theta_bijective"] = r.theta_bijective;
  j["squares_commute"] = r.squares_commute;
  j["endpoints_ok"] = r.endpoints_ok;
  j["cones_ok"] = r.cones_ok;
  j["kunneth_ok"] = r.kunneth_ok;
  j["ok"] = r.ok();
  return j;
}

Json to_json(const towers::LambdaAuditReport& r) {
  Json j;
  j["anchor"] = "lambda-axioms";
  j["x"] = r.x;
  j["z"] = r.z;
  j["n"] = r.n;
  j["unit_axiom"] = r.unit_axiom;
  j["tower_axiom"] = r.tower_axiom;
  j["functoriality"] = r.functoriality;
  j["cone_counts"] = r.cone_counts;
  j["smash_counts"] = r.smash_counts;
  j["morphisms_checked"] = r.morphisms_checked;
  j["ok"] = r.ok();
  return j;
}

Json to_json(const towers::CorResReport& r) {
  Json j;
  j["anchor"] = "corestriction-orbits";
  j["group_order"] = r.group_order;
  j["subgroup_order"] = r.subgroup_order;
  j["set_size"] = r.set_size;
  j["induced_size"] = r.induced_size;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["ok"] = r.bijection_ok;
  return j;
}

Json to_json(const towers::WeightQuotientReport& r) {
  Json j;
  j["anchor"] = "weight-quotient";
  j["n"] = r.n;
  j["j"] = r.j;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["well_defined"] = r.well_defined;
  j["ok"] = r.bijection_ok;
  return j;
}

Json to_json(const transfer::PullbackInvariantsReport& r) {
  Json j;
  j["anchor"] = "pullback-invariants";
  j["context"] = "linearization";
  j["d_or_setsize"] = r.set_size;
  j["n"] = r.n;
  j["dims"] = {{"ambient", r.ambient_dim}, {"image", r.image_dim}, {"invariant", r.invariant_dim}};
  j["ok"] = r.equal;
  return j;
}

Json to_json(const transfer::KunnethModulesReport& r) {
  Json j;
  j["anchor"] = "kunneth-modules";
  j["dv"] = r.dv;
  j["dw"] = r.dw;
  j["n"] = r.n;
  j["symmetrizer_rank"] = r.symmetrizer_rank;
  j["coinvariant_dim"] = r.coinvariant_dim;
  j["binomial"] = r.binomial;
  j["terms"] = r.terms;
  j["kunneth_sum"] = r.kunneth_sum;
  j["ok"] = r.ok;
  return j;
}

Json transfer_report(std::size_t d, std::size_t n, const Caps& caps) {
  const auto module = transfer::tensor_power_module(d, n, caps);
  const auto pack = transfer::build_transfer(module);
  const auto proj = transfer::projector_sym(module);
  const auto fs = transfer::finite_set_transfer(d, n, caps);
  const std::uint64_t expected = binomial(d + n - 1, n);

  Json j;
  j["anchor"] = "norm-transfer-identities";
  j["context"] = "modules";
  j["d_or_setsize"] = d;
  j["n"] = n;
  j["identities"] = {{"pi_tr", pack.pi_tr},
                     {"tr_pi", pack.tr_pi},
                     {"norm_square", pack.norm_square},
                     {"norm_on_relations", pack.well_defined},
                     {"idempotent", proj.idempotent},
                     {"rank", proj.dim == expected},
                     {"set_pi_tr", fs.pi_tr},
                     {"set_tr_pi", fs.tr_pi}};
  j["dims"] = {{"module", module.dim()},
               {"coinvariants", pack.pi.rows()},
               {"symmetrizer_rank", proj.dim},
               {"binomial", expected},
               {"multisets", fs.pi.rows()}};
  j["ok"] = pack.ok() && proj.idempotent && proj.dim == expected && fs.ok();
  return j;
}

Json linearization_inverse_report(std::size_t d, std::size_t n, const Caps& caps) {
  const auto r = transfer::prop81_verify(d, n, caps);
  Json j;
  j["anchor"] = "linearization-inverse";
  j["context"] = "linearization";
  j["d_or_setsize"] = d;
  j["n"] = n;
  j["identities"] = {{"u_well_defined", r.u_well_defined}, {"xi_u", r.xi_u}, {"u_xi", r.u_xi},
                     {"u_invertible", r.xi_u && r.u_xi}};
  j["dims"] = {{"coinvariants", r.coinvariant_dim}, {"multisets", r.multiset_count}};
  j["ok"] = r.ok();
  return j;
}

Json invariant_ring_report(const std::vector<std::uint64_t>& qs, const Caps& caps) {
  const auto pres = invariants::compute_presentation(caps);
  const auto sing = invariants::singularity_check();
  Json j;
  j["anchor"] = "sym2-plane-cone";
  j["relation"] = pres.relation;
  j["elimination_basis"] = pres.elimination_basis;
  Json gens = Json::object();
  for (const auto& [name, def] : pres.generators) gens[name] = def;
  j["generators"] = gens;
  j["checks"] = {{"principal", pres.principal},
                 {"matches_expected", pres.matches_expected},
                 {"relation_in_ideal", pres.relation_in_ideal},
                 {"ideal_in_relation", pres.ideal_in_relation},
                 {"vanishes_on_generators", pres.vanishes_on_generators},
                 {"generators_invariant", pres.generators_invariant},
                 {"cone_identity", pres.cone_identity},
                 {"reduces_mod_relation", pres.reduces_mod_relation}};
  j["coord_change_identity_ok"] = pres.coordinate_change_ok;
  j["cone_equation"] = sing.cone_equation;
  j["singular_at_origin"] = sing.singular_at_origin;
  j["jacobian_rank"] = {{"origin", sing.origin_rank}, {"generic", sing.generic_rank}};
  bool counts_ok = true;
  Json counts = Json::object();
  for (auto q : qs) {
    const auto cc = invariants::count_cross_check(q, 2, caps);
    counts[std::to_string(q)] = {{"method_a", cc.method_a}, {"method_b", cc.method_b}, {"agree", cc.agree}};
    counts_ok = counts_ok && cc.agree;
  }
  j["counts"] = counts;
  j["ok"] = pres.ok() && sing.ok() && counts_ok;
  return j;
}

}  // namespace sympow::reports
