#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "json.hpp"

#include "sympow/affine_counting.hpp"
#include "sympow/caps.hpp"
#include "sympow/etale.hpp"
#include "sympow/invariant_rings.hpp"
#include "sympow/towers.hpp"
#include "sympow/transfer.hpp"

namespace sympow::reports {

/// Objects keep their keys sorted, so dumps are byte-stable.
using Json = nlohmann::json;

/// A JSON number when it fits in 64 bits, a decimal string otherwise.
Json number(const mpz_class& v);

/// Every report has "anchor" naming the checked claim and "ok".
Json to_json(const counting::SymCountReport& gf, const counting::SymCountReport* oracle,
             const std::vector<mpz_class>& counts);
Json to_json(const counting::KunnethReport& r);
Json to_json(const counting::TowerCountReport& r);
Json to_json(const etale::DimensionReport& r, const etale::EtaleDecomposition* decomposition);
Json to_json(const etale::ThetaReport& r);
Json to_json(const towers::LadderReport& r);
Json to_json(const towers::LambdaAuditReport& r);
Json to_json(const towers::CorResReport& r);
Json to_json(const towers::WeightQuotientReport& r);
Json to_json(const transfer::PullbackInvariantsReport& r);
Json to_json(const transfer::KunnethModulesReport& r);

/// Norm, transfer and symmetrizer identities on (Q^d)^{⊗n}, plus the
/// finite-set transfer on a d-element set.
Json transfer_report(std::size_t d, std::size_t n, const Caps& caps = {});
Json linearization_inverse_report(std::size_t d, std::size_t n, const Caps& caps = {});
/// Presentation, coordinate change, singularity and the dual point counts for each q.
Json invariant_ring_report(const std::vector<std::uint64_t>& qs, const Caps& caps = {});

}  // namespace sympow::reports
