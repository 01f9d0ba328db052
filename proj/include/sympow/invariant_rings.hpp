#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sympow/caps.hpp"

namespace sympow::invariants {

/// Presentation of Q[x1,x2,y1,y2]^{Σ_2} for the swap (x1,y1) <-> (x2,y2)
/// by s = x1+x2, p = x1 x2, t = y1+y2, q = y1 y2, m = x1 y2 + x2 y1.
struct InvariantPresentation {
  std::vector<std::pair<std::string, std::string>> generators;  // name, definition
  std::vector<std::string> elimination_basis;
  std::string relation;           // m^2 - s*t*m + s^2*q + t^2*p - 4*p*q, canonical form
  bool principal = false;         // elimination ideal has a one-element basis
  bool matches_expected = false;  // that element equals the relation up to a unit
  bool relation_in_ideal = false;
  bool ideal_in_relation = false;
  bool vanishes_on_generators = false;
  bool generators_invariant = false;
  bool cone_identity = false;            // (2m - st)^2 - (s^2 - 4p)(t^2 - 4q) = 4 * relation
  bool reduces_mod_relation = false;     // the same difference has normal form 0 mod the relation
  bool coordinate_change_ok = false;     // relation(s, t, (s^2-u)/4, (t^2-w)/4, (v+st)/2) = -(u*w - v^2)/4
  std::string cone_equation;             // u*w - v^2 in canonical form

  bool ok() const {
    return principal && matches_expected && relation_in_ideal && ideal_in_relation && vanishes_on_generators &&
           generators_invariant && cone_identity && reduces_mod_relation && coordinate_change_ok;
  }
};

InvariantPresentation compute_presentation(const Caps& caps = {});

struct SingularityReport {
  std::string cone_equation;
  std::size_t codimension = 1;
  std::size_t origin_rank = 0;
  std::size_t generic_rank = 0;   // at (1, 1, 1)
  bool singular_at_origin = false;
  bool smooth_at_generic = false;
  bool affine_space_smooth = false;  // A^4 has no equations: Jacobian rank 0 = codimension 0
  bool ok() const { return singular_at_origin && smooth_at_generic && affine_space_smooth; }
};

SingularityReport singularity_check();

struct CountCrossCheck {
  std::uint64_t q = 0;
  std::size_t n = 2;
  std::uint64_t method_a = 0;  // closed-point count of Sym^n A^2
  std::uint64_t method_b = 0;  // F_q-points of the relation in A^5 (n = 2) or of a point (n = 0)
  bool agree = false;
};

/// q prime; n in {0, 2}.
CountCrossCheck count_cross_check(std::uint64_t q, std::size_t n = 2, const Caps& caps = {});

}  // namespace sympow::invariants
