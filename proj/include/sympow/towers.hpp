#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sympow/caps.hpp"
#include "sympow/permutation.hpp"

namespace sympow::towers {

/// A finite pointed set. Only the non-base points are stored; the basepoint
/// is implicit and labelled "*".
struct PointedSet {
  std::vector<std::string> points;

  std::size_t size() const { return points.size() + 1; }

  /// Validates that `basepoint` is one of `elements` and labels are distinct.
  static PointedSet make(const std::vector<std::string>& elements, const std::string& basepoint);
  /// {*, prefix1, ..., prefixk}.
  static PointedSet generated(std::size_t k, const std::string& prefix);

  friend bool operator==(const PointedSet&, const PointedSet&) = default;
};

/// X ∨ Y; labels must be disjoint.
PointedSet wedge(const PointedSet& x, const PointedSet& y);
/// X ∧ Y: pairs of non-base points, labelled "(a,b)".
PointedSet smash(const PointedSet& x, const PointedSet& y);
/// X^∧n: n-tuples of non-base points, labelled "(a,b,...)". X^∧0 = S^0.
PointedSet smash_power(const PointedSet& x, std::size_t n, const Caps& caps = {});
/// (X^∧n)/Σ_n: orbits of tuples, labelled by the sorted tuple "[a,b,...]".
PointedSet smash_power_sym(const PointedSet& x, std::size_t n, const Caps& caps = {});

/// The canonical inclusion X -> X ∨ Y.
struct Coprojection {
  PointedSet source;
  PointedSet witness;
  PointedSet target() const { return wedge(source, witness); }
};

/// Tuples of (X ∨ Y)^∧n with at most i coordinates in Y.
PointedSet box_object(const Coprojection& f, std::size_t n, std::size_t i, const Caps& caps = {});

enum class TowerKind { Categoric, Geometric };

struct KunnethTower {
  std::size_t n = 0;
  TowerKind kind = TowerKind::Categoric;
  std::vector<PointedSet> terms;        // i = 0..n
  std::vector<std::size_t> cone_sizes;  // non-base points of terms[i] \ terms[i-1], i = 1..n
  bool increasing = false;              // terms[i-1] ⊆ terms[i] as labelled sets

  std::vector<std::size_t> sizes() const;
};

/// L_i^n = □_i^n / Σ_n, with orbits computed from the box tuples.
KunnethTower tower_categoric(const Coprojection& f, std::size_t n, const Caps& caps = {});
/// 𝓛_i^n = ⋁_{n-i <= l <= n} Sym^l X ∧ Sym^(n-l) Y, labelled "([..],[..])".
KunnethTower tower_geometric(const Coprojection& f, std::size_t n, const Caps& caps = {});

struct LadderReport {
  std::size_t n = 0;
  std::vector<std::size_t> categoric_sizes;
  std::vector<std::size_t> geometric_sizes;
  std::vector<std::size_t> cone_sizes;  // i = 1..n
  std::vector<bool> bijective;          // per i
  bool theta_bijective = false;
  bool squares_commute = false;
  bool endpoints_ok = false;  // L_0 = Sym^n X, L_n = Sym^n(X ∨ Y)
  bool cones_ok = false;      // L_i \ L_(i-1) ≅ non-base points of Sym^(n-i) X ∧ Sym^i Y
  bool kunneth_ok = false;    // |Sym^n(X ∨ Y)| = |𝓛_n|
  bool ok() const { return theta_bijective && squares_commute && endpoints_ok && cones_ok && kunneth_ok; }
};

/// ϑ_i^n sends the orbit of a box tuple to (multiset of X-coordinates,
/// multiset of Y-coordinates).
LadderReport theta_ladder(const Coprojection& f, std::size_t n, const Caps& caps = {});

/// A basepoint-preserving map, as the image of each non-base point:
/// 0 is the basepoint, k >= 1 is the k-th non-base point of the target.
struct PointedMap {
  std::size_t source_points = 0;
  std::size_t target_points = 0;
  std::vector<std::uint32_t> image;
};

struct LambdaAuditReport {
  std::size_t x = 0;  // |X| including the basepoint
  std::size_t z = 0;  // |Z|
  std::size_t n = 0;
  bool unit_axiom = false;      // Sym^0 has one non-base point, Sym^1 = id
  bool tower_axiom = false;     // cone counts match the smash sizes
  bool functoriality = false;   // morphisms of split sequences give commuting ladders
  std::vector<std::size_t> cone_counts;     // i = 0..n, from the tower
  std::vector<std::size_t> smash_counts;    // |Sym^(n-i) X ∧ Sym^i Z| non-base, i = 0..n
  std::size_t morphisms_checked = 0;
  bool ok() const { return unit_axiom && tower_axiom && functoriality; }
};

/// Audits the λ-structure axioms for the split sequence X -> X ∨ Z -> Z.
/// `morphisms` are pairs (f_X, f_Z) into a second split sequence.
LambdaAuditReport lambda_audit(const PointedSet& x, const PointedSet& y, std::size_t n,
                               const std::vector<std::pair<PointedMap, PointedMap>>& morphisms, const Caps& caps = {});
/// Sizes form: X and Z generated with x - 1 and z - 1 points; `seed` drives
/// the generated morphisms (every pointed map when they are few).
LambdaAuditReport lambda_audit(std::size_t x, std::size_t z, std::size_t n, std::uint64_t seed, const Caps& caps = {});

struct CorResReport {
  std::size_t group_order = 0;
  std::size_t subgroup_order = 0;
  std::size_t set_size = 0;
  std::size_t induced_size = 0;  // |cor_H^G(S)| = [G:H] |S|
  std::size_t lhs = 0;           // |cor_H^G(S) / G|
  std::size_t rhs = 0;           // |S / H|
  bool bijection_ok = false;
};

/// cor_H^G(S)/G ≅ S/H via [s] -> [(e, s)]. Throws InvalidInput when H is not
/// a subgroup of G or the action is inconsistent.
CorResReport cor_res_check(const std::vector<Perm>& g_generators, const GSet& s, const Caps& caps = {});

struct WeightQuotientReport {
  std::size_t n = 0;
  std::size_t j = 0;
  std::size_t lhs = 0;  // |(⋁_{weight j} X_{k_1} ∧ ... ∧ X_{k_n}) / Σ_n|
  std::size_t rhs = 0;  // |Sym^(n-j) X_0 ∧ Sym^j X_1|
  bool well_defined = false;
  bool bijection_ok = false;
};

WeightQuotientReport lemma16_check(const PointedSet& x0, const PointedSet& x1, std::size_t n, std::size_t j,
                            const Caps& caps = {});

}  // namespace sympow::towers
