#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "sympow/caps.hpp"
#include "sympow/finite_field.hpp"
#include "sympow/polynomial.hpp"

namespace sympow::counting {

/// An affine variety over F_q cut out by equations with F_p coefficients.
struct AffineVarietySpec {
  std::string label;
  std::uint64_t q = 0;
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  poly::RingPtr ring;
  std::vector<poly::Polynomial> equations;

  std::size_t nvars() const { return ring->nvars(); }

  /// Parses equation texts over F_p[vars]. Throws InvalidInput for a q that
  /// is not a prime power and ParseError for malformed equations.
  static AffineVarietySpec make(std::string label, std::uint64_t q, std::vector<std::string> vars,
                                const std::vector<std::string>& equations);
  static AffineVarietySpec affine_space(std::uint64_t q, std::size_t nvars);
  static AffineVarietySpec point(std::uint64_t q);
  /// {1 = 0}.
  static AffineVarietySpec empty(std::uint64_t q);
};

/// A point over F_{q^d}: one field element per variable.
using Point = std::vector<FiniteField::value_type>;

struct PointSet {
  FiniteField field;  // F_{q^d}
  std::vector<Point> points;
};

/// All solutions over F_{q^d}, in lexicographic order of coordinate encodings.
PointSet enumerate_points(const AffineVarietySpec& x, std::uint32_t d, const Caps& caps = {});

/// #X(F_{q^d}) without materializing the points.
std::uint64_t count_points(const AffineVarietySpec& x, std::uint32_t d, const Caps& caps = {});

/// Point counts N_d and closed-point counts c_d for 1 <= d <= depth().
struct ClosedPointInventory {
  std::string label;
  std::uint64_t q = 0;
  std::vector<mpz_class> N;  // N[d - 1]
  std::vector<mpz_class> c;  // c[d - 1]

  std::size_t depth() const { return N.size(); }
  /// Sum over d | m of d * c_d equals N_m, and every c_d >= 0.
  bool consistent() const;

  /// Möbius inversion; throws InvalidInput when the counts are not those of
  /// a variety (non-integral or negative c_d).
  static ClosedPointInventory from_counts(std::string label, std::uint64_t q, std::vector<mpz_class> n);
};

ClosedPointInventory closed_points(const AffineVarietySpec& x, std::size_t depth, const Caps& caps = {});

/// X ⊔ Y: closed-point counts add.
ClosedPointInventory disjoint_union(const ClosedPointInventory& x, const ClosedPointInventory& y);
/// X × Y: point counts multiply.
ClosedPointInventory product(const ClosedPointInventory& x, const ClosedPointInventory& y);

enum class SymMethod { GeneratingFunction, OrbitOracle };

struct SymCountReport {
  std::string label;
  std::uint64_t q = 0;
  std::size_t n = 0;
  mpz_class count;
  SymMethod method = SymMethod::GeneratingFunction;
};

/// Coefficients 0..n of prod_d (1 - t^d)^(-c_d): the numbers of effective
/// zero cycles of each degree. Requires depth >= n.
std::vector<mpz_class> sym_series(const ClosedPointInventory& inv, std::size_t n);

SymCountReport sym_count(const ClosedPointInventory& inv, std::size_t n);
SymCountReport sym_count(const AffineVarietySpec& x, std::size_t n, const Caps& caps = {});

/// Counts Frobenius-stable multisets of size n in X(F_{q^L}), L = lcm(1..n),
/// by enumerating sorted n-tuples of points.
SymCountReport sym_count_oracle(const AffineVarietySpec& x, std::size_t n, const Caps& caps = {});

struct KunnethReport {
  std::string label;
  std::uint64_t q = 0;
  std::size_t n = 0;
  mpz_class lhs;                    // #Sym^n(X ⊔ Y)
  mpz_class rhs;                    // sum over i + j = n of #Sym^i X * #Sym^j Y
  std::vector<mpz_class> sym_x;     // #Sym^i X for i = 0..n
  std::vector<mpz_class> sym_y;
  bool ok = false;
};

KunnethReport kunneth_verify(const ClosedPointInventory& x, const ClosedPointInventory& y, std::size_t n);
KunnethReport kunneth_verify(const AffineVarietySpec& x, const AffineVarietySpec& y, std::size_t n,
                             const Caps& caps = {});

struct TowerCountReport {
  std::string label;
  std::uint64_t q = 0;
  std::size_t n = 0;
  std::vector<mpz_class> counts;      // t_0..t_n
  std::vector<mpz_class> cone_counts; // #Sym^(n-i) X * #Sym^i Y, i = 1..n
  mpz_class sym_union;                // #Sym^n(X ⊔ Y) from the union inventory
  bool monotone = false;
  bool differences_ok = false;
  bool endpoints_ok = false;
  bool ok() const { return monotone && differences_ok && endpoints_ok; }
};

/// t_i = sum over n - i <= j <= n of #Sym^j X * #Sym^(n-j) Y.
TowerCountReport tower_counts(const ClosedPointInventory& x, const ClosedPointInventory& y, std::size_t n);
TowerCountReport tower_counts(const AffineVarietySpec& x, const AffineVarietySpec& y, std::size_t n,
                              const Caps& caps = {});

}  // namespace sympow::counting
