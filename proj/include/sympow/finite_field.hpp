#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace sympow {

/// Dense polynomial over F_p, coefficients low degree first, no trailing zeros.
using PrimePoly = std::vector<std::uint32_t>;

namespace prime_poly {

PrimePoly trim(PrimePoly f);
PrimePoly mul_mod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& modulus, std::uint32_t p);
PrimePoly rem(PrimePoly a, const PrimePoly& b, std::uint32_t p);
PrimePoly gcd(PrimePoly a, PrimePoly b, std::uint32_t p);
/// Ben-Or test: no factor of degree <= deg/2.
bool is_irreducible(const PrimePoly& f, std::uint32_t p);
/// Monic irreducible of degree k with the smallest encoding sum c_i p^i.
PrimePoly smallest_irreducible(std::uint32_t p, std::uint32_t k);

}  // namespace prime_poly

/// Decomposes q = p^e; nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

/// The finite field F_p[t]/(modulus) of order p^k.
///
/// Elements are integers in [0, p^k): the base-p digits are the coefficients
/// of the residue polynomial, lowest degree first. The prime subfield is
/// {0, ..., p-1}. Multiplication and addition use log / Zech-log tables.
class FiniteField {
 public:
  using value_type = std::uint32_t;

  /// Order cap for table construction.
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 22;

  /// Modulus: the smallest monic irreducible of degree k over F_p.
  FiniteField(std::uint32_t p, std::uint32_t k);
  /// Explicit monic irreducible modulus over F_p.
  FiniteField(std::uint32_t p, PrimePoly modulus);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint64_t order() const { return order_; }
  const PrimePoly& modulus() const { return modulus_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }
  value_type add(value_type a, value_type b) const;
  value_type sub(value_type a, value_type b) const { return add(a, neg(b)); }
  value_type neg(value_type a) const;
  value_type mul(value_type a, value_type b) const;
  value_type inv(value_type a) const;
  value_type pow(value_type a, std::uint64_t e) const;
  /// a^p.
  value_type frobenius(value_type a) const { return pow(a, p_); }
  /// The image of an integer in the prime subfield.
  value_type from_integer(long long v) const;

  PrimePoly digits(value_type a) const;
  value_type from_digits(const PrimePoly& d) const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

 private:
  struct Tables {
    std::vector<value_type> exp;   // 2N entries
    std::vector<value_type> log;   // order entries, log[0] unused
    std::vector<value_type> zech;  // log(1 + g^n), kNoZech when 1 + g^n = 0
  };
  static constexpr value_type kNoZech = 0xFFFFFFFFu;

  void build();

  std::uint32_t p_;
  std::uint32_t k_;
  std::uint64_t order_;
  PrimePoly modulus_;
  std::shared_ptr<const Tables> tables_;
};

/// Image of every element of `small` in `big` under the embedding that sends
/// the generator t of `small` to the smallest root of small's modulus in big.
/// Requires equal characteristic and degree(small) | degree(big).
std::vector<FiniteField::value_type> embed(const FiniteField& small, const FiniteField& big);

}  // namespace sympow
