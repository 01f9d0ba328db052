#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace sympow {

/// Coefficient field tag: the rationals (p == 0) or a prime field F_p.
struct Field {
  std::uint32_t p = 0;

  static Field rationals() { return Field{}; }
  /// Throws InvalidInput unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p == 0; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;
};

bool is_prime(std::uint64_t n);

/// An exact element of Q or F_p.
///
/// Rationals are kept in lowest terms with a positive denominator (GMP
/// canonical form); residues are kept in [0, p).
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(Field field, long value);
  FieldElem(Field field, const mpz_class& value);
  /// Throws InvalidInput when the denominator is not invertible mod p.
  FieldElem(Field field, const mpq_class& value);

  static FieldElem zero(Field field) { return FieldElem(field, 0L); }
  static FieldElem one(Field field) { return FieldElem(field, 1L); }

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational() const { return q_; }
  std::uint32_t residue() const { return r_; }

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);
  /// Throws InvalidInput on zero.
  FieldElem inverse() const;
  FieldElem pow(std::uint64_t e) const;

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  friend bool operator==(const FieldElem& a, const FieldElem& b);

  /// "3", "-1/2" over Q; "0".."p-1" over F_p.
  std::string str() const;

 private:
  void check_same(const FieldElem& o) const;

  Field field_;
  mpq_class q_;
  std::uint32_t r_ = 0;
};

/// Field policy for the generic linear algebra in linalg.hpp.
struct CoefficientField {
  Field field;

  using value_type = FieldElem;
  value_type zero() const { return FieldElem::zero(field); }
  value_type one() const { return FieldElem::one(field); }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const { return a.inverse(); }
};

/// Field policy over GMP rationals.
struct RationalField {
  using value_type = mpq_class;
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const { return 1 / a; }
};

}  // namespace sympow
