#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sympow/field.hpp"

namespace sympow::poly {

using Exponents = std::vector<std::uint32_t>;

/// Monomial order. `Block` compares the first `block` variables by grevlex,
/// and only on a tie the remaining variables by grevlex; it is an
/// elimination order for the leading block.
struct MonomialOrder {
  enum class Kind { Grevlex, Lex, Block };
  Kind kind = Kind::Grevlex;
  std::size_t block = 0;

  static MonomialOrder grevlex() { return {Kind::Grevlex, 0}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder elimination(std::size_t eliminated) { return {Kind::Block, eliminated}; }

  /// -1, 0, 1 as a < b, a == b, a > b.
  int compare(const Exponents& a, const Exponents& b) const;
  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// Polynomial ring: ordered variable names over Q or F_p. The declaration
/// order of the variables fixes every canonical form.
struct Ring {
  std::vector<std::string> vars;
  Field field;

  std::size_t nvars() const { return vars.size(); }
  /// Index of a variable, or -1.
  long index_of(std::string_view name) const;

  friend bool operator==(const Ring&, const Ring&) = default;
};

using RingPtr = std::shared_ptr<const Ring>;

/// Throws InvalidInput unless every name is an ASCII identifier and names are distinct.
RingPtr make_ring(std::vector<std::string> vars, Field field);

struct Term {
  Exponents exponents;
  FieldElem coeff;
};

/// Immutable-by-convention multivariate polynomial in canonical form: terms in
/// strictly descending monomial order, no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring, MonomialOrder order = MonomialOrder::grevlex());
  Polynomial(RingPtr ring, std::vector<Term> terms, MonomialOrder order = MonomialOrder::grevlex());

  static Polynomial constant(RingPtr ring, const FieldElem& c, MonomialOrder order = MonomialOrder::grevlex());
  static Polynomial variable(RingPtr ring, std::size_t index, MonomialOrder order = MonomialOrder::grevlex());
  static Polynomial monomial(RingPtr ring, Exponents e, const FieldElem& c,
                             MonomialOrder order = MonomialOrder::grevlex());

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  Field field() const { return ring_->field; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  /// Requires a nonzero polynomial.
  const Term& leading() const { return terms_.front(); }
  long total_degree() const;  // -1 for zero
  /// Indices of variables that occur with positive exponent.
  std::vector<std::size_t> support() const;

  Polynomial with_order(MonomialOrder order) const;
  /// Same polynomial viewed in another ring; `map[i]` is the target index of variable i.
  Polynomial relabel(RingPtr target, const std::vector<std::size_t>& map, MonomialOrder order) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const FieldElem& c) const;
  Polynomial times_monomial(const Exponents& e, const FieldElem& c) const;
  Polynomial pow(std::uint32_t e) const;
  /// Divides every coefficient by the leading one.
  Polynomial monic() const;

  Polynomial derivative(std::size_t var) const;
  FieldElem evaluate(const std::vector<FieldElem>& point) const;
  /// Replaces variable i by images[i]; all images share one target ring.
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  /// Canonical text: descending monomial order, explicit `*` and `^`.
  std::string str() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_compatible(const Polynomial& o) const;
  void canonicalize();

  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

/// Parses integers, `p/q` rationals, variables of the ring, `+ - * / ^` and
/// parentheses. Implicit multiplication is rejected. Throws ParseError (with
/// 1-based line/column inside `src`) or InvalidInput for a denominator that is
/// not invertible in F_p.
Polynomial parse_poly(std::string_view src, const RingPtr& ring, MonomialOrder order = MonomialOrder::grevlex());

}  // namespace sympow::poly
