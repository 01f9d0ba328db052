#include "sympow/field.hpp"

#include "sympow/caps.hpp"
#include "sympow/errors.hpp"

namespace sympow {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw InvalidInput("field characteristic must be a prime below 2^31, got " + std::to_string(p));
  return Field{static_cast<std::uint32_t>(p)};
}

std::string Field::name() const { return is_rational() ? "Q" : "F_" + std::to_string(p); }

namespace {

std::uint32_t reduce(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

FieldElem::FieldElem(Field field, long value) : field_(field) {
  if (field.is_rational())
    q_ = value;
  else
    r_ = reduce(mpz_class(value), field.p);
}

FieldElem::FieldElem(Field field, const mpz_class& value) : field_(field) {
  if (field.is_rational())
    q_ = value;
  else
    r_ = reduce(value, field.p);
}

FieldElem::FieldElem(Field field, const mpq_class& value) : field_(field) {
  if (field.is_rational()) {
    q_ = value;
    q_.canonicalize();
    return;
  }
  std::uint32_t den = reduce(value.get_den(), field.p);
  if (den == 0)
    throw InvalidInput("denominator " + value.get_den().get_str() + " is not invertible in " +
                       field.name());
  r_ = mul_mod(reduce(value.get_num(), field.p), pow_mod(den, field.p - 2, field.p), field.p);
}

bool FieldElem::is_zero() const { return field_.is_rational() ? sgn(q_) == 0 : r_ == 0; }

bool FieldElem::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1 % field_.p; }

void FieldElem::check_same(const FieldElem& o) const {
  if (!(field_ == o.field_))
    throw InvalidInput("mixed coefficient fields " + field_.name() + " and " + o.field_.name());
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  if (field_.is_rational())
    r.q_ = -q_;
  else
    r.r_ = r_ == 0 ? 0 : field_.p - r_;
  return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  check_same(o);
  if (field_.is_rational())
    q_ += o.q_;
  else
    r_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r_) + o.r_) % field_.p);
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) { return *this += -o; }

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  check_same(o);
  if (field_.is_rational())
    q_ *= o.q_;
  else
    r_ = mul_mod(r_, o.r_, field_.p);
  return *this;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw InvalidInput("division by zero in " + field_.name());
  FieldElem r = *this;
  if (field_.is_rational())
    r.q_ = 1 / q_;
  else
    r.r_ = pow_mod(r_, field_.p - 2, field_.p);
  return r;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) {
  check_same(o);
  return *this *= o.inverse();
}

FieldElem FieldElem::pow(std::uint64_t e) const {
  FieldElem result = one(field_);
  FieldElem base = *this;
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string FieldElem::str() const {
  return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

bool Caps::set(std::string_view name, std::uint64_t value) {
  if (name == "max_terms") max_terms = value;
  else if (name == "max_reduction_steps") max_reduction_steps = value;
  else if (name == "max_basis_size") max_basis_size = value;
  else if (name == "max_points") max_points = value;
  else if (name == "max_oracle_field") max_oracle_field = value;
  else if (name == "max_vars") max_vars = value;
  else if (name == "max_tensor_dim") max_tensor_dim = value;
  else if (name == "max_idempotent_search") max_idempotent_search = value;
  else if (name == "max_module_dim") max_module_dim = value;
  else if (name == "max_symmetric_degree") max_symmetric_degree = value;
  else if (name == "max_pointed_size") max_pointed_size = value;
  else if (name == "max_power") max_power = value;
  else return false;
  return true;
}

}  // namespace sympow
