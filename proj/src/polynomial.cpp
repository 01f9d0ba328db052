#include "sympow/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "sympow/errors.hpp"

namespace sympow::poly {

namespace {

std::uint64_t degree_of(const Exponents& e, std::size_t begin, std::size_t end) {
  std::uint64_t d = 0;
  for (std::size_t i = begin; i < end; ++i) d += e[i];
  return d;
}

int grevlex_range(const Exponents& a, const Exponents& b, std::size_t begin, std::size_t end) {
  auto da = degree_of(a, begin, end);
  auto db = degree_of(b, begin, end);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = end; i-- > begin;)
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  return 0;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

int MonomialOrder::compare(const Exponents& a, const Exponents& b) const {
  switch (kind) {
    case Kind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case Kind::Grevlex:
      return grevlex_range(a, b, 0, a.size());
    case Kind::Block: {
      std::size_t split = std::min(block, a.size());
      if (int c = grevlex_range(a, b, 0, split)) return c;
      return grevlex_range(a, b, split, a.size());
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind) {
    case Kind::Lex: return "lex";
    case Kind::Grevlex: return "grevlex";
    case Kind::Block: return "block(" + std::to_string(block) + ")";
  }
  return "?";
}

long Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return static_cast<long>(i);
  return -1;
}

RingPtr make_ring(std::vector<std::string> vars, Field field) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!is_identifier(v)) throw InvalidInput("variable name '" + v + "' is not an ASCII identifier");
    if (!seen.insert(v).second) throw InvalidInput("duplicate variable '" + v + "'");
  }
  return std::make_shared<const Ring>(Ring{std::move(vars), field});
}

Polynomial::Polynomial(RingPtr ring, MonomialOrder order) : ring_(std::move(ring)), order_(order) {
  if (!ring_) throw InvalidInput("polynomial without a ring");
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms, MonomialOrder order)
    : ring_(std::move(ring)), order_(order), terms_(std::move(terms)) {
  if (!ring_) throw InvalidInput("polynomial without a ring");
  for (const auto& t : terms_) {
    if (t.exponents.size() != ring_->nvars()) throw InvalidInput("exponent vector does not match the ring");
    if (!(t.coeff.field() == ring_->field)) throw InvalidInput("coefficient outside the ring's field");
  }
  canonicalize();
}

Polynomial Polynomial::constant(RingPtr ring, const FieldElem& c, MonomialOrder order) {
  Exponents zero(ring->nvars(), 0);
  return Polynomial(ring, {Term{zero, c}}, order);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index, MonomialOrder order) {
  Exponents e(ring->nvars(), 0);
  e.at(index) = 1;
  auto one = FieldElem::one(ring->field);
  return Polynomial(ring, {Term{e, one}}, order);
}

Polynomial Polynomial::monomial(RingPtr ring, Exponents e, const FieldElem& c, MonomialOrder order) {
  return Polynomial(std::move(ring), {Term{std::move(e), c}}, order);
}

void Polynomial::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [this](const Term& a, const Term& b) { return order_.compare(a.exponents, b.exponents) > 0; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().exponents == t.exponents)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(), [](const Term& t) { return t.coeff.is_zero(); }),
               merged.end());
  terms_ = std::move(merged);
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && std::all_of(terms_[0].exponents.begin(), terms_[0].exponents.end(),
                                            [](std::uint32_t e) { return e == 0; }));
}

long Polynomial::total_degree() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<long>(degree_of(t.exponents, 0, t.exponents.size())));
  return d;
}

std::vector<std::size_t> Polynomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ring_->nvars(); ++i)
    for (const auto& t : terms_)
      if (t.exponents[i] > 0) {
        out.push_back(i);
        break;
      }
  return out;
}

Polynomial Polynomial::with_order(MonomialOrder order) const { return Polynomial(ring_, terms_, order); }

Polynomial Polynomial::relabel(RingPtr target, const std::vector<std::size_t>& map, MonomialOrder order) const {
  if (map.size() != ring_->nvars()) throw InvalidInput("relabel map does not cover the ring");
  if (!(target->field == ring_->field)) throw InvalidInput("relabel across different fields");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e(target->nvars(), 0);
    for (std::size_t i = 0; i < map.size(); ++i) {
      if (t.exponents[i] == 0) continue;
      if (map[i] >= target->nvars()) throw InvalidInput("variable " + ring_->vars[i] + " has no image in target ring");
      e[map[i]] += t.exponents[i];
    }
    out.push_back(Term{std::move(e), t.coeff});
  }
  return Polynomial(std::move(target), std::move(out), order);
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (ring_ != o.ring_ && !(*ring_ == *o.ring_)) throw InvalidInput("polynomials from different rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  const Polynomial& b = o.order_ == order_ ? o : o.with_order(order_);
  std::vector<Term> out;
  out.reserve(terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < b.terms_.size()) {
    int c = i == terms_.size() ? -1 : j == b.terms_.size() ? 1 : order_.compare(terms_[i].exponents, b.terms_[j].exponents);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(b.terms_[j++]);
    } else {
      FieldElem s = terms_[i].coeff + b.terms_[j].coeff;
      if (!s.is_zero()) out.push_back(Term{terms_[i].exponents, s});
      ++i;
      ++j;
    }
  }
  Polynomial r(ring_, order_);
  r.terms_ = std::move(out);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  std::vector<Term> out;
  out.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Exponents e = a.exponents;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += b.exponents[k];
      out.push_back(Term{std::move(e), a.coeff * b.coeff});
    }
  return Polynomial(ring_, std::move(out), order_);
}

Polynomial Polynomial::scaled(const FieldElem& c) const {
  if (c.is_zero()) return Polynomial(ring_, order_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::times_monomial(const Exponents& e, const FieldElem& c) const {
  if (c.is_zero()) return Polynomial(ring_, order_);
  Polynomial r = *this;
  for (auto& t : r.terms_) {
    for (std::size_t k = 0; k < e.size(); ++k) t.exponents[k] += e[k];
    t.coeff *= c;
  }
  return r;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial result = constant(ring_, FieldElem::one(ring_->field), order_);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().coeff.inverse());
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= ring_->nvars()) throw InvalidInput("derivative with respect to a variable outside the ring");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exponents[var] == 0) continue;
    Exponents e = t.exponents;
    FieldElem c = t.coeff * FieldElem(ring_->field, static_cast<long>(e[var]));
    --e[var];
    out.push_back(Term{std::move(e), c});
  }
  return Polynomial(ring_, std::move(out), order_);
}

FieldElem Polynomial::evaluate(const std::vector<FieldElem>& point) const {
  if (point.size() != ring_->nvars())
    throw InvalidInput("point has " + std::to_string(point.size()) + " coordinates, ring has " +
                       std::to_string(ring_->nvars()) + " variables");
  FieldElem sum = FieldElem::zero(ring_->field);
  for (const auto& t : terms_) {
    FieldElem m = t.coeff;
    for (std::size_t k = 0; k < point.size(); ++k)
      if (t.exponents[k]) m *= point[k].pow(t.exponents[k]);
    sum += m;
  }
  return sum;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != ring_->nvars()) throw InvalidInput("substitution must give an image for every variable");
  if (images.empty()) throw InvalidInput("substitution in a ring without variables needs a target ring");
  const RingPtr& target = images[0].ring();
  MonomialOrder order = images[0].order();
  Polynomial sum(target, order);
  for (const auto& t : terms_) {
    Polynomial m = constant(target, t.coeff, order);
    for (std::size_t k = 0; k < images.size(); ++k)
      if (t.exponents[k]) m = m * images[k].pow(t.exponents[k]);
    sum = sum + m;
  }
  return sum;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(*a.ring_ == *b.ring_)) return false;
  const Polynomial& bb = a.order_ == b.order_ ? b : b.with_order(a.order_);
  if (a.terms_.size() != bb.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exponents != bb.terms_[i].exponents || !(a.terms_[i].coeff == bb.terms_[i].coeff)) return false;
  return true;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    FieldElem c = t.coeff;
    bool negative = field().is_rational() && sgn(c.rational()) < 0;
    if (negative) c = -c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;

    std::string mono;
    for (std::size_t k = 0; k < t.exponents.size(); ++k) {
      if (t.exponents[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->vars[k];
      if (t.exponents[k] > 1) mono += "^" + std::to_string(t.exponents[k]);
    }
    if (mono.empty())
      out += c.str();
    else if (c.is_one())
      out += mono;
    else
      out += c.str() + "*" + mono;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  Parser(std::string_view src, const RingPtr& ring, MonomialOrder order) : src_(src), ring_(ring), order_(order) {}

  Polynomial parse() {
    skip_space();
    if (pos_ == src_.size()) fail("empty polynomial");
    Polynomial p = expr();
    skip_space();
    if (pos_ != src_.size()) fail(std::string("unexpected '") + src_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }

  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  bool starts_operand() {
    skip_space();
    if (pos_ >= src_.size()) return false;
    char c = src_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc = acc + term();
      } else if (peek('-')) {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = acc * unary();
      } else if (peek('/')) {
        ++pos_;
        std::size_t at = pos_;
        Polynomial d = unary();
        if (!d.is_constant()) fail_at("division by a non-constant", at);
        if (d.is_zero()) {
          std::string what = ring_->field.is_rational() ? "division by zero"
                                                         : "denominator not invertible in " + ring_->field.name();
          fail_at(what, at);
        }
        acc = acc.scaled(d.leading().coeff.inverse());
      } else if (starts_operand()) {
        fail("implicit multiplication is not allowed; use '*'");
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (peek('^')) {
      ++pos_;
      skip_space();
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a non-negative integer literal");
      std::string digits(src_.substr(start, pos_ - start));
      if (digits.size() > 4 || std::stoul(digits) > 1000) fail_at("exponent too large", start);
      base = base.pow(static_cast<std::uint32_t>(std::stoul(digits)));
      if (peek('^')) fail("chained exponents are ambiguous; use parentheses");
    }
    return base;
  }

  Polynomial primary() {
    skip_space();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      mpz_class value(std::string(src_.substr(start, pos_ - start)));
      return Polynomial::constant(ring_, FieldElem(ring_->field, value), order_);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
      std::string name(src_.substr(start, pos_ - start));
      long idx = ring_->index_of(name);
      if (idx < 0) fail_at("unknown variable '" + name + "'", start);
      return Polynomial::variable(ring_, static_cast<std::size_t>(idx), order_);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view src_;
  const RingPtr& ring_;
  MonomialOrder order_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view src, const RingPtr& ring, MonomialOrder order) {
  return Parser(src, ring, order).parse();
}

}  // namespace sympow::poly
