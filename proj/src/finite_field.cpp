#include "sympow/finite_field.hpp"

#include <algorithm>
#include <string>

#include "sympow/errors.hpp"
#include "sympow/field.hpp"

namespace sympow {

namespace prime_poly {

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

PrimePoly sub(PrimePoly a, const PrimePoly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  return trim(std::move(a));
}

PrimePoly pow_mod(PrimePoly base, std::uint64_t e, const PrimePoly& modulus, std::uint32_t p) {
  PrimePoly result{1};
  base = rem(std::move(base), modulus, p);
  for (; e > 0; e >>= 1) {
    if (e & 1) result = mul_mod(result, base, modulus, p);
    base = mul_mod(base, base, modulus, p);
  }
  return result;
}

}  // namespace

PrimePoly trim(PrimePoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

PrimePoly rem(PrimePoly a, const PrimePoly& b, std::uint32_t p) {
  a = trim(std::move(a));
  if (b.empty()) throw InvalidInput("polynomial division by zero");
  const std::uint64_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - factor) * b[i]) % p);
    }
    a = trim(std::move(a));
  }
  return a;
}

PrimePoly mul_mod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& modulus, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PrimePoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return rem(std::move(prod), modulus, p);
}

PrimePoly gcd(PrimePoly a, PrimePoly b, std::uint32_t p) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    PrimePoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool is_irreducible(const PrimePoly& f, std::uint32_t p) {
  const PrimePoly g = trim(f);
  if (g.size() < 2) return false;
  const std::size_t deg = g.size() - 1;
  const PrimePoly x{0, 1};
  PrimePoly h = rem(x, g, p);
  for (std::size_t i = 1; i <= deg / 2; ++i) {
    h = pow_mod(h, p, g, p);
    if (gcd(g, sub(h, x, p), p).size() != 1) return false;
  }
  return true;
}

PrimePoly smallest_irreducible(std::uint32_t p, std::uint32_t k) {
  if (k == 0) throw InvalidInput("extension degree must be positive");
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    count *= p;
    if (count > FiniteField::kMaxOrder) throw CapExceeded("modulus search space exceeds the field-order cap");
  }
  for (std::uint64_t code = 0; code < count; ++code) {
    PrimePoly f(k + 1, 0);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < k; ++i, c /= p) f[i] = static_cast<std::uint32_t>(c % p);
    f[k] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw InvalidInput("no irreducible polynomial found");  // unreachable for prime p
}

}  // namespace prime_poly

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  std::uint32_t e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1 || p >= (std::uint64_t{1} << 31)) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), e);
}

FiniteField::FiniteField(std::uint32_t p, std::uint32_t k)
    : FiniteField(p, (is_prime(p) ? prime_poly::smallest_irreducible(p, k)
                                  : throw InvalidInput("characteristic " + std::to_string(p) + " is not prime"))) {}

FiniteField::FiniteField(std::uint32_t p, PrimePoly modulus) : p_(p), modulus_(prime_poly::trim(std::move(modulus))) {
  if (!is_prime(p)) throw InvalidInput("characteristic " + std::to_string(p) + " is not prime");
  for (auto c : modulus_) {
    if (c >= p) throw InvalidInput("modulus coefficient out of range");
  }
  if (modulus_.size() < 2 || modulus_.back() != 1) throw InvalidInput("modulus must be monic of positive degree");
  if (!prime_poly::is_irreducible(modulus_, p)) throw InvalidInput("modulus is reducible");
  k_ = static_cast<std::uint32_t>(modulus_.size() - 1);
  order_ = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    order_ *= p;
    if (order_ > kMaxOrder) throw CapExceeded("field order exceeds " + std::to_string(kMaxOrder));
  }
  build();
}

PrimePoly FiniteField::digits(value_type a) const {
  PrimePoly d(k_, 0);
  for (std::uint32_t i = 0; i < k_; ++i, a /= p_) d[i] = a % p_;
  return d;
}

FiniteField::value_type FiniteField::from_digits(const PrimePoly& d) const {
  std::uint64_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + d[i] % p_;
  return static_cast<value_type>(v);
}

void FiniteField::build() {
  const std::uint64_t n = order_ - 1;
  auto slow_mul = [&](value_type a, value_type b) {
    return from_digits(prime_poly::mul_mod(prime_poly::trim(digits(a)), prime_poly::trim(digits(b)), modulus_, p_));
  };
  auto slow_pow = [&](value_type a, std::uint64_t e) {
    value_type result = 1;
    for (; e > 0; e >>= 1) {
      if (e & 1) result = slow_mul(result, a);
      a = slow_mul(a, a);
    }
    return result;
  };

  std::vector<std::uint64_t> factors;
  std::uint64_t m = n;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);

  value_type g = 0;
  for (value_type cand = 1; cand < order_; ++cand) {
    bool primitive = true;
    for (auto f : factors) {
      if (slow_pow(cand, n / f) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = cand;
      break;
    }
  }

  auto tables = std::make_shared<Tables>();
  tables->exp.resize(2 * n);
  tables->log.assign(order_, 0);
  value_type x = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    tables->exp[i] = x;
    tables->exp[i + n] = x;
    tables->log[x] = static_cast<value_type>(i);
    x = slow_mul(x, g);
  }
  // Zech: 1 + g^i computed by adding 1 to the constant digit.
  tables->zech.assign(n, kNoZech);
  for (std::uint64_t i = 0; i < n; ++i) {
    const value_type e = tables->exp[i];
    const value_type low = e % p_;
    const value_type sum = e - low + (low + 1) % p_;
    if (sum != 0) tables->zech[i] = tables->log[sum];
  }
  tables_ = std::move(tables);
}

FiniteField::value_type FiniteField::add(value_type a, value_type b) const {
  if (a == 0) return b;
  if (b == 0) return a;
  const std::uint64_t n = order_ - 1;
  const std::uint64_t la = tables_->log[a], lb = tables_->log[b];
  const std::uint64_t d = (lb + n - la) % n;
  const value_type z = tables_->zech[d];
  if (z == kNoZech) return 0;
  return tables_->exp[la + z];
}

FiniteField::value_type FiniteField::neg(value_type a) const {
  if (a == 0 || p_ == 2) return a;
  const std::uint64_t n = order_ - 1;
  return tables_->exp[tables_->log[a] + n / 2];
}

FiniteField::value_type FiniteField::mul(value_type a, value_type b) const {
  if (a == 0 || b == 0) return 0;
  return tables_->exp[tables_->log[a] + tables_->log[b]];
}

FiniteField::value_type FiniteField::inv(value_type a) const {
  if (a == 0) throw InvalidInput("inverse of zero in F_" + std::to_string(order_));
  const std::uint64_t n = order_ - 1;
  return tables_->exp[(n - tables_->log[a]) % n];
}

FiniteField::value_type FiniteField::pow(value_type a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t n = order_ - 1;
  return tables_->exp[(tables_->log[a] * (e % n)) % n];
}

FiniteField::value_type FiniteField::from_integer(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<value_type>(r);
}

std::vector<FiniteField::value_type> embed(const FiniteField& small, const FiniteField& big) {
  if (small.characteristic() != big.characteristic()) throw InvalidInput("embedding between different characteristics");
  if (big.degree() % small.degree() != 0) throw InvalidInput("degree does not divide the target degree");
  const auto& mod = small.modulus();
  auto eval = [&](FiniteField::value_type x) {
    FiniteField::value_type acc = 0;
    for (std::size_t i = mod.size(); i-- > 0;) acc = big.add(big.mul(acc, x), big.from_integer(mod[i]));
    return acc;
  };
  FiniteField::value_type root = 0;
  bool found = false;
  for (std::uint64_t x = 0; x < big.order(); ++x) {
    if (eval(static_cast<FiniteField::value_type>(x)) == 0) {
      root = static_cast<FiniteField::value_type>(x);
      found = true;
      break;
    }
  }
  if (!found) throw InvalidInput("modulus has no root in the target field");
  std::vector<FiniteField::value_type> image(small.order());
  for (std::uint64_t a = 0; a < small.order(); ++a) {
    const PrimePoly d = small.digits(static_cast<FiniteField::value_type>(a));
    FiniteField::value_type acc = 0;
    for (std::size_t i = d.size(); i-- > 0;) acc = big.add(big.mul(acc, root), big.from_integer(d[i]));
    image[a] = acc;
  }
  return image;
}

}  // namespace sympow
