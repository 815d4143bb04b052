#include "etaq/exact.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace etaq {

Rational::Rational(std::int64_t n) : value_(static_cast<long>(n)) {}

Rational::Rational(const BigInt& n) : value_(n) {}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0)
    throw std::domain_error("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos)
      return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero())
    throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

bool rational_is_integer(const Rational& x) { return x.is_integer(); }

Rational rational_mod1(const Rational& x) { return x - Rational(x.floor()); }

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t mod_inverse(std::int64_t a, std::int64_t n) {
  if (n <= 0)
    throw std::invalid_argument("modulus must be positive");
  // extended Euclid on (a mod n, n)
  std::int64_t old_r = mod_floor(a, n), r = n;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1 && n != 1)
    throw std::domain_error("no inverse");
  return mod_floor(old_s, n);
}

int kronecker_symbol(std::int64_t a, std::int64_t n) {
  if (n <= 0 || n % 2 == 0)
    throw std::invalid_argument("kronecker_symbol: modulus must be odd and positive");
  a = mod_floor(a, n);
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      std::int64_t r = n % 8;
      if (r == 3 || r == 5)
        result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3)
      result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

bool is_prime(std::int64_t n) {
  if (n < 2)
    return false;
  if (n < 4)
    return true;
  if (n % 2 == 0 || n % 3 == 0)
    return false;
  for (std::int64_t f = 5; f * f <= n; f += 6)
    if (n % f == 0 || n % (f + 2) == 0)
      return false;
  return true;
}

} // namespace etaq
