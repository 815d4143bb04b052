#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace etaq {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t n); // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n); // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  Rational(const BigInt& num, const BigInt& den);

  /// Parses "a/b" or "a".
  static Rational parse(const std::string& text);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }

  bool is_integer() const { return value_.get_den() == 1; }
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  BigInt floor() const;
  std::string str() const; // "num/den"
  double to_double() const { return value_.get_d(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x);

private:
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }
  mpq_class value_{0};
};

bool rational_is_integer(const Rational& x);

/// x - floor(x), in [0, 1).
Rational rational_mod1(const Rational& x);

/// Inverse of a modulo n in [1, n) (or 0 when n == 1). Throws
/// std::domain_error("no inverse") when gcd(a, n) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t n);

/// Jacobi symbol (a|n) for odd n >= 1.
int kronecker_symbol(std::int64_t a, std::int64_t n);

/// Nonnegative residue of a mod n, n > 0.
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b);

/// Deterministic trial-division primality test.
bool is_prime(std::int64_t n);

} // namespace etaq
