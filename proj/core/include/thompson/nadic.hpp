#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace thompson {

using Integer = mpz_class;

/// Raised when rational text does not match `m`, `-m` or `m/n` in lowest terms.
class RationalParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value)  // NOLINT(google-explicit-constructor)
      : value_(static_cast<long>(value)) {}

  explicit Rational(Integer value) : value_(std::move(value)) {}

  /// Throws std::domain_error on a zero denominator.
  Rational(Integer numerator, Integer denominator);

  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  /// Canonical text: "m/n" or "m" when the denominator is 1.
  std::string str() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& x);

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

Rational add(const Rational& a, const Rational& b);

/// True iff `a` = m/N^k for integers m and k >= 0, i.e. every prime factor of
/// the reduced denominator divides N.
bool is_nadic(const Rational& a, int base);

/// Returns p with a == N^p exactly. Throws std::domain_error for a <= 0.
std::optional<long> is_power_of_n(const Rational& a, int base);

/// N^exponent as an exact rational.
Rational power_of(int base, long exponent);

void require_base(int base);

/// A value known to be N-adic for a fixed base. Arithmetic between two NAdic
/// values requires equal bases and stays N-adic (division is not offered).
class NAdic {
 public:
  /// Throws std::invalid_argument if `value` is not N-adic for `base`.
  NAdic(Rational value, int base);

  static NAdic parse(std::string_view text, int base) { return {Rational::parse(text), base}; }

  const Rational& value() const { return value_; }
  int base() const { return base_; }
  std::string str() const { return value_.str(); }

  friend NAdic operator+(const NAdic& a, const NAdic& b);
  friend NAdic operator-(const NAdic& a, const NAdic& b);
  friend NAdic operator*(const NAdic& a, const NAdic& b);

  friend bool operator==(const NAdic& a, const NAdic& b) = default;
  friend std::strong_ordering operator<=>(const NAdic& a, const NAdic& b) {
    if (auto c = a.base_ <=> b.base_; c != 0) return c;
    return a.value_ <=> b.value_;
  }

 private:
  Rational value_;
  int base_;
};

/// Exactly N^exponent. Multiplication adds exponents.
struct PowerOfN {
  int base = 2;
  long exponent = 0;

  Rational value() const { return power_of(base, exponent); }
  PowerOfN inverse() const { return {base, -exponent}; }

  friend PowerOfN operator*(const PowerOfN& a, const PowerOfN& b);
  friend bool operator==(const PowerOfN&, const PowerOfN&) = default;
};

}  // namespace thompson
