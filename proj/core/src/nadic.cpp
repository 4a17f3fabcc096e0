#include "thompson/nadic.hpp"

#include <cctype>

namespace thompson {

namespace {

bool is_digit_run(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  // canonical integers carry no leading zeros
  return s.size() == 1 || s.front() != '0';
}

Integer parse_digits(std::string_view s) { return Integer(std::string(s), 10); }

// Strips every factor of `base` shared with `n`; returns the cofactor.
Integer strip_base_factors(Integer n, const Integer& base) {
  Integer g;
  for (;;) {
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), base.get_mpz_t());
    if (g == 1) return n;
    while (mpz_divisible_p(n.get_mpz_t(), g.get_mpz_t())) {
      mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), g.get_mpz_t());
    }
  }
}

// k with n == base^k, if any. n must be positive.
std::optional<long> exact_log(Integer n, const Integer& base) {
  long k = 0;
  while (n != 1) {
    if (!mpz_divisible_p(n.get_mpz_t(), base.get_mpz_t())) return std::nullopt;
    mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), base.get_mpz_t());
    ++k;
  }
  return k;
}

}  // namespace

Rational::Rational(Integer numerator, Integer denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(std::move(numerator), std::move(denominator));
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto fail = [&] {
    return RationalParseError("malformed rational '" + std::string(text) + "'");
  };
  std::string_view body = text;
  const bool negative = !body.empty() && body.front() == '-';
  if (negative) body.remove_prefix(1);

  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  if (!is_digit_run(num_text)) throw fail();
  Integer num = parse_digits(num_text);
  if (negative) {
    if (num == 0) throw fail();
    num = -num;
  }
  if (slash == std::string_view::npos) return Rational(std::move(num));

  const std::string_view den_text = body.substr(slash + 1);
  if (!is_digit_run(den_text)) throw fail();
  Integer den = parse_digits(den_text);
  if (den == 0) throw fail();
  Integer g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1) throw fail();
  return Rational(std::move(num), std::move(den));
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

Rational add(const Rational& a, const Rational& b) { return a + b; }

void require_base(int base) {
  if (base < 2) throw std::invalid_argument("base N must be at least 2, got " + std::to_string(base));
}

bool is_nadic(const Rational& a, int base) {
  require_base(base);
  return strip_base_factors(a.denominator(), Integer(base)) == 1;
}

std::optional<long> is_power_of_n(const Rational& a, int base) {
  require_base(base);
  if (a.sign() <= 0) throw std::domain_error("is_power_of_n needs a positive argument");
  const Integer b(base);
  if (a.numerator() == 1) {
    auto k = exact_log(a.denominator(), b);
    if (k) return -*k;
    return std::nullopt;
  }
  if (a.denominator() == 1) return exact_log(a.numerator(), b);
  return std::nullopt;
}

Rational power_of(int base, long exponent) {
  require_base(base);
  Integer p;
  const unsigned long magnitude = exponent < 0 ? 0UL - static_cast<unsigned long>(exponent)
                                               : static_cast<unsigned long>(exponent);
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base), magnitude);
  if (exponent < 0) return Rational(Integer(1), std::move(p));
  return Rational(std::move(p));
}

NAdic::NAdic(Rational value, int base) : value_(std::move(value)), base_(base) {
  if (!is_nadic(value_, base_)) {
    throw std::invalid_argument(value_.str() + " is not " + std::to_string(base_) + "-adic");
  }
}

namespace {
int common_base(const NAdic& a, const NAdic& b) {
  if (a.base() != b.base()) throw std::invalid_argument("N-adic base mismatch");
  return a.base();
}
}  // namespace

NAdic operator+(const NAdic& a, const NAdic& b) { return {a.value() + b.value(), common_base(a, b)}; }
NAdic operator-(const NAdic& a, const NAdic& b) { return {a.value() - b.value(), common_base(a, b)}; }
NAdic operator*(const NAdic& a, const NAdic& b) { return {a.value() * b.value(), common_base(a, b)}; }

PowerOfN operator*(const PowerOfN& a, const PowerOfN& b) {
  if (a.base != b.base) throw std::invalid_argument("PowerOfN base mismatch");
  return {a.base, a.exponent + b.exponent};
}

}  // namespace thompson
