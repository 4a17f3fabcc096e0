#pragma once

#include <map>
#include <ostream>

#include "thompson/element.hpp"

namespace thompson {

/// A finitely supported element Σ c_g δ_g of the rational group algebra of
/// F(N). The basis {δ_g} is orthonormal for the trace inner product, so the
/// trace and 2-norm reduce to coefficient arithmetic.
class AlgebraElement {
 public:
  using Terms = std::map<PLElement, Rational>;

  /// The zero element.
  explicit AlgebraElement(int base = 2);

  /// c · δ_g.
  static AlgebraElement basis(const PLElement& g, Rational coefficient = Rational(1));
  /// δ_e.
  static AlgebraElement unit(int base);

  int base() const { return base_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of δ_g (zero if absent).
  Rational coefficient(const PLElement& g) const;

  AlgebraElement& operator+=(const AlgebraElement& rhs);
  AlgebraElement& operator-=(const AlgebraElement& rhs);
  AlgebraElement& operator*=(const Rational& scalar);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const Rational& s) { return a *= s; }
  friend AlgebraElement operator*(const Rational& s, AlgebraElement a) { return a *= s; }

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  void accumulate(const PLElement& g, const Rational& c);

  int base_;
  Terms terms_;
};

AlgebraElement algebra_mul(const AlgebraElement& x, const AlgebraElement& y);

/// Coefficient of the identity.
Rational trace(const AlgebraElement& x);

/// Sum of squared coefficients.
Rational two_norm_sq(const AlgebraElement& x);

/// δ_g -> δ_{g^-1}, coefficients unchanged.
AlgebraElement adjoint(const AlgebraElement& x);

/// xy - yx.
AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y);

Rational commutator_norm_sq(const AlgebraElement& x, const AlgebraElement& y);

std::ostream& operator<<(std::ostream& os, const AlgebraElement& x);

}  // namespace thompson
