#include "thompson/grouprep.hpp"

namespace thompson {

namespace {
void check_same_base(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.base() != y.base()) throw BaseMismatch(x.base(), y.base());
}
}  // namespace

AlgebraElement::AlgebraElement(int base) : base_(base) { require_base(base); }

AlgebraElement AlgebraElement::basis(const PLElement& g, Rational coefficient) {
  AlgebraElement x(g.base());
  x.accumulate(g, coefficient);
  return x;
}

AlgebraElement AlgebraElement::unit(int base) { return basis(PLElement(base)); }

Rational AlgebraElement::coefficient(const PLElement& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::accumulate(const PLElement& g, const Rational& c) {
  if (g.base() != base_) throw BaseMismatch(g.base(), base_);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  check_same_base(*this, rhs);
  for (const auto& [g, c] : rhs.terms_) accumulate(g, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
  check_same_base(*this, rhs);
  for (const auto& [g, c] : rhs.terms_) accumulate(g, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, c] : terms_) c *= scalar;
  return *this;
}

AlgebraElement algebra_mul(const AlgebraElement& x, const AlgebraElement& y) {
  check_same_base(x, y);
  AlgebraElement out(x.base());
  for (const auto& [g, a] : x.terms()) {
    for (const auto& [h, b] : y.terms()) out += AlgebraElement::basis(compose(g, h), a * b);
  }
  return out;
}

Rational trace(const AlgebraElement& x) { return x.coefficient(PLElement(x.base())); }

Rational two_norm_sq(const AlgebraElement& x) {
  Rational sum;
  for (const auto& [g, c] : x.terms()) sum += c * c;
  return sum;
}

AlgebraElement adjoint(const AlgebraElement& x) {
  AlgebraElement out(x.base());
  for (const auto& [g, c] : x.terms()) out += AlgebraElement::basis(inverse(g), c);
  return out;
}

AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y) {
  return algebra_mul(x, y) - algebra_mul(y, x);
}

Rational commutator_norm_sq(const AlgebraElement& x, const AlgebraElement& y) {
  return two_norm_sq(commutator(x, y));
}

std::ostream& operator<<(std::ostream& os, const AlgebraElement& x) {
  if (x.is_zero()) return os << '0';
  bool first = true;
  for (const auto& [g, c] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c << "*δ" << g;
  }
  return os;
}

}  // namespace thompson
