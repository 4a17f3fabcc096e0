#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "thompson/element.hpp"

namespace thompson {

/// Parameters of the three-branch map A_{d,p}: slope N^-p on [0,d], slope 1
/// in the middle, slope N^p on [1 - d/N^p, 1].
///
/// Valid when d is N-adic, 0 < d < 1, d/N^p < 1 and d + d/N^p <= 1 (the last
/// condition keeps the middle branch from running backwards).
struct ADParams {
  Rational d;
  long p = 1;
  int base = 2;

  /// Throws std::invalid_argument naming the violated condition.
  void check() const;
  bool valid() const;
};

/// r(x) = (x - lo) / (hi - lo), mapping [lo, hi] onto [0, 1]. The width
/// hi - lo must be an exact power of N so that r and its inverse carry
/// N-adic points to N-adic points.
class AffineChart {
 public:
  AffineChart(Rational lo, Rational hi, int base);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  long width_exponent() const { return width_exponent_; }

  Rational to_unit(const Rational& x) const { return (x - lo_) / width_; }
  Rational from_unit(const Rational& u) const { return lo_ + u * width_; }

  /// The map equal to r^-1 ∘ f ∘ r on [lo, hi] and the identity elsewhere.
  PLElement transplant(const PLElement& f) const;

 private:
  Rational lo_;
  Rational hi_;
  Rational width_;
  long width_exponent_;
  int base_;
};

PLElement make_A(const ADParams& params);

/// Built from the closed-form inverse branches rather than by inverting
/// make_A, so it can serve as an independent check on `inverse`.
PLElement make_A_inverse(const ADParams& params);

/// The default fixed-point-free model map used inside the scaling lemma.
ADParams default_inner_params(int base);

/// An element that is the identity on [0, lo] and [hi, 1] and has no fixed
/// point in (lo, hi). Requires 0 < lo < hi < 1 N-adic, hi - lo in N^Z and
/// inner.p != 0.
PLElement scaling_lemma(const Rational& lo, const Rational& hi, const ADParams& inner);
PLElement scaling_lemma(const Rational& lo, const Rational& hi, int base);

/// Slope N on [0,d], slope 1/N on [d, d(N+1)], identity afterwards. d must be
/// 1/N^p for some p > 0 with d(N+1) < 1.
PLElement make_f1(const Rational& d, int base);

/// x -> 1 - f1(1 - x).
PLElement make_f2(const Rational& d, int base);

/// Shift element: identity on its first piece, slope N on its last.
/// Chosen as make_f2(1/N^2).
PLElement shift_element(int base);

/// Generator x_i of the infinite presentation x_j x_i = x_i x_{j+N-1} (i < j),
/// where the product g h means x -> g(h(x)).
///
/// Construction: on [0, inf) let X_n be the identity on [0, n], t -> N(t - n) + n
/// on [n, n + 1] and t -> t + N - 1 beyond. Transport to [0, 1) through the
/// map sending block [k(N-1), (k+1)(N-1)] affinely onto [1 - N^-k, 1 - N^-(k+1)],
/// and set x_n to the inverse of the transported X_n. Then x_n is the
/// identity on [0, 1 - N^-k] for n >= k(N-1), and x_0 = A_{(N-1)/N, 1}.
PLElement standard_generator(int base, int index);

/// One letter of a group word, raised to `exponent`.
struct Letter {
  struct Generator {
    int index;
  };
  struct AFamily {
    Rational d;
    long p;
  };
  struct F1 {
    Rational d;
  };
  struct F2 {
    Rational d;
  };
  struct Shift {};

  std::variant<Generator, AFamily, F1, F2, Shift> symbol;
  long exponent = 1;
};

struct GroupWord {
  int base = 2;
  std::vector<Letter> letters;

  /// Shorthand for a word over standard generators only.
  static GroupWord generators(int base, std::initializer_list<std::pair<int, long>> letters);
};

PLElement letter_element(const Letter& letter, int base);

/// Left-to-right product; the empty word is the identity.
PLElement evaluate_word(const GroupWord& w);

/// Deterministic random word of the given length over x_0..x_{N+1} and
/// A-family letters.
GroupWord random_word(int base, int length, std::uint64_t seed);

PLElement random_element(int base, int length, std::uint64_t seed);

}  // namespace thompson
