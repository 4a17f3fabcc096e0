#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "thompson/nadic.hpp"

namespace thompson {

/// A vertex (x, f(x)) of the graph of a piecewise-linear map.
struct Breakpoint {
  Rational x;
  Rational y;

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

enum class ValidationCode {
  kEmpty,
  kEndpointNotFixed,
  kNonMonotone,
  kNonNAdic,
  kNonPowerSlope,
};

const char* to_string(ValidationCode code);

class ValidationError : public std::invalid_argument {
 public:
  ValidationError(ValidationCode code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}

  ValidationCode code() const { return code_; }

 private:
  ValidationCode code_;
};

class BaseMismatch : public std::invalid_argument {
 public:
  BaseMismatch(int a, int b)
      : std::invalid_argument("base mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

/// A closed interval [lo, hi]; lo == hi for an isolated point.
struct FixedInterval {
  Rational lo;
  Rational hi;

  bool is_point() const { return lo == hi; }
  friend bool operator==(const FixedInterval&, const FixedInterval&) = default;
};

/// Maximal fixed intervals of an element, sorted and pairwise disjoint.
using FixedSet = std::vector<FixedInterval>;

/// An element of F(N): an orientation-preserving PL homeomorphism of [0,1]
/// with N-adic breakpoints and slopes in N^Z, held in canonical form
/// (no interior breakpoint joins two segments of equal slope).
///
/// Canonical form is unique, so equality of the breakpoint lists decides
/// equality of the maps.
class PLElement {
 public:
  /// The identity of F(N).
  explicit PLElement(int base = 2);

  /// Checks every invariant and drops redundant breakpoints.
  static PLElement validate(std::vector<Breakpoint> breaks, int base);

  int base() const { return base_; }
  std::span<const Breakpoint> breaks() const { return breaks_; }
  std::size_t segment_count() const { return breaks_.size() - 1; }
  bool is_identity() const { return breaks_.size() == 2; }

  /// Exponent p with slope N^p on segment `i`.
  long slope_exponent(std::size_t i) const;

  friend bool operator==(const PLElement& a, const PLElement& b) {
    return a.base_ == b.base_ && a.breaks_ == b.breaks_;
  }
  /// Arbitrary total order; used for ordered containers.
  friend bool operator<(const PLElement& a, const PLElement& b);

 private:
  struct Trusted {};
  PLElement(Trusted, std::vector<Breakpoint> breaks, int base);

  friend PLElement compose(const PLElement& f, const PLElement& g);
  friend PLElement inverse(const PLElement& f);

  int base_;
  std::vector<Breakpoint> breaks_;
};

/// f(x). Throws std::domain_error when x is outside [0,1].
Rational evaluate(const PLElement& f, const Rational& x);

/// x -> f(g(x)).
PLElement compose(const PLElement& f, const PLElement& g);

PLElement inverse(const PLElement& f);

/// Throws BaseMismatch when the bases differ.
bool equals(const PLElement& f, const PLElement& g);

/// f^n under composition; negative n uses the inverse.
PLElement power(const PLElement& f, long n);

/// h f h^-1.
PLElement conjugate(const PLElement& h, const PLElement& f);

FixedSet fixed_set(const PLElement& f);

/// Exponents (a, b) with slope N^a near 0 and N^b near 1.
std::pair<long, long> boundary_slopes(const PLElement& f);

std::ostream& operator<<(std::ostream& os, const PLElement& f);

}  // namespace thompson
