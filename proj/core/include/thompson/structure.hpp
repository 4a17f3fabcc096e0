#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "thompson/construct.hpp"
#include "thompson/element.hpp"

namespace thompson {

/// Raised when an invariant is requested for an element outside its domain
/// (e.g. the identity-region bound of the identity).
class UndefinedInvariant : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// D: elements equal to the identity on some [δ, 1].
bool member_D(const PLElement& f);

/// F': elements equal to the identity near both 0 and 1.
bool member_Fprime(const PLElement& f);

/// True when the first segment of f lies on the diagonal.
bool identity_near_zero(const PLElement& f);
bool identity_near_one(const PLElement& f);

/// Largest ε with g = id on [0, ε]. g must be nontrivial and the identity near 0.
Rational epsilon_lower(const PLElement& g);

/// Smallest ε with f = id on [ε, 1]. f must be nontrivial and the identity near 1.
Rational epsilon_upper(const PLElement& f);

/// Compares ε of h g h^-1 with h(ε_g), both computed exactly.
bool check_conjugation_identity(const PLElement& g, const PLElement& h);
/// Same identity for the upper bound ε̄.
bool check_conjugation_identity_upper(const PLElement& g, const PLElement& h);

/// Parameters that separate conjugates of an element with slope N^n (n > 0)
/// near the origin.
struct WitnessPlan {
  long n = 0;            // slope exponent of f near 0
  Rational d1;           // f(x) = N^n x on [0, d1]
  long p = 1;
  long alpha = 0;        // smallest alpha >= 1 with both margins positive
  std::vector<long> ks;  // conjugators are A_{1/N^k, p} for these k

  /// d1 - 1/N^(alpha+p)
  Rational margin_radius(int base) const;
  /// (1 - 1/N^alpha) - N^n / N^(alpha+p)
  Rational margin_interior(int base) const;
};

/// Which branch of the conjugate construction applied.
enum class WitnessCase {
  kIdentityNearZero,
  kNegativeSlope,
  kPositiveSlope,
};

const char* to_string(WitnessCase c);

struct IccWitness {
  WitnessCase branch;
  std::vector<PLElement> conjugators;
  std::vector<PLElement> conjugates;  // conjugates[i] = c f c^-1 for c = conjugators[i]
  std::optional<WitnessPlan> plan;    // set for the slope branches
};

/// Builds the plan for an f with positive slope exponent near 0.
WitnessPlan make_witness_plan(const PLElement& f, int count, long p = 1);

/// `count` pairwise-distinct conjugates of a nontrivial f. Distinctness is
/// verified by exact comparison; a failure throws std::logic_error.
IccWitness icc_witness_detail(const PLElement& f, int count, long p = 1);
std::vector<PLElement> icc_witness(const PLElement& f, int count, long p = 1);

struct CommutingPair {
  PLElement g;
  PLElement h;
  Rational delta;
  Rational eps1;
  Rational eps2;
};

/// Nontrivial distinct g, h in F' commuting with every member of `e`
/// (all in D) while gh != hg.
CommutingPair commuting_pair(std::span<const PLElement> e, int base);

/// The image (a, b) in Z^2 under the abelianization.
struct AbelianImage {
  long a = 0;
  long b = 0;

  friend AbelianImage operator+(const AbelianImage& x, const AbelianImage& y) { return {x.a + y.a, x.b + y.b}; }
  friend bool operator==(const AbelianImage&, const AbelianImage&) = default;
};

AbelianImage abelianization(const PLElement& f);

/// True iff member_Fprime(f) agrees with abelianization(f) == (0,0).
bool kernel_is_Fprime_check(const PLElement& f);

/// f = d s^-n with d in D, s the shift element.
struct SemidirectParts {
  PLElement d;
  long n;
};

SemidirectParts semidirect_decompose(const PLElement& f);
PLElement semidirect_compose(const SemidirectParts& parts);

/// s^n f s^-n for f in D.
PLElement alpha_action(long n, const PLElement& f);

struct CentralSequenceSpec {
  long index;
  Rational lower;  // d_n
  Rational upper;  // d̄_n
  PLElement element;
};

/// d̄_n = 1 - N^-(n+1), d_n = 1 - 2 N^-(n+1), a_n = scaling_lemma(d_n, d̄_n).
CentralSequenceSpec central_sequence(int base, long index);

/// First index whose a_n commutes with every element of `e` (all in D) by
/// support disjointness.
long central_sequence_start(std::span<const PLElement> e, int base);

/// True when s^m a_n s^-m differs from a_n and the group-algebra distance
/// squared between them is exactly 2.
bool centrally_free_check(int base, long m, long index);

}  // namespace thompson
