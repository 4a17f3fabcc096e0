#include "thompson/structure.hpp"

#include <algorithm>
#include <set>

#include "thompson/grouprep.hpp"

namespace thompson {

namespace {

bool on_diagonal(const Breakpoint& a, const Breakpoint& b) { return a.x == a.y && b.x == b.y; }

void require_distinct(const std::vector<PLElement>& xs) {
  std::set<PLElement> seen;
  for (const auto& x : xs) {
    if (!seen.insert(x).second) throw std::logic_error("conjugate family contains a repeated element");
  }
}

}  // namespace

bool identity_near_zero(const PLElement& f) {
  const auto b = f.breaks();
  return on_diagonal(b[0], b[1]);
}

bool identity_near_one(const PLElement& f) {
  const auto b = f.breaks();
  return on_diagonal(b[b.size() - 2], b[b.size() - 1]);
}

bool member_D(const PLElement& f) { return identity_near_one(f); }

bool member_Fprime(const PLElement& f) { return identity_near_zero(f) && identity_near_one(f); }

Rational epsilon_lower(const PLElement& g) {
  if (g.is_identity()) throw UndefinedInvariant("epsilon_lower is undefined for the identity");
  if (!identity_near_zero(g)) throw UndefinedInvariant("epsilon_lower needs an element that is the identity near 0");
  return g.breaks()[1].x;
}

Rational epsilon_upper(const PLElement& f) {
  if (f.is_identity()) throw UndefinedInvariant("epsilon_upper is undefined for the identity");
  if (!identity_near_one(f)) throw UndefinedInvariant("epsilon_upper needs an element that is the identity near 1");
  const auto b = f.breaks();
  return b[b.size() - 2].x;
}

bool check_conjugation_identity(const PLElement& g, const PLElement& h) {
  return epsilon_lower(conjugate(h, g)) == evaluate(h, epsilon_lower(g));
}

bool check_conjugation_identity_upper(const PLElement& g, const PLElement& h) {
  return epsilon_upper(conjugate(h, g)) == evaluate(h, epsilon_upper(g));
}

Rational WitnessPlan::margin_radius(int base) const { return d1 - power_of(base, -(alpha + p)); }

Rational WitnessPlan::margin_interior(int base) const {
  return (Rational(1) - power_of(base, -alpha)) - power_of(base, n - (alpha + p));
}

const char* to_string(WitnessCase c) {
  switch (c) {
    case WitnessCase::kIdentityNearZero:
      return "identity-near-0";
    case WitnessCase::kNegativeSlope:
      return "negative-slope";
    case WitnessCase::kPositiveSlope:
      return "positive-slope";
  }
  return "unknown";
}

WitnessPlan make_witness_plan(const PLElement& f, int count, long p) {
  if (p == 0) throw std::invalid_argument("witness plan needs p != 0");
  if (count < 1) throw std::invalid_argument("witness count must be positive");
  WitnessPlan plan;
  plan.n = f.slope_exponent(0);
  if (plan.n <= 0) throw std::invalid_argument("witness plan needs a positive slope exponent near 0");
  plan.d1 = f.breaks()[1].x;
  plan.p = p;
  const int base = f.base();
  // alpha + p must be positive before the radius margin can hold
  plan.alpha = std::max(1L, 1 - p);
  while (plan.margin_radius(base).sign() <= 0 || plan.margin_interior(base).sign() <= 0) ++plan.alpha;
  for (int i = 1; i <= count; ++i) plan.ks.push_back(plan.alpha + i);
  return plan;
}

IccWitness icc_witness_detail(const PLElement& f, int count, long p) {
  if (f.is_identity()) throw std::invalid_argument("icc_witness is undefined for the identity");
  if (count < 1) throw std::invalid_argument("witness count must be positive");
  const int base = f.base();
  IccWitness out;

  if (identity_near_zero(f)) {
    // ε of c f c^-1 is c(ε_f) = ε_f / N^q for c = A_{ε_f, q}.
    out.branch = WitnessCase::kIdentityNearZero;
    const Rational eps = epsilon_lower(f);
    long q = 1;
    while (!ADParams{eps, q, base}.valid()) ++q;
    for (int i = 0; i < count; ++i, ++q) {
      PLElement c = make_A({eps, q, base});
      out.conjugates.push_back(conjugate(c, f));
      out.conjugators.push_back(std::move(c));
    }
  } else if (f.slope_exponent(0) < 0) {
    IccWitness mirrored = icc_witness_detail(inverse(f), count, p);
    out.branch = WitnessCase::kNegativeSlope;
    out.plan = std::move(mirrored.plan);
    out.conjugators = std::move(mirrored.conjugators);
    for (const auto& x : mirrored.conjugates) out.conjugates.push_back(inverse(x));
  } else {
    out.branch = WitnessCase::kPositiveSlope;
    WitnessPlan plan = make_witness_plan(f, count, p);
    for (long k : plan.ks) {
      PLElement c = make_A_inverse({power_of(base, -k), plan.p, base});
      out.conjugates.push_back(conjugate(c, f));
      out.conjugators.push_back(std::move(c));
    }
    out.plan = std::move(plan);
  }
  require_distinct(out.conjugates);
  return out;
}

std::vector<PLElement> icc_witness(const PLElement& f, int count, long p) {
  return icc_witness_detail(f, count, p).conjugates;
}

CommutingPair commuting_pair(std::span<const PLElement> e, int base) {
  require_base(base);
  std::optional<Rational> delta;
  for (const auto& g : e) {
    if (g.base() != base) throw BaseMismatch(g.base(), base);
    if (!member_D(g)) throw std::invalid_argument("commuting_pair: element is not in D");
    if (g.is_identity()) continue;
    Rational bound = epsilon_upper(g);
    if (!delta || *delta < bound) delta = std::move(bound);
  }
  if (!delta) delta = Rational(1) - power_of(base, -1);

  long k = 1;
  while (!(*delta + power_of(base, 1 - k) < 1)) ++k;
  CommutingPair out{PLElement(base), PLElement(base), *delta, *delta + power_of(base, -k),
                    *delta + power_of(base, 1 - k)};
  out.g = scaling_lemma(out.delta, out.eps1, base);
  out.h = scaling_lemma(out.delta, out.eps2, base);
  if (compose(out.g, out.h) == compose(out.h, out.g)) throw std::logic_error("commuting_pair: g and h commute");
  return out;
}

AbelianImage abelianization(const PLElement& f) {
  const auto [a, b] = boundary_slopes(f);
  return {a, b};
}

bool kernel_is_Fprime_check(const PLElement& f) {
  return (abelianization(f) == AbelianImage{}) == member_Fprime(f);
}

SemidirectParts semidirect_decompose(const PLElement& f) {
  const long n = -boundary_slopes(f).second;
  SemidirectParts parts{compose(f, power(shift_element(f.base()), n)), n};
  if (!member_D(parts.d)) throw std::logic_error("semidirect_decompose: D-part is not the identity near 1");
  if (semidirect_compose(parts) != f) throw std::logic_error("semidirect_decompose: recomposition mismatch");
  return parts;
}

PLElement semidirect_compose(const SemidirectParts& parts) {
  return compose(parts.d, power(shift_element(parts.d.base()), -parts.n));
}

PLElement alpha_action(long n, const PLElement& f) {
  if (!member_D(f)) throw std::invalid_argument("alpha_action is defined on D only");
  PLElement out = conjugate(power(shift_element(f.base()), n), f);
  if (!member_D(out)) throw std::logic_error("alpha_action left D");
  return out;
}

CentralSequenceSpec central_sequence(int base, long index) {
  require_base(base);
  if (index < 1) throw std::invalid_argument("central sequence index must be >= 1");
  const Rational gap = power_of(base, -(index + 1));
  Rational upper = Rational(1) - gap;
  Rational lower = upper - gap;
  PLElement a = scaling_lemma(lower, upper, base);
  return {index, std::move(lower), std::move(upper), std::move(a)};
}

long central_sequence_start(std::span<const PLElement> e, int base) {
  Rational bound;
  for (const auto& g : e) {
    if (!member_D(g)) throw std::invalid_argument("central_sequence_start: element is not in D");
    if (!g.is_identity()) bound = std::max(bound, epsilon_upper(g));
  }
  long index = 1;
  while (Rational(1) - Rational(2) * power_of(base, -(index + 1)) < bound) ++index;
  return index;
}

bool centrally_free_check(int base, long m, long index) {
  if (m == 0) throw std::invalid_argument("centrally_free_check needs m != 0");
  const PLElement a = central_sequence(base, index).element;
  const PLElement moved = alpha_action(m, a);
  const Rational dist = two_norm_sq(AlgebraElement::basis(moved) - AlgebraElement::basis(a));
  return !equals(moved, a) && dist == 2;
}

}  // namespace thompson
