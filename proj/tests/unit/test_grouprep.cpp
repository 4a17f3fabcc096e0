#include "doctest.h"
#include "thompson/cli/sampling.hpp"
#include "thompson/grouprep.hpp"
#include "thompson/structure.hpp"

using namespace thompson;

namespace {
Rational q(const char* s) { return Rational::parse(s); }

AlgebraElement random_sum(cli::Sampler& s, int max_terms) {
  AlgebraElement x(s.base());
  const long terms = 1 + s.below(max_terms);
  for (long i = 0; i < terms; ++i) {
    const Rational c(Integer(s.below(9) - 4), Integer(1 + s.below(3)));
    x += AlgebraElement::basis(s.element(4), c);
  }
  return x;
}
}  // namespace

TEST_CASE("AlgebraElement basics") {
  const PLElement g = make_f1(q("1/4"), 2);
  AlgebraElement x = AlgebraElement::basis(g, 3);
  CHECK(x.coefficient(g) == 3);
  CHECK(x.coefficient(PLElement(2)) == 0);
  x -= AlgebraElement::basis(g, 3);
  CHECK(x.is_zero());
  CHECK((AlgebraElement::basis(g) * Rational(0)).is_zero());
  CHECK(AlgebraElement::basis(g, q("1/2")) + AlgebraElement::basis(g, q("1/2")) == AlgebraElement::basis(g));
  CHECK_THROWS_AS(AlgebraElement::basis(g) + AlgebraElement::unit(3), BaseMismatch);
}

TEST_CASE("algebra_mul") {
  const PLElement g = make_f1(q("1/4"), 2);
  const PLElement h = make_A({q("1/2"), 1, 2});
  CHECK(algebra_mul(AlgebraElement::basis(g), AlgebraElement::basis(inverse(g))) == AlgebraElement::unit(2));
  const AlgebraElement sum = AlgebraElement::basis(g) + AlgebraElement::basis(h);
  CHECK(algebra_mul(sum, AlgebraElement::unit(2)) == sum);

  const CommutingPair cp = commuting_pair({}, 2);
  const AlgebraElement c = commutator(AlgebraElement::basis(cp.g), AlgebraElement::basis(cp.h));
  CHECK(c.terms().size() == 2);
  CHECK(c.coefficient(compose(cp.g, cp.h)) == 1);
  CHECK(c.coefficient(compose(cp.h, cp.g)) == -1);
  CHECK_THROWS_AS(algebra_mul(AlgebraElement::unit(2), AlgebraElement::unit(3)), BaseMismatch);
}

TEST_CASE("trace") {
  CHECK(trace(AlgebraElement::unit(2)) == 1);
  CHECK(trace(AlgebraElement::basis(make_f1(q("1/4"), 2))) == 0);
  const AlgebraElement x =
      AlgebraElement::unit(2) * Rational(3) - AlgebraElement::basis(make_f1(q("1/4"), 2), Rational(2));
  CHECK(trace(x) == 3);
}

TEST_CASE("two_norm_sq") {
  const PLElement g = make_f1(q("1/4"), 2);
  const PLElement h = make_f2(q("1/4"), 2);
  CHECK(two_norm_sq(AlgebraElement::basis(g) - AlgebraElement::basis(h)) == 2);
  CHECK(two_norm_sq(AlgebraElement::unit(2)) == 1);
  CHECK(two_norm_sq(AlgebraElement(2)) == 0);
  CHECK(two_norm_sq(AlgebraElement::basis(g, q("1/2")) + AlgebraElement::basis(h, q("-3"))) == q("37/4"));
}

TEST_CASE("adjoint") {
  const PLElement g = make_A({q("1/2"), 1, 2});
  CHECK(adjoint(AlgebraElement::basis(g)) == AlgebraElement::basis(inverse(g)));
  cli::Sampler s(3, 9);
  for (int i = 0; i < 30; ++i) {
    const AlgebraElement x = random_sum(s, 5);
    CHECK(adjoint(adjoint(x)) == x);
    CHECK(two_norm_sq(x) == trace(algebra_mul(adjoint(x), x)));
  }
}

TEST_CASE("commutator_norm_sq") {
  const PLElement a = scaling_lemma(q("1/8"), q("1/4"), 2);
  const PLElement b = scaling_lemma(q("1/2"), q("3/4"), 2);
  CHECK(commutator_norm_sq(AlgebraElement::basis(a), AlgebraElement::basis(b)) == 0);
  const CommutingPair cp = commuting_pair({}, 3);
  CHECK(commutator_norm_sq(AlgebraElement::basis(cp.g), AlgebraElement::basis(cp.h)) == 2);
  const AlgebraElement x = AlgebraElement::basis(cp.g, 2) + AlgebraElement::basis(cp.h);
  CHECK(commutator_norm_sq(x, x) == 0);
}

TEST_CASE("ring axioms and traciality") {
  cli::Sampler s(2, 31);
  for (int i = 0; i < 20; ++i) {
    const AlgebraElement x = random_sum(s, 4);
    const AlgebraElement y = random_sum(s, 4);
    const AlgebraElement z = random_sum(s, 4);
    CHECK(algebra_mul(algebra_mul(x, y), z) == algebra_mul(x, algebra_mul(y, z)));
    CHECK(algebra_mul(x, y + z) == algebra_mul(x, y) + algebra_mul(x, z));
    CHECK(algebra_mul(x + y, z) == algebra_mul(x, z) + algebra_mul(y, z));
    CHECK(x + y == y + x);
    CHECK(trace(algebra_mul(x, y)) == trace(algebra_mul(y, x)));
    CHECK(trace(x + y) == trace(x) + trace(y));
    CHECK(adjoint(algebra_mul(x, y)) == algebra_mul(adjoint(y), adjoint(x)));
  }
}
