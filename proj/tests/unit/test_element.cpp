#include "doctest.h"
#include "oracles.hpp"
#include "thompson/cli/sampling.hpp"
#include "thompson/construct.hpp"
#include "thompson/element.hpp"

using namespace thompson;
using oracle::parse_breaks;

namespace {
Rational q(const char* s) { return Rational::parse(s); }

PLElement a_half() { return make_A({q("1/2"), 1, 2}); }

ValidationCode code_of(std::vector<Breakpoint> breaks, int base) {
  try {
    PLElement::validate(std::move(breaks), base);
  } catch (const ValidationError& e) {
    return e.code();
  }
  FAIL("expected a validation error");
  return ValidationCode::kEmpty;
}
}  // namespace

TEST_CASE("validate") {
  SUBCASE("identity") {
    const PLElement id = PLElement::validate(parse_breaks({{"0", "0"}, {"1", "1"}}), 2);
    CHECK(id.is_identity());
    CHECK(id == PLElement(2));
  }
  SUBCASE("three slopes") {
    const PLElement f = PLElement::validate(parse_breaks({{"0", "0"}, {"1/2", "1/4"}, {"3/4", "1/2"}, {"1", "1"}}), 2);
    CHECK(f.segment_count() == 3);
    CHECK(f.slope_exponent(0) == -1);
    CHECK(f.slope_exponent(1) == 0);
    CHECK(f.slope_exponent(2) == 1);
  }
  SUBCASE("redundant breakpoints are removed") {
    const PLElement f =
        PLElement::validate(parse_breaks({{"0", "0"}, {"1/4", "1/8"}, {"1/2", "1/4"}, {"3/4", "1/2"}, {"1", "1"}}), 2);
    CHECK(f == a_half());
    CHECK(PLElement::validate(parse_breaks({{"0", "0"}, {"1/2", "1/2"}, {"1", "1"}}), 2).is_identity());
  }
  SUBCASE("error codes") {
    CHECK(code_of({}, 2) == ValidationCode::kEmpty);
    CHECK(code_of(parse_breaks({{"0", "0"}}), 2) == ValidationCode::kEndpointNotFixed);
    CHECK(code_of(parse_breaks({{"0", "1/2"}, {"1", "1"}}), 2) == ValidationCode::kEndpointNotFixed);
    CHECK(code_of(parse_breaks({{"0", "0"}, {"1", "3/4"}}), 2) == ValidationCode::kEndpointNotFixed);
    CHECK(code_of(parse_breaks({{"0", "0"}, {"1/2", "1/2"}, {"1/4", "3/4"}, {"1", "1"}}), 2) ==
          ValidationCode::kNonMonotone);
    CHECK(code_of(parse_breaks({{"0", "0"}, {"1/2", "1/2"}, {"3/4", "1/2"}, {"1", "1"}}), 2) ==
          ValidationCode::kNonMonotone);
    CHECK(code_of(parse_breaks({{"0", "0"}, {"1/3", "1/2"}, {"1", "1"}}), 2) == ValidationCode::kNonNAdic);
    CHECK(code_of(parse_breaks({{"0", "0"}, {"1/2", "3/4"}, {"1", "1"}}), 2) == ValidationCode::kNonPowerSlope);
    CHECK(code_of(parse_breaks({{"0", "0"}, {"1/3", "2/9"}, {"1", "1"}}), 3) == ValidationCode::kNonPowerSlope);
  }
}

TEST_CASE("evaluate") {
  const PLElement a = a_half();
  CHECK(evaluate(a, q("1/2")) == q("1/4"));
  CHECK(evaluate(PLElement(2), q("2/3")) == q("2/3"));
  CHECK(evaluate(a, q("7/8")) == q("3/4"));
  CHECK(oracle::a_formula(q("1/2"), 1, 2, q("7/8")) == q("3/4"));
  CHECK(oracle::interpolate(a.breaks(), q("7/8")) == q("3/4"));
  CHECK(evaluate(a, Rational(0)) == Rational(0));
  CHECK(evaluate(a, Rational(1)) == Rational(1));
  CHECK_THROWS_AS(evaluate(a, q("3/2")), std::domain_error);
  CHECK_THROWS_AS(evaluate(a, q("-1/2")), std::domain_error);
}

TEST_CASE("compose") {
  const PLElement a = a_half();
  CHECK(compose(a, PLElement(2)) == a);
  CHECK(compose(PLElement(2), a) == a);
  CHECK(compose(a, inverse(a)).is_identity());

  const PLElement aa = compose(a, a);
  CHECK(aa.slope_exponent(0) == -2);
  CHECK(aa.breaks()[1].x == q("1/2"));
  CHECK(aa == PLElement::validate(parse_breaks({{"0", "0"}, {"1/2", "1/8"}, {"3/4", "1/4"}, {"7/8", "1/2"}, {"1", "1"}}), 2));
  for (const auto& x : oracle::grid(2, 6)) {
    CHECK(evaluate(aa, x) == oracle::a_formula(q("1/2"), 1, 2, oracle::a_formula(q("1/2"), 1, 2, x)));
  }

  CHECK_THROWS_AS(compose(a, PLElement(3)), BaseMismatch);
}

TEST_CASE("inverse") {
  CHECK(inverse(PLElement(2)).is_identity());
  CHECK(evaluate(inverse(a_half()), q("1/4")) == q("1/2"));
  const PLElement f1 = make_f1(q("1/4"), 2);
  const PLElement f1_inv = inverse(f1);
  CHECK(evaluate(f1_inv, q("1/2")) == q("1/4"));
  CHECK(compose(f1, f1_inv).is_identity());
}

TEST_CASE("equals") {
  CHECK(equals(PLElement(2), PLElement(2)));
  const PLElement a = a_half();
  const PLElement b = make_A({q("1/4"), 1, 2});
  CHECK_FALSE(equals(a, b));
  CHECK(evaluate(a, q("1/2")) != evaluate(b, q("1/2")));
  CHECK_THROWS_AS(equals(PLElement(2), PLElement(3)), BaseMismatch);
}

TEST_CASE("fixed_set") {
  const FixedSet id = fixed_set(PLElement(2));
  REQUIRE(id.size() == 1);
  CHECK(id[0] == FixedInterval{Rational(0), Rational(1)});

  const FixedSet a = fixed_set(a_half());
  REQUIRE(a.size() == 2);
  CHECK(a[0] == FixedInterval{Rational(0), Rational(0)});
  CHECK(a[1] == FixedInterval{Rational(1), Rational(1)});
  // sign of f(x) - x at segment midpoints confirms no interior fixed point
  for (const char* mid : {"1/4", "5/8", "7/8"}) CHECK(evaluate(a_half(), q(mid)) < q(mid));

  const PLElement s = scaling_lemma(q("1/4"), q("1/2"), 2);
  const FixedSet fs = fixed_set(s);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0] == FixedInterval{Rational(0), q("1/4")});
  CHECK(fs[1] == FixedInterval{q("1/2"), Rational(1)});
  for (long m = 1; m < 32; ++m) {
    const Rational x = q("1/4") + Rational(Integer(m), Integer(128));
    CHECK(evaluate(s, x) != x);
  }
}

TEST_CASE("fixed_set reports isolated crossings as points") {
  // slopes 1/2, 4, 1, 1/2; the slope-4 segment crosses the diagonal at 7/12
  const PLElement f = PLElement::validate(
      parse_breaks({{"0", "0"}, {"1/2", "1/4"}, {"5/8", "3/4"}, {"3/4", "7/8"}, {"1", "1"}}), 2);
  const FixedSet fs = fixed_set(f);
  REQUIRE(fs.size() == 3);
  CHECK(fs[0] == FixedInterval{Rational(0), Rational(0)});
  CHECK(fs[1] == FixedInterval{q("7/12"), q("7/12")});
  CHECK(fs[1].is_point());
  CHECK(fs[2] == FixedInterval{Rational(1), Rational(1)});
  CHECK(oracle::interpolate(f.breaks(), q("7/12")) == q("7/12"));
}

TEST_CASE("boundary_slopes") {
  CHECK(boundary_slopes(PLElement(2)) == std::pair<long, long>{0, 0});
  CHECK(boundary_slopes(a_half()) == std::pair<long, long>{-1, 1});
  CHECK(boundary_slopes(make_A({q("1/9"), -1, 3})) == std::pair<long, long>{1, -1});
  CHECK(boundary_slopes(make_f1(q("1/4"), 2)) == std::pair<long, long>{1, 0});
}

TEST_CASE("group laws on sampled words") {
  for (int base : {2, 3, 5}) {
    cli::Sampler s(base, 1234 + static_cast<std::uint64_t>(base));
    for (int i = 0; i < 60; ++i) {
      const PLElement f = s.element(6);
      const PLElement g = s.element(6);
      const PLElement h = s.element(6);
      CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
      CHECK(compose(f, inverse(f)).is_identity());
      CHECK(compose(inverse(f), f).is_identity());
      // closure and canonical uniqueness
      const PLElement fg = compose(f, g);
      CHECK(PLElement::validate({fg.breaks().begin(), fg.breaks().end()}, base) == fg);
      // boundary slopes add
      const auto [a1, b1] = boundary_slopes(f);
      const auto [a2, b2] = boundary_slopes(g);
      CHECK(boundary_slopes(fg) == std::pair<long, long>{a1 + a2, b1 + b2});
      // equality is consistent with pointwise agreement
      for (const auto& x : oracle::grid(base, 3)) {
        CHECK(evaluate(fg, x) == oracle::interpolate(f.breaks(), oracle::interpolate(g.breaks(), x)));
      }
    }
  }
}

TEST_CASE("fixed sets transport under conjugation") {
  cli::Sampler s(2, 99);
  for (int i = 0; i < 40; ++i) {
    const PLElement f = s.element(5);
    const PLElement h = s.element(5);
    const FixedSet before = fixed_set(f);
    const FixedSet after = fixed_set(conjugate(h, f));
    REQUIRE(before.size() == after.size());
    for (std::size_t k = 0; k < before.size(); ++k) {
      CHECK(after[k].lo == evaluate(h, before[k].lo));
      CHECK(after[k].hi == evaluate(h, before[k].hi));
    }
  }
}

TEST_CASE("power") {
  const PLElement a = a_half();
  CHECK(power(a, 0).is_identity());
  CHECK(power(a, 3) == compose(a, compose(a, a)));
  CHECK(power(a, -2) == inverse(compose(a, a)));
}
