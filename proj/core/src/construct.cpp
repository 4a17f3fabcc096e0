#include "thompson/construct.hpp"

#include <random>

namespace thompson {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Carries [0, inf) onto [0, 1): block [k(N-1), (k+1)(N-1)] goes affinely
// onto [1 - N^-k, 1 - N^-(k+1)].
Rational ray_to_unit(const Rational& t, int base) {
  const Integer block = floor_div(t.numerator(), t.denominator() * (base - 1));
  const long k = block.get_si();
  return Rational(1) - power_of(base, -k) + (t - Rational(Integer(block * (base - 1)))) * power_of(base, -k - 1);
}

// The generator on the ray before inversion; see standard_generator.
Rational ray_generator(int index, int base, const Rational& t) {
  if (t <= index) return t;
  if (t <= index + 1) return Rational(base) * (t - index) + index;
  return t + (base - 1);
}

std::vector<Breakpoint> three_branch(const Rational& a, const Rational& fa, const Rational& b, const Rational& fb) {
  return {{Rational(0), Rational(0)}, {a, fa}, {b, fb}, {Rational(1), Rational(1)}};
}

}  // namespace

void ADParams::check() const {
  require_base(base);
  if (!(d > 0 && d < 1)) throw std::invalid_argument("A_{d,p}: d = " + d.str() + " must lie in (0,1)");
  if (!is_nadic(d, base)) throw std::invalid_argument("A_{d,p}: d = " + d.str() + " is not N-adic");
  const Rational shrunk = d * power_of(base, -p);
  if (!(shrunk < 1)) throw std::invalid_argument("A_{d,p}: d/N^p must be < 1");
  if (d + shrunk > 1) throw std::invalid_argument("A_{d,p}: d + d/N^p must be <= 1");
}

bool ADParams::valid() const {
  try {
    check();
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

AffineChart::AffineChart(Rational lo, Rational hi, int base)
    : lo_(std::move(lo)), hi_(std::move(hi)), width_(hi_ - lo_), base_(base) {
  require_base(base);
  if (!(lo_ < hi_)) throw std::invalid_argument("affine chart needs lo < hi");
  auto e = is_power_of_n(width_, base);
  if (!e) throw std::invalid_argument("chart width " + width_.str() + " is not a power of N");
  width_exponent_ = *e;
}

PLElement AffineChart::transplant(const PLElement& f) const {
  if (f.base() != base_) throw BaseMismatch(f.base(), base_);
  std::vector<Breakpoint> pts;
  pts.push_back({Rational(0), Rational(0)});
  if (lo_ > 0) pts.push_back({lo_, lo_});
  for (const auto& b : f.breaks().subspan(1, f.breaks().size() - 2)) {
    pts.push_back({from_unit(b.x), from_unit(b.y)});
  }
  if (hi_ < 1) pts.push_back({hi_, hi_});
  pts.push_back({Rational(1), Rational(1)});
  return PLElement::validate(std::move(pts), base_);
}

PLElement make_A(const ADParams& params) {
  params.check();
  const Rational& d = params.d;
  const Rational shrunk = d * power_of(params.base, -params.p);
  const Rational one(1);
  return PLElement::validate(three_branch(d, shrunk, one - shrunk, one - d), params.base);
}

PLElement make_A_inverse(const ADParams& params) {
  params.check();
  const int n = params.base;
  const Rational np = power_of(n, params.p);
  const Rational& d = params.d;
  const Rational one(1);
  // x N^p on [0, d/N^p]; x + d - d/N^p on [d/N^p, 1-d]; (x + N^p - 1)/N^p on [1-d, 1]
  const auto first = [&](const Rational& x) { return x * np; };
  const auto middle = [&](const Rational& x) { return x + d - d / np; };
  const auto last = [&](const Rational& x) { return (x + np - one) / np; };
  const Rational a = d / np;
  const Rational b = one - d;
  if (first(a) != middle(a) || middle(b) != last(b)) throw std::logic_error("A^-1 branches do not join");
  return PLElement::validate(three_branch(a, first(a), b, middle(b)), n);
}

ADParams default_inner_params(int base) { return {power_of(base, -1), 1, base}; }

PLElement scaling_lemma(const Rational& lo, const Rational& hi, const ADParams& inner) {
  const int n = inner.base;
  if (!(0 < lo && lo < hi && hi < 1)) throw std::invalid_argument("scaling lemma needs 0 < lo < hi < 1");
  if (!is_nadic(lo, n) || !is_nadic(hi, n)) throw std::invalid_argument("scaling lemma endpoints must be N-adic");
  if (inner.p == 0) throw std::invalid_argument("scaling lemma needs p != 0");
  return AffineChart(lo, hi, n).transplant(make_A(inner));
}

PLElement scaling_lemma(const Rational& lo, const Rational& hi, int base) {
  return scaling_lemma(lo, hi, default_inner_params(base));
}

namespace {
void check_f1_parameter(const Rational& d, int base) {
  require_base(base);
  if (d.sign() <= 0) throw std::invalid_argument("f1: d must be positive");
  auto e = is_power_of_n(d, base);
  if (!e || *e >= 0) throw std::invalid_argument("f1: d = " + d.str() + " must be 1/N^p with p > 0");
  if (!(d * (base + 1) < 1)) throw std::invalid_argument("f1: d(N+1) must be < 1");
}
}  // namespace

PLElement make_f1(const Rational& d, int base) {
  check_f1_parameter(d, base);
  const Rational end = d * (base + 1);
  return PLElement::validate(three_branch(d, d * base, end, end), base);
}

PLElement make_f2(const Rational& d, int base) {
  const PLElement f1 = make_f1(d, base);
  const auto src = f1.breaks();
  std::vector<Breakpoint> pts;
  pts.reserve(src.size());
  for (auto it = src.rbegin(); it != src.rend(); ++it) {
    pts.push_back({Rational(1) - it->x, Rational(1) - it->y});
  }
  return PLElement::validate(std::move(pts), base);
}

PLElement shift_element(int base) { return make_f2(power_of(base, -2), base); }

PLElement standard_generator(int base, int index) {
  require_base(base);
  if (index < 0) throw std::invalid_argument("generator index must be nonnegative");
  const int step = base - 1;
  // first block boundary at or beyond index + 1; the map is affine past it
  const int tail = ((index + 1 + step - 1) / step) * step;

  std::vector<Rational> ts;
  for (int t = 0; t <= index; ++t) ts.emplace_back(t);
  for (int m = 1; m <= base; ++m) ts.push_back(Rational(index) + Rational(Integer(m), Integer(base)));
  for (int t = index + 2; t <= tail; ++t) ts.emplace_back(t);

  std::vector<Breakpoint> pts;
  pts.reserve(ts.size() + 1);
  for (const auto& t : ts) pts.push_back({ray_to_unit(t, base), ray_to_unit(ray_generator(index, base, t), base)});
  pts.push_back({Rational(1), Rational(1)});
  return inverse(PLElement::validate(std::move(pts), base));
}

GroupWord GroupWord::generators(int base, std::initializer_list<std::pair<int, long>> letters) {
  GroupWord w{base, {}};
  for (const auto& [index, exponent] : letters) w.letters.push_back({Letter::Generator{index}, exponent});
  return w;
}

PLElement letter_element(const Letter& letter, int base) {
  const PLElement unit = std::visit(
      [&](const auto& sym) -> PLElement {
        using T = std::decay_t<decltype(sym)>;
        if constexpr (std::is_same_v<T, Letter::Generator>) {
          return standard_generator(base, sym.index);
        } else if constexpr (std::is_same_v<T, Letter::AFamily>) {
          return make_A({sym.d, sym.p, base});
        } else if constexpr (std::is_same_v<T, Letter::F1>) {
          return make_f1(sym.d, base);
        } else if constexpr (std::is_same_v<T, Letter::F2>) {
          return make_f2(sym.d, base);
        } else {
          return shift_element(base);
        }
      },
      letter.symbol);
  return power(unit, letter.exponent);
}

PLElement evaluate_word(const GroupWord& w) {
  PLElement result(w.base);
  for (const auto& letter : w.letters) {
    if (letter.exponent == 0) throw std::invalid_argument("word letters must have nonzero exponents");
    result = compose(result, letter_element(letter, w.base));
  }
  return result;
}

GroupWord random_word(int base, int length, std::uint64_t seed) {
  require_base(base);
  if (length < 0) throw std::invalid_argument("word length must be nonnegative");
  std::mt19937_64 rng(seed);
  const auto below = [&](std::uint64_t n) { return static_cast<long>(rng() % n); };

  GroupWord w{base, {}};
  w.letters.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) {
    const long exponent = below(2) == 0 ? 1 : -1;
    if (below(4) == 0) {
      static constexpr long kExponents[] = {-2, -1, 1, 2};
      for (;;) {
        const long p = kExponents[below(4)];
        const long k = 1 + below(3);
        const Rational scale = power_of(base, k);
        const long m = 1 + below(static_cast<std::uint64_t>(scale.numerator().get_si() - 1));
        ADParams params{Rational(Integer(m), scale.numerator()), p, base};
        if (params.valid()) {
          w.letters.push_back({Letter::AFamily{params.d, p}, exponent});
          break;
        }
      }
    } else {
      w.letters.push_back({Letter::Generator{static_cast<int>(below(static_cast<std::uint64_t>(base) + 2))}, exponent});
    }
  }
  return w;
}

PLElement random_element(int base, int length, std::uint64_t seed) {
  return evaluate_word(random_word(base, length, seed));
}

}  // namespace thompson
