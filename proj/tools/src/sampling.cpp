#include "thompson/cli/sampling.hpp"

#include "thompson/structure.hpp"

namespace thompson::cli {

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the combined value
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

PLElement Sampler::element(int max_length) {
  const int length = 1 + static_cast<int>(below(max_length));
  return random_element(base_, length, rng_());
}

PLElement Sampler::nontrivial_element(int max_length) {
  for (;;) {
    PLElement f = element(max_length);
    if (!f.is_identity()) return f;
  }
}

std::pair<Rational, Rational> Sampler::chart_interval() {
  const long k = 1 + below(4);
  const long j = k + 1 + below(3);
  const Rational unit = power_of(base_, -j);
  const Integer slots = power_of(base_, j).numerator() - power_of(base_, j - k).numerator() - 1;
  const long m = 1 + below(slots.get_si());
  Rational lo = Rational(m) * unit;
  Rational hi = lo + power_of(base_, -k);
  return {std::move(lo), std::move(hi)};
}

ADParams Sampler::ad_params() {
  static constexpr long kExponents[] = {-3, -2, -1, 1, 2, 3};
  for (;;) {
    const long p = kExponents[below(6)];
    const long k = 1 + below(4);
    const Integer scale = power_of(base_, k).numerator();
    const long m = 1 + below(scale.get_si() - 1);
    ADParams params{Rational(Integer(m), scale), p, base_};
    if (params.valid()) return params;
  }
}

PLElement Sampler::fprime_element() {
  auto [lo, hi] = chart_interval();
  return scaling_lemma(lo, hi, ad_params());
}

PLElement Sampler::d_element(int max_length) { return semidirect_decompose(element(max_length)).d; }

PLElement Sampler::nontrivial_d_element(int max_length) {
  for (;;) {
    PLElement d = d_element(max_length);
    if (!d.is_identity()) return d;
  }
}

}  // namespace thompson::cli
