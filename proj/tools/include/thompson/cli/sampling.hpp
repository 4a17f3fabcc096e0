#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "thompson/construct.hpp"

namespace thompson::cli {

/// Stateless mixing of a base seed with a case index.
std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index);

/// Seeded source of random test objects. Same seed, same sequence.
class Sampler {
 public:
  Sampler(int base, std::uint64_t seed) : base_(base), rng_(seed) {}

  int base() const { return base_; }
  std::uint64_t next_u64() { return rng_(); }
  long below(long n) { return static_cast<long>(rng_() % static_cast<std::uint64_t>(n)); }

  /// Word of length 1..max_length, evaluated.
  PLElement element(int max_length);
  PLElement nontrivial_element(int max_length);

  /// N-adic (lo, hi) with 0 < lo < hi < 1 and hi - lo = N^-k, k in 1..4.
  std::pair<Rational, Rational> chart_interval();

  /// A random valid A_{d,p} parameter set.
  ADParams ad_params();

  /// scaling_lemma on a random interval with random inner parameters (p != 0).
  PLElement fprime_element();

  /// The D-part of a random element.
  PLElement d_element(int max_length);
  PLElement nontrivial_d_element(int max_length);

 private:
  int base_;
  std::mt19937_64 rng_;
};

}  // namespace thompson::cli
