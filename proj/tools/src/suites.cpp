#include "thompson/cli/suites.hpp"

#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "thompson/cli/sampling.hpp"
#include "thompson/grouprep.hpp"
#include "thompson/structure.hpp"

namespace thompson::cli {

namespace {

using SuiteFn = std::function<void(Report&, const SuiteOptions&)>;

int samples_or(const SuiteOptions& o, int fallback) { return o.samples > 0 ? o.samples : fallback; }

Sampler case_sampler(const SuiteOptions& o, int index) {
  return Sampler(o.base, case_seed(o.seed, static_cast<std::uint64_t>(index)));
}

std::string join(const std::vector<long>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

void relations_suite(Report& r, const SuiteOptions& o) {
  const int n = o.base;
  std::map<int, PLElement> gens;
  const auto gen = [&](int i) -> const PLElement& {
    auto it = gens.find(i);
    if (it == gens.end()) it = gens.emplace(i, standard_generator(n, i)).first;
    return it->second;
  };
  for (int j = 1; j <= o.max_index; ++j) {
    for (int i = 0; i < j; ++i) {
      const int shifted = j + n - 1;
      const bool ok = equals(compose(gen(j), gen(i)), compose(gen(i), gen(shifted)));
      r.add("x" + std::to_string(j) + "x" + std::to_string(i) + "=x" + std::to_string(i) + "x" +
                std::to_string(shifted),
            ok);
    }
  }
}

void eq1_suite(Report& r, const SuiteOptions& o) {
  const int samples = samples_or(o, 500);
  for (int i = 0; i < samples; ++i) {
    Sampler s = case_sampler(o, i);
    const PLElement g = s.fprime_element();
    const PLElement h = s.element(10);
    const PLElement c = conjugate(h, g);
    const Rational lhs = epsilon_lower(c);
    const Rational rhs = evaluate(h, epsilon_lower(g));
    const Rational lhs_up = epsilon_upper(c);
    const Rational rhs_up = evaluate(h, epsilon_upper(g));
    r.add("case " + std::to_string(i), lhs == rhs && lhs_up == rhs_up)
        .detail("eps(hgh^-1)", lhs.str())
        .detail("h(eps_g)", rhs.str())
        .detail("epsbar(hgh^-1)", lhs_up.str())
        .detail("h(epsbar_g)", rhs_up.str());
  }
}

void icc_suite(Report& r, const SuiteOptions& o) {
  const int samples = samples_or(o, 30);
  for (int i = 0; i < samples; ++i) {
    Sampler s = case_sampler(o, i);
    // rotate through the three branches of the construction
    PLElement f = s.nontrivial_element(8);
    switch (i % 3) {
      case 0:
        f = conjugate(f, s.fprime_element());
        break;
      case 1:
        while (identity_near_zero(f) || f.slope_exponent(0) <= 0) f = s.nontrivial_element(8);
        break;
      default:
        while (identity_near_zero(f) || f.slope_exponent(0) >= 0) f = s.nontrivial_element(8);
        break;
    }
    Check* check = nullptr;
    try {
      const IccWitness w = icc_witness_detail(f, o.witness_count);
      std::set<PLElement> distinct(w.conjugates.begin(), w.conjugates.end());
      const bool ok = static_cast<int>(distinct.size()) == o.witness_count;
      check = &r.add("case " + std::to_string(i), ok);
      check->detail("branch", to_string(w.branch)).detail("distinct", std::to_string(distinct.size()));
      if (w.plan) {
        check->detail("n", std::to_string(w.plan->n))
            .detail("d1", w.plan->d1.str())
            .detail("p", std::to_string(w.plan->p))
            .detail("alpha", std::to_string(w.plan->alpha))
            .detail("ks", join(w.plan->ks))
            .detail("margin_radius", w.plan->margin_radius(o.base).str())
            .detail("margin_interior", w.plan->margin_interior(o.base).str());
      } else {
        check->detail("eps_f", epsilon_lower(f).str());
      }
    } catch (const std::logic_error& e) {
      r.add("case " + std::to_string(i), false).detail("error", e.what());
    }
  }
}

void lemma32_suite(Report& r, const SuiteOptions& o) {
  const int samples = samples_or(o, 200);
  for (int i = 0; i < samples; ++i) {
    Sampler s = case_sampler(o, i);
    const auto [lo, hi] = s.chart_interval();
    const ADParams inner = s.ad_params();
    const PLElement f = scaling_lemma(lo, hi, inner);
    const FixedSet fixed = fixed_set(f);
    const FixedSet expected{{Rational(0), lo}, {hi, Rational(1)}};
    r.add("case " + std::to_string(i), member_Fprime(f) && fixed == expected)
        .detail("delta", lo.str())
        .detail("epsilon", hi.str())
        .detail("inner", "A(" + inner.d.str() + "," + std::to_string(inner.p) + ")")
        .detail("fixed_intervals", std::to_string(fixed.size()));
  }
}

void prop33_suite(Report& r, const SuiteOptions& o) {
  const int samples = samples_or(o, 100);
  for (int i = 0; i < samples; ++i) {
    Sampler s = case_sampler(o, i);
    std::vector<PLElement> e;
    const long size = 1 + s.below(5);
    for (long k = 0; k < size; ++k) e.push_back(s.d_element(8));
    const CommutingPair pair = commuting_pair(e, o.base);
    bool ok = !pair.g.is_identity() && !pair.h.is_identity() && pair.g != pair.h && member_Fprime(pair.g) &&
              member_Fprime(pair.h);
    for (const auto& x : e) {
      ok = ok && compose(x, pair.g) == compose(pair.g, x) && compose(x, pair.h) == compose(pair.h, x);
    }
    ok = ok && compose(pair.g, pair.h) != compose(pair.h, pair.g);
    const Rational norm =
        commutator_norm_sq(AlgebraElement::basis(pair.g), AlgebraElement::basis(pair.h));
    r.add("set " + std::to_string(i), ok && norm == 2)
        .detail("size", std::to_string(e.size()))
        .detail("delta", pair.delta.str())
        .detail("eps1", pair.eps1.str())
        .detail("eps2", pair.eps2.str())
        .detail("commutator_norm_sq", norm.str());
  }
}

void phi_suite(Report& r, const SuiteOptions& o) {
  const int samples = samples_or(o, 500);
  const int n = o.base;
  const Rational d = power_of(n, -2);
  const AbelianImage i1 = abelianization(make_f1(d, n));
  const AbelianImage i2 = abelianization(make_f2(d, n));
  const long det = i1.a * i2.b - i1.b * i2.a;
  r.add("generates Z^2", det == 1 || det == -1)
      .detail("phi(f1)", "(" + std::to_string(i1.a) + "," + std::to_string(i1.b) + ")")
      .detail("phi(f2)", "(" + std::to_string(i2.a) + "," + std::to_string(i2.b) + ")")
      .detail("det", std::to_string(det));

  int hom_ok = 0;
  int kernel_ok = 0;
  for (int i = 0; i < samples; ++i) {
    Sampler s = case_sampler(o, i);
    const PLElement f = s.element(10);
    const PLElement g = s.element(10);
    if (abelianization(compose(f, g)) == abelianization(f) + abelianization(g)) ++hom_ok;
    if (kernel_is_Fprime_check(f)) ++kernel_ok;
  }
  r.add("homomorphism", hom_ok == samples).detail("pairs", std::to_string(samples)).detail("held", std::to_string(hom_ok));
  r.add("kernel is F'", kernel_ok == samples)
      .detail("words", std::to_string(samples))
      .detail("held", std::to_string(kernel_ok));
}

void semidirect_suite(Report& r, const SuiteOptions& o) {
  const int samples = samples_or(o, 500);
  int round_trip = 0;
  for (int i = 0; i < samples; ++i) {
    Sampler s = case_sampler(o, i);
    const PLElement f = s.element(10);
    const SemidirectParts parts = semidirect_decompose(f);
    const SemidirectParts again = semidirect_decompose(semidirect_compose(parts));
    if (member_D(parts.d) && semidirect_compose(parts) == f && again.d == parts.d && again.n == parts.n) {
      ++round_trip;
    }
  }
  r.add("round trip", round_trip == samples)
      .detail("elements", std::to_string(samples))
      .detail("held", std::to_string(round_trip));

  const int action_samples = std::max(1, samples * 2 / 5);
  int stays = 0;
  for (int i = 0; i < action_samples; ++i) {
    Sampler s = case_sampler(o, 100000 + i);
    const PLElement f = s.d_element(8);
    const long n = s.below(7) - 3;
    if (member_D(alpha_action(n, f))) ++stays;
  }
  r.add("alpha stays in D", stays == action_samples)
      .detail("samples", std::to_string(action_samples))
      .detail("held", std::to_string(stays));

  const int law_samples = std::max(1, samples / 5);
  int law = 0;
  for (int i = 0; i < law_samples; ++i) {
    Sampler s = case_sampler(o, 200000 + i);
    const PLElement f = s.d_element(8);
    const long m = s.below(7) - 3;
    const long n = s.below(7) - 3;
    if (alpha_action(m, alpha_action(n, f)) == alpha_action(m + n, f)) ++law;
  }
  r.add("action law", law == law_samples)
      .detail("triples", std::to_string(law_samples))
      .detail("held", std::to_string(law));
}

void central_suite(Report& r, const SuiteOptions& o) {
  const int n = o.base;
  Sampler s = case_sampler(o, 0);
  std::vector<PLElement> e;
  for (int k = 0; k < 3; ++k) e.push_back(s.nontrivial_d_element(8));
  const long start = central_sequence_start(e, n);
  for (long idx = start; idx <= start + 10; ++idx) {
    const CentralSequenceSpec spec = central_sequence(n, idx);
    bool ok = true;
    Rational worst;
    for (const auto& g : e) {
      const Rational c = commutator_norm_sq(AlgebraElement::basis(g), AlgebraElement::basis(spec.element));
      ok = ok && c.is_zero() && compose(g, spec.element) == compose(spec.element, g);
      worst = std::max(worst, c);
    }
    r.add("commutes at n=" + std::to_string(idx), ok)
        .detail("d_n", spec.lower.str())
        .detail("max_commutator_norm_sq", worst.str());
  }
  for (long idx = 1; idx <= 20; ++idx) {
    const CentralSequenceSpec spec = central_sequence(n, idx);
    bool eps_ok = epsilon_lower(spec.element) == spec.lower;
    bool free_ok = true;
    for (long m = -3; m <= 3; ++m) {
      if (m != 0) free_ok = free_ok && centrally_free_check(n, m, idx);
    }
    r.add("n=" + std::to_string(idx), eps_ok && free_ok)
        .detail("d_n", spec.lower.str())
        .detail("dbar_n", spec.upper.str())
        .detail("eps(a_n)=d_n", eps_ok ? "true" : "false")
        .detail("centrally_free_m=-3..3", free_ok ? "true" : "false");
  }
  r.inputs.emplace_back("index0", std::to_string(start));
}

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> suites{
      {"central", central_suite}, {"eq1", eq1_suite},     {"icc", icc_suite},
      {"lemma32", lemma32_suite}, {"phi", phi_suite},     {"prop33", prop33_suite},
      {"relations", relations_suite}, {"semidirect", semidirect_suite},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

Report run_suite(const std::string& name, const SuiteOptions& options) {
  const auto& suites = registry();
  auto it = suites.find(name);
  if (it == suites.end()) throw std::invalid_argument("unknown suite '" + name + "'");
  require_base(options.base);
  Report r;
  r.command = "check " + name;
  r.inputs = {{"suite", name},
              {"base", std::to_string(options.base)},
              {"seed", std::to_string(options.seed)},
              {"samples", std::to_string(options.samples)}};
  if (name == "relations") r.inputs.emplace_back("max_index", std::to_string(options.max_index));
  if (name == "icc") r.inputs.emplace_back("count", std::to_string(options.witness_count));
  it->second(r, options);
  return r;
}

}  // namespace thompson::cli
