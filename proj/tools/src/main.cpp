// Command-line front end for computing in F(N).
//
// Exit codes: 0 success, 1 check failure, 2 usage or parse error,
// 3 validation error, 4 domain error.

#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "thompson/cli/document.hpp"
#include "thompson/cli/plot.hpp"
#include "thompson/cli/suites.hpp"
#include "thompson/cli/word_syntax.hpp"
#include "thompson/grouprep.hpp"
#include "thompson/structure.hpp"

namespace {

using namespace thompson;
using namespace thompson::cli;

enum Exit : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kInvalid = 3,
  kDomain = 4,
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

PLElement load(const std::string& path, const std::optional<int>& base) {
  PLElement f = read_document_file(path);
  if (base && *base != f.base()) {
    throw UsageError("document " + path + " has N=" + std::to_string(f.base()) + " but --base is " +
                     std::to_string(*base));
  }
  return f;
}

std::string fixed_set_text(const FixedSet& s) {
  std::string out;
  for (const auto& i : s) {
    if (!out.empty()) out += " u ";
    out += "[" + i.lo.str() + "," + i.hi.str() + "]";
  }
  return out;
}

Report inspect_report(const PLElement& f) {
  Report r;
  r.command = "inspect";
  r.inputs = {{"base", std::to_string(f.base())}, {"breakpoints", std::to_string(f.breaks().size())}};
  const AbelianImage phi = abelianization(f);
  r.add("abelianization", true).detail("a", std::to_string(phi.a)).detail("b", std::to_string(phi.b));
  r.add("membership", kernel_is_Fprime_check(f))
      .detail("D", member_D(f) ? "true" : "false")
      .detail("F'", member_Fprime(f) ? "true" : "false");
  r.add("fixed_set", true).detail("intervals", fixed_set_text(fixed_set(f)));
  if (!f.is_identity() && identity_near_zero(f)) r.add("epsilon_lower", true).detail("value", epsilon_lower(f).str());
  if (!f.is_identity() && identity_near_one(f)) r.add("epsilon_upper", true).detail("value", epsilon_upper(f).str());
  const SemidirectParts parts = semidirect_decompose(f);
  r.add("semidirect", semidirect_compose(parts) == f)
      .detail("n", std::to_string(parts.n))
      .detail("d", to_json(parts.d)["breaks"].dump());
  return r;
}

Report witness_report(const PLElement& f, int count, long p) {
  Report r;
  r.command = "witness";
  r.inputs = {{"base", std::to_string(f.base())}, {"count", std::to_string(count)}, {"p", std::to_string(p)}};
  const IccWitness w = icc_witness_detail(f, count, p);
  Check& c = r.add("distinct conjugates", true);
  c.detail("branch", to_string(w.branch));
  if (w.plan) {
    std::string ks;
    for (long k : w.plan->ks) ks += (ks.empty() ? "" : ",") + std::to_string(k);
    c.detail("n", std::to_string(w.plan->n))
        .detail("d1", w.plan->d1.str())
        .detail("alpha", std::to_string(w.plan->alpha))
        .detail("ks", ks)
        .detail("margin_radius", w.plan->margin_radius(f.base()).str())
        .detail("margin_interior", w.plan->margin_interior(f.base()).str());
  }
  for (std::size_t i = 0; i < w.conjugates.size(); ++i) {
    r.add("conjugate " + std::to_string(i), true).detail("breaks", to_json(w.conjugates[i])["breaks"].dump());
  }
  return r;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact computation in the generalized Thompson groups F(N)"};
  app.require_subcommand(1);
  std::optional<int> base;
  app.add_option("--base", base, "Group parameter N (>= 2)")->check(CLI::Range(2, 1'000'000));

  std::string out_path;

  auto* eval = app.add_subcommand("eval", "Evaluate an element at a rational point");
  std::string doc_path;
  std::string x_text;
  eval->add_option("element", doc_path, "Element document (JSON)")->required();
  eval->add_option("x", x_text, "Point in [0,1], e.g. 1/2")->required();

  auto* word = app.add_subcommand("word", "Evaluate a word and print its element document");
  std::vector<std::string> word_parts;
  word->add_option("letters", word_parts, "Letters: x<i>, A(d,p), f1(d), f2(d), s, each with optional ^e")
      ->expected(0, -1);
  word->add_option("--out", out_path, "Write the document here instead of stdout");

  auto* plot = app.add_subcommand("plot", "Render the graph of an element as SVG");
  plot->add_option("element", doc_path, "Element document (JSON)")->required();
  plot->add_option("--out", out_path, "Output SVG path (stdout if omitted)");

  auto* check = app.add_subcommand("check", "Run a verification suite and print a JSON report");
  std::string suite;
  SuiteOptions opts;
  check->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  check->add_option("--seed", opts.seed, "Random seed");
  check->add_option("--samples", opts.samples, "Number of random cases (suite default if omitted)");
  check->add_option("--max-index", opts.max_index, "Largest generator index for 'relations'");
  check->add_option("--count", opts.witness_count, "Conjugates per element for 'icc'");
  check->add_option("--out", out_path, "Write the report here instead of stdout");

  auto* inspect = app.add_subcommand("inspect", "Report invariants of an element");
  inspect->add_option("element", doc_path, "Element document (JSON)")->required();

  auto* witness = app.add_subcommand("witness", "Build distinct conjugates of a nontrivial element");
  int count = 10;
  long p = 1;
  witness->add_option("element", doc_path, "Element document (JSON)")->required();
  witness->add_option("--count", count, "Number of conjugates")->check(CLI::PositiveNumber);
  witness->add_option("--p", p, "A-family exponent used by the slope branch");

  auto* pair = app.add_subcommand("pair", "Commuting pair for a finite subset of D");
  std::vector<std::string> pair_paths;
  pair->add_option("elements", pair_paths, "Element documents in D")->expected(0, -1);
  pair->add_option("--out", out_path, "Write the report here instead of stdout");

  auto* central = app.add_subcommand("central", "Print the central sequence element a_n");
  long index = 1;
  central->add_option("--index", index, "Sequence index n >= 1")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const int n = base.value_or(2);

  if (*eval) {
    const PLElement f = load(doc_path, base);
    std::cout << evaluate(f, Rational::parse(x_text)) << "\n";
    return kOk;
  }
  if (*word) {
    std::string text;
    for (const auto& part : word_parts) text += (text.empty() ? "" : " ") + part;
    emit(serialize(evaluate_word(parse_word(text, n))), out_path);
    return kOk;
  }
  if (*plot) {
    emit(render_svg(load(doc_path, base)), out_path);
    return kOk;
  }
  if (*check) {
    opts.base = n;
    const Report r = run_suite(suite, opts);
    emit(r.str(), out_path);
    return r.passed() ? kOk : kCheckFailed;
  }
  if (*inspect) {
    const Report r = inspect_report(load(doc_path, base));
    std::cout << r.str();
    return r.passed() ? kOk : kCheckFailed;
  }
  if (*witness) {
    std::cout << witness_report(load(doc_path, base), count, p).str();
    return kOk;
  }
  if (*pair) {
    std::vector<PLElement> e;
    for (const auto& path : pair_paths) e.push_back(load(path, base));
    const int pair_base = e.empty() ? n : e.front().base();
    for (const auto& g : e) {
      if (g.base() != pair_base) throw UsageError("pair: documents mix different bases");
    }
    const CommutingPair cp = commuting_pair(e, pair_base);
    Report r;
    r.command = "pair";
    r.inputs = {{"base", std::to_string(pair_base)}, {"elements", std::to_string(e.size())}};
    bool commute = true;
    for (const auto& g : e) commute = commute && compose(g, cp.g) == compose(cp.g, g) && compose(g, cp.h) == compose(cp.h, g);
    r.add("commutes with E", commute);
    r.add("gh != hg", compose(cp.g, cp.h) != compose(cp.h, cp.g))
        .detail("delta", cp.delta.str())
        .detail("eps1", cp.eps1.str())
        .detail("eps2", cp.eps2.str())
        .detail("commutator_norm_sq",
                commutator_norm_sq(AlgebraElement::basis(cp.g), AlgebraElement::basis(cp.h)).str());
    r.add("g", true).detail("breaks", to_json(cp.g)["breaks"].dump());
    r.add("h", true).detail("breaks", to_json(cp.h)["breaks"].dump());
    emit(r.str(), out_path);
    return r.passed() ? kOk : kCheckFailed;
  }
  if (*central) {
    const CentralSequenceSpec spec = central_sequence(n, index);
    Report r;
    r.command = "central";
    r.inputs = {{"base", std::to_string(n)}, {"index", std::to_string(index)}};
    r.add("a_n", epsilon_lower(spec.element) == spec.lower && member_Fprime(spec.element))
        .detail("d_n", spec.lower.str())
        .detail("dbar_n", spec.upper.str())
        .detail("breaks", to_json(spec.element)["breaks"].dump());
    std::cout << r.str();
    return r.passed() ? kOk : kCheckFailed;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DocumentParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const WordSyntaxError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const RationalParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const ValidationError& e) {
    std::cerr << "validation error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return kInvalid;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
