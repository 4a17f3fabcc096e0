#include <algorithm>

#include "doctest.h"
#include "thompson/cli/document.hpp"
#include "thompson/cli/plot.hpp"
#include "thompson/cli/sampling.hpp"
#include "thompson/cli/suites.hpp"
#include "thompson/cli/word_syntax.hpp"
#include "thompson/structure.hpp"

using namespace thompson;
using namespace thompson::cli;

namespace {
Rational q(const char* s) { return Rational::parse(s); }

std::size_t vertex_count(const std::string& svg) {
  const auto start = svg.find("points=\"");
  REQUIRE(start != std::string::npos);
  const auto end = svg.find('"', start + 8);
  const std::string pts = svg.substr(start + 8, end - start - 8);
  return static_cast<std::size_t>(std::count(pts.begin(), pts.end(), ',')) ;
}
}  // namespace

TEST_CASE("document round trip") {
  const PLElement a = make_A({q("1/2"), 1, 2});
  const std::string text = serialize(a);
  CHECK(text.back() == '\n');
  CHECK(text.find("\"1/4\"") != std::string::npos);
  CHECK(parse_document(text) == a);
  CHECK(serialize(parse_document(text)) == text);

  for (int base : {2, 3, 5}) {
    Sampler s(base, 1);
    for (int i = 0; i < 50; ++i) {
      const PLElement f = s.element(10);
      CHECK(parse_document(serialize(f)) == f);
    }
  }
}

TEST_CASE("document parse errors") {
  CHECK_THROWS_AS(parse_document("not json"), DocumentParseError);
  CHECK_THROWS_AS(parse_document(R"({"breaks": []})"), DocumentParseError);
  CHECK_THROWS_AS(parse_document(R"({"N": 2, "breaks": [{"x": "0"}]})"), DocumentParseError);
  CHECK_THROWS_AS(parse_document(R"({"N": 2, "breaks": [{"x": "0", "y": "2/4"}]})"), DocumentParseError);
  CHECK_THROWS_AS(parse_document(R"({"N": 2, "breaks": [{"x": 0, "y": 0}]})"), DocumentParseError);
  CHECK_THROWS_AS(parse_document(R"({"N": 2, "breaks": [{"x":"0","y":"0"},{"x":"1/3","y":"1/2"},{"x":"1","y":"1"}]})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_document(R"({"N": 2, "breaks": []})"), ValidationError);
}

TEST_CASE("parse_word") {
  CHECK(evaluate_word(parse_word("x0 x0^-1", 2)).is_identity());
  CHECK(evaluate_word(parse_word("", 2)).is_identity());
  CHECK(evaluate_word(parse_word("A(1/2,1)", 2)) == make_A({q("1/2"), 1, 2}));
  CHECK(evaluate_word(parse_word("x1 x0", 2)) == evaluate_word(parse_word("x0 x2", 2)));
  CHECK(evaluate_word(parse_word("f1(1/4)^2 f2(1/4) s^-1", 2)) ==
        compose(compose(power(make_f1(q("1/4"), 2), 2), make_f2(q("1/4"), 2)), inverse(shift_element(2))));

  const GroupWord w = parse_word("x3^2  A(1/9,-1) s", 3);
  CHECK(parse_word(format_word(w), 3).letters.size() == 3);
  CHECK(evaluate_word(parse_word(format_word(w), 3)) == evaluate_word(w));

  SUBCASE("errors carry the token and column") {
    try {
      parse_word("x0  y1", 2);
      FAIL("expected a syntax error");
    } catch (const WordSyntaxError& e) {
      CHECK(e.token() == 2);
      CHECK(e.column() == 5);
    }
    try {
      parse_word("x0 x1^0", 2);
      FAIL("expected a syntax error");
    } catch (const WordSyntaxError& e) {
      CHECK(e.token() == 2);
      CHECK(e.column() == 4);
    }
    CHECK_THROWS_AS(parse_word("A(1/2)", 2), WordSyntaxError);
    CHECK_THROWS_AS(parse_word("x", 2), WordSyntaxError);
    CHECK_THROWS_AS(parse_word("f1(0.25)", 2), WordSyntaxError);
  }
}

TEST_CASE("decimal") {
  CHECK(decimal(q("1/4")) == "0.25");
  CHECK(decimal(Rational(1)) == "1");
  CHECK(decimal(Rational(0)) == "0");
  CHECK(decimal(q("1/3"), 4) == "0.3333");
  CHECK(decimal(q("2/3"), 4) == "0.6667");
  CHECK(decimal(q("1/8"), 2) == "0.13");
}

TEST_CASE("render_svg") {
  CHECK(vertex_count(render_svg(PLElement(2))) == 2);
  CHECK(vertex_count(render_svg(make_A({q("1/2"), 1, 2}))) == 4);
  CHECK(vertex_count(render_svg(make_f1(q("1/4"), 2))) == 4);
  const PLElement f = random_element(3, 8, 4);
  CHECK(render_svg(f) == render_svg(f));
  CHECK(render_svg(f).find("data-breaks") != std::string::npos);
  CHECK(render_svg(make_A({q("1/2"), 1, 2})).rfind("<?xml", 0) == 0);
}

TEST_CASE("suites") {
  CHECK(suite_names().size() == 8);
  SuiteOptions opts;
  opts.samples = 5;
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    const Report a = run_suite(name, opts);
    CHECK(a.passed());
    CHECK(a.str() == run_suite(name, opts).str());
    CHECK(a.str().find("\"seed\"") != std::string::npos);
  }
  CHECK_THROWS_AS(run_suite("nosuch", opts), std::invalid_argument);
}

TEST_CASE("report verdict") {
  Report r;
  r.command = "demo";
  r.add("ok", true);
  CHECK(r.passed());
  CHECK(r.to_json()["verdict"] == "pass");
  r.add("bad", false).detail("why", "because");
  CHECK_FALSE(r.passed());
  CHECK(r.to_json()["verdict"] == "fail");
}
