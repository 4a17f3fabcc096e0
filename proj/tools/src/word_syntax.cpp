#include "thompson/cli/word_syntax.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

namespace thompson::cli {

namespace {

struct Token {
  std::string_view text;
  std::size_t index;
  std::size_t column;
};

std::vector<Token> split(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) out.push_back({text.substr(start, i - start), out.size() + 1, start + 1});
  }
  return out;
}

std::optional<long> to_long(std::string_view s) {
  long value = 0;
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') return std::nullopt;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

Letter parse_letter(const Token& tok) {
  const auto fail = [&](const std::string& why) { return WordSyntaxError(tok.index, tok.column, why); };
  std::string_view body = tok.text;
  long exponent = 1;
  if (const auto caret = body.find('^'); caret != std::string_view::npos) {
    auto e = to_long(body.substr(caret + 1));
    if (!e || *e == 0) throw fail("exponent must be a nonzero integer");
    exponent = *e;
    body = body.substr(0, caret);
  }

  const auto arguments = [&](std::string_view prefix) -> std::string_view {
    if (body.size() < prefix.size() + 2 || body.back() != ')') throw fail("expected " + std::string(prefix) + "(...)");
    return body.substr(prefix.size() + 1, body.size() - prefix.size() - 2);
  };
  const auto rational = [&](std::string_view s) {
    try {
      return Rational::parse(s);
    } catch (const RationalParseError& e) {
      throw fail(e.what());
    }
  };

  if (body == "s") return {Letter::Shift{}, exponent};
  if (body.starts_with("A(")) {
    const std::string_view args = arguments("A");
    const auto comma = args.find(',');
    if (comma == std::string_view::npos) throw fail("A(d,p) needs two arguments");
    auto p = to_long(args.substr(comma + 1));
    if (!p) throw fail("A(d,p): p must be an integer");
    return {Letter::AFamily{rational(args.substr(0, comma)), *p}, exponent};
  }
  if (body.starts_with("f1(")) return {Letter::F1{rational(arguments("f1"))}, exponent};
  if (body.starts_with("f2(")) return {Letter::F2{rational(arguments("f2"))}, exponent};
  if (body.size() >= 2 && body.front() == 'x') {
    auto i = to_long(body.substr(1));
    if (!i || *i < 0 || body[1] == '-') throw fail("generator index must be a nonnegative integer");
    if (*i > 1'000'000) throw fail("generator index too large");
    return {Letter::Generator{static_cast<int>(*i)}, exponent};
  }
  throw fail("unknown letter '" + std::string(tok.text) + "'");
}

}  // namespace

GroupWord parse_word(std::string_view text, int base) {
  require_base(base);
  GroupWord w{base, {}};
  for (const auto& tok : split(text)) w.letters.push_back(parse_letter(tok));
  return w;
}

std::string format_word(const GroupWord& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& letter : w.letters) {
    if (!first) os << ' ';
    first = false;
    std::visit(
        [&](const auto& sym) {
          using T = std::decay_t<decltype(sym)>;
          if constexpr (std::is_same_v<T, Letter::Generator>) {
            os << 'x' << sym.index;
          } else if constexpr (std::is_same_v<T, Letter::AFamily>) {
            os << "A(" << sym.d << ',' << sym.p << ')';
          } else if constexpr (std::is_same_v<T, Letter::F1>) {
            os << "f1(" << sym.d << ')';
          } else if constexpr (std::is_same_v<T, Letter::F2>) {
            os << "f2(" << sym.d << ')';
          } else {
            os << 's';
          }
        },
        letter.symbol);
    if (letter.exponent != 1) os << '^' << letter.exponent;
  }
  return os.str();
}

}  // namespace thompson::cli
