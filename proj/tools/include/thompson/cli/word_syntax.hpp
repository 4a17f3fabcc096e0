#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "thompson/construct.hpp"

namespace thompson::cli {

class WordSyntaxError : public std::runtime_error {
 public:
  WordSyntaxError(std::size_t token, std::size_t column, const std::string& what)
      : std::runtime_error("token " + std::to_string(token) + " (column " + std::to_string(column) + "): " + what),
        token_(token),
        column_(column) {}

  /// 1-based index of the offending token.
  std::size_t token() const { return token_; }
  /// 1-based character offset of the token in the input.
  std::size_t column() const { return column_; }

 private:
  std::size_t token_;
  std::size_t column_;
};

/// Parses whitespace-separated letters:
///
///   x<i>  A(<d>,<p>)  f1(<d>)  f2(<d>)  s
///
/// each optionally followed by ^<e> with a nonzero integer e.
GroupWord parse_word(std::string_view text, int base);

std::string format_word(const GroupWord& w);

}  // namespace thompson::cli
