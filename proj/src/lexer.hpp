#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "insider/diagnostic.hpp"

namespace insider::detail {

enum class Tok {
  word,    // identifier-like token or quoted string
  number,  // unsigned decimal
  real,    // decimal with fraction or exponent
  punct,   // ( ) [ ] { } , : = ! & | -> >= :=
  end,
};

struct Token {
  Tok kind = Tok::end;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
  bool quoted = false;
};

/// Splits one line (or a whole formula) into tokens. Throws ParseError on
/// characters outside the grammar.
std::vector<Token> tokenize(std::string_view text, std::size_t line = 1);

bool is_plain_word(std::string_view s);

/// Quotes `s` unless it is a plain word.
std::string quote_if_needed(std::string_view s);

/// Cursor over a token vector with positioned error reporting.
class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const;
  Token next();
  bool at_end() const { return peek().kind == Tok::end; }

  bool accept(std::string_view punct);
  void expect(std::string_view punct);
  Token expect_word(std::string_view what);
  std::size_t expect_number(std::string_view what);
  void expect_end();

  [[noreturn]] void fail(const Token& at, const std::string& message) const;

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace insider::detail
