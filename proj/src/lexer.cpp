#include "lexer.hpp"

#include <algorithm>
#include <cctype>

namespace insider {

std::string Diagnostic::str() const {
  return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}

namespace {

std::string summarize(const std::vector<Diagnostic>& ds) {
  if (ds.empty()) return "parse error";
  std::string out = ds.front().str();
  if (ds.size() > 1) out += " (and " + std::to_string(ds.size() - 1) + " more)";
  return out;
}

}  // namespace

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(summarize(diagnostics)), diagnostics_(std::move(diagnostics)) {}

}  // namespace insider

namespace insider::detail {

namespace {

bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

}  // namespace

bool is_plain_word(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), word_char);
}

std::string quote_if_needed(std::string_view s) {
  if (is_plain_word(s)) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<Token> tokenize(std::string_view text, std::size_t line) {
  std::vector<Token> out;
  std::size_t col = 1;
  std::size_t i = 0;
  auto error = [&](const std::string& message) {
    throw ParseError({{line, col, message}});
  };

  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      ++i;
      ++col;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }

    Token t;
    t.line = line;
    t.column = col;
    const std::size_t start = i;

    if (c == '"') {
      ++i;
      std::string value;
      bool closed = false;
      while (i < text.size() && text[i] != '\n') {
        if (text[i] == '\\' && i + 1 < text.size()) {
          value += text[i + 1];
          i += 2;
          continue;
        }
        if (text[i] == '"') {
          closed = true;
          ++i;
          break;
        }
        value += text[i++];
      }
      if (!closed) error("unterminated string");
      if (value.empty()) error("empty string token");
      t.kind = Tok::word;
      t.text = std::move(value);
      t.quoted = true;
    } else if (std::isdigit(static_cast<unsigned char>(c)) != 0 ||
               (c == '.' && i + 1 < text.size() &&
                std::isdigit(static_cast<unsigned char>(text[i + 1])) != 0)) {
      bool real = false;
      while (i < text.size() && word_char(text[i])) {
        if (std::isalpha(static_cast<unsigned char>(text[i])) != 0 && text[i] != 'e' &&
            text[i] != 'E')
          break;
        if (text[i] == 'e' || text[i] == 'E') {
          real = true;
          if (i + 1 < text.size() && (text[i + 1] == '+' || text[i + 1] == '-')) ++i;
        }
        ++i;
        if (i < text.size() && text[i] == '.') {
          real = true;
          ++i;
        }
      }
      if (i < text.size() && word_char(text[i])) {
        // Something like 2abc: read the whole word instead.
        i = start;
        while (i < text.size() && word_char(text[i])) ++i;
        t.kind = Tok::word;
      } else {
        t.kind = real ? Tok::real : Tok::number;
      }
      t.text = std::string(text.substr(start, i - start));
    } else if (word_char(c)) {
      while (i < text.size() && word_char(text[i])) ++i;
      t.kind = Tok::word;
      t.text = std::string(text.substr(start, i - start));
    } else {
      static constexpr std::string_view two[] = {"->", ">=", ":="};
      t.kind = Tok::punct;
      for (auto p : two) {
        if (text.substr(i, 2) == p) {
          t.text = std::string(p);
          i += 2;
          break;
        }
      }
      if (t.text.empty()) {
        static constexpr std::string_view one = "()[]{},:=!&|";
        if (one.find(c) == std::string_view::npos)
          error(std::string("unexpected character '") + c + "'");
        t.text = std::string(1, c);
        ++i;
      }
    }
    col += i - start;
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

const Token& TokenStream::peek(std::size_t ahead) const {
  return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
}

Token TokenStream::next() {
  Token t = peek();
  if (pos_ < tokens_.size() - 1) ++pos_;
  return t;
}

bool TokenStream::accept(std::string_view punct) {
  if (peek().kind == Tok::punct && peek().text == punct) {
    next();
    return true;
  }
  return false;
}

void TokenStream::expect(std::string_view punct) {
  if (!accept(punct)) fail(peek(), "expected '" + std::string(punct) + "'");
}

Token TokenStream::expect_word(std::string_view what) {
  if (peek().kind != Tok::word) fail(peek(), "expected " + std::string(what));
  return next();
}

std::size_t TokenStream::expect_number(std::string_view what) {
  if (peek().kind != Tok::number) fail(peek(), "expected " + std::string(what));
  const Token t = next();
  try {
    return static_cast<std::size_t>(std::stoull(t.text));
  } catch (const std::exception&) {
    fail(t, "number out of range");
  }
}

void TokenStream::expect_end() {
  if (!at_end()) fail(peek(), "unexpected '" + peek().text + "'");
}

void TokenStream::fail(const Token& at, const std::string& message) const {
  throw ParseError({{at.line, at.column, message}});
}

}  // namespace insider::detail
