#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sweedler {

struct SourceSpan {
  std::string file;
  std::size_t line = 0;
  std::size_t column = 0;
  std::size_t end_column = 0;
};

inline std::string to_string(const SourceSpan& s) {
  return (s.file.empty() ? std::string("<input>") : s.file) + ":" + std::to_string(s.line) + ":" +
         std::to_string(s.column);
}

class ParseError : public std::runtime_error {
 public:
  ParseError(SourceSpan span, const std::string& msg)
      : std::runtime_error(to_string(span) + ": error: " + msg), span_(std::move(span)), message_(msg) {}
  const SourceSpan& span() const { return span_; }
  const std::string& message() const { return message_; }

 private:
  SourceSpan span_;
  std::string message_;
};

enum class TokenKind { Ident, Number, String, Punct, End };

struct Token {
  TokenKind kind;
  std::string text;
  SourceSpan span;
  bool glued = false;  // no whitespace before this token
};

// Identifiers are [A-Za-z][A-Za-z0-9_']*\*? except that an underscore
// directly followed by "(digit" starts a Sweedler subscript instead.
inline std::vector<Token> tokenize(std::string_view src, const std::string& file = {}) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  bool glued = false;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto at = [&](std::size_t k) { return i + k < src.size() ? src[i + k] : '\0'; };
  auto subscript_ahead = [&](std::size_t k) {
    return at(k) == '_' && at(k + 1) == '(' && std::isdigit(static_cast<unsigned char>(at(k + 2)));
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      glued = false;
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      glued = false;
      continue;
    }
    SourceSpan span{file, line, col, col};
    std::size_t b = i;
    TokenKind kind = TokenKind::Punct;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      kind = TokenKind::Ident;
      std::size_t n = 1;
      while (true) {
        char d = at(n);
        if (d == '_' && subscript_ahead(n)) break;
        if (!(std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '\'')) break;
        ++n;
      }
      if (at(n) == '*') ++n;
      advance(n);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      kind = TokenKind::Number;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) advance(1);
    } else if (c == '"') {
      kind = TokenKind::String;
      advance(1);
      while (i < src.size() && src[i] != '"' && src[i] != '\n') advance(1);
      if (at(0) != '"') throw ParseError(span, "unterminated string");
      advance(1);
      out.push_back({kind, std::string(src.substr(b + 1, i - b - 2)), span, glued});
      out.back().span.end_column = col;
      glued = true;
      continue;
    } else {
      static const char* two[] = {"|-", "->", ":=", "<-"};
      std::size_t n = 1;
      for (auto* t : two)
        if (src.substr(i, 2) == t) n = 2;
      if (n == 1 && std::string_view("(),|:^.<>{}=/_%;").find(c) == std::string_view::npos)
        throw ParseError(span, std::string("unexpected character '") + c + "'");
      advance(n);
    }
    out.push_back({kind, std::string(src.substr(b, i - b)), span, glued});
    out.back().span.end_column = col;
    glued = true;
  }
  out.push_back({TokenKind::End, "", SourceSpan{file, line, col, col}, false});
  return out;
}

}  // namespace sweedler
