#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sweedler/signature.hpp"
#include "sweedler/term.hpp"

namespace sweedler {

class CoreSyntaxError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Reader for the sugar-free notation produced by print.hpp:
//   x:A, y:B |- (f(x), g^a.2 | h(y)) : (B, C)
// A bare identifier is a variable when bound in the context, otherwise a
// zero-argument generator application.
class CoreReader {
 public:
  explicit CoreReader(std::string_view text) : s_(text) {}

  Judgment judgment() {
    Judgment j;
    skip();
    if (!peek("|-")) {
      do {
        VarName v(ident());
        expect(":");
        j.context.push_back({v, ObjectName(ident())});
      } while (accept(","));
    }
    expect("|-");
    ctx_ = &j.context;
    tuple(j.mains, j.scalars);
    expect(":");
    j.types = types();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    j.validate_shape();
    return j;
  }

  // Parses "(M | Z)" against a context.
  void tuple(std::vector<Term>& mains, std::vector<Term>& scalars) {
    expect("(");
    if (!peek("|") && !peek(")")) do
        mains.push_back(term());
      while (accept(","));
    if (accept("|")) {
      if (!peek(")")) do
          scalars.push_back(term());
        while (accept(","));
    }
    expect(")");
  }

  std::vector<ObjectName> types() {
    std::vector<ObjectName> out;
    expect("(");
    if (!peek(")")) do
        out.emplace_back(ident());
      while (accept(","));
    expect(")");
    return out;
  }

  void set_context(const Context* c) { ctx_ = c; }

  Term term() {
    std::string name = ident();
    std::optional<Label> label;
    std::optional<unsigned> index;
    bool marked = false;
    if (accept("^")) {
      label = Label(label_text());
      marked = true;
    }
    if (accept(".")) {
      index = static_cast<unsigned>(std::stoul(number()));
      marked = true;
    }
    std::vector<Term> args;
    if (accept("(")) {
      marked = true;
      if (!peek(")")) do
          args.push_back(term());
        while (accept(","));
      expect(")");
    }
    if (!marked && ctx_)
      for (const auto& e : *ctx_)
        if (e.var.str() == name) return Term::var(VarName(name));
    return Term::app(GeneratorName(name), label, index, std::move(args));
  }

  bool at_end() {
    skip();
    return pos_ == s_.size();
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(std::string_view t) {
    skip();
    return s_.substr(pos_, t.size()) == t;
  }
  bool accept(std::string_view t) {
    if (!peek(t)) return false;
    pos_ += t.size();
    return true;
  }
  void expect(std::string_view t) {
    if (!accept(t)) fail("expected '" + std::string(t) + "'");
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw CoreSyntaxError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }
  std::string ident() {
    skip();
    std::size_t b = pos_;
    if (pos_ >= s_.size() || !std::isalpha(static_cast<unsigned char>(s_[pos_]))) fail("expected identifier");
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '*') ++pos_;
    return std::string(s_.substr(b, pos_ - b));
  }
  std::string label_text() {
    skip();
    std::size_t b = pos_;
    if (pos_ < s_.size() && s_[pos_] == '%') ++pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    if (pos_ == b) fail("expected label");
    return std::string(s_.substr(b, pos_ - b));
  }
  std::string number() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == b) fail("expected component index");
    return std::string(s_.substr(b, pos_ - b));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  const Context* ctx_ = nullptr;
};

inline Judgment read_judgment(std::string_view text) { return CoreReader(text).judgment(); }

}  // namespace sweedler
