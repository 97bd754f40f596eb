#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sweedler/lexer.hpp"
#include "sweedler/print.hpp"
#include "sweedler/signature.hpp"
#include "sweedler/term.hpp"

namespace sweedler {

// Surface term before name resolution and desugaring.
struct RawTerm {
  enum class Kind { Name, Bracket, Cancel, Subscript };
  Kind kind = Kind::Name;
  std::string name;
  std::optional<std::string> label;
  std::optional<unsigned> index;
  bool parens = false;
  std::vector<RawTerm> args;
  unsigned subscript = 0;
  SourceSpan span;
};

inline std::string key(const RawTerm& t) {
  std::string s;
  switch (t.kind) {
    case RawTerm::Kind::Bracket: return "<" + key(t.args[0]) + "|" + key(t.args[1]) + ">";
    case RawTerm::Kind::Cancel: return "/" + key(t.args[0]) + "/";
    case RawTerm::Kind::Subscript: return key(t.args[0]) + "_(" + std::to_string(t.subscript) + ")";
    case RawTerm::Kind::Name: break;
  }
  s = t.name;
  if (t.label) s += "^" + *t.label;
  if (t.index) s += "." + std::to_string(*t.index);
  if (t.parens) {
    s += "(";
    for (std::size_t i = 0; i < t.args.size(); ++i) s += (i ? ", " : "") + key(t.args[i]);
    s += ")";
  }
  return s;
}

struct RawTuple {
  std::vector<RawTerm> mains;
  std::vector<RawTerm> scalars;
  SourceSpan span;
};

struct RawJudgment {
  Context context;
  RawTuple tuple;
  std::vector<ObjectName> types;
  SourceSpan span;
};

class TokenParser {
 public:
  explicit TokenParser(std::vector<Token> tokens) : t_(std::move(tokens)) {}

  const Token& peek(std::size_t k = 0) const { return t_[std::min(pos_ + k, t_.size() - 1)]; }
  const Token& next() { return t_[pos_ < t_.size() - 1 ? pos_++ : pos_]; }
  bool at_end() const { return peek().kind == TokenKind::End; }
  bool is(std::string_view p, std::size_t k = 0) const {
    return peek(k).kind == TokenKind::Punct && peek(k).text == p;
  }
  bool is_word(std::string_view w, std::size_t k = 0) const {
    return peek(k).kind == TokenKind::Ident && peek(k).text == w;
  }
  bool accept(std::string_view p) {
    if (!is(p)) return false;
    next();
    return true;
  }
  bool accept_word(std::string_view w) {
    if (!is_word(w)) return false;
    next();
    return true;
  }
  const Token& expect(std::string_view p) {
    if (!is(p)) fail("expected '" + std::string(p) + "'" + found());
    return next();
  }
  void expect_word(std::string_view w) {
    if (!accept_word(w)) fail("expected '" + std::string(w) + "'" + found());
  }
  std::string ident(const char* what = "identifier") {
    if (peek().kind != TokenKind::Ident) fail(std::string("expected ") + what + found());
    return next().text;
  }
  unsigned number() {
    if (peek().kind != TokenKind::Number) fail("expected a number" + found());
    return static_cast<unsigned>(std::stoul(next().text));
  }
  std::string string_literal() {
    if (peek().kind != TokenKind::String) fail("expected a quoted path" + found());
    return next().text;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(peek().span, msg); }
  std::string found() const {
    return peek().kind == TokenKind::End ? ", found end of input" : ", found '" + peek().text + "'";
  }

  RawTerm term() {
    RawTerm t;
    t.span = peek().span;
    if (accept("<")) {
      t.kind = RawTerm::Kind::Bracket;
      t.args.push_back(term());
      expect("|");
      t.args.push_back(term());
      expect(">");
    } else if (accept("/")) {
      t.kind = RawTerm::Kind::Cancel;
      t.args.push_back(term());
      expect("/");
    } else {
      t.name = ident("a term");
      if (accept("^")) t.label = label();
      if (accept(".")) t.index = number();
      if (accept("(")) {
        t.parens = true;
        if (!is(")")) do
            t.args.push_back(term());
          while (accept(","));
        expect(")");
      }
    }
    while (is("_") && is("(", 1) && peek(2).kind == TokenKind::Number) {
      next();
      next();
      RawTerm s;
      s.kind = RawTerm::Kind::Subscript;
      s.span = t.span;
      s.subscript = number();
      expect(")");
      s.args.push_back(std::move(t));
      t = std::move(s);
    }
    return t;
  }

  std::string label() {
    std::string l;
    if (accept("%")) l = "%";
    if (peek().kind == TokenKind::Ident || peek().kind == TokenKind::Number) return l + next().text;
    fail("expected a label" + found());
  }

  RawTuple tuple() {
    RawTuple r;
    r.span = expect("(").span;
    if (!is("|") && !is(")")) do
        r.mains.push_back(term());
      while (accept(","));
    if (accept("|") && !is(")")) do
        r.scalars.push_back(term());
      while (accept(","));
    expect(")");
    return r;
  }

  std::vector<ObjectName> types() {
    std::vector<ObjectName> out;
    expect("(");
    if (!is(")")) do
        out.emplace_back(ident("an object"));
      while (accept(","));
    expect(")");
    return out;
  }

  Context context() {
    Context c;
    if (is("|-") || is(")")) return c;
    do {
      SourceSpan at = peek().span;
      VarName v(ident("a variable"));
      expect(":");
      ObjectName o(ident("an object"));
      for (const auto& e : c)
        if (e.var == v) throw ParseError(at, "variable '" + v.str() + "' bound twice");
      c.push_back({v, o});
    } while (accept(","));
    return c;
  }

  RawJudgment judgment() {
    RawJudgment j;
    j.span = peek().span;
    j.context = context();
    expect("|-");
    j.tuple = tuple();
    expect(":");
    j.types = types();
    return j;
  }

  // True when the upcoming tokens start a judgment rather than a bare tuple.
  bool judgment_ahead() const { return is("|-") || (peek().kind == TokenKind::Ident && is(":", 1)); }

  std::size_t position() const { return pos_; }

 private:
  std::vector<Token> t_;
  std::size_t pos_ = 0;
};

// Turns surface syntax into core terms: resolves names, supplies omitted
// labels, expands definitions and then Sweedler and duality sugar.
class Resolver {
 public:
  Resolver(const Presentation& p, Context ctx, bool sugar) : p_(p), ctx_(std::move(ctx)), sugar_(sugar) {}

  Judgment judgment(const RawTuple& t, const std::vector<ObjectName>& types, const SourceSpan& span) {
    for (const auto& r : t.mains) prescan(r);
    for (const auto& r : t.scalars) prescan(r);
    Judgment j;
    j.context = ctx_;
    for (const auto& r : t.mains) j.mains.push_back(resolve(r));
    for (const auto& r : t.scalars) {
      if (const Definition* d = scalar_definition(r)) {
        expand(*d, r);
        continue;
      }
      j.scalars.push_back(resolve(r));
    }
    j.scalars.insert(j.scalars.end(), extra_scalars_.begin(), extra_scalars_.end());
    j.types = types;
    if (j.mains.size() != j.types.size())
      throw ParseError(span, std::to_string(j.mains.size()) + " main terms but " + std::to_string(j.types.size()) +
                                 " codomain types");
    return j;
  }

 private:
  const Signature& sig() const { return p_.signature; }
  bool is_var(const std::string& n) const {
    for (const auto& e : ctx_)
      if (e.var.str() == n) return true;
    return false;
  }
  bool is_lambda(const RawTerm& r) const {
    return r.kind == RawTerm::Kind::Name && r.label && r.name.rfind("lam_", 0) == 0 &&
           !sig().find(GeneratorName(r.name));
  }
  [[noreturn]] static void fail(const RawTerm& r, const std::string& msg) { throw ParseError(r.span, msg); }
  void require_sugar(const RawTerm& r, const char* what) const {
    if (!sugar_) fail(r, std::string(what) + " is sugar and sugar is disabled");
  }

  void prescan(const RawTerm& r) {
    if (r.label) used_.insert(Label(*r.label));
    if (is_lambda(r)) lambda_.emplace(*r.label, r.name.substr(4));
    if (r.kind == RawTerm::Kind::Subscript) {
      unsigned& n = max_subscript_[key(r.args[0])];
      n = std::max(n, r.subscript);
    }
    for (const auto& a : r.args) prescan(a);
  }

  std::optional<ObjectName> type_of(const Term& t) const {
    if (t.is_var()) {
      for (const auto& e : ctx_)
        if (e.var == t.var_name()) return e.type;
      return std::nullopt;
    }
    const Arity* a = sig().find(t.generator());
    if (!a || a->codomain.empty()) return std::nullopt;
    std::size_t k = t.index() ? *t.index() - 1 : 0;
    if (k >= a->codomain.size()) return std::nullopt;
    return a->codomain[k];
  }

  const SweedlerRegistration& registration(const RawTerm& r, const Term& base) const {
    auto ty = type_of(base);
    if (!ty) fail(r, "cannot determine the type of '" + to_string(base) + "' for Sweedler notation");
    auto it = p_.sweedler.find(*ty);
    if (it == p_.sweedler.end()) fail(r, "no comultiplication registered for object " + ty->str());
    return it->second;
  }

  Label auto_label(const std::string& gen) {
    unsigned& n = auto_counter_[gen];
    Label l("%" + gen + std::to_string(++n));
    while (used_.count(l)) l = Label("%" + gen + std::to_string(++n));
    used_.insert(l);
    return l;
  }

  const Definition* scalar_definition(const RawTerm& r) const {
    if (r.kind != RawTerm::Kind::Name || sig().find(GeneratorName(r.name))) return nullptr;
    const Definition* d = p_.find_definition(r.name);
    return d && d->body.mains.empty() ? d : nullptr;
  }

  // Instantiates a definition once per (name, label, arguments).
  const std::vector<Term>& expand(const Definition& d, const RawTerm& r) {
    if (!sugar_) fail(r, "definition '" + d.name + "' used with sugar disabled");
    std::vector<Term> args;
    for (const auto& a : r.args) args.push_back(resolve(a));
    std::string k = d.name + "^" + (r.label ? *r.label : "");
    for (const auto& a : args) k += "," + to_string(a);
    if (auto it = instances_.find(k); it != instances_.end()) return it->second;
    if (args.size() != d.body.context.size())
      fail(r, "definition '" + d.name + "' takes " + std::to_string(d.body.context.size()) + " arguments");
    Substitution s;
    for (std::size_t i = 0; i < args.size(); ++i) s.insert_or_assign(d.body.context[i].var, args[i]);
    LabelMap fresh;
    for (const auto& l : labels_of(d.body)) {
      Label f = fresh_label(l, used_);
      used_.insert(f);
      fresh.emplace(l, f);
    }
    std::vector<Term> mains;
    for (const auto& t : d.body.mains) mains.push_back(substitute(relabel(t, fresh), s));
    for (const auto& t : d.body.scalars) extra_scalars_.push_back(substitute(relabel(t, fresh), s));
    return instances_.emplace(k, std::move(mains)).first->second;
  }

  Term resolve(const RawTerm& r) {
    switch (r.kind) {
      case RawTerm::Kind::Subscript: {
        require_sugar(r, "Sweedler notation");
        Term base = resolve(r.args[0]);
        const SweedlerRegistration& reg = registration(r, base);
        unsigned n = max_subscript_.at(key(r.args[0]));
        unsigned k = r.subscript;
        if (k == 0) fail(r, "Sweedler subscripts start at 1");
        auto c = [&](unsigned i, Term t) { return Term::app(reg.comult, std::nullopt, i, {std::move(t)}); };
        if (n <= 2) return c(k, base);
        Term t = base;
        for (unsigned i = 1; i < k; ++i) t = c(2, t);
        return k == n ? t : c(1, t);
      }
      case RawTerm::Kind::Cancel: {
        require_sugar(r, "cancel");
        Term t = resolve(r.args[0]);
        return Term::app(registration(r, t).counit, std::nullopt, std::nullopt, {t});
      }
      case RawTerm::Kind::Bracket: {
        require_sugar(r, "the duality bracket");
        Term a = resolve(r.args[0]), b = resolve(r.args[1]);
        auto ty = type_of(b);
        if (!ty) fail(r, "cannot determine the type of '" + to_string(b) + "' in a duality bracket");
        GeneratorName eps("eps_" + ty->str());
        if (!sig().find(eps)) fail(r, "object " + ty->str() + " has no dual pairing");
        return Term::app(eps, std::nullopt, std::nullopt, {a, b});
      }
      case RawTerm::Kind::Name: break;
    }
    GeneratorName g(r.name);
    if (r.name == "cancel" && !sig().find(g) && r.parens && r.args.size() == 1) {
      RawTerm c = r;
      c.kind = RawTerm::Kind::Cancel;
      return resolve(c);
    }
    if (is_lambda(r)) {
      require_sugar(r, "lambda");
      if (is_var(*r.label)) fail(r, "label '" + *r.label + "' is also a context variable");
      GeneratorName eta("eta_" + r.name.substr(4));
      if (!sig().find(eta)) fail(r, "object " + r.name.substr(4) + " has no dual pairing");
      return Term::app(eta, Label(*r.label), 2u, {});
    }
    bool bare = !r.label && !r.index && !r.parens;
    if (bare && is_var(r.name)) {
      if (lambda_.count(r.name)) fail(r, "'" + r.name + "' is both a context variable and a lambda label");
      return Term::var(VarName(r.name));
    }
    if (bare && sugar_ && lambda_.count(r.name) && !sig().find(g))
      return Term::app(GeneratorName("eta_" + lambda_.at(r.name)), Label(r.name), 1u, {});
    if (const Arity* a = sig().find(g)) {
      std::optional<Label> label;
      if (r.label) label = Label(*r.label);
      else if (sugar_ && a->domain.empty() && !a->codomain.empty()) label = auto_label(r.name);
      std::vector<Term> args;
      for (const auto& x : r.args) args.push_back(resolve(x));
      return Term::app(g, label, r.index, std::move(args));
    }
    if (const Definition* d = p_.find_definition(r.name)) {
      const std::vector<Term>& mains = expand(*d, r);
      if (mains.empty()) fail(r, "definition '" + d->name + "' has no main terms and can only be a scalar");
      if (mains.size() == 1 && (!r.index || *r.index == 1)) return mains[0];
      if (!r.index || *r.index < 1 || *r.index > mains.size())
        fail(r, "definition '" + d->name + "' needs a component index 1.." + std::to_string(mains.size()));
      return mains[*r.index - 1];
    }
    if (bare) fail(r, "unknown name '" + r.name + "'");
    // unknown generators are reported by the checker
    std::vector<Term> args;
    for (const auto& x : r.args) args.push_back(resolve(x));
    return Term::app(g, r.label ? std::optional<Label>(Label(*r.label)) : std::nullopt, r.index, std::move(args));
  }

  const Presentation& p_;
  Context ctx_;
  bool sugar_;
  std::set<Label> used_;
  std::map<std::string, std::string> lambda_;
  std::map<std::string, unsigned> max_subscript_;
  std::map<std::string, unsigned> auto_counter_;
  std::map<std::string, std::vector<Term>> instances_;
  std::vector<Term> extra_scalars_;
};

inline Judgment resolve_judgment(const Presentation& p, const RawJudgment& raw, bool sugar = true) {
  return Resolver(p, raw.context, sugar).judgment(raw.tuple, raw.types, raw.span);
}

// Parses one judgment in the surface syntax of a presentation.
inline Judgment parse_judgment(std::string_view text, const Presentation& p, bool sugar = true,
                               const std::string& file = {}) {
  TokenParser tp(tokenize(text, file));
  RawJudgment raw = tp.judgment();
  if (!tp.at_end()) tp.fail("trailing input after judgment");
  return resolve_judgment(p, raw, sugar);
}

}  // namespace sweedler
