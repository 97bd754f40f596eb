#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sweedler/algebra.hpp"
#include "sweedler/parser.hpp"
#include "sweedler/proof.hpp"
#include "sweedler/theories.hpp"

namespace sweedler {

struct LoadOptions {
  bool sugar = true;
  std::uint64_t search_bound = default_search_bound;
};

struct NamedJudgment {
  std::string name;
  std::string theory;
  Judgment judgment;
  SourceSpan span;
};

struct ProofOutcome {
  ProofScript script;
  ProofReport report;
  std::shared_ptr<const Presentation> presentation;  // as it stood when the proof was checked
  SourceSpan span;
};

struct Assertion {
  std::string left, right;
  bool ok = false;
  SourceSpan span;
};

struct FileResult {
  std::string path;
  std::vector<NamedJudgment> judgments;
  std::vector<ProofOutcome> proofs;
  std::vector<Assertion> assertions;
  std::vector<std::string> theories;

  const NamedJudgment* find(const std::string& name) const {
    for (const auto& j : judgments)
      if (j.name == name) return &j;
    return nullptr;
  }
};

struct Lemma {
  std::string theory;
  Axiom axiom;
};

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ParseError(SourceSpan{p.string(), 0, 0, 0}, "cannot open file");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Theories, named judgments, proofs and lemmas collected from source files.
class Workspace {
 public:
  explicit Workspace(LoadOptions opt = {}) : opt_(opt) {}

  const FileResult& load_file(const std::filesystem::path& path) {
    std::filesystem::path canon = std::filesystem::weakly_canonical(path);
    if (auto it = files_.find(canon.string()); it != files_.end()) {
      if (!it->second) throw ParseError(SourceSpan{path.string(), 0, 0, 0}, "import cycle");
      return *it->second;
    }
    files_[canon.string()] = nullptr;
    auto r = std::make_unique<FileResult>(load(read_file(path), path.string(), canon.parent_path()));
    auto& slot = files_[canon.string()];
    slot = std::move(r);
    return *slot;
  }

  FileResult load_text(const std::string& text, const std::string& name = "<input>",
                       const std::filesystem::path& dir = std::filesystem::current_path()) {
    return load(text, name, dir);
  }

  bool has_theory(const std::string& name) const {
    if (theories_.count(name)) return true;
    const auto& b = builtin_theory_names();
    return std::find(b.begin(), b.end(), name) != b.end();
  }

  const Presentation& theory(const std::string& name) {
    if (auto it = theories_.find(name); it != theories_.end()) return it->second;
    const auto& b = builtin_theory_names();
    if (std::find(b.begin(), b.end(), name) == b.end()) throw std::invalid_argument("unknown theory '" + name + "'");
    return theories_.emplace(name, builtin_theory(name)).first->second;
  }

  std::vector<std::string> user_theories() const {
    std::vector<std::string> out;
    for (const auto& [n, p] : theories_) {
      const auto& b = builtin_theory_names();
      if (std::find(b.begin(), b.end(), n) == b.end()) out.push_back(n);
    }
    return out;
  }

  // The theory plus every lemma proved in a theory it contains.
  Presentation presentation_for(const std::string& name) {
    Presentation p = theory(name);
    for (const auto& l : lemmas_)
      if (p.includes(l.theory) && !p.find_axiom(l.axiom.name)) p.axioms.push_back(l.axiom);
    return p;
  }

  const std::vector<Lemma>& lemmas() const { return lemmas_; }
  const LoadOptions& options() const { return opt_; }

 private:
  FileResult load(const std::string& text, const std::string& file, const std::filesystem::path& dir) {
    FileResult out;
    out.path = file;
    TokenParser tp(tokenize(text, file));
    std::string current_theory;
    while (!tp.at_end()) {
      SourceSpan at = tp.peek().span;
      if (tp.accept_word("import")) {
        std::string rel = tp.string_literal();
        std::filesystem::path target = dir / rel;
        if (!std::filesystem::exists(target)) throw ParseError(at, "imported file '" + rel + "' not found");
        load_file(target);
      } else if (tp.accept_word("theory")) {
        out.theories.push_back(theory_block(tp, at));
      } else if (tp.accept_word("use")) {
        current_theory = tp.ident("a theory name");
        if (!has_theory(current_theory)) throw ParseError(at, "unknown theory '" + current_theory + "'");
      } else if (tp.accept_word("prove")) {
        out.proofs.push_back(proof_block(tp, at));
      } else if (tp.accept_word("same")) {
        Assertion a{tp.ident("a judgment name"), tp.ident("a judgment name"), false, at};
        const NamedJudgment* l = out.find(a.left);
        const NamedJudgment* r = out.find(a.right);
        if (!l || !r) throw ParseError(at, "unknown judgment in 'same'");
        a.ok = to_string(l->judgment) == to_string(r->judgment);
        out.assertions.push_back(a);
      } else if (tp.peek().kind == TokenKind::Ident && tp.is("=", 1)) {
        std::string name = tp.ident();
        tp.expect("=");
        if (current_theory.empty()) throw ParseError(at, "no theory selected; add 'use THEORY' first");
        if (out.find(name)) throw ParseError(at, "judgment '" + name + "' defined twice");
        out.judgments.push_back({name, current_theory, judgment_expr(tp, out, current_theory), at});
      } else {
        tp.fail("expected import, theory, use, prove, same or NAME = judgment" + tp.found());
      }
    }
    return out;
  }

  Judgment judgment_expr(TokenParser& tp, const FileResult& f, const std::string& th) {
    SourceSpan at = tp.peek().span;
    for (const char* op : {"compose", "tensor"}) {
      if (tp.is_word(op) && tp.is("(", 1)) {
        tp.next();
        tp.expect("(");
        std::string a = tp.ident("a judgment name");
        tp.expect(",");
        std::string b = tp.ident("a judgment name");
        tp.expect(")");
        const NamedJudgment* ja = f.find(a);
        const NamedJudgment* jb = f.find(b);
        if (!ja || !jb) throw ParseError(at, "unknown judgment in " + std::string(op));
        const Signature& s = theory(th).signature;
        try {
          return std::string(op) == "compose" ? compose(s, ja->judgment, jb->judgment)
                                              : tensor(s, ja->judgment, jb->judgment);
        } catch (const std::exception& e) {
          throw ParseError(at, std::string(op) + " failed: " + e.what());
        }
      }
    }
    RawJudgment raw = tp.judgment();
    return resolve(theory(th), raw);
  }

  Judgment resolve(const Presentation& p, const RawJudgment& raw) {
    return resolve_judgment(p, raw, opt_.sugar);
  }

  std::vector<ObjectName> objects_on_line(TokenParser& tp, std::size_t line) {
    std::vector<ObjectName> out;
    while (tp.peek().kind == TokenKind::Ident && tp.peek().span.line == line) out.emplace_back(tp.next().text);
    return out;
  }

  void extend(Presentation& p, const Presentation& base) {
    p.signature.merge(base.signature);
    for (const auto& a : base.axioms)
      if (!p.find_axiom(a.name)) p.axioms.push_back(a);
    for (const auto& d : base.definitions)
      if (!p.find_definition(d.name)) p.definitions.push_back(d);
    for (const auto& [o, r] : base.sweedler) p.sweedler.emplace(o, r);
    for (const auto& l : base.lineage)
      if (!p.includes(l)) p.lineage.push_back(l);
    if (!p.includes(base.name)) p.lineage.push_back(base.name);
  }

  std::string theory_block(TokenParser& tp, const SourceSpan& at) {
    std::string name = tp.ident("a theory name");
    if (has_theory(name)) throw ParseError(at, "theory '" + name + "' already defined");
    Presentation p;
    p.name = name;
    tp.expect("{");
    auto guard = [&](const SourceSpan& where, auto&& f) {
      try {
        f();
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception& e) {
        throw ParseError(where, e.what());
      }
    };
    while (!tp.accept("}")) {
      SourceSpan item = tp.peek().span;
      if (tp.accept_word("extends")) {
        std::string base = tp.ident("a theory name");
        if (!has_theory(base)) throw ParseError(item, "unknown theory '" + base + "'");
        guard(item, [&] { extend(p, theory(base)); });
      } else if (tp.accept_word("object")) {
        auto objs = objects_on_line(tp, item.line);
        if (objs.empty()) throw ParseError(item, "object needs at least one name");
        for (const auto& o : objs) {
          if (p.signature.find(GeneratorName(o.str())))
            throw ParseError(item, "object '" + o.str() + "' clashes with a generator");
          p.signature.add_object(o);
        }
      } else if (tp.accept_word("gen")) {
        std::string g = tp.ident("a generator name");
        tp.expect(":");
        std::vector<ObjectName> dom;
        while (tp.peek().kind == TokenKind::Ident) dom.emplace_back(tp.next().text);
        std::size_t line = tp.peek().span.line;
        tp.expect("->");
        auto cod = objects_on_line(tp, line);
        if (p.signature.has_object(ObjectName(g)))
          throw ParseError(item, "generator '" + g + "' clashes with an object");
        guard(item, [&] { p.signature.add_generator(GeneratorName(g), {dom, cod}); });
      } else if (tp.accept_word("axiom")) {
        std::string n = tp.ident("an axiom name");
        tp.expect(":");
        Context ctx = tp.context();
        tp.expect("|-");
        RawTuple l = tp.tuple();
        tp.expect("=");
        RawTuple r = tp.tuple();
        tp.expect(":");
        auto types = tp.types();
        if (p.find_axiom(n)) throw ParseError(item, "axiom '" + n + "' declared twice");
        p.axioms.push_back({n, resolve(p, {ctx, l, types, item}), resolve(p, {ctx, r, types, item})});
      } else if (tp.accept_word("def")) {
        std::string n = tp.ident("a definition name");
        tp.expect("(");
        Context ctx = tp.context();
        tp.expect(")");
        tp.expect(":=");
        RawTuple body = tp.tuple();
        tp.expect(":");
        auto types = tp.types();
        if (p.find_definition(n)) throw ParseError(item, "definition '" + n + "' declared twice");
        p.definitions.push_back({n, resolve(p, {ctx, body, types, item})});
      } else if (tp.accept_word("sweedler")) {
        ObjectName o(tp.ident("an object"));
        tp.expect(":=");
        tp.expect("(");
        GeneratorName c(tp.ident("a comultiplication"));
        tp.expect(",");
        GeneratorName e(tp.ident("a counit"));
        tp.expect(")");
        p.sweedler[o] = {c, e};
      } else if (tp.accept_word("augment")) {
        std::string kind = tp.ident("compact_closed, hypergraph or tensor");
        guard(item, [&] {
          std::string keep = p.name;
          if (kind == "compact_closed") {
            p = augment_compact_closed(std::move(p));
          } else if (kind == "hypergraph") {
            p = augment_hypergraph(std::move(p));
          } else if (kind == "tensor") {
            ObjectName a(tp.ident("an object")), b(tp.ident("an object"));
            p = augment_tensor_type(std::move(p), a, b);
          } else {
            throw ParseError(item, "unknown augmentation '" + kind + "'");
          }
          p.name = keep;
        });
      } else {
        tp.fail("expected extends, object, gen, axiom, def, sweedler or augment" + tp.found());
      }
    }
    auto problems = presentation_problems(p);
    if (!problems.empty()) {
      std::string msg = "theory '" + name + "' is invalid:";
      for (const auto& q : problems) msg += "\n  " + q;
      throw ParseError(at, msg);
    }
    theories_.emplace(name, std::move(p));
    return name;
  }

  Judgment line(TokenParser& tp, const Presentation& p, const Judgment* start) {
    SourceSpan at = tp.peek().span;
    if (start && tp.is("(")) {
      RawTuple t = tp.tuple();
      return resolve(p, {start->context, t, start->types, at});
    }
    return resolve(p, tp.judgment());
  }

  ProofOutcome proof_block(TokenParser& tp, const SourceSpan& at) {
    ProofOutcome o;
    o.span = at;
    o.script.name = tp.ident("a proof name");
    tp.expect_word("in");
    o.script.theory = tp.ident("a theory name");
    if (!has_theory(o.script.theory)) throw ParseError(at, "unknown theory '" + o.script.theory + "'");
    auto p = std::make_shared<Presentation>(presentation_for(o.script.theory));
    tp.expect("{");
    tp.expect_word("start");
    tp.expect(":");
    o.script.start = line(tp, *p, nullptr);
    while (tp.is_word("step")) {
      SourceSpan st = tp.next().span;
      ProofStep s;
      s.line = st.line;
      s.axiom = tp.ident("an axiom name");
      s.reverse = tp.accept("<-");
      for (const char* which : {"pre", "post"}) {
        if (!tp.is_word(which)) continue;
        tp.next();
        tp.expect(":");
        if (tp.accept_word("auto")) continue;
        (std::string(which) == "pre" ? s.pre : s.post) = line(tp, *p, nullptr);
      }
      if (!tp.accept_word("gives")) throw ParseError(st, "step is missing 'gives:'");
      tp.expect(":");
      s.resulting = line(tp, *p, &o.script.start);
      o.script.steps.push_back(std::move(s));
    }
    if (tp.accept_word("qed")) {
      tp.expect(":");
      o.script.claim = line(tp, *p, &o.script.start);
    }
    tp.expect("}");
    o.report = check_proof(*p, o.script, opt_.search_bound);
    o.presentation = p;
    if (o.report.ok()) {
      if (has_lemma(o.script.name) || p->find_axiom(o.script.name))
        throw ParseError(at, "lemma name '" + o.script.name + "' already in use");
      const Judgment& last = o.script.claim ? *o.script.claim
                             : o.script.steps.empty() ? o.script.start
                                                      : o.script.steps.back().resulting;
      lemmas_.push_back({o.script.theory, {o.script.name, o.script.start, last}});
    }
    return o;
  }

  bool has_lemma(const std::string& n) const {
    for (const auto& l : lemmas_)
      if (l.axiom.name == n) return true;
    return false;
  }

  LoadOptions opt_;
  std::map<std::string, Presentation> theories_;
  std::vector<Lemma> lemmas_;
  std::map<std::string, std::unique_ptr<FileResult>> files_;
};

}  // namespace sweedler
