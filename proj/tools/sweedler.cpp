#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>

#include "sweedler/corpus.hpp"
#include "sweedler/dot.hpp"
#include "sweedler/random.hpp"
#include "sweedler/workspace.hpp"

namespace fs = std::filesystem;
using namespace sweedler;

namespace {

struct Failure {
  int code;
};

struct Loaded {
  Judgment judgment;
  std::string theory;
};

class Session {
 public:
  Session(LoadOptions opt, std::string theory_arg) : ws_(opt), theory_arg_(std::move(theory_arg)) {}

  Workspace& ws() { return ws_; }

  // --theory accepts a builtin name, a theory from a loaded file, or a file
  // whose last theory is used.
  std::string default_theory() {
    if (theory_arg_.empty()) return {};
    if (ws_.has_theory(theory_arg_)) return theory_arg_;
    if (fs::exists(theory_arg_)) {
      const FileResult& r = ws_.load_file(theory_arg_);
      if (r.theories.empty()) throw ParseError(SourceSpan{theory_arg_, 0, 0, 0}, "file defines no theory");
      return r.theories.back();
    }
    throw ParseError(SourceSpan{}, "unknown theory '" + theory_arg_ + "'");
  }

  // FILE#name, a file holding one judgment, or literal judgment text.
  Loaded judgment(const std::string& ref) {
    auto hash = ref.find('#');
    std::string file = hash == std::string::npos ? ref : ref.substr(0, hash);
    if (fs::exists(file) && fs::is_regular_file(file)) {
      const FileResult& r = ws_.load_file(file);
      if (hash != std::string::npos) {
        std::string name = ref.substr(hash + 1);
        if (const NamedJudgment* j = r.find(name)) return {j->judgment, j->theory};
        throw ParseError(SourceSpan{file, 0, 0, 0}, "no judgment named '" + name + "'");
      }
      if (r.judgments.size() != 1)
        throw ParseError(SourceSpan{file, 0, 0, 0}, "file holds " + std::to_string(r.judgments.size()) +
                                                        " judgments; name one with FILE#name");
      return {r.judgments[0].judgment, r.judgments[0].theory};
    }
    std::string th = default_theory();
    if (th.empty()) throw ParseError(SourceSpan{}, "'" + ref + "' is not a file; literal judgments need --theory");
    return {parse_judgment(ref, ws_.theory(th), ws_.options().sugar), th};
  }

  const Signature& signature(const std::string& theory) { return ws_.theory(theory).signature; }

 private:
  Workspace ws_;
  std::string theory_arg_;
};

void print_witness(const Witness& w) {
  std::cout << "      pre:  " << to_string(w.pre) << "\n      post: " << to_string(w.post) << "\n";
}

int print_proofs(const FileResult& r, bool explain) {
  int code = 0;
  if (r.proofs.empty()) std::cout << r.path << ": no proofs\n";
  for (const auto& p : r.proofs) {
    bool ok = p.report.ok();
    std::cout << "proof " << p.script.name << " in " << p.script.theory << ": " << (ok ? "ok" : "FAILED") << " ("
              << p.script.steps.size() << " steps)\n";
    if (!p.report.start_ok) std::cout << "  " << to_string(p.span) << ": " << p.report.message << "\n";
    for (const auto& s : p.report.steps) {
      if (!explain && s.ok) continue;
      std::cout << "  step " << s.index << " " << s.axiom << (s.reverse ? " <-" : "") << ": "
                << (s.ok ? "ok" : r.path + ":" + std::to_string(s.line) + ": " + s.message) << "\n";
      if (explain && s.witness) print_witness(*s.witness);
    }
    if (!p.report.claim_ok) std::cout << "  qed: " << p.report.message << "\n";
    if (!ok) code = 1;
  }
  return code;
}

int fuzz(std::uint64_t seed, std::size_t count) {
  Signature s;
  for (auto* o : {"A", "B", "C"}) s.add_object(ObjectName(o));
  s.add_generator("p", {{"A"}, {"B"}});
  s.add_generator("q", {{"A", "B"}, {"C"}});
  s.add_generator("r", {{"C"}, {"A", "A"}});
  s.add_generator("t", {{"B"}, {"A", "B", "C"}});
  s.add_generator("u", {{}, {"A"}});
  s.add_generator("w", {{}, {"B", "C"}});
  s.add_generator("z", {{"C"}, {}});
  s.add_generator("c", {{}, {}});
  std::size_t failures = 0;
  for (std::size_t i = 0; i < count; ++i) {
    std::uint64_t k = seed + i;
    try {
      Derivation d = random_derivation(s, k);
      Judgment j = conclusion(s, d);
      if (!(check(s, j) == d)) throw std::runtime_error("round trip differs");
      assert_distinct_subterms(s, d);
      if (canonicalize(canonicalize(j)) != canonicalize(j)) throw std::runtime_error("canonicalize not idempotent");
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "seed " << k << ": " << e.what() << "\n";
    }
  }
  std::cout << count - failures << "/" << count << " samples passed\n";
  return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Type checker and proof checker for string-diagram terms"};
  app.require_subcommand(1);
  std::string theory;
  bool no_sugar = false;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> bound;
  app.add_option("--theory", theory, "theory name or theory file");
  app.add_flag("--no-sugar", no_sugar, "disable Sweedler, duality, definition and auto-label sugar");
  app.add_option("--seed", seed, "seed for fuzz");
  app.add_option("--bound", bound, "bound on the label-assignment search of eq");

  bool explain = false;
  auto* check_cmd = app.add_subcommand("check", "type-check every judgment in a file");
  std::string check_file;
  check_cmd->add_option("file", check_file)->required();
  check_cmd->add_flag("--explain", explain, "print derivation trees");

  std::string a_ref, b_ref;
  auto* compose_cmd = app.add_subcommand("compose", "compose two judgments");
  compose_cmd->add_option("first", a_ref)->required();
  compose_cmd->add_option("second", b_ref)->required();
  auto* tensor_cmd = app.add_subcommand("tensor", "tensor two judgments");
  tensor_cmd->add_option("first", a_ref)->required();
  tensor_cmd->add_option("second", b_ref)->required();
  auto* eq_cmd = app.add_subcommand("eq", "decide equality up to labels and scalar order");
  eq_cmd->add_option("first", a_ref)->required();
  eq_cmd->add_option("second", b_ref)->required();

  auto* prove_cmd = app.add_subcommand("prove", "check the proofs in a file");
  std::string prove_file;
  prove_cmd->add_option("file", prove_file)->required();
  prove_cmd->add_flag("--explain", explain, "print the witnesses of every step");

  auto* render_cmd = app.add_subcommand("render", "export a judgment as a string diagram");
  std::string render_ref, dot_out;
  render_cmd->add_option("judgment", render_ref)->required();
  render_cmd->add_option("--dot", dot_out, "output file, - for stdout")->required();

  auto* theories_cmd = app.add_subcommand("theories", "builtin theories");
  theories_cmd->require_subcommand(1);
  theories_cmd->add_subcommand("list", "list builtin theories");
  auto* show_cmd = theories_cmd->add_subcommand("show", "print a theory");
  std::string show_name;
  show_cmd->add_option("name", show_name)->required();

  auto* corpus_cmd = app.add_subcommand("corpus", "bundled proof scripts");
  corpus_cmd->require_subcommand(1);
  auto* corpus_run = corpus_cmd->add_subcommand("run", "check every bundled script");
  std::string corpus_dir = default_corpus_dir().string();
  corpus_run->add_option("--dir", corpus_dir, "corpus directory");

  auto* fuzz_cmd = app.add_subcommand("fuzz", "random round-trip and canonical-form checks");
  std::size_t fuzz_count = 1000;
  fuzz_cmd->add_option("--count", fuzz_count, "number of samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  LoadOptions opt;
  opt.sugar = !no_sugar;
  Session session(opt, theory);
  try {
    if (*check_cmd) {
      const FileResult& r = session.ws().load_file(check_file);
      int code = 0;
      for (const auto& j : r.judgments) {
        const Signature& s = session.signature(j.theory);
        try {
          Derivation d = check(s, j.judgment);
          std::cout << j.name << ": ok  " << to_string(j.judgment) << "\n";
          if (explain) std::cout << describe(s, d);
        } catch (const CheckError& e) {
          std::cout << to_string(j.span) << ": error: " << j.name << ": " << e.what() << "\n";
          code = 1;
        }
      }
      for (const auto& a : r.assertions) {
        std::cout << "same " << a.left << " " << a.right << ": " << (a.ok ? "ok" : "DIFFERENT") << "\n";
        if (!a.ok) code = 1;
      }
      return code;
    }
    if (*compose_cmd || *tensor_cmd) {
      Loaded a = session.judgment(a_ref), b = session.judgment(b_ref);
      const Signature& s = session.signature(a.theory);
      try {
        Judgment r = *compose_cmd ? compose(s, a.judgment, b.judgment) : tensor(s, a.judgment, b.judgment);
        std::cout << to_string(r) << "\n";
        return 0;
      } catch (const std::exception& e) {
        std::cout << "error: " << e.what() << "\n";
        return 1;
      }
    }
    if (*eq_cmd) {
      Loaded a = session.judgment(a_ref), b = session.judgment(b_ref);
      auto w = free_equal(a.judgment, b.judgment, bound.value_or(default_equality_bound));
      if (!w) {
        std::cout << "not equal\n";
        return 1;
      }
      std::cout << "equal\n  labels:";
      for (const auto& [from, to] : w->labels) std::cout << " " << from.str() << "->" << to.str();
      std::cout << "\n  scalar order:";
      for (auto i : w->scalar_order.images()) std::cout << " " << i + 1;
      std::cout << "\n  canonical: " << to_string(canonicalize(a.judgment, bound.value_or(default_canonical_bound))) << "\n";
      return 0;
    }
    if (*prove_cmd) return print_proofs(session.ws().load_file(prove_file), explain);
    if (*render_cmd) {
      Loaded a = session.judgment(render_ref);
      const Signature& s = session.signature(a.theory);
      std::string dot = to_dot(s, check(s, a.judgment));
      if (dot_out == "-") {
        std::cout << dot;
      } else {
        std::ofstream(dot_out) << dot;
      }
      return 0;
    }
    if (*theories_cmd) {
      if (show_cmd->parsed()) {
        Presentation p = session.ws().presentation_for(show_name);
        std::cout << "theory " << p.name << "\n";
        for (const auto& o : p.signature.objects()) std::cout << "  object " << o.str() << "\n";
        for (const auto& g : p.signature.generators()) {
          const Arity& a = p.signature.arity(g);
          std::cout << "  gen " << g.str() << " : ";
          for (const auto& o : a.domain) std::cout << o.str() << " ";
          std::cout << "->";
          for (const auto& o : a.codomain) std::cout << " " << o.str();
          std::cout << "\n";
        }
        for (const auto& ax : p.axioms)
          std::cout << "  axiom " << ax.name << " : " << to_string(ax.lhs.context) << (ax.lhs.context.empty() ? "|- " : " |- ")
                    << tuple_string(ax.lhs.mains, ax.lhs.scalars) << " = " << tuple_string(ax.rhs.mains, ax.rhs.scalars)
                    << " : " << to_string(ax.lhs.types) << "\n";
        for (const auto& d : p.definitions)
          std::cout << "  def " << d.name << "(" << to_string(d.body.context)
                    << ") := " << tuple_string(d.body.mains, d.body.scalars) << " : " << to_string(d.body.types) << "\n";
        for (const auto& [o, r] : p.sweedler)
          std::cout << "  sweedler " << o.str() << " := (" << r.comult.str() << ", " << r.counit.str() << ")\n";
      } else {
        for (const auto& n : builtin_theory_names()) std::cout << n << "\n";
      }
      return 0;
    }
    if (*corpus_run) {
      int code = 0;
      for (const auto& f : corpus_files()) {
        CorpusEntry e = run_corpus_file(fs::path(corpus_dir) / f, opt);
        std::cout << (e.ok ? "PASS " : "FAIL ") << f;
        if (e.proofs) std::cout << "  " << e.proofs << " proofs, " << e.steps << " steps";
        if (e.judgments) std::cout << "  " << e.judgments << " judgments";
        if (!e.ok) std::cout << "\n  " << e.detail;
        std::cout << "\n";
        if (!e.ok) code = 1;
      }
      return code;
    }
    if (*fuzz_cmd) return fuzz(seed, fuzz_count);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
