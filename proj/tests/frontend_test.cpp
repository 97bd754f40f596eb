#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "fixtures.hpp"
#include "sweedler/corpus.hpp"
#include "sweedler/dot.hpp"
#include "sweedler/random.hpp"
#include "sweedler/workspace.hpp"

using namespace sweedler;
using namespace sweedler::testing;

namespace {

Presentation wrap(Signature s) {
  Presentation p;
  p.signature = std::move(s);
  return p;
}

const char* example_theory = R"(
theory ex {
  object A B C D E F G H P Q R
  gen f : B -> C E P
  gen g : -> Q
  gen h : A ->
  gen k : Q P -> D
  gen l : E -> H R
  gen m : C R -> F
  gen n : D ->
  gen s : -> G
}
use ex
)";

std::filesystem::path temp_dir(const std::string& name) {
  auto d = std::filesystem::temp_directory_path() / ("sweedler_" + name);
  std::filesystem::create_directories(d);
  return d;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST(Lexer, SubscriptsSplitIdentifiers) {
  auto toks = tokenize("x_(12) e_H^a %g1 # comment\nlam_A^u", "t");
  std::vector<std::string> text;
  for (const auto& t : toks) text.push_back(t.text);
  std::vector<std::string> want{"x", "_", "(", "12", ")", "e_H", "^", "a", "%", "g1", "lam_A", "^", "u", ""};
  ASSERT_EQ(text.size(), want.size());
  for (std::size_t i = 0; i + 1 < want.size(); ++i) EXPECT_EQ(text[i], want[i]) << i;
  EXPECT_EQ(toks[10].span.line, 2u);
  EXPECT_EQ(toks[10].span.column, 1u);
}

TEST(Lexer, ErrorsCarryPositions) {
  try {
    tokenize("x:A |- (x) $ (A)", "bad.judg");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("bad.judg:1:12: error:", 0), 0u) << e.what();
  }
}

TEST(Parser, WorkedExampleWithAutoLabel) {
  Workspace w;
  auto r = w.load_text(std::string(example_theory) + R"(
j1 = x:A, y:B |- (f.1(y), k(g, f.3(y)), f.2(y) | h(x)) : (C, D, E)
j2 = u:C, v:D, w:E |- (m(u, l.2(w)), s, l.1(w) | n(v)) : (F, G, H)
j3 = compose(j1, j2)
)");
  EXPECT_EQ(to_string(r.find("j1")->judgment), "x:A, y:B |- (f.1(y), k(g^%g1, f.3(y)), f.2(y) | h(x)) : (C, D, E)");
  EXPECT_EQ(to_string(r.find("j3")->judgment),
            "x:A, y:B |- (m(f.1(y), l.2(f.2(y))), s^%s1, l.1(f.2(y)) | n(k(g^%g1, f.3(y))), h(x)) : (F, G, H)");
}

TEST(Parser, SugarCanBeDisabled) {
  Presentation p = builtin_theory("comonoid");
  EXPECT_THROW(parse_judgment("x:M |- (x_(1), x_(2)) : (M, M)", p, false), ParseError);
  EXPECT_EQ(to_string(parse_judgment("x:M |- (comult.1(x), comult.2(x)) : (M, M)", p, false)),
            "x:M |- (comult.1(x), comult.2(x)) : (M, M)");
}

TEST(Parser, SweedlerSubscripts) {
  Presentation p = builtin_theory("comonoid");
  EXPECT_EQ(to_string(parse_judgment("x:M |- (x_(1), x_(2), x_(3)) : (M, M, M)", p)),
            "x:M |- (comult.1(x), comult.1(comult.2(x)), comult.2(comult.2(x))) : (M, M, M)");
  EXPECT_EQ(to_string(parse_judgment("x:M |- (x_(1)_(1), x_(1)_(2), x_(2)) : (M, M, M)", p)),
            "x:M |- (comult.1(comult.1(x)), comult.2(comult.1(x)), comult.2(x)) : (M, M, M)");
  EXPECT_EQ(to_string(parse_judgment("x:M |- (x_(1) | /x_(2)/) : (M)", p)),
            to_string(parse_judgment("x:M |- (x_(1) | cancel(x_(2))) : (M)", p)));
}

TEST(Parser, DualityBrackets) {
  Presentation p = builtin_theory("dual_pair");
  EXPECT_EQ(to_string(parse_judgment("x:A |- (u | <lam_A^u | x>) : (A)", p)),
            "x:A |- (eta_A^u.1 | eps_A(eta_A^u.2, x)) : (A)");
}

TEST(Parser, DefinitionsExpandOncePerInstance) {
  Presentation p = builtin_theory("weak_bimonoid");
  Judgment j = parse_judgment("x:M |- (s(x)_(1), s(x)_(2)) : (M, M)", p);
  EXPECT_EQ(j.scalars.size(), 1u);
  Judgment two = parse_judgment("x:M, y:M |- (s(x), s(y)) : (M, M)", p);
  EXPECT_EQ(two.scalars.size(), 2u);
  EXPECT_NO_THROW(check(p.signature, two));
}

TEST(Parser, UnknownNamesAreReported) {
  Presentation p = builtin_theory("monoid");
  EXPECT_THROW(parse_judgment("x:M |- (q) : (M)", p), ParseError);
  EXPECT_THROW(parse_judgment("x:M |- (m(x, x) : (M)", p), ParseError);
}

TEST(Property, ParsePrintRoundTrip) {
  Presentation p = wrap(mixed_signature());
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Judgment j = conclusion(p.signature, random_derivation(p.signature, seed));
    std::string text = to_string(j);
    Judgment back = parse_judgment(text, p, false);
    ASSERT_EQ(back, j) << text;
    ASSERT_EQ(to_string(back), text);
  }
}

TEST(Workspace, TraceScriptHasTwoSteps) {
  Workspace w;
  const FileResult& r = w.load_file(default_corpus_dir() / "trace_cyclic.prf");
  ASSERT_EQ(r.proofs.size(), 1u);
  EXPECT_EQ(r.proofs[0].script.steps.size(), 2u);
  EXPECT_TRUE(r.proofs[0].report.ok());
  EXPECT_TRUE(r.proofs[0].script.steps[0].reverse);
  EXPECT_FALSE(r.proofs[0].script.steps[1].reverse);
}

TEST(Workspace, MissingGivesIsAParseError) {
  Workspace w;
  try {
    w.load_text("prove p in monoid {\n  start: x:M |- (x) : (M)\n  step unit_left\n}\n", "p.prf");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("p.prf:3:"), std::string::npos) << e.what();
  }
}

TEST(Workspace, LemmasBecomeAxioms) {
  Workspace w;
  auto r = w.load_text(R"(
prove counit_twice in comonoid {
  start: x:M |- (x_(1) | /x_(2)/) : (M)
  step counit_right gives: (x)
}
prove uses_lemma in comonoid {
  start: x:M |- (x) : (M)
  step counit_twice <- gives: (x_(1) | /x_(2)/)
}
)");
  ASSERT_EQ(r.proofs.size(), 2u);
  EXPECT_TRUE(r.proofs[1].report.ok());
  EXPECT_EQ(w.lemmas().size(), 2u);
}

TEST(Workspace, FailedProofReportsItsLine) {
  Workspace w;
  auto r = w.load_text(R"(
prove wrong in comonoid {
  start: x:M |- (x_(1) | /x_(2)/) : (M)
  step counit_left gives: (x)
}
)");
  ASSERT_EQ(r.proofs.size(), 1u);
  EXPECT_FALSE(r.proofs[0].report.ok());
  EXPECT_EQ(r.proofs[0].report.first_failure(), 1u);
  EXPECT_EQ(r.proofs[0].report.steps[0].line, 4u);
}

TEST(Workspace, ImportsAndCycles) {
  auto d = temp_dir("imports");
  write(d / "base.smt", "theory base {\n  object A\n  gen f : A -> A\n}\n");
  write(d / "user.judg", "import \"base.smt\"\nuse base\nj = x:A |- (f(x)) : (A)\n");
  Workspace w;
  EXPECT_EQ(w.load_file(d / "user.judg").judgments.size(), 1u);
  write(d / "a.smt", "import \"b.smt\"\n");
  write(d / "b.smt", "import \"a.smt\"\n");
  Workspace w2;
  EXPECT_THROW(w2.load_file(d / "a.smt"), ParseError);
}

TEST(Workspace, InvalidTheoryIsRejected) {
  Workspace w;
  EXPECT_THROW(w.load_text("theory t {\n  object A\n  gen f : A -> B\n}\n"), ParseError);
  EXPECT_THROW(w.load_text("theory t {\n  object A\n  gen f : A -> A\n  axiom bad : x:A |- (f(x)) = (x, x) : (A)\n}\n"),
               ParseError);
}

TEST(Dot, ExampleHasEightBoxes) {
  Signature s = composition_example_signature();
  Judgment j = compose(s, example_j1(), example_j2());
  std::string dot = to_dot(s, check(s, j));
  EXPECT_EQ(dot_node_count(dot), 8u);
  EXPECT_NE(dot.find("label=\"k\""), std::string::npos);
  EXPECT_EQ(dot, to_dot(s, check(s, j)));
}

TEST(Property, DotIsDeterministic) {
  Signature s = mixed_signature();
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Derivation d = random_derivation(s, seed);
    Judgment j = conclusion(s, d);
    std::string dot = to_dot(s, d);
    ASSERT_EQ(dot, to_dot(s, check(s, j)));
    std::set<Term> apps;
    auto visit = [&](auto&& self, const Term& t) -> void {
      if (t.is_var()) return;
      if (!apps.insert(t.with_index(std::nullopt)).second) return;
      for (const auto& x : t.args()) self(self, x);
    };
    for (const auto& t : j.mains) visit(visit, t);
    for (const auto& t : j.scalars) visit(visit, t);
    std::size_t edges = j.mains.size();
    for (const auto& t : apps) edges += t.args().size();
    std::size_t arrows = 0;
    for (std::size_t pos = 0; (pos = dot.find(" -> ", pos)) != std::string::npos; ++pos) ++arrows;
    EXPECT_EQ(dot_node_count(dot), apps.size());
    EXPECT_EQ(arrows, edges);
  }
}
