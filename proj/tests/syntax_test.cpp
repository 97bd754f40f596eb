#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "sweedler/print.hpp"
#include "sweedler/term.hpp"

using namespace sweedler;
using namespace sweedler::testing;

TEST(Depth, ExampleTable) {
  Judgment j1 = example_j1();
  Judgment j2 = example_j2();
  EXPECT_EQ(depth(v("x")), 0u);
  EXPECT_EQ(depth(lab("g", "a")), 0u);
  EXPECT_EQ(depth(j1.scalars[0]), 1u);                 // h
  EXPECT_EQ(depth(j1.mains[1]), 2u);                   // k
  EXPECT_EQ(depth(j1.mains[0]), 1u);                   // f
  EXPECT_EQ(depth(j2.mains[0]), 2u);                   // m
  EXPECT_EQ(depth(j2.mains[2]), 1u);                   // l
  EXPECT_EQ(depth(j2.scalars[0]), 1u);                 // n
  EXPECT_EQ(depth(j2.mains[1]), 0u);                   // s
}

TEST(Substitute, ExampleBindings) {
  Substitution b{{VarName("u"), comp("f", 1, {v("y")})},
                 {VarName("v"), ap("k", {lab("g", "a"), comp("f", 3, {v("y")})})},
                 {VarName("w"), comp("f", 2, {v("y")})}};
  EXPECT_EQ(to_string(substitute(example_j2().mains[0], b)), "m(f.1(y), l.2(f.2(y)))");
  EXPECT_EQ(substitute(lab("s", "b"), b), lab("s", "b"));
  EXPECT_EQ(substitute(v("x"), {{VarName("x"), lab("g", "a")}}), lab("g", "a"));
  EXPECT_EQ(substitute(v("z"), b), v("z"));
}

TEST(HeadOccurrences, PreOrder) {
  EXPECT_TRUE(head_occurrences(Judgment()).empty());
  Judgment j({{VarName("x"), ObjectName("A")}}, {ap("f", {v("x")})}, objs({"B"}));
  auto occ = head_occurrences(j);
  ASSERT_EQ(occ.size(), 2u);
  EXPECT_EQ(occ[0].term, ap("f", {v("x")}));
  EXPECT_EQ(occ[1].term, v("x"));
  EXPECT_EQ(occ[1].location.path, std::vector<std::size_t>{0});
  EXPECT_EQ(head_occurrences(example_j1()).size(), 10u);
  auto again = head_occurrences(example_j1());
  auto once = head_occurrences(example_j1());
  for (std::size_t i = 0; i < once.size(); ++i) {
    EXPECT_EQ(once[i].term, again[i].term);
    EXPECT_EQ(once[i].location, again[i].location);
  }
  EXPECT_TRUE(head_occurrences(example_j1()).back().location.scalar);
}

TEST(Relabel, RenameAndSwap) {
  Judgment j({}, {lab("e", "a", 1), lab("e", "a", 2)}, objs({"M", "M"}));
  EXPECT_EQ(to_string(relabel(j, {{Label("a"), Label("b")}})), "|- (e^b.1, e^b.2) : (M, M)");
  EXPECT_EQ(relabel(j, {}), j);
  Judgment p({}, {lab("f", "a", 1), lab("f", "b", 1), lab("f", "a", 2), lab("f", "b", 2)}, objs({"B", "B", "C", "C"}));
  Judgment q = relabel(p, {{Label("a"), Label("b")}, {Label("b"), Label("a")}});
  EXPECT_EQ(to_string(q), "|- (f^b.1, f^a.1, f^b.2, f^a.2) : (B, B, C, C)");
  EXPECT_THROW(relabel(p, {{Label("a"), Label("b")}}), std::invalid_argument);
}

TEST(Judgment, ShapeInvariants) {
  EXPECT_THROW(Judgment({}, {v("x")}, {}), std::invalid_argument);
  EXPECT_THROW(Judgment({{VarName("x"), ObjectName("A")}, {VarName("x"), ObjectName("B")}}, {}, {}),
               std::invalid_argument);
  EXPECT_EQ(to_string(Judgment()), "|- () : ()");
}

TEST(TermOrder, VarsBeforeApplications) {
  EXPECT_LT(v("z"), ap("a"));
  EXPECT_LT(ap("f", {v("x")}), ap("g"));
  EXPECT_LT(lab("g", "a"), lab("g", "b"));
  EXPECT_LT(comp("f", 1, {v("y")}), comp("f", 2, {v("y")}));
}

namespace {

Term random_term(std::mt19937& rng, int budget) {
  std::uniform_int_distribution<int> d(0, 3);
  int roll = budget <= 0 ? 0 : d(rng);
  if (roll == 0) return v(std::string(1, static_cast<char>('a' + rng() % 3)).c_str());
  std::vector<Term> args;
  for (int i = 0; i < roll - 1 + 1; ++i) args.push_back(random_term(rng, budget - 1));
  return Term::app(GeneratorName(std::string(1, static_cast<char>('f' + roll))), std::nullopt, std::nullopt, args);
}

bool proper_subterms_shallower(const Term& t) {
  for (const auto& a : t.args()) {
    if (depth(a) >= depth(t)) return false;
    if (!proper_subterms_shallower(a)) return false;
  }
  return true;
}

}  // namespace

TEST(Property, DepthMonotone) {
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) EXPECT_TRUE(proper_subterms_shallower(random_term(rng, 4)));
}

TEST(Property, SubstitutionComposes) {
  std::mt19937 rng(11);
  for (int i = 0; i < 500; ++i) {
    Term t = random_term(rng, 4);
    // domains {a, b} and {c}; ranges avoid both domains
    Substitution b1{{VarName("a"), Term::app("p", std::nullopt, std::nullopt, {v("x")})}, {VarName("b"), v("y")}};
    Substitution b2{{VarName("c"), Term::app("q", std::nullopt, std::nullopt, {v("x"), v("y")})}};
    Substitution both = b1;
    both.insert(b2.begin(), b2.end());
    EXPECT_EQ(substitute(substitute(t, b1), b2), substitute(t, both));
  }
}

TEST(Property, RelabelIsAnAction) {
  Judgment j({}, {lab("e", "a", 1), lab("e", "b", 1), lab("e", "a", 2), lab("e", "b", 2)}, objs({"M", "M", "M", "M"}));
  LabelMap s{{Label("a"), Label("b")}, {Label("b"), Label("c")}};
  LabelMap t{{Label("b"), Label("a")}, {Label("c"), Label("d")}};
  LabelMap ts{{Label("a"), Label("a")}, {Label("b"), Label("d")}};
  EXPECT_EQ(relabel(relabel(j, s), t), relabel(j, ts));
}
