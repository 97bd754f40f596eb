#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sweedler/algebra.hpp"
#include "sweedler/random.hpp"

using namespace sweedler;
using namespace sweedler::testing;

TEST(Compose, WorkedExample) {
  Signature s = composition_example_signature();
  Judgment r = compose(s, example_j1(), example_j2());
  EXPECT_EQ(to_string(r), example_result_text());
}

TEST(Compose, IntermediateSteps) {
  Signature s = composition_example_signature();
  Context uvw{{VarName("u"), ObjectName("C")}, {VarName("v"), ObjectName("D")}, {VarName("w"), ObjectName("E")}};
  Judgment leaf(uvw, {v("w"), v("v"), v("u"), lab("s", "b")}, objs({"E", "D", "C", "G"}));
  EXPECT_EQ(to_string(compose(s, example_j1(), leaf)),
            "x:A, y:B |- (f.2(y), k(g^a, f.3(y)), f.1(y), s^b | h(x)) : (E, D, C, G)");
  Judgment mid(uvw, {v("u"), comp("l", 2, {v("w")}), lab("s", "b"), comp("l", 1, {v("w")})}, objs({"C", "R", "G", "H"}),
               {ap("n", {v("v")})});
  EXPECT_EQ(to_string(compose(s, example_j1(), mid)),
            "x:A, y:B |- (f.1(y), l.2(f.2(y)), s^b, l.1(f.2(y)) | n(k(g^a, f.3(y))), h(x)) : (C, R, G, H)");
}

TEST(Compose, AgreesWithSubstitutionOracle) {
  Signature s = composition_example_signature();
  EXPECT_EQ(compose(s, example_j1(), example_j2()), oracle_compose(example_j1(), example_j2()));
}

TEST(Postcompose, NullaryGeneratorAppends) {
  Signature s = composition_example_signature();
  Judgment j(ctx_of({{"y", "B"}, {"x", "A"}}), {v("y"), v("x"), lab("g", "a")}, objs({"B", "A", "Q"}));
  j.context = {{VarName("x"), ObjectName("A")}, {VarName("y"), ObjectName("B")}};
  Judgment r = postcompose_gen(s, j, GeneratorName("s"), {}, Label("b"));
  EXPECT_EQ(to_string(r), "x:A, y:B |- (y, x, g^a, s^b) : (B, A, Q, G)");
}

TEST(Exchange, CodomainSwap) {
  Signature s = composition_example_signature();
  Judgment j = example_j1();
  Judgment r = exchange_cod(s, j, Permutation({2, 0, 1}));
  EXPECT_EQ(to_string(r), "x:A, y:B |- (f.2(y), f.1(y), k(g^a, f.3(y)) | h(x)) : (E, C, D)");
  EXPECT_EQ(exchange_cod(s, j, Permutation::identity(3)), j);
}

TEST(Exchange, DomainAndScalars) {
  Signature s = composition_example_signature();
  Judgment j = example_j1();
  Judgment r = exchange_dom(s, j, Permutation({1, 0}));
  EXPECT_EQ(to_string(r), "y:B, x:A |- (f.1(y), k(g^a, f.3(y)), f.2(y) | h(x)) : (C, D, E)");
  Judgment withn = compose(s, example_j1(), example_j2());
  Judgment swapped = exchange_scalars(s, withn, Permutation({1, 0}));
  EXPECT_EQ(swapped.scalars[0], withn.scalars[1]);
  EXPECT_EQ(swapped.scalars[1], withn.scalars[0]);
}

TEST(Tensor, ConcatenatesAndFreshens) {
  Signature s = composition_example_signature();
  Judgment j1 = example_j1();
  Judgment r = tensor(s, j1, j1);
  EXPECT_EQ(to_string(r),
            "x:A, y:B, x':A, y':B |- (f.1(y), k(g^a, f.3(y)), f.2(y), f.1(y'), k(g^a', f.3(y')), f.2(y') | h(x'), h(x)) : "
            "(C, D, E, C, D, E)");
}

TEST(Symmetry, SwapsBlocks) {
  Signature s = composition_example_signature();
  Context l{{VarName("x"), ObjectName("A")}};
  Context r{{VarName("y"), ObjectName("B")}, {VarName("z"), ObjectName("C")}};
  EXPECT_EQ(to_string(conclusion(s, symmetry(l, r))), "x:A, y:B, z:C |- (y, z, x) : (B, C, A)");
  EXPECT_EQ(to_string(conclusion(s, identity_of(l))), "x:A |- (x) : (A)");
}

TEST(Property, ExchangeFunctorial) {
  Signature s = mixed_signature();
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Derivation d = random_derivation(s, seed);
    Judgment j = conclusion(s, d);
    std::size_t n = j.mains.size();
    Permutation a = detail::random_permutation(n, rng);
    Permutation b = detail::random_permutation(n, rng);
    Derivation ab = exchange_cod(s, exchange_cod(s, d, a), b);
    Derivation once = exchange_cod(s, d, then(a, b));
    ASSERT_EQ(conclusion(s, ab), conclusion(s, once));
    EXPECT_EQ(conclusion(s, ab).mains, then(a, b).apply(j.mains));
    EXPECT_EQ(exchange_cod(s, d, Permutation::identity(n)), d);
    EXPECT_EQ(check(s, conclusion(s, ab)), ab);
  }
}

TEST(Property, ComposeMatchesOracle) {
  Signature s = mixed_signature();
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Derivation d1 = random_derivation(s, seed);
    Judgment j1 = conclusion(s, d1);
    RandomOptions o;
    o.domain = fresh_context(j1.types, "v", {});
    Derivation d2 = random_derivation(s, seed + 100000, o);
    Derivation c = compose(s, d1, d2);
    Judgment j = conclusion(s, c);
    ASSERT_EQ(j, oracle_compose(j1, conclusion(s, d2))) << "seed " << seed;
    EXPECT_EQ(check(s, j), c);
  }
}
