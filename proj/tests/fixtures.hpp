#pragma once

#include <string>
#include <vector>

#include "sweedler/checker.hpp"

namespace sweedler::testing {

inline Term v(const char* n) { return Term::var(VarName(n)); }
inline Term ap(const char* g, std::vector<Term> args = {}) { return Term::app(GeneratorName(g), std::nullopt, std::nullopt, std::move(args)); }
inline Term comp(const char* g, unsigned k, std::vector<Term> args = {}) {
  return Term::app(GeneratorName(g), std::nullopt, k, std::move(args));
}
inline Term lab(const char* g, const char* l, std::optional<unsigned> k = std::nullopt) {
  return Term::app(GeneratorName(g), Label(l), k, {});
}

inline std::vector<ObjectName> objs(std::initializer_list<const char*> xs) {
  std::vector<ObjectName> out;
  for (auto* x : xs) out.emplace_back(x);
  return out;
}

inline Context ctx_of(std::initializer_list<std::pair<const char*, const char*>> xs) {
  Context c;
  for (auto [x, t] : xs) c.push_back({VarName(x), ObjectName(t)});
  return c;
}

// Generators of the worked composition example.
inline Signature composition_example_signature() {
  Signature s;
  for (auto* o : {"A", "B", "C", "D", "E", "F", "G", "H", "P", "Q", "R"}) s.add_object(ObjectName(o));
  s.add_generator(GeneratorName("f"), {objs({"B"}), objs({"C", "E", "P"})});
  s.add_generator(GeneratorName("g"), {{}, objs({"Q"})});
  s.add_generator(GeneratorName("h"), {objs({"A"}), {}});
  s.add_generator(GeneratorName("k"), {objs({"Q", "P"}), objs({"D"})});
  s.add_generator(GeneratorName("l"), {objs({"E"}), objs({"H", "R"})});
  s.add_generator(GeneratorName("m"), {objs({"C", "R"}), objs({"F"})});
  s.add_generator(GeneratorName("n"), {objs({"D"}), {}});
  s.add_generator(GeneratorName("s"), {{}, objs({"G"})});
  return s;
}

// x:A, y:B |- (f.1(y), k(g^a, f.3(y)), f.2(y) | h(x)) : (C, D, E)
inline Judgment example_j1() {
  return Judgment({{VarName("x"), ObjectName("A")}, {VarName("y"), ObjectName("B")}},
                  {comp("f", 1, {v("y")}), ap("k", {lab("g", "a"), comp("f", 3, {v("y")})}), comp("f", 2, {v("y")})},
                  objs({"C", "D", "E"}), {ap("h", {v("x")})});
}

// u:C, v:D, w:E |- (m(u, l.2(w)), s^b, l.1(w) | n(v)) : (F, G, H)
inline Judgment example_j2() {
  return Judgment({{VarName("u"), ObjectName("C")}, {VarName("v"), ObjectName("D")}, {VarName("w"), ObjectName("E")}},
                  {ap("m", {v("u"), comp("l", 2, {v("w")})}), lab("s", "b"), comp("l", 1, {v("w")})},
                  objs({"F", "G", "H"}), {ap("n", {v("v")})});
}

inline const char* example_result_text() {
  return "x:A, y:B |- (m(f.1(y), l.2(f.2(y))), s^b, l.1(f.2(y)) | n(k(g^a, f.3(y))), h(x)) : (F, G, H)";
}

// A signature mixing every arity shape, used for random derivations.
inline Signature mixed_signature() {
  Signature s;
  for (auto* o : {"A", "B", "C"}) s.add_object(ObjectName(o));
  s.add_generator(GeneratorName("p"), {objs({"A"}), objs({"B"})});
  s.add_generator(GeneratorName("q"), {objs({"A", "B"}), objs({"C"})});
  s.add_generator(GeneratorName("r"), {objs({"C"}), objs({"A", "A"})});
  s.add_generator(GeneratorName("t"), {objs({"B"}), objs({"A", "B", "C"})});
  s.add_generator(GeneratorName("u"), {{}, objs({"A"})});
  s.add_generator(GeneratorName("w"), {{}, objs({"B", "C"})});
  s.add_generator(GeneratorName("z"), {objs({"C"}), {}});
  s.add_generator(GeneratorName("y"), {objs({"A", "B"}), {}});
  s.add_generator(GeneratorName("c"), {{}, {}});
  s.add_generator(GeneratorName("d"), {{}, {}});
  s.add_generator(GeneratorName("sw"), {objs({"A", "B"}), objs({"B", "A"})});
  return s;
}

}  // namespace sweedler::testing
