#pragma once

#include <map>
#include <string>
#include <vector>

#include "sweedler/checker.hpp"
#include "sweedler/print.hpp"

namespace sweedler {

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

// String diagram of a derivable judgment: a vertex per generator
// application, an edge per variable and per generator output.
inline std::string to_dot(const Signature& sig, const Derivation& d) {
  Judgment j = conclusion(sig, d);
  std::map<Term, std::size_t> node_of;  // application (index stripped) -> vertex
  std::vector<Term> nodes;
  std::vector<std::string> edges;

  auto input_port = [&](const VarName& v) {
    for (std::size_t i = 0; i < j.context.size(); ++i)
      if (j.context[i].var == v) return "in" + std::to_string(i);
    throw std::logic_error("free variable in derivable judgment");
  };
  auto type_of = [&](const Term& t) -> std::string {
    if (t.is_var()) {
      for (const auto& e : j.context)
        if (e.var == t.var_name()) return e.type.str();
    }
    const Arity& a = sig.arity(t.generator());
    return a.codomain[t.index() ? *t.index() - 1 : 0].str();
  };

  auto visit = [&](auto&& self, const Term& t) -> void {
    if (t.is_var()) return;
    Term app = t.with_index(std::nullopt);
    if (node_of.count(app)) return;
    for (const auto& a : t.args()) self(self, a);
    node_of.emplace(app, nodes.size());
    nodes.push_back(app);
  };
  for (const auto& t : j.mains) visit(visit, t);
  for (const auto& t : j.scalars) visit(visit, t);

  auto source = [&](const Term& t) {
    return t.is_var() ? input_port(t.var_name()) : "n" + std::to_string(node_of.at(t.with_index(std::nullopt)));
  };
  auto edge = [&](const Term& wire, const std::string& target) {
    std::string label = type_of(wire);
    if (!wire.is_var() && wire.index()) label += " ." + std::to_string(*wire.index());
    edges.push_back("  " + source(wire) + " -> " + target + " [label=\"" + detail::dot_escape(label) + "\"];");
  };
  for (std::size_t n = 0; n < nodes.size(); ++n)
    for (const auto& a : nodes[n].args()) edge(a, "n" + std::to_string(n));
  for (std::size_t i = 0; i < j.mains.size(); ++i) edge(j.mains[i], "out" + std::to_string(i));

  std::string s = "digraph judgment {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < j.context.size(); ++i)
    s += "  in" + std::to_string(i) + " [shape=plaintext, label=\"" + detail::dot_escape(j.context[i].var.str()) +
         "\"];\n";
  for (std::size_t i = 0; i < j.types.size(); ++i)
    s += "  out" + std::to_string(i) + " [shape=plaintext, label=\"" + std::to_string(i + 1) + "\"];\n";
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    std::string label = nodes[n].name();
    if (nodes[n].label()) label += "^" + nodes[n].label()->str();
    s += "  n" + std::to_string(n) + " [shape=box, label=\"" + detail::dot_escape(label) + "\"];\n";
  }
  if (!j.context.empty()) {
    s += "  { rank=source;";
    for (std::size_t i = 0; i < j.context.size(); ++i) s += " in" + std::to_string(i) + ";";
    s += " }\n";
  }
  if (!j.types.empty()) {
    s += "  { rank=sink;";
    for (std::size_t i = 0; i < j.types.size(); ++i) s += " out" + std::to_string(i) + ";";
    s += " }\n";
  }
  for (const auto& e : edges) s += e + "\n";
  return s + "}\n";
}

inline std::size_t dot_node_count(const std::string& dot) {
  std::size_t n = 0, pos = 0;
  while ((pos = dot.find("[shape=box", pos)) != std::string::npos) {
    ++n;
    ++pos;
  }
  return n;
}

}  // namespace sweedler
