#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "sweedler/term.hpp"

namespace sweedler {

inline std::string to_string(const Term& t) {
  if (t.is_var()) return t.name();
  std::string s = t.name();
  if (t.label()) s += "^" + t.label()->str();
  if (t.index()) s += "." + std::to_string(*t.index());
  if (!t.args().empty()) {
    s += "(";
    for (std::size_t i = 0; i < t.args().size(); ++i) {
      if (i) s += ", ";
      s += to_string(t.args()[i]);
    }
    s += ")";
  }
  return s;
}

inline std::string to_string(const std::vector<ObjectName>& types) {
  std::string s = "(";
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (i) s += ", ";
    s += types[i].str();
  }
  return s + ")";
}

inline std::string to_string(const Context& ctx) {
  std::string s;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (i) s += ", ";
    s += ctx[i].var.str() + ":" + ctx[i].type.str();
  }
  return s;
}

inline std::string tuple_string(const std::vector<Term>& mains, const std::vector<Term>& scalars) {
  std::string s = "(";
  for (std::size_t i = 0; i < mains.size(); ++i) {
    if (i) s += ", ";
    s += to_string(mains[i]);
  }
  if (!scalars.empty()) {
    s += mains.empty() ? "| " : " | ";
    for (std::size_t i = 0; i < scalars.size(); ++i) {
      if (i) s += ", ";
      s += to_string(scalars[i]);
    }
  }
  return s + ")";
}

// Core syntax, e.g. "x:A, y:B |- (f(x), y | h(x)) : (C, B)".
inline std::string to_string(const Judgment& j) {
  std::string s = to_string(j.context);
  s += s.empty() ? "|- " : " |- ";
  return s + tuple_string(j.mains, j.scalars) + " : " + to_string(j.types);
}

inline std::ostream& operator<<(std::ostream& os, const Term& t) { return os << to_string(t); }
inline std::ostream& operator<<(std::ostream& os, const Judgment& j) { return os << to_string(j); }

template <class Tag>
std::ostream& operator<<(std::ostream& os, const Name<Tag>& n) {
  return os << n.str();
}

}  // namespace sweedler
