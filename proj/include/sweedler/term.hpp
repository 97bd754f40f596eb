#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace sweedler {

// Distinct string-backed name types so objects, generators, variables and
// labels cannot be mixed up at call sites.
template <class Tag>
class Name {
 public:
  Name() = default;
  explicit Name(std::string s) : value_(std::move(s)) {}
  Name(const char* s) : value_(s) {}

  const std::string& str() const { return value_; }
  bool empty() const { return value_.empty(); }

  friend auto operator<=>(const Name&, const Name&) = default;
  friend bool operator==(const Name&, const Name&) = default;

 private:
  std::string value_;
};

using ObjectName = Name<struct ObjectTag>;
using GeneratorName = Name<struct GeneratorTag>;
using VarName = Name<struct VarTag>;
using Label = Name<struct LabelTag>;

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

class Term {
 public:
  enum class Kind { Var, App };

  static Term var(VarName name) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Var;
    n->name = name.str();
    n->hash = hash_combine(1, std::hash<std::string>{}(n->name));
    return Term(std::move(n));
  }

  static Term app(GeneratorName gen, std::optional<Label> label, std::optional<unsigned> index,
                  std::vector<Term> args = {}) {
    if (index && *index == 0) throw std::invalid_argument("component index is 1-based");
    auto n = std::make_shared<Node>();
    n->kind = Kind::App;
    n->name = gen.str();
    n->label = std::move(label);
    n->index = index;
    n->args = std::move(args);
    std::size_t h = hash_combine(2, std::hash<std::string>{}(n->name));
    h = hash_combine(h, n->label ? std::hash<std::string>{}(n->label->str()) : 7);
    h = hash_combine(h, n->index ? *n->index : 0);
    for (const auto& a : n->args) h = hash_combine(h, a.hash());
    n->hash = h;
    return Term(std::move(n));
  }

  // Convenience for () -> () generators.
  static Term atom(GeneratorName gen) { return app(std::move(gen), std::nullopt, std::nullopt); }

  Kind kind() const { return node_->kind; }
  bool is_var() const { return node_->kind == Kind::Var; }
  bool is_app() const { return node_->kind == Kind::App; }
  VarName var_name() const { return VarName(node_->name); }
  GeneratorName generator() const { return GeneratorName(node_->name); }
  const std::string& name() const { return node_->name; }
  const std::optional<Label>& label() const { return node_->label; }
  std::optional<unsigned> index() const { return node_->index; }
  std::span<const Term> args() const { return node_->args; }
  const std::vector<Term>& arg_vector() const { return node_->args; }
  std::size_t hash() const { return node_->hash; }

  // Same term with a different component index (used when regrouping outputs).
  Term with_index(std::optional<unsigned> index) const {
    return app(generator(), label(), index, arg_vector());
  }

  friend bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    if (a.node_->hash != b.node_->hash) return false;
    return (a <=> b) == 0;
  }

  friend std::strong_ordering operator<=>(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    const Node& x = *a.node_;
    const Node& y = *b.node_;
    if (x.kind != y.kind) return x.kind == Kind::Var ? std::strong_ordering::less : std::strong_ordering::greater;
    if (auto c = x.name <=> y.name; c != 0) return c;
    if (auto c = x.label <=> y.label; c != 0) return c;
    if (auto c = x.index <=> y.index; c != 0) return c;
    return std::lexicographical_compare_three_way(x.args.begin(), x.args.end(), y.args.begin(), y.args.end());
  }

 private:
  struct Node {
    Kind kind{};
    std::string name;
    std::optional<Label> label;
    std::optional<unsigned> index;
    std::vector<Term> args;
    std::size_t hash = 0;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

struct ContextEntry {
  VarName var;
  ObjectName type;
  friend bool operator==(const ContextEntry&, const ContextEntry&) = default;
};
using Context = std::vector<ContextEntry>;

class Judgment {
 public:
  Judgment() = default;
  Judgment(Context context, std::vector<Term> mains, std::vector<ObjectName> types, std::vector<Term> scalars = {})
      : context(std::move(context)), mains(std::move(mains)), types(std::move(types)), scalars(std::move(scalars)) {
    validate_shape();
  }

  void validate_shape() const {
    if (mains.size() != types.size())
      throw std::invalid_argument("number of main terms differs from number of codomain types");
    for (std::size_t i = 0; i < context.size(); ++i)
      for (std::size_t k = i + 1; k < context.size(); ++k)
        if (context[i].var == context[k].var)
          throw std::invalid_argument("context variable '" + context[i].var.str() + "' bound twice");
  }

  std::vector<ObjectName> domain() const {
    std::vector<ObjectName> out;
    for (const auto& e : context) out.push_back(e.type);
    return out;
  }

  friend bool operator==(const Judgment&, const Judgment&) = default;

  Context context;
  std::vector<Term> mains;
  std::vector<ObjectName> types;
  std::vector<Term> scalars;
};

inline std::size_t depth(const Term& t) {
  if (t.is_var() || t.args().empty()) return 0;
  std::size_t d = 0;
  for (const auto& a : t.args()) d = std::max(d, depth(a));
  return d + 1;
}

// Largest depth over main and scalar terms; 0 for an empty judgment.
inline std::size_t max_depth(const Judgment& j) {
  std::size_t d = 0;
  for (const auto& t : j.mains) d = std::max(d, depth(t));
  for (const auto& t : j.scalars) d = std::max(d, depth(t));
  return d;
}

using Substitution = std::map<VarName, Term>;

inline Term substitute(const Term& t, const Substitution& s) {
  if (t.is_var()) {
    auto it = s.find(t.var_name());
    return it == s.end() ? t : it->second;
  }
  if (t.args().empty()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  bool changed = false;
  for (const auto& a : t.args()) {
    args.push_back(substitute(a, s));
    changed = changed || !(args.back() == a);
  }
  return changed ? Term::app(t.generator(), t.label(), t.index(), std::move(args)) : t;
}

struct Location {
  bool scalar = false;
  std::size_t position = 0;
  std::vector<std::size_t> path;  // argument indices from the head term down
  friend bool operator==(const Location&, const Location&) = default;
};

struct Occurrence {
  Term term;
  Location location;
};

namespace detail {
inline void collect_occurrences(const Term& t, Location& loc, std::vector<Occurrence>& out) {
  out.push_back({t, loc});
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    loc.path.push_back(i);
    collect_occurrences(t.args()[i], loc, out);
    loc.path.pop_back();
  }
}
}  // namespace detail

// Every subterm occurrence with where it sits, left-to-right pre-order.
inline std::vector<Occurrence> head_occurrences(const Judgment& j) {
  std::vector<Occurrence> out;
  for (std::size_t i = 0; i < j.mains.size(); ++i) {
    Location loc{false, i, {}};
    detail::collect_occurrences(j.mains[i], loc, out);
  }
  for (std::size_t i = 0; i < j.scalars.size(); ++i) {
    Location loc{true, i, {}};
    detail::collect_occurrences(j.scalars[i], loc, out);
  }
  return out;
}

namespace detail {
inline void collect_labels(const Term& t, std::vector<Label>& out, std::unordered_set<std::string>& seen) {
  if (t.is_var()) return;
  if (t.label() && seen.insert(t.label()->str()).second) out.push_back(*t.label());
  for (const auto& a : t.args()) collect_labels(a, out, seen);
}
}  // namespace detail

// Labels in order of first occurrence (mains, then scalars).
inline std::vector<Label> labels_of(const Judgment& j) {
  std::vector<Label> out;
  std::unordered_set<std::string> seen;
  for (const auto& t : j.mains) detail::collect_labels(t, out, seen);
  for (const auto& t : j.scalars) detail::collect_labels(t, out, seen);
  return out;
}

inline std::vector<Label> labels_of(const Term& t) {
  std::vector<Label> out;
  std::unordered_set<std::string> seen;
  detail::collect_labels(t, out, seen);
  return out;
}

using LabelMap = std::map<Label, Label>;

inline Term relabel(const Term& t, const LabelMap& m) {
  if (t.is_var()) return t;
  std::optional<Label> label = t.label();
  if (label) {
    auto it = m.find(*label);
    if (it != m.end()) label = it->second;
  }
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(relabel(a, m));
  return Term::app(t.generator(), std::move(label), t.index(), std::move(args));
}

// Renames labels; labels missing from the map are kept. Throws when the
// resulting renaming is not injective on the labels of j.
inline Judgment relabel(const Judgment& j, const LabelMap& m) {
  std::map<Label, Label> inverse;
  for (const auto& l : labels_of(j)) {
    auto it = m.find(l);
    Label target = it == m.end() ? l : it->second;
    auto [pos, inserted] = inverse.emplace(target, l);
    if (!inserted && !(pos->second == l))
      throw std::invalid_argument("relabel is not injective on label '" + target.str() + "'");
  }
  Judgment out = j;
  for (auto& t : out.mains) t = relabel(t, m);
  for (auto& t : out.scalars) t = relabel(t, m);
  return out;
}

inline Judgment substitute(const Judgment& j, const Context& new_context, const Substitution& s) {
  Judgment out = j;
  out.context = new_context;
  for (auto& t : out.mains) t = substitute(t, s);
  for (auto& t : out.scalars) t = substitute(t, s);
  out.validate_shape();
  return out;
}

inline bool occurs_in(const Term& needle, const Term& hay) {
  if (needle == hay) return true;
  for (const auto& a : hay.args())
    if (occurs_in(needle, a)) return true;
  return false;
}

inline bool mentions_var(const Term& t, const VarName& v) {
  if (t.is_var()) return t.var_name() == v;
  for (const auto& a : t.args())
    if (mentions_var(a, v)) return true;
  return false;
}

// Returns a label not in `taken`, derived from `base` by appending apostrophes.
template <class Set>
Label fresh_label(const Label& base, const Set& taken) {
  std::string s = base.str();
  while (taken.count(Label(s))) s += '\'';
  return Label(s);
}

template <class Set>
VarName fresh_var(const VarName& base, const Set& taken) {
  std::string s = base.str();
  while (taken.count(VarName(s))) s += '\'';
  return VarName(s);
}

}  // namespace sweedler

template <class Tag>
struct std::hash<sweedler::Name<Tag>> {
  std::size_t operator()(const sweedler::Name<Tag>& n) const { return std::hash<std::string>{}(n.str()); }
};

template <>
struct std::hash<sweedler::Term> {
  std::size_t operator()(const sweedler::Term& t) const { return t.hash(); }
};
