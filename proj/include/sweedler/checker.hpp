#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "sweedler/permutation.hpp"
#include "sweedler/print.hpp"
#include "sweedler/signature.hpp"
#include "sweedler/term.hpp"

namespace sweedler {

enum class CheckErrorKind {
  UnknownGenerator,
  UnknownObject,
  UnknownVariable,
  ArityMismatch,
  TypeMismatch,
  MissingLabel,
  MisplacedLabel,
  BadComponentIndex,
  LabelClash,
  ScalarAtomInMainPosition,
  VariableUsage,
  IncompleteComponentGroup,
  DuplicateComponent,
  SharedArgument,
  NotDerivable,
  InvalidDerivation,
};

inline const char* to_string(CheckErrorKind k) {
  switch (k) {
    case CheckErrorKind::UnknownGenerator: return "UnknownGenerator";
    case CheckErrorKind::UnknownObject: return "UnknownObject";
    case CheckErrorKind::UnknownVariable: return "UnknownVariable";
    case CheckErrorKind::ArityMismatch: return "ArityMismatch";
    case CheckErrorKind::TypeMismatch: return "TypeMismatch";
    case CheckErrorKind::MissingLabel: return "MissingLabel";
    case CheckErrorKind::MisplacedLabel: return "MisplacedLabel";
    case CheckErrorKind::BadComponentIndex: return "BadComponentIndex";
    case CheckErrorKind::LabelClash: return "LabelClash";
    case CheckErrorKind::ScalarAtomInMainPosition: return "ScalarAtomInMainPosition";
    case CheckErrorKind::VariableUsage: return "VariableUsage";
    case CheckErrorKind::IncompleteComponentGroup: return "IncompleteComponentGroup";
    case CheckErrorKind::DuplicateComponent: return "DuplicateComponent";
    case CheckErrorKind::SharedArgument: return "SharedArgument";
    case CheckErrorKind::NotDerivable: return "NotDerivable";
    case CheckErrorKind::InvalidDerivation: return "InvalidDerivation";
  }
  return "?";
}

class CheckError : public std::runtime_error {
 public:
  CheckError(CheckErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}
  CheckErrorKind kind() const { return kind_; }

 private:
  CheckErrorKind kind_;
};

struct Application {
  GeneratorName generator;
  std::vector<std::size_t> arguments;  // positions in the premise's main terms
  friend bool operator==(const Application&, const Application&) = default;
};

struct LabeledGenerator {
  GeneratorName generator;
  Label label;
  friend bool operator==(const LabeledGenerator&, const LabeledGenerator&) = default;
};

struct Derivation;
using DerivationPtr = std::shared_ptr<const Derivation>;

// Canonical outputs: context variables in order, then the components of each
// nullary generator in list order. Atoms are the scalars, in order.
struct IdentityRule {
  Context context;
  std::vector<LabeledGenerator> generators;
  std::vector<GeneratorName> atoms;
  Permutation sigma;
};

// Premise mains are laid out as: argument blocks of `applications`, argument
// blocks of `scalar_applications`, then the untouched remainder R. Canonical
// outputs are the application components followed by R; canonical scalars
// are the scalar applications followed by the premise scalars.
struct GeneratorRule {
  DerivationPtr premise;
  std::vector<Application> applications;
  std::vector<Application> scalar_applications;
  Permutation sigma;
  Permutation tau;
};

struct Derivation {
  std::variant<IdentityRule, GeneratorRule> rule;

  bool is_identity() const { return std::holds_alternative<IdentityRule>(rule); }
  const IdentityRule& identity() const { return std::get<IdentityRule>(rule); }
  const GeneratorRule& generator() const { return std::get<GeneratorRule>(rule); }

  std::size_t height() const { return is_identity() ? 0 : 1 + generator().premise->height(); }
};

inline bool operator==(const Derivation& a, const Derivation& b) {
  if (a.is_identity() != b.is_identity()) return false;
  if (a.is_identity()) {
    const auto& x = a.identity();
    const auto& y = b.identity();
    return x.context == y.context && x.generators == y.generators && x.atoms == y.atoms && x.sigma == y.sigma;
  }
  const auto& x = a.generator();
  const auto& y = b.generator();
  return x.applications == y.applications && x.scalar_applications == y.scalar_applications && x.sigma == y.sigma &&
         x.tau == y.tau && *x.premise == *y.premise;
}

inline DerivationPtr share(Derivation d) { return std::make_shared<const Derivation>(std::move(d)); }

struct Activeness {
  std::vector<bool> active;
  friend bool operator==(const Activeness&, const Activeness&) = default;
};

// Mains whose depth equals the largest depth among all mains and scalars.
inline Activeness infer_activeness(const Judgment& j) {
  std::size_t m = max_depth(j);
  Activeness a;
  for (const auto& t : j.mains) a.active.push_back(depth(t) == m);
  return a;
}

struct Replay {
  Judgment conclusion;
  std::vector<bool> active;
};

namespace detail {

inline Term component(const GeneratorName& g, const std::optional<Label>& label, std::size_t k, std::size_t n,
                      std::vector<Term> args) {
  return Term::app(g, label, n >= 2 ? std::optional<unsigned>(static_cast<unsigned>(k + 1)) : std::nullopt,
                   std::move(args));
}

[[noreturn]] inline void invalid(const std::string& msg) { throw CheckError(CheckErrorKind::InvalidDerivation, msg); }

// Checks that sigma keeps the given canonical indices in increasing output order.
inline void require_order(const Permutation& sigma, const std::vector<std::size_t>& canon_indices, const char* what) {
  auto inv = sigma.inverse();
  for (std::size_t i = 1; i < canon_indices.size(); ++i)
    if (inv[canon_indices[i - 1]] > inv[canon_indices[i]]) invalid(std::string("permutation reorders ") + what);
}

inline const Arity& arity_or_throw(const Signature& sig, const GeneratorName& g) {
  const Arity* a = sig.find(g);
  if (!a) throw CheckError(CheckErrorKind::UnknownGenerator, "generator '" + g.str() + "' is not declared");
  return *a;
}

}  // namespace detail

// Replays a derivation bottom-up, validating every side condition, and
// returns its conclusion with the activeness mask of its final rule.
inline Replay replay(const Signature& sig, const Derivation& d) {
  using detail::invalid;
  if (d.is_identity()) {
    const IdentityRule& r = d.identity();
    std::vector<Term> canon;
    std::vector<ObjectName> types;
    for (std::size_t i = 0; i < r.context.size(); ++i) {
      if (!sig.has_object(r.context[i].type))
        throw CheckError(CheckErrorKind::UnknownObject, "object '" + r.context[i].type.str() + "'");
      for (std::size_t k = 0; k < i; ++k)
        if (r.context[k].var == r.context[i].var) invalid("context variable bound twice");
      canon.push_back(Term::var(r.context[i].var));
      types.push_back(r.context[i].type);
    }
    std::vector<std::size_t> firsts;
    std::vector<Label> labels;
    for (const auto& g : r.generators) {
      const Arity& a = detail::arity_or_throw(sig, g.generator);
      if (!a.domain.empty() || a.codomain.empty()) invalid("identity rule generator '" + g.generator.str() + "' is not nullary");
      if (std::find(labels.begin(), labels.end(), g.label) != labels.end()) invalid("label reused in identity rule");
      labels.push_back(g.label);
      firsts.push_back(canon.size());
      for (std::size_t k = 0; k < a.codomain.size(); ++k) {
        canon.push_back(detail::component(g.generator, g.label, k, a.codomain.size(), {}));
        types.push_back(a.codomain[k]);
      }
    }
    if (r.sigma.size() != canon.size()) invalid("identity permutation has the wrong size");
    detail::require_order(r.sigma, firsts, "nullary generators");
    Replay out;
    out.conclusion.context = r.context;
    out.conclusion.mains = r.sigma.apply(canon);
    out.conclusion.types = r.sigma.apply(types);
    for (const auto& g : r.atoms) {
      const Arity& a = detail::arity_or_throw(sig, g);
      if (!a.domain.empty() || !a.codomain.empty()) invalid("atom '" + g.str() + "' is not () -> ()");
      out.conclusion.scalars.push_back(Term::atom(g));
    }
    out.active.assign(canon.size(), true);
    return out;
  }

  const GeneratorRule& r = d.generator();
  if (!r.premise) invalid("missing premise");
  if (r.applications.empty() && r.scalar_applications.empty()) invalid("generator rule applies nothing");
  Replay p = replay(sig, *r.premise);
  const auto& pm = p.conclusion.mains;
  std::size_t pos = 0;
  std::vector<Term> canon;
  std::vector<ObjectName> types;
  std::vector<std::size_t> firsts;
  std::vector<Term> new_scalars;

  auto take_args = [&](const Application& app, const Arity& a) {
    if (app.arguments.size() != a.domain.size()) invalid("application of '" + app.generator.str() + "' has wrong argument count");
    if (a.domain.empty()) invalid("generator rule applies nullary generator '" + app.generator.str() + "'");
    std::vector<Term> args;
    bool any_active = false;
    for (std::size_t i = 0; i < app.arguments.size(); ++i) {
      if (app.arguments[i] != pos + i) invalid("arguments of '" + app.generator.str() + "' are not in block layout");
      if (app.arguments[i] >= pm.size()) invalid("argument position out of range");
      if (!(p.conclusion.types[app.arguments[i]] == a.domain[i]))
        throw CheckError(CheckErrorKind::TypeMismatch, "argument of '" + app.generator.str() + "'");
      any_active = any_active || p.active[app.arguments[i]];
      args.push_back(pm[app.arguments[i]]);
    }
    if (!any_active) invalid("application of '" + app.generator.str() + "' has no active argument");
    pos += app.arguments.size();
    return args;
  };

  for (const auto& app : r.applications) {
    const Arity& a = detail::arity_or_throw(sig, app.generator);
    if (a.codomain.empty()) invalid("scalar generator listed among positive applications");
    auto args = take_args(app, a);
    firsts.push_back(canon.size());
    for (std::size_t k = 0; k < a.codomain.size(); ++k) {
      canon.push_back(detail::component(app.generator, std::nullopt, k, a.codomain.size(), args));
      types.push_back(a.codomain[k]);
    }
  }
  std::size_t n_out = canon.size();
  for (const auto& app : r.scalar_applications) {
    const Arity& a = detail::arity_or_throw(sig, app.generator);
    if (!a.codomain.empty()) invalid("positive generator listed among scalar applications");
    new_scalars.push_back(Term::app(app.generator, std::nullopt, std::nullopt, take_args(app, a)));
  }
  std::vector<std::size_t> rest;
  for (std::size_t i = pos; i < pm.size(); ++i) {
    rest.push_back(canon.size());
    canon.push_back(pm[i]);
    types.push_back(p.conclusion.types[i]);
  }
  if (r.sigma.size() != canon.size()) invalid("permutation has the wrong size");
  detail::require_order(r.sigma, firsts, "first components");
  detail::require_order(r.sigma, rest, "untouched terms");

  std::vector<Term> scalars = new_scalars;
  scalars.insert(scalars.end(), p.conclusion.scalars.begin(), p.conclusion.scalars.end());
  if (r.tau.size() != scalars.size()) invalid("scalar permutation has the wrong size");
  std::vector<std::size_t> sa, z;
  for (std::size_t i = 0; i < new_scalars.size(); ++i) sa.push_back(i);
  for (std::size_t i = new_scalars.size(); i < scalars.size(); ++i) z.push_back(i);
  detail::require_order(r.tau, sa, "scalar applications");
  detail::require_order(r.tau, z, "premise scalars");

  Replay out;
  out.conclusion.context = p.conclusion.context;
  out.conclusion.mains = r.sigma.apply(canon);
  out.conclusion.types = r.sigma.apply(types);
  out.conclusion.scalars = r.tau.apply(scalars);
  std::vector<bool> canon_active(canon.size(), false);
  for (std::size_t i = 0; i < n_out; ++i) canon_active[i] = true;
  out.active = r.sigma.apply(canon_active);
  return out;
}

inline Judgment check_derivation(const Signature& sig, const Derivation& d) { return replay(sig, d).conclusion; }
inline Judgment conclusion(const Signature& sig, const Derivation& d) { return replay(sig, d).conclusion; }
inline std::vector<bool> activeness(const Signature& sig, const Derivation& d) { return replay(sig, d).active; }

namespace detail {

struct WellFormed {
  const Signature& sig;
  const Context& ctx;
  std::map<Label, GeneratorName> label_owner;

  // Returns the object type of t, or nullopt when t is scalar valued.
  std::optional<ObjectName> type_of(const Term& t) {
    if (t.is_var()) {
      for (const auto& e : ctx)
        if (e.var == t.var_name()) return e.type;
      throw CheckError(CheckErrorKind::UnknownVariable, "variable '" + t.name() + "' is not in the context");
    }
    const Arity& a = arity_or_throw(sig, t.generator());
    if (t.args().size() != a.domain.size())
      throw CheckError(CheckErrorKind::ArityMismatch, "'" + t.name() + "' expects " + std::to_string(a.domain.size()) +
                                                          " arguments in " + to_string(t));
    bool wants_label = a.domain.empty() && !a.codomain.empty();
    if (wants_label && !t.label())
      throw CheckError(CheckErrorKind::MissingLabel, "nullary generator '" + t.name() + "' needs a label");
    if (!wants_label && t.label())
      throw CheckError(CheckErrorKind::MisplacedLabel, "'" + t.name() + "' takes no label in " + to_string(t));
    if (t.label()) {
      auto [it, inserted] = label_owner.emplace(*t.label(), t.generator());
      if (!inserted && !(it->second == t.generator()))
        throw CheckError(CheckErrorKind::LabelClash, "label '" + t.label()->str() + "' used on '" + it->second.str() +
                                                         "' and '" + t.name() + "'");
    }
    bool wants_index = a.codomain.size() >= 2;
    if (wants_index != t.index().has_value() || (t.index() && *t.index() > a.codomain.size()))
      throw CheckError(CheckErrorKind::BadComponentIndex, "component index of " + to_string(t));
    for (std::size_t i = 0; i < t.args().size(); ++i) {
      auto ty = type_of(t.args()[i]);
      if (!ty)
        throw CheckError(CheckErrorKind::TypeMismatch, "scalar term used as argument in " + to_string(t));
      if (!(*ty == a.domain[i]))
        throw CheckError(CheckErrorKind::TypeMismatch, "argument " + std::to_string(i + 1) + " of " + to_string(t) +
                                                           " has type " + ty->str() + ", expected " + a.domain[i].str());
    }
    if (a.codomain.empty()) return std::nullopt;
    return a.codomain[t.index() ? *t.index() - 1 : 0];
  }
};

inline void well_formed(const Signature& sig, const Judgment& j) {
  for (const auto& e : j.context)
    if (!sig.has_object(e.type)) throw CheckError(CheckErrorKind::UnknownObject, "object '" + e.type.str() + "'");
  for (std::size_t i = 0; i < j.context.size(); ++i)
    for (std::size_t k = i + 1; k < j.context.size(); ++k)
      if (j.context[i].var == j.context[k].var)
        throw CheckError(CheckErrorKind::VariableUsage, "variable '" + j.context[i].var.str() + "' bound twice");
  if (j.mains.size() != j.types.size())
    throw CheckError(CheckErrorKind::ArityMismatch, "main terms and codomain types differ in number");
  for (const auto& t : j.types)
    if (!sig.has_object(t)) throw CheckError(CheckErrorKind::UnknownObject, "object '" + t.str() + "'");
  WellFormed wf{sig, j.context, {}};
  for (std::size_t i = 0; i < j.mains.size(); ++i) {
    auto ty = wf.type_of(j.mains[i]);
    if (!ty)
      throw CheckError(CheckErrorKind::ScalarAtomInMainPosition, to_string(j.mains[i]) + " is scalar valued");
    if (!(*ty == j.types[i]))
      throw CheckError(CheckErrorKind::TypeMismatch, to_string(j.mains[i]) + " has type " + ty->str() + ", declared " +
                                                         j.types[i].str());
  }
  for (const auto& s : j.scalars)
    if (wf.type_of(s))
      throw CheckError(CheckErrorKind::TypeMismatch, to_string(s) + " is not scalar valued");
}

inline void reject_duplicates(const std::vector<Term>& premise, std::size_t rest_begin) {
  std::map<Term, std::size_t> seen;
  for (std::size_t i = 0; i < premise.size(); ++i) {
    auto [it, inserted] = seen.emplace(premise[i], i);
    if (inserted) continue;
    const Term& t = premise[i];
    if (t.is_var())
      throw CheckError(CheckErrorKind::VariableUsage, "variable '" + t.name() + "' used more than once");
    if (it->second >= rest_begin)
      throw CheckError(CheckErrorKind::DuplicateComponent, to_string(t) + " occurs twice");
    throw CheckError(CheckErrorKind::SharedArgument, to_string(t) + " is consumed more than once");
  }
}

inline Derivation peel(const Signature& sig, const Context& ctx, const std::vector<Term>& mains,
                       const std::vector<ObjectName>& types, const std::vector<Term>& scalars) {
  std::size_t d = 0;
  for (const auto& t : mains) d = std::max(d, depth(t));
  for (const auto& t : scalars) d = std::max(d, depth(t));

  if (d == 0) {
    IdentityRule r;
    r.context = ctx;
    std::vector<int> var_pos(ctx.size(), -1);
    struct Group {
      GeneratorName gen;
      Label label;
      std::size_t first = 0;
      std::vector<int> positions;
    };
    std::vector<Group> groups;
    for (std::size_t i = 0; i < mains.size(); ++i) {
      const Term& t = mains[i];
      if (t.is_var()) {
        std::size_t k = 0;
        while (ctx[k].var != t.var_name()) ++k;
        if (var_pos[k] >= 0) throw CheckError(CheckErrorKind::VariableUsage, "variable '" + t.name() + "' used more than once");
        var_pos[k] = static_cast<int>(i);
        continue;
      }
      const Arity& a = sig.arity(t.generator());
      auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& g) { return g.label == *t.label(); });
      if (it == groups.end()) {
        groups.push_back({t.generator(), *t.label(), 0, std::vector<int>(a.codomain.size(), -1)});
        it = groups.end() - 1;
      }
      std::size_t k = t.index() ? *t.index() - 1 : 0;
      if (it->positions[k] >= 0) throw CheckError(CheckErrorKind::DuplicateComponent, to_string(t) + " occurs twice");
      it->positions[k] = static_cast<int>(i);
    }
    for (std::size_t k = 0; k < ctx.size(); ++k)
      if (var_pos[k] < 0)
        throw CheckError(CheckErrorKind::VariableUsage, "variable '" + ctx[k].var.str() + "' is never used");
    for (auto& g : groups) {
      for (std::size_t k = 0; k < g.positions.size(); ++k)
        if (g.positions[k] < 0)
          throw CheckError(CheckErrorKind::IncompleteComponentGroup,
                           "component " + std::to_string(k + 1) + " of " + g.gen.str() + "^" + g.label.str() + " is missing");
      g.first = static_cast<std::size_t>(g.positions[0]);
    }
    std::stable_sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) { return a.first < b.first; });
    std::vector<std::size_t> sigma(mains.size());
    std::size_t c = 0;
    for (std::size_t k = 0; k < ctx.size(); ++k) sigma[static_cast<std::size_t>(var_pos[k])] = c++;
    for (const auto& g : groups) {
      r.generators.push_back({g.gen, g.label});
      for (auto p : g.positions) sigma[static_cast<std::size_t>(p)] = c++;
    }
    r.sigma = Permutation(std::move(sigma));
    for (const auto& s : scalars) r.atoms.push_back(s.generator());
    return Derivation{std::move(r)};
  }

  struct Group {
    Term key;
    std::size_t first = 0;
    std::vector<int> positions;
  };
  std::vector<Group> groups;
  std::vector<Term> new_mains;
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < mains.size(); ++i) {
    const Term& t = mains[i];
    if (depth(t) != d) {
      rest.push_back(i);
      continue;
    }
    if (std::find(new_mains.begin(), new_mains.end(), t) != new_mains.end())
      throw CheckError(CheckErrorKind::DuplicateComponent, to_string(t) + " occurs twice");
    new_mains.push_back(t);
    Term key = t.with_index(std::nullopt);
    auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& g) { return g.key == key; });
    if (it == groups.end()) {
      groups.push_back({key, 0, std::vector<int>(sig.arity(t.generator()).codomain.size(), -1)});
      it = groups.end() - 1;
    }
    it->positions[t.index() ? *t.index() - 1 : 0] = static_cast<int>(i);
  }
  for (auto& g : groups) {
    for (std::size_t k = 0; k < g.positions.size(); ++k)
      if (g.positions[k] < 0)
        throw CheckError(CheckErrorKind::IncompleteComponentGroup,
                         "component " + std::to_string(k + 1) + " of " + to_string(g.key) + " is missing");
    g.first = static_cast<std::size_t>(g.positions[0]);
  }
  std::stable_sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) { return a.first < b.first; });

  GeneratorRule r;
  std::vector<Term> premise;
  std::vector<ObjectName> premise_types;
  std::vector<std::size_t> sigma(mains.size());
  std::size_t c = 0;
  for (const auto& g : groups) {
    const Arity& a = sig.arity(g.key.generator());
    Application app{g.key.generator(), {}};
    for (std::size_t i = 0; i < g.key.args().size(); ++i) {
      app.arguments.push_back(premise.size());
      premise.push_back(g.key.args()[i]);
      premise_types.push_back(a.domain[i]);
    }
    r.applications.push_back(std::move(app));
    for (auto p : g.positions) sigma[static_cast<std::size_t>(p)] = c++;
  }
  std::vector<std::size_t> tau(scalars.size());
  std::vector<Term> rest_scalars;
  std::size_t n_scalar_apps = 0;
  for (const auto& s : scalars)
    if (depth(s) == d) ++n_scalar_apps;
  std::size_t sa = 0;
  for (std::size_t i = 0; i < scalars.size(); ++i) {
    const Term& s = scalars[i];
    if (depth(s) != d) {
      tau[i] = n_scalar_apps + rest_scalars.size();
      rest_scalars.push_back(s);
      continue;
    }
    const Arity& a = sig.arity(s.generator());
    Application app{s.generator(), {}};
    for (std::size_t k = 0; k < s.args().size(); ++k) {
      app.arguments.push_back(premise.size());
      premise.push_back(s.args()[k]);
      premise_types.push_back(a.domain[k]);
    }
    r.scalar_applications.push_back(std::move(app));
    tau[i] = sa++;
  }
  std::size_t rest_begin = premise.size();
  for (auto i : rest) {
    sigma[i] = c++;
    premise.push_back(mains[i]);
    premise_types.push_back(types[i]);
  }
  reject_duplicates(premise, rest_begin);
  r.sigma = Permutation(std::move(sigma));
  r.tau = Permutation(std::move(tau));
  r.premise = share(peel(sig, ctx, premise, premise_types, rest_scalars));
  return Derivation{std::move(r)};
}

}  // namespace detail

// Reconstructs the unique derivation of j, or throws CheckError.
inline Derivation check(const Signature& sig, const Judgment& j) {
  detail::well_formed(sig, j);
  return detail::peel(sig, j.context, j.mains, j.types, j.scalars);
}

inline bool derivable(const Signature& sig, const Judgment& j) {
  try {
    check(sig, j);
    return true;
  } catch (const CheckError&) {
    return false;
  }
}

// Throws SharedArgument when two distinct positions hold the same edge.
inline void assert_distinct_subterms(const Signature& sig, const Derivation& d) {
  auto j = conclusion(sig, d);
  std::map<Term, int> seen;
  std::map<Term, int> expanded;
  std::function<void(const Term&)> walk = [&](const Term& t) {
    if (t.is_var() || sig.arity(t.generator()).codomain.size() > 0) {
      if (++seen[t] > 1) throw CheckError(CheckErrorKind::SharedArgument, to_string(t) + " occurs twice");
    }
    // sibling components share their arguments; visit those once
    if (t.is_app() && expanded[t.with_index(std::nullopt)]++ > 0) return;
    for (const auto& a : t.args()) walk(a);
  };
  for (const auto& t : j.mains) walk(t);
  for (const auto& t : j.scalars) walk(t);
}

namespace detail {
inline void describe(const Signature& sig, const Derivation& d, std::string& out, int indent) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  out += pad + to_string(conclusion(sig, d)) + "\n";
  if (d.is_identity()) {
    out += pad + "  by identity\n";
    return;
  }
  std::string names;
  for (const auto& a : d.generator().applications) names += (names.empty() ? "" : ", ") + a.generator.str();
  for (const auto& a : d.generator().scalar_applications) names += (names.empty() ? "" : ", ") + a.generator.str();
  out += pad + "  by generator rule [" + names + "]\n";
  describe(sig, *d.generator().premise, out, indent + 1);
}
}  // namespace detail

// Human-readable derivation tree, conclusion first.
inline std::string describe(const Signature& sig, const Derivation& d) {
  std::string out;
  detail::describe(sig, d, out, 0);
  return out;
}

}  // namespace sweedler
