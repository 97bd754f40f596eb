#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sweedler/algebra.hpp"
#include "sweedler/equality.hpp"
#include "sweedler/print.hpp"
#include "sweedler/signature.hpp"

namespace sweedler {

enum class StepErrorKind { UnknownAxiom, InterfaceMismatch, InvalidWitness, LhsMismatch, RhsMismatch, NotFound };

inline const char* to_string(StepErrorKind k) {
  switch (k) {
    case StepErrorKind::UnknownAxiom: return "UnknownAxiom";
    case StepErrorKind::InterfaceMismatch: return "InterfaceMismatch";
    case StepErrorKind::InvalidWitness: return "InvalidWitness";
    case StepErrorKind::LhsMismatch: return "LhsMismatch";
    case StepErrorKind::RhsMismatch: return "RhsMismatch";
    case StepErrorKind::NotFound: return "NotFound";
  }
  return "?";
}

class StepError : public std::runtime_error {
 public:
  StepError(StepErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}
  StepErrorKind kind() const { return kind_; }

 private:
  StepErrorKind kind_;
};

// U : Γ -> (Φ, Γa) and V : (Φ, Δa) -> Ψ around an axiom side Γa -> Δa.
struct Witness {
  Judgment pre;
  Judgment post;
};

struct ProofStep {
  std::string axiom;
  bool reverse = false;
  std::optional<Judgment> pre;  // both absent: found by search_step
  std::optional<Judgment> post;
  Judgment resulting;
  std::size_t line = 0;
};

struct ProofScript {
  std::string theory;
  std::string name;
  Judgment start;
  std::vector<ProofStep> steps;
  std::optional<Judgment> claim;
};

inline constexpr std::uint64_t default_search_bound = 200'000;

// compose(compose(U, id_Φ ⊗ side), V)
inline Judgment assemble(const Signature& sig, const Judgment& pre, const Judgment& side, const Judgment& post) {
  std::size_t k = side.context.size();
  if (pre.types.size() < k) throw StepError(StepErrorKind::InterfaceMismatch, "pre has fewer outputs than the axiom inputs");
  std::vector<ObjectName> phi(pre.types.begin(), pre.types.end() - static_cast<std::ptrdiff_t>(k));
  for (std::size_t i = 0; i < k; ++i)
    if (!(pre.types[phi.size() + i] == side.context[i].type))
      throw StepError(StepErrorKind::InterfaceMismatch, "pre outputs do not end with the axiom input types");
  std::vector<ObjectName> mid = phi;
  mid.insert(mid.end(), side.types.begin(), side.types.end());
  if (post.domain() != mid) throw StepError(StepErrorKind::InterfaceMismatch, "post context does not match (pass-through, axiom output) types");
  auto checked = [&](const Judgment& j, const char* what) {
    try {
      return check(sig, j);
    } catch (const CheckError& e) {
      throw StepError(StepErrorKind::InvalidWitness, std::string(what) + " is not derivable: " + e.what());
    }
  };
  Derivation du = checked(pre, "pre"), dv = checked(post, "post"), ds = check(sig, side);
  std::set<VarName> taken;
  for (const auto& e : side.context) taken.insert(e.var);
  Derivation middle = tensor(sig, identity_of(fresh_context(phi, "p", taken)), ds);
  return conclusion(sig, compose(sig, compose(sig, du, middle), dv));
}

namespace detail {

inline std::pair<const Judgment*, const Judgment*> sides(const Presentation& p, const std::string& axiom, bool reverse) {
  const Axiom* ax = p.find_axiom(axiom);
  if (!ax) throw StepError(StepErrorKind::UnknownAxiom, "no axiom or lemma named '" + axiom + "' in " + p.name);
  return reverse ? std::pair{&ax->rhs, &ax->lhs} : std::pair{&ax->lhs, &ax->rhs};
}

}  // namespace detail

// Checks one step with explicit witnesses; returns the step's resulting line.
inline Judgment apply_axiom_step(const Presentation& p, const Judgment& current, const ProofStep& step) {
  if (!step.pre || !step.post) throw StepError(StepErrorKind::InvalidWitness, "step has no pre/post witnesses");
  auto [from, to] = detail::sides(p, step.axiom, step.reverse);
  Judgment lhs = assemble(p.signature, *step.pre, *from, *step.post);
  if (!free_equal(lhs, current))
    throw StepError(StepErrorKind::LhsMismatch, "assembled " + to_string(lhs) + " differs from " + to_string(current));
  Judgment rhs = assemble(p.signature, *step.pre, *to, *step.post);
  if (!free_equal(rhs, step.resulting))
    throw StepError(StepErrorKind::RhsMismatch,
                    "assembled " + to_string(rhs) + " differs from " + to_string(step.resulting));
  return step.resulting;
}

namespace detail {

inline std::optional<ObjectName> wire_type(const Signature& sig, const Context& ctx, const Term& t) {
  if (t.is_var()) {
    for (const auto& e : ctx)
      if (e.var == t.var_name()) return e.type;
    return std::nullopt;
  }
  const Arity* a = sig.find(t.generator());
  if (!a || a->codomain.empty()) return std::nullopt;
  return a->codomain[t.index() ? *t.index() - 1 : 0];
}

struct Wire {
  Term term;
  ObjectName type;
};

inline void collect_wires(const Signature& sig, const Context& ctx, const Term& t, std::set<Term>& seen,
                          std::vector<Wire>& out) {
  if (auto ty = wire_type(sig, ctx, t); ty && seen.insert(t).second) out.push_back({t, *ty});
  for (const auto& a : t.args()) collect_wires(sig, ctx, a, seen, out);
}

struct Match {
  std::map<VarName, Term> theta;
  std::set<Term> theta_image;
  Bijection labels;
  std::vector<std::size_t> scalars;  // matched scalar positions of the current line
};

inline bool match_term(const Term& pat, const Term& t, const Context& pctx, const Signature& sig, const Context& ctx,
                       Match& m) {
  if (pat.is_var()) {
    auto it = m.theta.find(pat.var_name());
    if (it != m.theta.end()) return it->second == t;
    auto want = wire_type(sig, pctx, pat);
    auto got = wire_type(sig, ctx, t);
    if (!want || !got || !(*want == *got) || m.theta_image.count(t)) return false;
    m.theta.emplace(pat.var_name(), t);
    m.theta_image.insert(t);
    return true;
  }
  if (t.is_var() || pat.name() != t.name() || pat.index() != t.index() ||
      pat.label().has_value() != t.label().has_value() || pat.args().size() != t.args().size())
    return false;
  if (pat.label() && !m.labels.bind(*pat.label(), *t.label())) return false;
  for (std::size_t i = 0; i < pat.args().size(); ++i)
    if (!match_term(pat.args()[i], t.args()[i], pctx, sig, ctx, m)) return false;
  return true;
}

inline Term replace_terms(const Term& t, const std::map<Term, Term>& m) {
  if (auto it = m.find(t); it != m.end()) return it->second;
  if (t.is_var() || t.args().empty()) return t;
  std::vector<Term> args;
  for (const auto& a : t.args()) args.push_back(replace_terms(a, m));
  return Term::app(t.generator(), t.label(), t.index(), std::move(args));
}

inline bool contains_any(const Term& t, const std::set<Term>& needles) {
  if (needles.count(t)) return true;
  for (const auto& a : t.args())
    if (contains_any(a, needles)) return true;
  return false;
}

// Cuts `current` around a matched occurrence of `side`: everything
// downstream of the occurrence's outputs goes to post, the rest to pre.
inline Witness cut(const Signature& sig, const Judgment& current, const Judgment& side, const Match& m) {
  std::vector<Term> outputs;
  for (const auto& t : side.mains) outputs.push_back(substitute(relabel(t, m.labels.fwd), m.theta));
  std::set<Term> out_set(outputs.begin(), outputs.end());

  std::map<Term, Term> to_var;
  std::vector<Term> phi_terms;
  for (std::size_t j = 0; j < outputs.size(); ++j) to_var.emplace(outputs[j], Term::var(VarName("d" + std::to_string(j + 1))));

  auto transform = [&](auto&& self, const Term& t) -> Term {
    if (auto it = to_var.find(t); it != to_var.end()) return it->second;
    if (!contains_any(t, out_set)) {
      Term tv = Term::var(VarName("p" + std::to_string(phi_terms.size() + 1)));
      phi_terms.push_back(t);
      to_var.emplace(t, tv);
      return tv;
    }
    std::vector<Term> args;
    for (const auto& a : t.args()) args.push_back(self(self, a));
    return Term::app(t.generator(), t.label(), t.index(), std::move(args));
  };

  Judgment post;
  Judgment pre;
  for (const auto& t : current.mains) post.mains.push_back(transform(transform, t));
  for (std::size_t i = 0; i < current.scalars.size(); ++i) {
    if (std::find(m.scalars.begin(), m.scalars.end(), i) != m.scalars.end()) continue;
    const Term& s = current.scalars[i];
    if (contains_any(s, out_set))
      post.scalars.push_back(transform(transform, s));
    else
      pre.scalars.push_back(s);
  }
  post.types = current.types;

  pre.context = current.context;
  for (std::size_t i = 0; i < phi_terms.size(); ++i) {
    ObjectName ty = *wire_type(sig, current.context, phi_terms[i]);
    pre.mains.push_back(phi_terms[i]);
    pre.types.push_back(ty);
    post.context.push_back({VarName("p" + std::to_string(i + 1)), ty});
  }
  for (const auto& e : side.context) {
    pre.mains.push_back(m.theta.at(e.var));
    pre.types.push_back(e.type);
  }
  for (std::size_t j = 0; j < outputs.size(); ++j) post.context.push_back({VarName("d" + std::to_string(j + 1)), side.types[j]});
  return {pre, post};
}

// The line obtained by replacing the matched occurrence of `from` with `to`.
inline Judgment rewrite(const Judgment& current, const Judgment& from, const Judgment& to, const Match& m) {
  std::set<Label> used;
  for (const auto& l : labels_of(current)) used.insert(l);
  LabelMap fresh;
  for (const auto& l : labels_of(to)) {
    Label f = fresh_label(l, used);
    used.insert(f);
    fresh.emplace(l, f);
  }
  auto inst = [&](const Term& t) { return substitute(relabel(t, fresh), m.theta); };
  std::map<Term, Term> repl;
  for (std::size_t j = 0; j < from.mains.size(); ++j)
    repl.emplace(substitute(relabel(from.mains[j], m.labels.fwd), m.theta), inst(to.mains[j]));
  Judgment out = current;
  for (auto& t : out.mains) t = replace_terms(t, repl);
  out.scalars.clear();
  for (std::size_t i = 0; i < current.scalars.size(); ++i)
    if (std::find(m.scalars.begin(), m.scalars.end(), i) == m.scalars.end())
      out.scalars.push_back(replace_terms(current.scalars[i], repl));
  for (const auto& s : to.scalars) out.scalars.push_back(inst(s));
  return out;
}

// Calls visit(match) for every occurrence of `side` in `current` until it
// returns true or `budget` partial matches have been tried. Structured main
// terms are matched first, then scalars, then bare-variable main terms.
template <class Visit>
bool enumerate_matches(const Signature& sig, const Judgment& current, const Judgment& side, std::uint64_t& budget,
                       Visit&& visit) {
  std::vector<Wire> wires;
  std::set<Term> seen;
  for (const auto& t : current.mains) collect_wires(sig, current.context, t, seen, wires);
  for (const auto& t : current.scalars) collect_wires(sig, current.context, t, seen, wires);

  std::vector<std::size_t> structured, bare;
  for (std::size_t i = 0; i < side.mains.size(); ++i) (side.mains[i].is_var() ? bare : structured).push_back(i);
  std::vector<std::optional<Term>> images(side.mains.size());

  auto mains = [&](auto&& self, const std::vector<std::size_t>& idx, std::size_t k, const Match& m,
                   auto&& then) -> bool {
    if (k == idx.size()) return then(m);
    const Term& pat = side.mains[idx[k]];
    for (const auto& w : wires) {
      if (budget == 0) return false;
      --budget;
      if (std::find(images.begin(), images.end(), std::optional<Term>(w.term)) != images.end()) continue;
      Match next = m;
      if (!match_term(pat, w.term, side.context, sig, current.context, next)) continue;
      images[idx[k]] = w.term;
      bool done = self(self, idx, k + 1, next, then);
      images[idx[k]].reset();
      if (done) return true;
    }
    return false;
  };
  auto scalars = [&](auto&& self, std::size_t k, const Match& m) -> bool {
    if (k == side.scalars.size()) return mains(mains, bare, 0, m, visit);
    for (std::size_t i = 0; i < current.scalars.size(); ++i) {
      if (budget == 0) return false;
      --budget;
      if (std::find(m.scalars.begin(), m.scalars.end(), i) != m.scalars.end()) continue;
      Match next = m;
      if (!match_term(side.scalars[k], current.scalars[i], side.context, sig, current.context, next)) continue;
      next.scalars.push_back(i);
      if (self(self, k + 1, next)) return true;
    }
    return false;
  };
  return mains(mains, structured, 0, Match{}, [&](const Match& m) { return scalars(scalars, 0, m); });
}

}  // namespace detail

// Looks for pre/post witnesses turning `current` into `target` by one use of
// the axiom. Sound: a returned witness always passes apply_axiom_step.
inline std::optional<Witness> search_step(const Presentation& p, const Judgment& current, const Judgment& target,
                                          const std::string& axiom, bool reverse,
                                          std::uint64_t bound = default_search_bound) {
  auto [from, to] = detail::sides(p, axiom, reverse);
  std::optional<Witness> found;
  std::uint64_t budget = bound;
  detail::enumerate_matches(p.signature, current, *from, budget, [&](const detail::Match& m) {
    try {
      if (!free_equal(detail::rewrite(current, *from, *to, m), target)) return false;
      Witness w = detail::cut(p.signature, current, *from, m);
      ProofStep s{axiom, reverse, w.pre, w.post, target, 0};
      apply_axiom_step(p, current, s);
      found = std::move(w);
      return true;
    } catch (const std::exception&) {
      return false;
    }
  });
  return found;
}

struct StepReport {
  std::size_t index = 0;  // 1-based
  std::string axiom;
  bool reverse = false;
  bool ok = false;
  std::string message;
  std::optional<Witness> witness;
  std::size_t line = 0;
};

struct ProofReport {
  std::string name;
  std::string theory;
  std::vector<StepReport> steps;
  bool start_ok = true;
  bool claim_ok = true;
  std::string message;

  bool ok() const {
    return start_ok && claim_ok && std::all_of(steps.begin(), steps.end(), [](const StepReport& s) { return s.ok; });
  }
  std::optional<std::size_t> first_failure() const {
    for (const auto& s : steps)
      if (!s.ok) return s.index;
    return std::nullopt;
  }
};

// Verifies every step independently against the previous line as written;
// never throws on a well-formed script.
inline ProofReport check_proof(const Presentation& p, const ProofScript& script,
                               std::uint64_t bound = default_search_bound) {
  ProofReport r{script.name, script.theory, {}, true, true, {}};
  try {
    check(p.signature, script.start);
  } catch (const CheckError& e) {
    r.start_ok = false;
    r.message = std::string("start line is not derivable: ") + e.what();
  }
  const Judgment* current = &script.start;
  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    const ProofStep& step = script.steps[i];
    StepReport s{i + 1, step.axiom, step.reverse, false, {}, std::nullopt, step.line};
    try {
      check(p.signature, step.resulting);
      if (step.pre && step.post) {
        apply_axiom_step(p, *current, step);
        s.witness = Witness{*step.pre, *step.post};
      } else {
        s.witness = search_step(p, *current, step.resulting, step.axiom, step.reverse, bound);
        if (!s.witness) throw StepError(StepErrorKind::NotFound, "no occurrence of " + step.axiom + " turns the line into the next");
      }
      s.ok = true;
    } catch (const std::exception& e) {
      s.message = e.what();
    }
    r.steps.push_back(std::move(s));
    current = &step.resulting;
  }
  if (script.claim) {
    try {
      r.claim_ok = free_equal(*current, *script.claim).has_value();
      if (!r.claim_ok) r.message = "final line differs from the claim";
    } catch (const std::exception& e) {
      r.claim_ok = false;
      r.message = e.what();
    }
  }
  return r;
}

}  // namespace sweedler
