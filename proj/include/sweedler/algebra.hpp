#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sweedler/checker.hpp"

namespace sweedler {

class CompositionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::vector<std::size_t> cod_sizes(const Signature& sig, const std::vector<Application>& apps) {
  std::vector<std::size_t> out;
  for (const auto& a : apps) out.push_back(sig.arity(a.generator).codomain.size());
  return out;
}

inline std::vector<std::size_t> offsets(const std::vector<std::size_t>& sizes, std::size_t start = 0) {
  std::vector<std::size_t> out;
  for (auto s : sizes) {
    out.push_back(start);
    start += s;
  }
  return out;
}

inline std::size_t total(const std::vector<std::size_t>& sizes) {
  std::size_t t = 0;
  for (auto s : sizes) t += s;
  return t;
}

inline std::size_t arg_count(const std::vector<Application>& apps) {
  std::size_t t = 0;
  for (const auto& a : apps) t += a.arguments.size();
  return t;
}

// Indices 0..n-1 sorted by key.
template <class Key>
std::vector<std::size_t> order_by(std::size_t n, Key key) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  return idx;
}

inline void renumber_blocks(std::vector<Application>& apps, std::size_t start) {
  for (auto& a : apps)
    for (auto& p : a.arguments) p = start++;
}

}  // namespace detail

// Reorders the main terms of the conclusion: new mains[i] = old mains[rho[i]].
inline Derivation exchange_cod(const Signature& sig, const Derivation& d, const Permutation& rho) {
  if (rho.is_identity()) return d;
  if (d.is_identity()) {
    IdentityRule r = d.identity();
    Permutation s = then(r.sigma, rho);
    std::size_t nv = r.context.size();
    std::vector<std::size_t> sizes;
    for (const auto& g : r.generators) sizes.push_back(sig.arity(g.generator).codomain.size());
    auto off = detail::offsets(sizes, nv);
    auto inv = s.inverse();
    auto order = detail::order_by(sizes.size(), [&](std::size_t g) { return inv[off[g]]; });
    std::vector<std::size_t> remap(s.size());
    for (std::size_t v = 0; v < nv; ++v) remap[v] = v;
    std::vector<LabeledGenerator> gens;
    std::size_t c = nv;
    for (auto g : order) {
      gens.push_back(r.generators[g]);
      for (std::size_t k = 0; k < sizes[g]; ++k) remap[off[g] + k] = c++;
    }
    std::vector<std::size_t> sigma(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) sigma[i] = remap[s[i]];
    r.generators = std::move(gens);
    r.sigma = Permutation(std::move(sigma));
    return Derivation{std::move(r)};
  }

  GeneratorRule r = d.generator();
  Permutation s = then(r.sigma, rho);
  auto sizes = detail::cod_sizes(sig, r.applications);
  auto off = detail::offsets(sizes);
  std::size_t n_out = detail::total(sizes);
  std::size_t n_rest = s.size() - n_out;
  std::size_t rest_begin = detail::arg_count(r.applications) + detail::arg_count(r.scalar_applications);
  auto inv = s.inverse();
  auto app_order = detail::order_by(sizes.size(), [&](std::size_t a) { return inv[off[a]]; });
  auto rest_order = detail::order_by(n_rest, [&](std::size_t t) { return inv[n_out + t]; });

  std::vector<std::size_t> pi;
  std::vector<Application> apps;
  std::vector<std::size_t> remap(s.size());
  std::size_t c = 0;
  for (auto a : app_order) {
    apps.push_back(r.applications[a]);
    for (auto p : r.applications[a].arguments) pi.push_back(p);
    for (std::size_t k = 0; k < sizes[a]; ++k) remap[off[a] + k] = c++;
  }
  for (const auto& sa : r.scalar_applications)
    for (auto p : sa.arguments) pi.push_back(p);
  for (auto t : rest_order) {
    pi.push_back(rest_begin + t);
    remap[n_out + t] = c++;
  }
  detail::renumber_blocks(apps, 0);
  std::vector<std::size_t> sigma(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) sigma[i] = remap[s[i]];
  r.premise = share(exchange_cod(sig, *r.premise, Permutation(std::move(pi))));
  r.applications = std::move(apps);
  r.sigma = Permutation(std::move(sigma));
  return Derivation{std::move(r)};
}

// Reorders the scalars of the conclusion: new scalars[i] = old scalars[rho[i]].
inline Derivation exchange_scalars(const Signature& sig, const Derivation& d, const Permutation& rho) {
  if (rho.is_identity()) return d;
  if (d.is_identity()) {
    IdentityRule r = d.identity();
    r.atoms = rho.apply(r.atoms);
    return Derivation{std::move(r)};
  }
  GeneratorRule r = d.generator();
  Permutation t = then(r.tau, rho);
  std::size_t n_sa = r.scalar_applications.size();
  std::size_t n_z = t.size() - n_sa;
  auto inv = t.inverse();
  auto sa_order = detail::order_by(n_sa, [&](std::size_t a) { return inv[a]; });
  auto z_order = detail::order_by(n_z, [&](std::size_t z) { return inv[n_sa + z]; });

  std::vector<std::size_t> remap(t.size());
  std::vector<Application> sapps;
  std::vector<std::size_t> pi;
  std::size_t pos_args = detail::arg_count(r.applications);
  for (std::size_t p = 0; p < pos_args; ++p) pi.push_back(p);
  for (std::size_t q = 0; q < sa_order.size(); ++q) {
    sapps.push_back(r.scalar_applications[sa_order[q]]);
    for (auto p : r.scalar_applications[sa_order[q]].arguments) pi.push_back(p);
    remap[sa_order[q]] = q;
  }
  std::size_t rest_begin = pos_args + detail::arg_count(r.scalar_applications);
  Replay pr = replay(sig, *r.premise);
  for (std::size_t p = rest_begin; p < pr.conclusion.mains.size(); ++p) pi.push_back(p);
  for (std::size_t q = 0; q < z_order.size(); ++q) remap[n_sa + z_order[q]] = n_sa + q;
  detail::renumber_blocks(sapps, pos_args);

  Derivation premise = exchange_scalars(sig, *r.premise, Permutation(z_order));
  premise = exchange_cod(sig, premise, Permutation(std::move(pi)));
  std::vector<std::size_t> tau(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) tau[i] = remap[t[i]];
  r.premise = share(std::move(premise));
  r.scalar_applications = std::move(sapps);
  r.tau = Permutation(std::move(tau));
  return Derivation{std::move(r)};
}

// Reorders the context: new context[i] = old context[rho[i]].
inline Derivation exchange_dom(const Signature& sig, const Derivation& d, const Permutation& rho) {
  if (d.is_identity()) {
    IdentityRule r = d.identity();
    if (rho.size() != r.context.size()) throw CompositionError("context permutation has the wrong size");
    auto inv = rho.inverse();
    std::size_t nv = r.context.size();
    std::vector<std::size_t> sigma(r.sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) sigma[i] = r.sigma[i] < nv ? inv[r.sigma[i]] : r.sigma[i];
    r.context = rho.apply(r.context);
    r.sigma = Permutation(std::move(sigma));
    return Derivation{std::move(r)};
  }
  GeneratorRule r = d.generator();
  r.premise = share(exchange_dom(sig, *r.premise, rho));
  return Derivation{std::move(r)};
}

// Γ ⊢ (M | Z) becomes Γ, extra ⊢ (M, extra | Z).
inline Derivation tensor_identity_right(const Signature& sig, const Derivation& d, const Context& extra) {
  std::size_t ne = extra.size();
  if (d.is_identity()) {
    IdentityRule r = d.identity();
    std::size_t nv = r.context.size();
    std::vector<std::size_t> sigma;
    for (auto c : r.sigma.images()) sigma.push_back(c < nv ? c : c + ne);
    for (std::size_t j = 0; j < ne; ++j) sigma.push_back(nv + j);
    r.context.insert(r.context.end(), extra.begin(), extra.end());
    r.sigma = Permutation(std::move(sigma));
    return Derivation{std::move(r)};
  }
  GeneratorRule r = d.generator();
  std::vector<std::size_t> sigma = r.sigma.images();
  std::size_t n = sigma.size();
  for (std::size_t j = 0; j < ne; ++j) sigma.push_back(n + j);
  r.premise = share(tensor_identity_right(sig, *r.premise, extra));
  r.sigma = Permutation(std::move(sigma));
  return Derivation{std::move(r)};
}

// Γ ⊢ (M | Z) becomes extra, Γ ⊢ (extra, M | Z).
inline Derivation tensor_identity_left(const Signature& sig, const Derivation& d, const Context& extra) {
  std::size_t ne = extra.size();
  if (d.is_identity()) {
    IdentityRule r = d.identity();
    std::vector<std::size_t> sigma;
    for (std::size_t j = 0; j < ne; ++j) sigma.push_back(j);
    for (auto c : r.sigma.images()) sigma.push_back(c + ne);
    r.context.insert(r.context.begin(), extra.begin(), extra.end());
    r.sigma = Permutation(std::move(sigma));
    return Derivation{std::move(r)};
  }
  GeneratorRule r = d.generator();
  auto sizes = detail::cod_sizes(sig, r.applications);
  std::size_t n_out = detail::total(sizes);
  std::size_t rest_begin = detail::arg_count(r.applications) + detail::arg_count(r.scalar_applications);
  Derivation premise = tensor_identity_left(sig, *r.premise, extra);
  std::size_t np = replay(sig, premise).conclusion.mains.size();
  std::vector<std::size_t> pi;
  for (std::size_t p = 0; p < rest_begin; ++p) pi.push_back(ne + p);
  for (std::size_t j = 0; j < ne; ++j) pi.push_back(j);
  for (std::size_t p = ne + rest_begin; p < np; ++p) pi.push_back(p);
  std::vector<std::size_t> sigma;
  for (std::size_t j = 0; j < ne; ++j) sigma.push_back(n_out + j);
  for (auto c : r.sigma.images()) sigma.push_back(c < n_out ? c : c + ne);
  r.premise = share(exchange_cod(sig, premise, Permutation(std::move(pi))));
  r.sigma = Permutation(std::move(sigma));
  return Derivation{std::move(r)};
}

inline Label fresh_generator_label(const GeneratorName& f, const std::set<Label>& taken) {
  for (std::size_t n = 1;; ++n) {
    Label l("%" + f.str() + std::to_string(n));
    if (!taken.count(l)) return l;
  }
}

inline std::set<Label> label_set(const Judgment& j) {
  auto v = labels_of(j);
  return {v.begin(), v.end()};
}

// Applies f to the last |dom f| main terms. Positive outputs are appended to
// the mains; a scalar result is prepended to the scalars. `label` names a
// nullary generator's instance; a fresh one is chosen when absent.
inline Derivation postcompose_gen_end(const Signature& sig, const Derivation& d, const GeneratorName& f,
                                      std::optional<Label> label = std::nullopt) {
  const Arity& a = detail::arity_or_throw(sig, f);
  Replay rp = replay(sig, d);
  std::size_t n = rp.conclusion.mains.size();
  std::size_t k = a.domain.size();
  std::size_t m = a.codomain.size();
  if (k > n) throw CompositionError("not enough outputs to apply '" + f.str() + "'");
  for (std::size_t i = 0; i < k; ++i)
    if (!(rp.conclusion.types[n - k + i] == a.domain[i]))
      throw CompositionError("type mismatch applying '" + f.str() + "'");
  if (k == 0 && m > 0 && !label) label = fresh_generator_label(f, label_set(rp.conclusion));
  bool any_active = false;
  for (std::size_t i = n - k; i < n; ++i) any_active = any_active || rp.active[i];

  if (any_active) {
    std::vector<std::size_t> pi;
    for (std::size_t i = n - k; i < n; ++i) pi.push_back(i);
    for (std::size_t i = 0; i < n - k; ++i) pi.push_back(i);
    GeneratorRule g;
    g.premise = share(exchange_cod(sig, d, Permutation(std::move(pi))));
    Application app{f, {}};
    for (std::size_t i = 0; i < k; ++i) app.arguments.push_back(i);
    std::vector<std::size_t> sigma;
    if (m > 0) {
      g.applications.push_back(std::move(app));
      for (std::size_t i = 0; i < n - k; ++i) sigma.push_back(m + i);
      for (std::size_t j = 0; j < m; ++j) sigma.push_back(j);
      g.tau = Permutation::identity(rp.conclusion.scalars.size());
    } else {
      g.scalar_applications.push_back(std::move(app));
      for (std::size_t i = 0; i < n - k; ++i) sigma.push_back(i);
      g.tau = Permutation::identity(rp.conclusion.scalars.size() + 1);
    }
    g.sigma = Permutation(std::move(sigma));
    return Derivation{std::move(g)};
  }

  if (d.is_identity()) {
    if (k != 0) throw std::logic_error("identity conclusion has an inactive output");
    IdentityRule r = d.identity();
    if (m == 0) {
      r.atoms.insert(r.atoms.begin(), f);
      return Derivation{std::move(r)};
    }
    if (label_set(rp.conclusion).count(*label))
      throw CompositionError("label '" + label->str() + "' is already in use");
    std::vector<std::size_t> sigma = r.sigma.images();
    std::size_t c = sigma.size();
    for (std::size_t j = 0; j < m; ++j) sigma.push_back(c + j);
    r.generators.push_back({f, *label});
    r.sigma = Permutation(std::move(sigma));
    return Derivation{std::move(r)};
  }

  GeneratorRule r = d.generator();
  Replay pr = replay(sig, *r.premise);
  std::size_t np = pr.conclusion.mains.size();
  bool premise_active = false;
  for (std::size_t i = np - k; i < np; ++i) premise_active = premise_active || pr.active[i];
  std::size_t n_out = detail::total(detail::cod_sizes(sig, r.applications));
  std::size_t n_sa = r.scalar_applications.size();
  std::size_t n_rest = r.sigma.size() - n_out;

  if (!premise_active) {
    r.premise = share(postcompose_gen_end(sig, *r.premise, f, label));
    std::vector<std::size_t> sigma(r.sigma.images().begin(), r.sigma.images().begin() + static_cast<long>(n - k));
    if (m > 0) {
      for (std::size_t j = 0; j < m; ++j) sigma.push_back(n_out + (n_rest - k) + j);
    } else {
      std::vector<std::size_t> tau{n_sa};
      for (auto t : r.tau.images()) tau.push_back(t < n_sa ? t : t + 1);
      r.tau = Permutation(std::move(tau));
    }
    r.sigma = Permutation(std::move(sigma));
    return Derivation{std::move(r)};
  }

  std::size_t s = detail::arg_count(r.applications);
  std::vector<std::size_t> pi;
  for (std::size_t p = 0; p < s; ++p) pi.push_back(p);
  for (std::size_t p = np - k; p < np; ++p) pi.push_back(p);
  for (std::size_t p = s; p < np - k; ++p) pi.push_back(p);
  r.premise = share(exchange_cod(sig, *r.premise, Permutation(std::move(pi))));
  for (auto& sa : r.scalar_applications)
    for (auto& p : sa.arguments) p += k;
  Application app{f, {}};
  for (std::size_t i = 0; i < k; ++i) app.arguments.push_back(s + i);
  std::vector<std::size_t> sigma;
  for (std::size_t i = 0; i < n - k; ++i) sigma.push_back(r.sigma[i] < n_out ? r.sigma[i] : r.sigma[i] + m);
  if (m > 0) {
    r.applications.push_back(std::move(app));
    for (std::size_t j = 0; j < m; ++j) sigma.push_back(n_out + j);
  } else {
    r.scalar_applications.insert(r.scalar_applications.begin(), std::move(app));
    std::vector<std::size_t> tau{0};
    for (auto t : r.tau.images()) tau.push_back(t + 1);
    r.tau = Permutation(std::move(tau));
  }
  r.sigma = Permutation(std::move(sigma));
  return Derivation{std::move(r)};
}

// Applies f to the mains at `at` (in that order); the remaining mains keep
// their order and f's outputs follow them.
inline Derivation postcompose_gen(const Signature& sig, const Derivation& d, const GeneratorName& f,
                                  const std::vector<std::size_t>& at, std::optional<Label> label = std::nullopt) {
  std::size_t n = replay(sig, d).conclusion.mains.size();
  std::vector<bool> used(n, false);
  for (auto p : at) {
    if (p >= n || used[p]) throw CompositionError("invalid argument positions for '" + f.str() + "'");
    used[p] = true;
  }
  std::vector<std::size_t> pi;
  for (std::size_t i = 0; i < n; ++i)
    if (!used[i]) pi.push_back(i);
  pi.insert(pi.end(), at.begin(), at.end());
  return postcompose_gen_end(sig, exchange_cod(sig, d, Permutation(std::move(pi))), f, std::move(label));
}

inline Derivation relabel(const Derivation& d, const LabelMap& m) {
  if (d.is_identity()) {
    IdentityRule r = d.identity();
    for (auto& g : r.generators)
      if (auto it = m.find(g.label); it != m.end()) g.label = it->second;
    return Derivation{std::move(r)};
  }
  GeneratorRule r = d.generator();
  r.premise = share(relabel(*r.premise, m));
  return Derivation{std::move(r)};
}

inline Derivation rename_context(const Derivation& d, const std::map<VarName, VarName>& m) {
  if (d.is_identity()) {
    IdentityRule r = d.identity();
    for (auto& e : r.context)
      if (auto it = m.find(e.var); it != m.end()) e.var = it->second;
    return Derivation{std::move(r)};
  }
  GeneratorRule r = d.generator();
  r.premise = share(rename_context(*r.premise, m));
  return Derivation{std::move(r)};
}

inline const IdentityRule& leaf(const Derivation& d) {
  return d.is_identity() ? d.identity() : leaf(*d.generator().premise);
}

// Renames labels of d that occur in `taken`, appending apostrophes.
inline Derivation freshen_labels(const Derivation& d, const std::set<Label>& taken) {
  std::set<Label> used = taken;
  for (const auto& g : leaf(d).generators) used.insert(g.label);
  LabelMap m;
  for (const auto& g : leaf(d).generators) {
    if (!taken.count(g.label)) continue;
    Label l = fresh_label(g.label, used);
    used.insert(l);
    m[g.label] = l;
  }
  return m.empty() ? d : relabel(d, m);
}

namespace detail {

inline Derivation compose_rec(const Signature& sig, const Derivation& d1, const Derivation& d2) {
  if (d2.is_identity()) {
    const IdentityRule& r2 = d2.identity();
    Derivation cur = d1;
    for (const auto& g : r2.generators) cur = postcompose_gen_end(sig, cur, g.generator, g.label);
    for (auto it = r2.atoms.rbegin(); it != r2.atoms.rend(); ++it) cur = postcompose_gen_end(sig, cur, *it);
    return exchange_cod(sig, cur, r2.sigma);
  }
  const GeneratorRule& r2 = d2.generator();
  Derivation cur = compose_rec(sig, d1, *r2.premise);
  std::size_t np = replay(sig, cur).conclusion.mains.size();
  std::vector<std::size_t> slots(np);
  for (std::size_t i = 0; i < np; ++i) slots[i] = i;

  auto apply = [&](const Application& app, std::size_t first_output_id) {
    std::vector<std::size_t> at;
    for (auto p : app.arguments)
      at.push_back(static_cast<std::size_t>(std::find(slots.begin(), slots.end(), p) - slots.begin()));
    cur = postcompose_gen(sig, cur, app.generator, at);
    std::vector<std::size_t> kept;
    for (auto id : slots)
      if (std::find(app.arguments.begin(), app.arguments.end(), id) == app.arguments.end()) kept.push_back(id);
    std::size_t m = sig.arity(app.generator).codomain.size();
    for (std::size_t j = 0; j < m; ++j) kept.push_back(first_output_id + j);
    slots = std::move(kept);
  };

  std::size_t out_id = np;
  for (const auto& app : r2.applications) {
    apply(app, out_id);
    out_id += sig.arity(app.generator).codomain.size();
  }
  for (auto it = r2.scalar_applications.rbegin(); it != r2.scalar_applications.rend(); ++it) apply(*it, out_id);

  std::size_t n_out = out_id - np;
  std::size_t rest_begin = arg_count(r2.applications) + arg_count(r2.scalar_applications);
  std::vector<std::size_t> pi;
  for (auto c : r2.sigma.images()) {
    std::size_t id = c < n_out ? np + c : rest_begin + (c - n_out);
    pi.push_back(static_cast<std::size_t>(std::find(slots.begin(), slots.end(), id) - slots.begin()));
  }
  cur = exchange_cod(sig, cur, Permutation(std::move(pi)));

  std::size_t ns = replay(sig, cur).conclusion.scalars.size();
  std::vector<std::size_t> rho = r2.tau.images();
  for (std::size_t i = rho.size(); i < ns; ++i) rho.push_back(i);
  return exchange_scalars(sig, cur, Permutation(std::move(rho)));
}

}  // namespace detail

// Sequential composition; d2's context must match d1's codomain types.
// Result scalars are d2's (substituted) followed by d1's.
inline Derivation compose(const Signature& sig, const Derivation& d1, const Derivation& d2) {
  Judgment j1 = conclusion(sig, d1);
  const Context& ctx2 = leaf(d2).context;
  if (ctx2.size() != j1.types.size()) throw CompositionError("interface arity mismatch in composition");
  for (std::size_t i = 0; i < ctx2.size(); ++i)
    if (!(ctx2[i].type == j1.types[i])) throw CompositionError("interface type mismatch in composition");
  return detail::compose_rec(sig, d1, freshen_labels(d2, label_set(j1)));
}

inline Derivation identity_of(const Context& ctx) {
  return Derivation{IdentityRule{ctx, {}, {}, Permutation::identity(ctx.size())}};
}

// (Γ, Φ) ⊢ (Φ, Γ)
inline Derivation symmetry(const Context& left, const Context& right) {
  Context ctx = left;
  ctx.insert(ctx.end(), right.begin(), right.end());
  std::vector<std::size_t> rho;
  for (std::size_t i = 0; i < right.size(); ++i) rho.push_back(left.size() + i);
  for (std::size_t i = 0; i < left.size(); ++i) rho.push_back(i);
  return Derivation{IdentityRule{ctx, {}, {}, Permutation(std::move(rho))}};
}

inline Context fresh_context(const std::vector<ObjectName>& types, const std::string& stem, std::set<VarName> taken) {
  Context ctx;
  for (std::size_t i = 0; i < types.size(); ++i) {
    VarName v = fresh_var(VarName(stem + std::to_string(i + 1)), taken);
    taken.insert(v);
    ctx.push_back({v, types[i]});
  }
  return ctx;
}

// Parallel composition: Γ, Φ ⊢ (M, N | Z, Y) from Γ ⊢ (M | Y) and Φ ⊢ (N | Z).
// Clashing variables and labels of d2 are renamed.
inline Derivation tensor(const Signature& sig, const Derivation& d1, const Derivation& d2) {
  const Context& g = leaf(d1).context;
  std::set<VarName> taken;
  for (const auto& e : g) taken.insert(e.var);
  for (const auto& e : leaf(d2).context) taken.insert(e.var);
  std::map<VarName, VarName> rename;
  for (const auto& e : leaf(d2).context) {
    bool clash = std::any_of(g.begin(), g.end(), [&](const ContextEntry& x) { return x.var == e.var; });
    if (!clash) continue;
    VarName v = fresh_var(e.var, taken);
    taken.insert(v);
    rename[e.var] = v;
  }
  Judgment j1 = conclusion(sig, d1);
  Derivation b = freshen_labels(rename.empty() ? d2 : rename_context(d2, rename), label_set(j1));
  const Context& phi = leaf(b).context;
  Derivation a = tensor_identity_right(sig, d1, phi);
  std::set<VarName> phi_names;
  for (const auto& e : phi) phi_names.insert(e.var);
  Context delta = fresh_context(j1.types, "d", phi_names);
  return compose(sig, a, tensor_identity_left(sig, b, delta));
}

inline Judgment compose(const Signature& sig, const Judgment& j1, const Judgment& j2) {
  return conclusion(sig, compose(sig, check(sig, j1), check(sig, j2)));
}

inline Judgment tensor(const Signature& sig, const Judgment& j1, const Judgment& j2) {
  return conclusion(sig, tensor(sig, check(sig, j1), check(sig, j2)));
}

inline Judgment exchange_cod(const Signature& sig, const Judgment& j, const Permutation& rho) {
  return conclusion(sig, exchange_cod(sig, check(sig, j), rho));
}

inline Judgment exchange_dom(const Signature& sig, const Judgment& j, const Permutation& rho) {
  return conclusion(sig, exchange_dom(sig, check(sig, j), rho));
}

inline Judgment exchange_scalars(const Signature& sig, const Judgment& j, const Permutation& rho) {
  return conclusion(sig, exchange_scalars(sig, check(sig, j), rho));
}

inline Judgment postcompose_gen(const Signature& sig, const Judgment& j, const GeneratorName& f,
                                const std::vector<std::size_t>& at, std::optional<Label> label = std::nullopt) {
  return conclusion(sig, postcompose_gen(sig, check(sig, j), f, at, std::move(label)));
}

}  // namespace sweedler
