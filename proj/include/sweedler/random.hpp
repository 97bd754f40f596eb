#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sweedler/algebra.hpp"

namespace sweedler {

struct RandomOptions {
  std::optional<Context> domain;  // fixed context; random when absent
  std::size_t max_height = 8;
  std::size_t max_width = 7;
  std::size_t max_scalars = 4;
  std::string label_prefix;  // defaults to one derived from the seed
};

namespace detail {

template <class Rng>
Permutation random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(std::move(v));
}

}  // namespace detail

// Grows a derivation rule by rule: half the time a generator is applied,
// 30% of the time growth stops, otherwise the identity leaf gets a nullary
// generator. Labels are unique to the seed so samples compose without clashes.
inline Derivation random_derivation(const Signature& sig, std::uint64_t seed, const RandomOptions& opt = {}) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  std::string prefix = opt.label_prefix.empty() ? "r" + std::to_string(seed) + "n" : opt.label_prefix;
  std::size_t next_label = 0;
  auto label = [&] { return Label(prefix + std::to_string(next_label++)); };

  Context ctx;
  if (opt.domain) {
    ctx = *opt.domain;
  } else {
    std::size_t n = pick(4);
    for (std::size_t i = 0; i < n; ++i)
      ctx.push_back({VarName("x" + std::to_string(i + 1)), sig.objects()[pick(sig.objects().size())]});
  }

  std::vector<GeneratorName> nullary, others;
  for (const auto& g : sig.generators()) (sig.arity(g).domain.empty() ? nullary : others).push_back(g);

  Derivation cur = identity_of(ctx);
  auto grow_leaf = [&] {
    if (nullary.empty()) return;
    const GeneratorName& g = nullary[pick(nullary.size())];
    Replay rp = replay(sig, cur);
    const Arity& a = sig.arity(g);
    if (rp.conclusion.mains.size() + a.codomain.size() > opt.max_width) return;
    if (a.codomain.empty() && rp.conclusion.scalars.size() >= opt.max_scalars) return;
    cur = postcompose_gen_end(sig, cur, g, a.codomain.empty() ? std::nullopt : std::optional<Label>(label()));
  };
  auto apply_generator = [&] {
    if (others.empty()) return;
    const GeneratorName& f = others[pick(others.size())];
    const Arity& a = sig.arity(f);
    Replay rp = replay(sig, cur);
    const auto& types = rp.conclusion.types;
    if (types.size() - a.domain.size() + a.codomain.size() > opt.max_width + 1) return;
    if (a.codomain.empty() && rp.conclusion.scalars.size() >= opt.max_scalars) return;
    std::vector<bool> used(types.size(), false);
    std::vector<std::size_t> at;
    for (const auto& want : a.domain) {
      std::vector<std::size_t> cands;
      for (std::size_t i = 0; i < types.size(); ++i)
        if (!used[i] && types[i] == want) cands.push_back(i);
      if (cands.empty()) return;
      std::size_t p = cands[pick(cands.size())];
      used[p] = true;
      at.push_back(p);
    }
    cur = postcompose_gen(sig, cur, f, at);
  };

  std::size_t initial = pick(3);
  for (std::size_t i = 0; i < initial; ++i) grow_leaf();
  for (std::size_t step = 0; step < 24 && cur.height() < opt.max_height; ++step) {
    std::size_t roll = pick(100);
    if (roll < 30) break;
    if (roll < 50)
      grow_leaf();
    else
      apply_generator();
  }
  Replay rp = replay(sig, cur);
  cur = exchange_cod(sig, cur, detail::random_permutation(rp.conclusion.mains.size(), rng));
  cur = exchange_scalars(sig, cur, detail::random_permutation(rp.conclusion.scalars.size(), rng));
  return cur;
}

}  // namespace sweedler
