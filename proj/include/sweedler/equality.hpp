#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sweedler/permutation.hpp"
#include "sweedler/term.hpp"

namespace sweedler {

class SearchBoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// j2 = relabel(j1, labels) with scalars reordered: j2.scalars[i] is the
// relabelled j1.scalars[scalar_order[i]].
struct EqualityWitness {
  LabelMap labels;
  Permutation scalar_order;
};

inline constexpr std::uint64_t default_equality_bound = 2'000'000;
inline constexpr std::uint64_t default_canonical_bound = 40'320;  // 8!

namespace detail {

struct Bijection {
  std::map<Label, Label> fwd, bwd;

  bool bind(const Label& a, const Label& b) {
    auto f = fwd.find(a);
    auto g = bwd.find(b);
    if (f != fwd.end() || g != bwd.end()) return f != fwd.end() && g != bwd.end() && f->second == b;
    fwd.emplace(a, b);
    bwd.emplace(b, a);
    return true;
  }
};

inline bool match_up_to_labels(const Term& a, const Term& b, Bijection& bij) {
  if (a.kind() != b.kind() || a.name() != b.name() || a.index() != b.index() ||
      a.label().has_value() != b.label().has_value() || a.args().size() != b.args().size())
    return false;
  if (a.label() && !bij.bind(*a.label(), *b.label())) return false;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (!match_up_to_labels(a.args()[i], b.args()[i], bij)) return false;
  return true;
}

inline std::size_t shape_hash(const Term& t) {
  std::size_t h = hash_combine(t.is_var() ? 3 : 5, std::hash<std::string>{}(t.name()));
  h = hash_combine(h, t.index() ? *t.index() : 0);
  h = hash_combine(h, t.label() ? 1 : 0);
  for (const auto& a : t.args()) h = hash_combine(h, shape_hash(a));
  return h;
}

}  // namespace detail

// Decides the axiom-free equality: identical context and types, mains equal
// after one label bijection, scalars equal as a multiset under it. Throws
// SearchBoundExceeded when the scalar matching needs more than `bound` steps.
inline std::optional<EqualityWitness> free_equal(const Judgment& j1, const Judgment& j2,
                                                 std::uint64_t bound = default_equality_bound) {
  if (!(j1.context == j2.context) || !(j1.types == j2.types) || j1.mains.size() != j2.mains.size() ||
      j1.scalars.size() != j2.scalars.size())
    return std::nullopt;
  detail::Bijection base;
  for (std::size_t i = 0; i < j1.mains.size(); ++i)
    if (!detail::match_up_to_labels(j1.mains[i], j2.mains[i], base)) return std::nullopt;

  std::size_t n = j1.scalars.size();
  std::vector<std::size_t> h1(n), h2(n);
  for (std::size_t i = 0; i < n; ++i) {
    h1[i] = detail::shape_hash(j1.scalars[i]);
    h2[i] = detail::shape_hash(j2.scalars[i]);
  }
  {
    auto a = h1, b = h2;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  std::vector<std::size_t> target(n);  // j1 scalar i -> j2 scalar
  std::vector<bool> used(n, false);
  std::uint64_t steps = 0;
  std::optional<detail::Bijection> found;

  auto search = [&](auto&& self, std::size_t i, const detail::Bijection& bij) -> bool {
    if (i == n) {
      found = bij;
      return true;
    }
    std::optional<Term> previous_failure;
    for (std::size_t k = 0; k < n; ++k) {
      if (used[k] || h1[i] != h2[k]) continue;
      // identical candidates behave identically; try one of each
      if (previous_failure && *previous_failure == j2.scalars[k]) continue;
      if (++steps > bound) throw SearchBoundExceeded("free equality search exceeded " + std::to_string(bound) + " steps");
      detail::Bijection next = bij;
      if (!detail::match_up_to_labels(j1.scalars[i], j2.scalars[k], next)) continue;
      used[k] = true;
      target[i] = k;
      if (self(self, i + 1, next)) return true;
      used[k] = false;
      previous_failure = j2.scalars[k];
    }
    return false;
  };
  if (!search(search, 0, base)) return std::nullopt;

  std::vector<std::size_t> rho(n);
  for (std::size_t i = 0; i < n; ++i) rho[target[i]] = i;
  return EqualityWitness{found->fwd, Permutation(std::move(rho))};
}

// Representative of the free-equality class: labels renamed %1, %2, ... by
// first occurrence in the mains, remaining labels chosen to minimise the
// sorted scalar list. Enumerates orderings of the scalars that carry labels
// not fixed by the mains; throws SearchBoundExceeded past `bound` orderings.
inline Judgment canonicalize(const Judgment& j, std::uint64_t bound = default_canonical_bound) {
  LabelMap names;
  std::size_t next = 1;
  auto assign = [&](const Term& t, LabelMap& m, std::size_t& counter) {
    for (const auto& l : labels_of(t))
      if (!m.count(l)) m.emplace(l, Label("%" + std::to_string(counter++)));
  };
  for (const auto& t : j.mains) assign(t, names, next);

  std::vector<Term> fixed;
  std::vector<Term> residual;
  for (const auto& s : j.scalars) {
    bool all_named = true;
    for (const auto& l : labels_of(s)) all_named = all_named && names.count(l);
    (all_named ? fixed : residual).push_back(s);
  }
  std::uint64_t orderings = 1;
  for (std::uint64_t k = 2; k <= residual.size(); ++k) {
    orderings *= k;
    if (orderings > bound)
      throw SearchBoundExceeded("canonicalization needs more than " + std::to_string(bound) + " scalar orderings");
  }

  Judgment out = j;
  for (auto& t : out.mains) t = relabel(t, names);
  std::vector<Term> fixed_named;
  for (const auto& s : fixed) fixed_named.push_back(relabel(s, names));

  std::sort(residual.begin(), residual.end());
  std::optional<std::vector<Term>> best;
  do {
    LabelMap m = names;
    std::size_t counter = next;
    std::vector<Term> scalars = fixed_named;
    for (const auto& s : residual) {
      assign(s, m, counter);
      scalars.push_back(relabel(s, m));
    }
    std::sort(scalars.begin(), scalars.end());
    if (!best || scalars < *best) best = std::move(scalars);
  } while (std::next_permutation(residual.begin(), residual.end()));
  out.scalars = std::move(*best);
  return out;
}

}  // namespace sweedler
