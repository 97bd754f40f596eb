#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace sweedler {

// A bijection on {0..n-1}. Applied to a list xs it yields out[i] = xs[p[i]],
// so p[i] names the source position that ends up at position i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> images) : p_(std::move(images)) {
    std::vector<bool> seen(p_.size(), false);
    for (auto v : p_) {
      if (v >= p_.size() || seen[v]) throw std::invalid_argument("not a permutation");
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
  }

  std::size_t size() const { return p_.size(); }
  std::size_t operator[](std::size_t i) const { return p_[i]; }
  const std::vector<std::size_t>& images() const { return p_; }
  bool is_identity() const {
    for (std::size_t i = 0; i < p_.size(); ++i)
      if (p_[i] != i) return false;
    return true;
  }

  template <class T>
  std::vector<T> apply(const std::vector<T>& xs) const {
    if (xs.size() != p_.size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<T> out;
    out.reserve(xs.size());
    for (auto i : p_) out.push_back(xs[i]);
    return out;
  }

  Permutation inverse() const {
    std::vector<std::size_t> inv(p_.size());
    for (std::size_t i = 0; i < p_.size(); ++i) inv[p_[i]] = i;
    return Permutation(std::move(inv));
  }

  // Applying first then second equals applying then(first, second).
  friend Permutation then(const Permutation& first, const Permutation& second) {
    if (first.size() != second.size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<std::size_t> v(first.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = first[second[i]];
    return Permutation(std::move(v));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> p_;
};

}  // namespace sweedler
