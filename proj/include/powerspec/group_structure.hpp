#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "group.hpp"
#include "number_theory.hpp"

namespace powerspec {

struct ElementInfo {
  Element element = 0;
  std::uint64_t order = 1;
  std::vector<Element> cyclic_subgroup;  // sorted
  std::vector<Element> eq_class;         // sorted; elements generating the same subgroup
};

/// Precomputed element orders, cyclic subgroups, classes and up-sets of a
/// group. Building it costs O(sum of element orders); queries are lookups.
class GroupStructure {
 public:
  explicit GroupStructure(const FiniteGroup& g) : group_(g) {
    const std::size_t n = g.order();
    order_.resize(n);
    subgroup_.resize(n);
    class_rep_.resize(n);
    up_.resize(n);
    for (Element x = 0; x < n; ++x) {
      auto& sub = subgroup_[x];
      Element y = g.identity();
      do {
        sub.push_back(y);
        y = g.mul(y, x);
      } while (y != g.identity());
      order_[x] = sub.size();
      // sub[k] = x^k; generators of <x> are the powers coprime to o(x).
      Element rep = x;
      for (std::size_t k = 1; k < sub.size(); ++k)
        if (std::gcd(k, sub.size()) == 1) rep = std::min(rep, sub[k]);
      class_rep_[x] = rep;
      std::sort(sub.begin(), sub.end());
    }
    for (Element h = 0; h < n; ++h)
      for (Element x : subgroup_[h]) up_[x].push_back(h);
    p_prime_ = compute_p_prime();
  }

  const FiniteGroup& group() const { return group_; }
  std::size_t size() const { return group_.order(); }

  std::uint64_t order(Element g) const { return order_.at(g); }
  const std::vector<Element>& cyclic_subgroup(Element g) const { return subgroup_.at(g); }
  /// Smallest element index generating the same cyclic subgroup as g.
  Element class_rep(Element g) const { return class_rep_.at(g); }
  bool equivalent(Element g, Element h) const { return class_rep(g) == class_rep(h); }
  bool in_cyclic_subgroup(Element x, Element g) const {
    const auto& s = subgroup_.at(g);
    return std::binary_search(s.begin(), s.end(), x);
  }

  std::vector<Element> eq_class(Element g) const {
    std::vector<Element> out;
    const Element r = class_rep(g);
    for (Element h : subgroup_.at(g))
      if (class_rep_[h] == r) out.push_back(h);
    return out;
  }

  /// U(g) = { h : g in <h> }, sorted.
  const std::vector<Element>& up_set(Element g) const { return up_.at(g); }

  /// U(g) minus the class of g.
  std::vector<Element> hat_up_set(Element g) const {
    std::vector<Element> out;
    for (Element h : up_.at(g))
      if (class_rep_[h] != class_rep_[g]) out.push_back(h);
    return out;
  }

  ElementInfo info(Element g) const {
    if (g >= size()) throw std::out_of_range("element index out of range: " + std::to_string(g));
    return {g, order(g), cyclic_subgroup(g), eq_class(g)};
  }

  /// Returns the prime p when every non-identity element has p-power order.
  std::optional<std::uint64_t> p_group_prime() const { return p_prime_; }

 private:
  std::optional<std::uint64_t> compute_p_prime() const {
    if (size() < 2) return std::nullopt;
    std::uint64_t prime = 0;
    for (Element g = 0; g < size(); ++g) {
      if (order_[g] == 1) continue;
      auto f = factorize(order_[g]);
      if (!f.is_prime_power()) return std::nullopt;
      const auto p = f.prime_powers[0].first;
      if (prime == 0) prime = p;
      if (p != prime) return std::nullopt;
    }
    return prime;
  }

 public:
  /// One representative (the smallest index) per primitive class of g:
  /// classes [h] with [h^p] = [g], h != e.
  std::vector<Element> primitive_classes(Element g) const {
    const auto p = p_group_prime();
    if (!p) throw std::domain_error("primitive_classes: group is not a p-group");
    return primitive_classes(g, *p);
  }

  std::vector<Element> primitive_classes(Element g, std::uint64_t p) const {
    std::vector<Element> reps;
    const Element target = class_rep(g);
    for (Element h = 0; h < size(); ++h) {
      if (h == group_.identity() || class_rep_[h] != h) continue;
      if (class_rep_[group_.power(h, p)] == target) reps.push_back(h);
    }
    return reps;
  }

  bool is_cyclic() const {
    return std::any_of(order_.begin(), order_.end(),
                       [&](std::uint64_t o) { return o == size(); });
  }

  std::size_t count_of_order(std::uint64_t o) const {
    return static_cast<std::size_t>(std::count(order_.begin(), order_.end(), o));
  }

  /// Generalized quaternion test for 2-groups: a non-cyclic 2-group with a
  /// unique involution.
  bool is_generalized_quaternion() const {
    const auto p = p_group_prime();
    return p && *p == 2 && size() >= 8 && !is_cyclic() && count_of_order(2) == 1;
  }

 private:
  FiniteGroup group_;
  std::vector<std::uint64_t> order_;
  std::vector<std::vector<Element>> subgroup_;
  std::vector<Element> class_rep_;
  std::vector<std::vector<Element>> up_;
  std::optional<std::uint64_t> p_prime_;
};

inline ElementInfo element_info(const FiniteGroup& g, Element x) {
  if (x >= g.order()) throw std::out_of_range("element index out of range: " + std::to_string(x));
  return GroupStructure(g).info(x);
}

inline std::vector<Element> up_set(const FiniteGroup& g, Element x) {
  return GroupStructure(g).up_set(x);
}

inline std::vector<Element> hat_up_set(const FiniteGroup& g, Element x) {
  return GroupStructure(g).hat_up_set(x);
}

inline std::vector<Element> primitive_classes(const FiniteGroup& g, Element x) {
  return GroupStructure(g).primitive_classes(x);
}

inline std::optional<std::uint64_t> is_p_group(const FiniteGroup& g) {
  return GroupStructure(g).p_group_prime();
}

}  // namespace powerspec
