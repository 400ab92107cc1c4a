#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace powerspec {

/// A join/union formula was applied to a polynomial lacking a root the
/// formula divides out.
class CharPolyContradiction : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Laplacian characteristic polynomial of a Laplacian-integral graph, stored
/// as its root multiset: prod (x - lambda)^m(lambda). The empty multiset is
/// the constant polynomial 1 (null graph).
class FactoredCharPoly {
 public:
  using Roots = std::map<std::int64_t, std::size_t>;

  FactoredCharPoly() = default;
  explicit FactoredCharPoly(Roots roots) {
    for (auto [r, m] : roots) add_root(r, m);
  }
  FactoredCharPoly(std::initializer_list<std::pair<const std::int64_t, std::size_t>> roots)
      : FactoredCharPoly(Roots(roots)) {}

  /// Theta(K_k) = x (x - k)^(k-1); Theta(K_0) = 1.
  static FactoredCharPoly complete(std::size_t k) {
    FactoredCharPoly p;
    if (k == 0) return p;
    p.add_root(0, 1);
    p.add_root(static_cast<std::int64_t>(k), k - 1);
    return p;
  }

  const Roots& roots() const { return roots_; }
  std::size_t degree() const {
    std::size_t d = 0;
    for (auto [r, m] : roots_) d += m;
    return d;
  }
  std::size_t multiplicity(std::int64_t lambda) const {
    auto it = roots_.find(lambda);
    return it == roots_.end() ? 0 : it->second;
  }
  bool empty() const { return roots_.empty(); }
  std::int64_t largest_root() const {
    if (roots_.empty()) throw std::domain_error("FactoredCharPoly: no roots");
    return roots_.rbegin()->first;
  }

  void add_root(std::int64_t lambda, std::size_t mult = 1) {
    if (lambda < 0) throw std::domain_error("FactoredCharPoly: Laplacian roots are non-negative");
    if (mult) roots_[lambda] += mult;
  }

  void remove_root(std::int64_t lambda) {
    auto it = roots_.find(lambda);
    if (it == roots_.end())
      throw CharPolyContradiction("cannot divide by (x-" + std::to_string(lambda) + "): root absent");
    if (--it->second == 0) roots_.erase(it);
  }

  /// p(x - d): every root moves up by d.
  FactoredCharPoly shifted(std::int64_t d) const {
    FactoredCharPoly p;
    for (auto [r, m] : roots_) p.add_root(r + d, m);
    return p;
  }

  /// "x^a (x-l1)^m1 (x-l2)^m2 ..." with nonzero roots descending; "1" when empty.
  std::string to_string() const {
    if (roots_.empty()) return "1";
    std::string s;
    auto append = [&](const std::string& term) {
      if (!s.empty()) s += ' ';
      s += term;
    };
    if (auto z = multiplicity(0)) append("x^" + std::to_string(z));
    for (auto it = roots_.rbegin(); it != roots_.rend(); ++it)
      if (it->first != 0)
        append("(x-" + std::to_string(it->first) + ")^" + std::to_string(it->second));
    return s;
  }

  friend bool operator==(const FactoredCharPoly&, const FactoredCharPoly&) = default;

 private:
  Roots roots_;
};

/// Characteristic polynomial of a disjoint union: roots merge.
inline FactoredCharPoly union_charpoly(const std::vector<FactoredCharPoly>& parts) {
  FactoredCharPoly out;
  for (const auto& p : parts)
    for (auto [r, m] : p.roots()) out.add_root(r, m);
  return out;
}

/// Characteristic polynomial of G1 v G2 from those of G1 (n1 vertices) and
/// G2 (n2 vertices):
///   x (x - n1 - n2) / ((x - n1)(x - n2)) * p1(x - n2) * p2(x - n1).
inline FactoredCharPoly join_charpoly(const FactoredCharPoly& p1, std::size_t n1,
                                      const FactoredCharPoly& p2, std::size_t n2) {
  if (p1.degree() != n1 || p2.degree() != n2)
    throw CharPolyContradiction("join_charpoly: degree does not match vertex count");
  if (n1 == 0) return p2;
  if (n2 == 0) return p1;
  const auto a = static_cast<std::int64_t>(n1), b = static_cast<std::int64_t>(n2);
  if (p1.largest_root() > a || p2.largest_root() > b)
    throw CharPolyContradiction("join_charpoly: root exceeds vertex count");
  FactoredCharPoly out = union_charpoly({p1.shifted(b), p2.shifted(a)});
  out.remove_root(a);
  out.remove_root(b);
  out.add_root(0);
  out.add_root(a + b);
  return out;
}

}  // namespace powerspec
