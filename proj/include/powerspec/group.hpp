#pragma once

#include <cstdint>
#include <fstream>
#include <functional>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "number_theory.hpp"

namespace powerspec {

using Element = std::size_t;

/// Raised when a multiplication table fails the group axioms.
class GroupValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tables up to this order are materialized at construction; larger groups
/// evaluate their multiplication rule on demand.
inline constexpr std::size_t kEagerTableLimit = 4096;

/// A finite group on the elements 0..order-1. Immutable after construction.
class FiniteGroup {
 public:
  using Rule = std::function<Element(Element, Element)>;

  FiniteGroup(std::size_t order, Rule rule, Element identity, std::string label,
              std::vector<std::string> element_labels = {})
      : order_(order),
        identity_(identity),
        label_(std::move(label)),
        element_labels_(std::move(element_labels)),
        rule_(std::move(rule)) {
    if (order_ == 0) throw std::domain_error("FiniteGroup: order must be >= 1");
    if (identity_ >= order_)
      throw std::domain_error("FiniteGroup: identity out of range");
    if (!element_labels_.empty() && element_labels_.size() != order_)
      throw std::invalid_argument("FiniteGroup: label count mismatch");
    if (order_ <= kEagerTableLimit) {
      auto table = std::make_shared<std::vector<std::uint32_t>>(order_ * order_);
      for (Element i = 0; i < order_; ++i)
        for (Element j = 0; j < order_; ++j)
          (*table)[i * order_ + j] = static_cast<std::uint32_t>(rule_(i, j));
      table_ = std::move(table);
    }
  }

  std::size_t order() const { return order_; }
  Element identity() const { return identity_; }
  const std::string& label() const { return label_; }
  bool has_materialized_table() const { return table_ != nullptr; }

  Element mul(Element a, Element b) const {
    if (table_) return (*table_)[a * order_ + b];
    return rule_(a, b);
  }

  Element power(Element g, std::uint64_t k) const {
    Element result = identity_;
    Element base = g;
    while (k) {
      if (k & 1) result = mul(result, base);
      base = mul(base, base);
      k >>= 1;
    }
    return result;
  }

  std::string element_label(Element g) const {
    if (element_labels_.empty()) return std::to_string(g);
    return element_labels_.at(g);
  }
  std::vector<std::string> element_labels() const {
    std::vector<std::string> out(order_);
    for (Element g = 0; g < order_; ++g) out[g] = element_label(g);
    return out;
  }

 private:
  std::size_t order_;
  Element identity_;
  std::string label_;
  std::vector<std::string> element_labels_;
  Rule rule_;
  std::shared_ptr<const std::vector<std::uint32_t>> table_;
};

inline FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw std::domain_error("cyclic_group: n must be >= 1");
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return FiniteGroup(
      n, [n](Element a, Element b) { return (a + b) % n; }, 0,
      "Z_" + std::to_string(n), std::move(labels));
}

/// Dicyclic group Q_n of order 4n. Index i < 2n encodes a^i, index 2n+i
/// encodes a^i b.
inline FiniteGroup dicyclic_group(std::size_t n) {
  if (n < 2) throw std::domain_error("dicyclic_group: n must be >= 2");
  const std::size_t m = 2 * n;
  auto rule = [n, m](Element x, Element y) -> Element {
    const bool xb = x >= m, yb = y >= m;
    const std::size_t i = x % m, j = y % m;
    if (!xb && !yb) return (i + j) % m;
    if (!xb && yb) return m + (i + j) % m;
    if (xb && !yb) return m + (i + m - j) % m;  // a^i b a^j = a^(i-j) b
    return (i + m - j + n) % m;                 // a^i b a^j b = a^(i-j+n)
  };
  std::vector<std::string> labels(2 * m);
  auto apow = [](std::size_t i) -> std::string {
    if (i == 0) return "";
    if (i == 1) return "a";
    return "a^" + std::to_string(i);
  };
  for (std::size_t i = 0; i < m; ++i) {
    labels[i] = i == 0 ? "e" : apow(i);
    labels[m + i] = apow(i) + "b";
  }
  return FiniteGroup(2 * m, rule, 0, "Q_" + std::to_string(n), std::move(labels));
}

/// Dicyclic group of order 2^(alpha+1).
inline FiniteGroup generalized_quaternion(unsigned alpha) {
  if (alpha < 2) throw std::domain_error("generalized_quaternion: alpha must be >= 2");
  return dicyclic_group(std::size_t{1} << (alpha - 1));
}

/// Direct product with lexicographic indexing: (g_1,...,g_k) maps to the
/// mixed-radix number with g_1 most significant.
inline FiniteGroup direct_product(const std::vector<FiniteGroup>& factors) {
  if (factors.empty()) throw std::invalid_argument("direct_product: no factors");
  if (factors.size() == 1) return factors.front();
  std::size_t order = 1;
  std::string label;
  for (const auto& f : factors) {
    order *= f.order();
    if (!label.empty()) label += " x ";
    label += f.label();
  }
  std::vector<std::size_t> radix;
  for (const auto& f : factors) radix.push_back(f.order());

  auto split = [radix](Element x) {
    std::vector<Element> parts(radix.size());
    for (std::size_t k = radix.size(); k-- > 0;) {
      parts[k] = x % radix[k];
      x /= radix[k];
    }
    return parts;
  };
  auto rule = [factors, radix, split](Element x, Element y) -> Element {
    auto px = split(x), py = split(y);
    Element z = 0;
    for (std::size_t k = 0; k < radix.size(); ++k)
      z = z * radix[k] + factors[k].mul(px[k], py[k]);
    return z;
  };
  Element identity = 0;
  for (std::size_t k = 0; k < factors.size(); ++k)
    identity = identity * radix[k] + factors[k].identity();

  std::vector<std::string> labels(order);
  for (Element x = 0; x < order; ++x) {
    auto parts = split(x);
    std::string s = "(";
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (k) s += ",";
      s += factors[k].element_label(parts[k]);
    }
    labels[x] = s + ")";
  }
  return FiniteGroup(order, rule, identity, label, std::move(labels));
}

inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  return direct_product(std::vector<FiniteGroup>{g, h});
}

/// Checks the group axioms by exhaustion; throws GroupValidationError naming
/// the first violation found.
inline void validate_group(const FiniteGroup& g) {
  const std::size_t n = g.order();
  const Element e = g.identity();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (g.mul(x, y) >= n)
        throw GroupValidationError("product " + std::to_string(x) + "*" +
                                   std::to_string(y) + " out of range");
  for (Element x = 0; x < n; ++x)
    if (g.mul(e, x) != x || g.mul(x, e) != x)
      throw GroupValidationError("identity " + std::to_string(e) +
                                 " fails on element " + std::to_string(x));
  for (Element x = 0; x < n; ++x) {
    bool found = false;
    for (Element y = 0; y < n && !found; ++y)
      found = g.mul(x, y) == e && g.mul(y, x) == e;
    if (!found)
      throw GroupValidationError("element " + std::to_string(x) + " has no inverse");
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element xy = g.mul(x, y);
      for (Element z = 0; z < n; ++z)
        if (g.mul(xy, z) != g.mul(x, g.mul(y, z)))
          throw GroupValidationError("associativity fails on (" + std::to_string(x) +
                                     "," + std::to_string(y) + "," +
                                     std::to_string(z) + ")");
    }
}

/// Builds a group from an explicit Cayley table (row i, column j holds i*j).
/// The identity is located automatically.
inline FiniteGroup from_table(std::size_t order,
                              const std::vector<std::vector<std::size_t>>& table,
                              std::string label = "table") {
  if (order == 0) throw GroupValidationError("table order must be >= 1");
  if (table.size() != order)
    throw GroupValidationError("table has " + std::to_string(table.size()) +
                               " rows, expected " + std::to_string(order));
  for (std::size_t i = 0; i < order; ++i) {
    if (table[i].size() != order)
      throw GroupValidationError("row " + std::to_string(i) + " has " +
                                 std::to_string(table[i].size()) + " entries");
    for (std::size_t j = 0; j < order; ++j)
      if (table[i][j] >= order)
        throw GroupValidationError("entry (" + std::to_string(i) + "," +
                                   std::to_string(j) + ") out of range");
  }
  std::optional<Element> identity;
  for (Element e = 0; e < order && !identity; ++e) {
    bool ok = true;
    for (Element x = 0; x < order && ok; ++x)
      ok = table[e][x] == x && table[x][e] == x;
    if (ok) identity = e;
  }
  if (!identity) throw GroupValidationError("table has no identity element");

  auto flat = std::make_shared<std::vector<std::size_t>>();
  flat->reserve(order * order);
  for (const auto& row : table) flat->insert(flat->end(), row.begin(), row.end());
  FiniteGroup g(
      order, [flat, order](Element a, Element b) { return (*flat)[a * order + b]; },
      *identity, std::move(label));
  validate_group(g);
  return g;
}

/// Reads the plain-text table format: first line n, then n rows of n indices.
/// Identity must be index 0.
inline FiniteGroup read_table(std::istream& in, std::string label = "table") {
  long long n = 0;
  if (!(in >> n) || n <= 0) throw GroupValidationError("table: missing or invalid order");
  std::vector<std::vector<std::size_t>> table(static_cast<std::size_t>(n),
                                              std::vector<std::size_t>(n));
  for (auto& row : table)
    for (auto& v : row) {
      long long x = 0;
      if (!(in >> x)) throw GroupValidationError("table: truncated input");
      if (x < 0 || x >= n) throw GroupValidationError("table: entry out of range");
      v = static_cast<std::size_t>(x);
    }
  auto g = from_table(static_cast<std::size_t>(n), table, std::move(label));
  if (g.identity() != 0) throw GroupValidationError("table: identity must be index 0");
  return g;
}

inline FiniteGroup read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open table file: " + path);
  return read_table(in, "table:" + path);
}

inline void write_table(std::ostream& out, const FiniteGroup& g) {
  out << g.order() << '\n';
  for (Element i = 0; i < g.order(); ++i) {
    for (Element j = 0; j < g.order(); ++j) {
      if (j) out << ' ';
      out << g.mul(i, j);
    }
    out << '\n';
  }
}

}  // namespace powerspec
