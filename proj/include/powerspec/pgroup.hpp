#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "charpoly.hpp"
#include "graph.hpp"
#include "group_structure.hpp"
#include "number_theory.hpp"
#include "spectrum.hpp"

namespace powerspec {

/// Structure of the subgraph induced by U(g) in the power graph of a
/// p-group: a clique on [g] joined to the disjoint union of the subgraphs of
/// g's primitive classes. A node without children is the clique [g] alone.
struct DecompTree {
  std::size_t apex = 1;  // phi(o(g)) = |[g]|
  std::vector<DecompTree> children;
  Element representative = 0;
  std::uint64_t order = 1;
  std::size_t up_size = 1;  // |U(g)|
  std::string element_label;

  bool is_clique() const { return children.empty(); }

  std::size_t vertex_count() const {
    std::size_t n = apex;
    for (const auto& c : children) n += c.vertex_count();
    return n;
  }

  /// Canonical rendering, e.g. "K1 v ((K2 v 3*K6) + 3*K2)".
  std::string to_string() const {
    if (is_clique()) return "K" + std::to_string(apex);
    std::vector<std::string> terms;
    for (std::size_t i = 0; i < children.size();) {
      const std::string child = children[i].to_string();
      std::size_t run = 1;
      while (i + run < children.size() && children[i + run].to_string() == child) ++run;
      const std::string body = children[i].is_clique() ? child : "(" + child + ")";
      terms.push_back(run > 1 ? std::to_string(run) + "*" + body : body);
      i += run;
    }
    std::string joined;
    for (const auto& t : terms) joined += (joined.empty() ? "" : " + ") + t;
    if (terms.size() > 1) joined = "(" + joined + ")";
    return "K" + std::to_string(apex) + " v " + joined;
  }
};

namespace detail {

inline DecompTree decompose_at(const GroupStructure& s, Element g, std::uint64_t p) {
  DecompTree node;
  node.representative = s.class_rep(g);
  node.order = s.order(g);
  node.apex = static_cast<std::size_t>(euler_phi(node.order));
  node.up_size = s.up_set(g).size();
  node.element_label = s.group().element_label(node.representative);
  for (Element h : s.primitive_classes(g, p)) node.children.push_back(decompose_at(s, h, p));
  // Larger subtrees first; equal shapes adjacent so repeats can be grouped.
  std::sort(node.children.begin(), node.children.end(), [](const DecompTree& a, const DecompTree& b) {
    const auto na = a.vertex_count(), nb = b.vertex_count();
    if (na != nb) return na > nb;
    const auto sa = a.to_string(), sb = b.to_string();
    if (sa != sb) return sa < sb;
    return a.representative < b.representative;
  });
  return node;
}

}  // namespace detail

inline DecompTree decompose(const GroupStructure& s) {
  const auto p = s.p_group_prime();
  if (!p) throw std::domain_error("decompose: " + s.group().label() + " is not a p-group");
  return detail::decompose_at(s, s.group().identity(), *p);
}

inline DecompTree decompose(const FiniteGroup& g) { return decompose(GroupStructure(g)); }

/// Explicit graph realizing the tree: apex clique first, then each child.
inline Graph tree_graph(const DecompTree& t) {
  const Graph apex = complete_graph(t.apex);
  if (t.is_clique()) return apex;
  Graph rest(0);
  for (const auto& c : t.children) rest = disjoint_union(rest, tree_graph(c));
  return graph_join(apex, rest);
}

/// Characteristic polynomial assembled bottom-up from the union and join
/// formulas; a leaf clique K_k contributes x (x-k)^(k-1).
inline FactoredCharPoly tree_charpoly(const DecompTree& t) {
  const auto apex = FactoredCharPoly::complete(t.apex);
  if (t.is_clique()) return apex;
  std::vector<FactoredCharPoly> parts;
  std::size_t rest = 0;
  for (const auto& c : t.children) {
    parts.push_back(tree_charpoly(c));
    rest += c.vertex_count();
  }
  return join_charpoly(apex, t.apex, union_charpoly(parts), rest);
}

/// Leaves for elements of order 2 with no primitive classes: a lone vertex
/// whose subgraph has no nonzero eigenvalue to classify.
inline std::vector<Element> degenerate_leaves(const DecompTree& t) {
  std::vector<Element> out;
  if (t.is_clique() && t.order == 2) out.push_back(t.representative);
  for (const auto& c : t.children) {
    auto sub = degenerate_leaves(c);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline nlohmann::json decomposition_to_json(const DecompTree& t) {
  nlohmann::json j;
  if (t.is_clique()) {
    j["clique"] = t.apex;
  } else {
    nlohmann::json kids = nlohmann::json::array();
    for (const auto& c : t.children) kids.push_back(decomposition_to_json(c));
    j["join"] = {{"apex", t.apex}, {"children", kids}};
  }
  j["element"] = t.element_label;
  j["index"] = t.representative;
  j["order"] = t.order;
  j["up_size"] = t.up_size;
  return j;
}

enum class EigenvalueFormKind { Zero, OrderOf, UhatPlusOrder, Unclassified };

inline const char* to_string(EigenvalueFormKind k) {
  switch (k) {
    case EigenvalueFormKind::Zero: return "zero";
    case EigenvalueFormKind::OrderOf: return "order";
    case EigenvalueFormKind::UhatPlusOrder: return "uhat_plus_order";
    case EigenvalueFormKind::Unclassified: return "unclassified";
  }
  return "?";
}

/// Why an eigenvalue takes the value it does: 0, o(g), or |U^(h)| + o(h).
struct EigenvalueForm {
  std::int64_t value = 0;
  EigenvalueFormKind form = EigenvalueFormKind::Unclassified;
  std::optional<Element> witness;
};

/// Assigns each distinct eigenvalue a form with the smallest witness index,
/// preferring o(g) over |U^(h)| + o(h).
inline std::vector<EigenvalueForm> classify_eigenvalues(const GroupStructure& s, const Spectrum& spec) {
  if (!spec.is_exact()) throw std::invalid_argument("classify_eigenvalues: spectrum is not exact");
  std::vector<EigenvalueForm> out;
  for (auto [lambda, mult] : spec.exact.roots()) {
    EigenvalueForm f{lambda, EigenvalueFormKind::Unclassified, std::nullopt};
    if (lambda == 0) {
      f.form = EigenvalueFormKind::Zero;
    } else {
      for (Element g = 0; g < s.size() && !f.witness; ++g)
        if (static_cast<std::int64_t>(s.order(g)) == lambda) f = {lambda, EigenvalueFormKind::OrderOf, g};
      for (Element h = 0; h < s.size() && !f.witness; ++h)
        if (static_cast<std::int64_t>(s.hat_up_set(h).size() + s.order(h)) == lambda)
          f = {lambda, EigenvalueFormKind::UhatPlusOrder, h};
    }
    out.push_back(f);
  }
  return out;
}

struct MultipleReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Divisibility facts for p-group power graphs: nonzero eigenvalues are 1 or
/// divisible by p; |U^(g)| + o(g) is a multiple of o(g); and when that value
/// is a prime power, pi(g) is 0 or 1 mod p.
inline MultipleReport check_multiple_property(const GroupStructure& s, const Spectrum& spec) {
  const auto p = s.p_group_prime();
  if (!p) throw std::domain_error("check_multiple_property: not a p-group");
  if (!spec.is_exact()) throw std::invalid_argument("check_multiple_property: spectrum is not exact");
  MultipleReport r;
  auto fail = [&](std::string msg) {
    r.ok = false;
    r.violations.push_back(std::move(msg));
  };
  const auto pi = static_cast<std::int64_t>(*p);
  for (auto [lambda, mult] : spec.exact.roots())
    if (lambda != 0 && lambda != 1 && lambda % pi != 0)
      fail("eigenvalue " + std::to_string(lambda) + " is neither 1 nor divisible by " + std::to_string(pi));
  for (Element g = 0; g < s.size(); ++g) {
    const auto o = s.order(g);
    const auto value = s.hat_up_set(g).size() + o;
    if (value % o != 0)
      fail("|U^(g)|+o(g) = " + std::to_string(value) + " not a multiple of o(g) = " + std::to_string(o) +
           " at element " + s.group().element_label(g));
    if (is_prime_power(value)) {
      const auto count = s.primitive_classes(g, *p).size();
      if (count != 0 && count % *p != 1)
        fail("pi(" + s.group().element_label(g) + ") = " + std::to_string(count) + " is not 0 or 1 mod " +
             std::to_string(*p));
    }
  }
  return r;
}

}  // namespace powerspec
