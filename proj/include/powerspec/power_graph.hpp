#pragma once

#include <numeric>
#include <stdexcept>
#include <string>

#include "graph.hpp"
#include "group.hpp"
#include "group_structure.hpp"

namespace powerspec {

/// u ~ v iff u != v and one lies in the cyclic subgroup of the other.
/// Vertex i is group element i.
inline Graph power_graph(const GroupStructure& s) {
  Graph g(s.size());
  for (Element h = 0; h < s.size(); ++h)
    for (Element x : s.cyclic_subgroup(h))
      if (x != h) g.add_edge(h, x);
  g.set_labels(s.group().element_labels());
  return g;
}

inline Graph power_graph(const FiniteGroup& group) { return power_graph(GroupStructure(group)); }

/// Power graph with the identity vertex deleted; remaining vertices keep
/// their relative order.
inline Graph proper_power_graph(const GroupStructure& s) {
  if (s.size() < 2) throw std::domain_error("proper_power_graph: group must have order >= 2");
  return remove_vertices(power_graph(s), {s.group().identity()});
}

inline Graph proper_power_graph(const FiniteGroup& group) {
  return proper_power_graph(GroupStructure(group));
}

/// Power graph of Z_n minus the identity and all generators. For prime n the
/// result is the null graph.
inline Graph reduced_cyclic_graph(std::size_t n) {
  if (n < 2) throw std::domain_error("reduced_cyclic_graph: n must be >= 2");
  const Graph full = power_graph(cyclic_group(n));
  VertexSet keep;
  for (Vertex v = 1; v < n; ++v)
    if (std::gcd(v, n) != 1) keep.push_back(v);
  return induced_subgraph(full, keep);
}

}  // namespace powerspec
