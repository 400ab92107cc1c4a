#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "graph.hpp"

namespace powerspec {

/// A maximal set of mutual twins. Closed twins share N[v] and form a clique;
/// open twins share N(v) and are pairwise non-adjacent. Singletons are
/// reported as closed.
struct TwinClass {
  VertexSet members;
  bool closed = true;
};

/// Partition into twin classes: closed-twin classes first, then the remaining
/// singletons grouped by open neighborhood. Classes are ordered by smallest
/// member. Between two classes either every pair is adjacent or none is.
inline std::vector<TwinClass> twin_classes(const Graph& g, bool include_open = true) {
  const std::size_t n = g.vertex_count();
  const std::size_t words = g.words_per_row();
  auto row_of = [&](Vertex v, bool with_self) {
    std::vector<std::uint64_t> r(g.row(v), g.row(v) + words);
    if (with_self) r[v / 64] |= std::uint64_t{1} << (v % 64);
    return r;
  };

  std::map<std::vector<std::uint64_t>, VertexSet> closed_groups;
  for (Vertex v = 0; v < n; ++v) closed_groups[row_of(v, true)].push_back(v);

  std::vector<TwinClass> classes;
  std::map<std::vector<std::uint64_t>, VertexSet> open_groups;
  for (auto& [key, members] : closed_groups) {
    if (members.size() > 1 || !include_open)
      classes.push_back({members, true});
    else
      open_groups[row_of(members[0], false)].push_back(members[0]);
  }
  for (auto& [key, members] : open_groups)
    classes.push_back({members, members.size() == 1});

  std::sort(classes.begin(), classes.end(),
            [](const TwinClass& a, const TwinClass& b) { return a.members[0] < b.members[0]; });
  return classes;
}

}  // namespace powerspec
