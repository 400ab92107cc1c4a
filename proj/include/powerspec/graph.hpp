#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace powerspec {

using Vertex = std::size_t;
using VertexSet = std::vector<Vertex>;

/// Undirected simple graph with a dense bit-per-pair adjacency matrix.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t vertex_count() const { return n_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1u;
  }

  void add_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v) throw std::invalid_argument("Graph: self-loop on vertex " + std::to_string(u));
    set(u, v, true);
    set(v, u, true);
  }

  void remove_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    set(u, v, false);
    set(v, u, false);
  }

  std::size_t degree(Vertex u) const {
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) d += std::popcount(bits_[u * words_ + w]);
    return d;
  }

  VertexSet neighbors(Vertex u) const {
    VertexSet out;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t word = bits_[u * words_ + w];
      while (word) {
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
    return out;
  }

  /// Raw adjacency row; words_per_row() words of 64 bits.
  const std::uint64_t* row(Vertex u) const { return bits_.data() + u * words_; }
  std::size_t words_per_row() const { return words_; }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (Vertex u = 0; u < n_; ++u) twice += degree(u);
    return twice / 2;
  }

  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> d(n_);
    for (Vertex u = 0; u < n_; ++u) d[u] = degree(u);
    return d;
  }

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != n_)
      throw std::invalid_argument("Graph: label count mismatch");
    labels_ = std::move(labels);
  }

  /// Structural equality; labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  void check(Vertex u) const {
    if (u >= n_) throw std::out_of_range("Graph: vertex " + std::to_string(u) + " out of range");
  }
  void set(Vertex u, Vertex v, bool on) {
    auto& word = bits_[u * words_ + v / 64];
    const std::uint64_t mask = std::uint64_t{1} << (v % 64);
    word = on ? (word | mask) : (word & ~mask);
  }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::string> labels_;
};

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

/// Connected components, each sorted, ordered by smallest vertex.
inline std::vector<VertexSet> components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> seen(n, 0);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (Vertex v : g.neighbors(comp[head]))
        if (!seen[v]) {
          seen[v] = 1;
          comp.push_back(v);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return components(g).size() == 1; }

inline Graph complement(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Graph c(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  c.set_labels(g.labels());
  return c;
}

inline bool is_complete(const Graph& g) {
  const std::size_t n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u)
    if (g.degree(u) != n - 1) return false;
  return true;
}

/// Subgraph induced on the given vertices, renumbered in ascending order.
inline Graph induced_subgraph(const Graph& g, VertexSet vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (Vertex v : vertices)
    if (v >= g.vertex_count())
      throw std::domain_error("induced_subgraph: unknown vertex " + std::to_string(v));
  Graph sub(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) sub.add_edge(i, j);
  if (!g.labels().empty()) {
    std::vector<std::string> labels;
    for (Vertex v : vertices) labels.push_back(g.labels()[v]);
    sub.set_labels(std::move(labels));
  }
  return sub;
}

inline Graph remove_vertices(const Graph& g, const VertexSet& removed) {
  std::vector<char> drop(g.vertex_count(), 0);
  for (Vertex v : removed) drop.at(v) = 1;
  VertexSet keep;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!drop[v]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.vertex_count() + b.vertex_count());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  const std::size_t off = a.vertex_count();
  for (auto [u, v] : b.edges()) g.add_edge(off + u, off + v);
  return g;
}

inline Graph graph_join(const Graph& a, const Graph& b) {
  Graph g = disjoint_union(a, b);
  const std::size_t off = a.vertex_count();
  for (Vertex u = 0; u < a.vertex_count(); ++u)
    for (Vertex v = 0; v < b.vertex_count(); ++v) g.add_edge(u, off + v);
  return g;
}

/// Edge-list text: "n m" header then one "u v" line per edge (u < v).
inline void write_edge_list(std::ostream& out, const Graph& g) {
  const auto es = g.edges();
  out << g.vertex_count() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) out << u << ' ' << v << '\n';
}

inline Graph read_edge_list(std::istream& in) {
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw std::runtime_error("edge list: bad header");
  Graph g(static_cast<std::size_t>(n));
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) throw std::runtime_error("edge list: truncated");
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::runtime_error("edge list: vertex out of range");
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return g;
}

inline nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  nlohmann::json labels = nlohmann::json::array();
  for (const auto& s : g.labels()) labels.push_back(s);
  return {{"n", g.vertex_count()}, {"edges", edges}, {"labels", labels}};
}

inline Graph graph_from_json(const nlohmann::json& j) {
  Graph g(j.at("n").get<std::size_t>());
  for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
  if (j.contains("labels") && !j.at("labels").empty())
    g.set_labels(j.at("labels").get<std::vector<std::string>>());
  return g;
}

}  // namespace powerspec
