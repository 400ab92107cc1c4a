#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "twins.hpp"

namespace powerspec {

/// Minimum vertex separator: removing separating_set leaves a disconnected
/// or trivial graph, and no smaller set does.
struct CutCertificate {
  std::size_t size = 0;
  VertexSet separating_set;
};

namespace detail {

/// Dinic max-flow on a small dense-ish network with 64-bit capacities.
class FlowNetwork {
 public:
  static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

  explicit FlowNetwork(std::size_t nodes) : adj_(nodes), level_(nodes), it_(nodes) {}

  void add_arc(std::size_t from, std::size_t to, std::int64_t cap) {
    adj_[from].push_back(arcs_.size());
    arcs_.push_back({to, cap});
    adj_[to].push_back(arcs_.size());
    arcs_.push_back({from, 0});
  }

  /// Pushes flow until `limit` is reached or no augmenting path remains.
  std::int64_t max_flow(std::size_t s, std::size_t t, std::int64_t limit) {
    std::int64_t flow = 0;
    while (flow < limit && bfs(s, t)) {
      std::fill(it_.begin(), it_.end(), 0);
      while (flow < limit) {
        const std::int64_t pushed = dfs(s, t, limit - flow);
        if (pushed == 0) break;
        flow += pushed;
      }
    }
    return flow;
  }

  /// Nodes reachable from s in the residual network.
  std::vector<char> residual_reachable(std::size_t s) const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (auto id : adj_[u]) {
        const auto& a = arcs_[id];
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = 1;
          stack.push_back(a.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    std::size_t to;
    std::int64_t cap;
  };

  bool bfs(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      for (auto id : adj_[u]) {
        const auto& a = arcs_[id];
        if (a.cap > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[u] + 1;
          q.push(a.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  std::int64_t dfs(std::size_t u, std::size_t t, std::int64_t pushed) {
    if (u == t) return pushed;
    for (auto& i = it_[u]; i < adj_[u].size(); ++i) {
      const auto id = adj_[u][i];
      auto& a = arcs_[id];
      if (a.cap <= 0 || level_[a.to] != level_[u] + 1) continue;
      const std::int64_t got = dfs(a.to, t, std::min(pushed, a.cap));
      if (got > 0) {
        a.cap -= got;
        arcs_[id ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<std::size_t> it_;
};

}  // namespace detail

/// Exact vertex connectivity by vertex-splitting max-flow.
///
/// Closed twins never straddle a minimal separator, so the search runs on the
/// quotient by closed-twin classes with class sizes as vertex capacities.
/// Classes are scanned in index order; once the scanned classes outweigh the
/// best cut found, one of them lies outside some minimum separator, and every
/// pair involving it has already been tried.
inline CutCertificate vertex_connectivity(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return {0, {}};
  if (!is_connected(g)) return {0, {}};
  if (is_complete(g)) {
    VertexSet all;
    for (Vertex v = 0; v + 1 < n; ++v) all.push_back(v);
    return {n - 1, all};
  }

  CutCertificate best{n, {}};
  for (Vertex v = 0; v < n; ++v) {
    const auto d = g.degree(v);
    if (d < n - 1 && d < best.size) best = {d, g.neighbors(v)};
  }

  const auto classes = twin_classes(g, /*include_open=*/false);
  const std::size_t k = classes.size();
  std::vector<std::vector<char>> cadj(k, std::vector<char>(k, 0));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      cadj[a][b] = a != b && g.adjacent(classes[a].members[0], classes[b].members[0]);

  std::size_t scanned_weight = 0;
  for (std::size_t s = 0; s < k && scanned_weight <= best.size; ++s) {
    // Pairs with t < s were tried when t was the source.
    for (std::size_t t = s + 1; t < k; ++t) {
      if (cadj[s][t]) continue;
      detail::FlowNetwork net(2 * k);
      for (std::size_t c = 0; c < k; ++c) {
        const std::int64_t cap = (c == s || c == t)
                                     ? detail::FlowNetwork::kInf
                                     : static_cast<std::int64_t>(classes[c].members.size());
        net.add_arc(2 * c, 2 * c + 1, cap);
        for (std::size_t d = 0; d < k; ++d)
          if (cadj[c][d]) net.add_arc(2 * c + 1, 2 * d, detail::FlowNetwork::kInf);
      }
      const auto limit = static_cast<std::int64_t>(best.size);
      const auto flow = net.max_flow(2 * s + 1, 2 * t, limit);
      if (flow >= limit) continue;
      const auto seen = net.residual_reachable(2 * s + 1);
      VertexSet cut;
      for (std::size_t c = 0; c < k; ++c)
        if (seen[2 * c] && !seen[2 * c + 1])
          cut.insert(cut.end(), classes[c].members.begin(), classes[c].members.end());
      std::sort(cut.begin(), cut.end());
      best = {static_cast<std::size_t>(flow), std::move(cut)};
    }
    scanned_weight += classes[s].members.size();
  }
  std::sort(best.separating_set.begin(), best.separating_set.end());
  return best;
}

/// True when removing `removed` leaves a disconnected or trivial graph.
inline bool separates(const Graph& g, const VertexSet& removed) {
  const Graph rest = remove_vertices(g, removed);
  return rest.vertex_count() <= 1 || !is_connected(rest);
}

/// Exhaustive subset search in order of increasing size; limited to 20 vertices.
inline CutCertificate vertex_connectivity_exhaustive(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 20) throw std::domain_error("vertex_connectivity_exhaustive: at most 20 vertices");
  if (n <= 1) return {0, {}};
  for (std::size_t size = 0; size + 1 < n; ++size) {
    // Gosper's hack enumerates n-bit masks with `size` bits set.
    std::uint32_t mask = size == 0 ? 0u : (1u << size) - 1u;
    const std::uint32_t end = 1u << n;
    while (mask < end) {
      VertexSet removed;
      for (Vertex v = 0; v < n; ++v)
        if (mask >> v & 1u) removed.push_back(v);
      if (!is_connected(remove_vertices(g, removed))) return {size, removed};
      if (mask == 0) break;
      const std::uint32_t c = mask & -mask;
      const std::uint32_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  VertexSet all;
  for (Vertex v = 0; v + 1 < n; ++v) all.push_back(v);
  return {n - 1, all};
}

}  // namespace powerspec
