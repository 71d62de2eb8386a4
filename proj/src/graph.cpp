#include "curvlab/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace curvlab {

bool Graph::adjacent(int u, int v) const {
  const auto& row = adj_.at(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph from_edge_list(int n, std::span<const Edge> edges) {
  if (n < 0) throw GraphError("negative vertex count");
  Graph g;
  g.adj_.assign(n, {});
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw GraphError("edge endpoint out of range: (" + std::to_string(e.u) +
                       "," + std::to_string(e.v) + ") with n=" +
                       std::to_string(n));
    }
    if (e.u == e.v) {
      throw GraphError("self-loop at vertex " + std::to_string(e.u));
    }
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  int twice = 0;
  for (auto& row : g.adj_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    twice += static_cast<int>(row.size());
  }
  g.edge_count_ = twice / 2;
  return g;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  std::vector<int> local(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    local.at(vertices[i]) = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (int w : g.neighbors(vertices[i])) {
      const int j = local[w];
      if (j > static_cast<int>(i)) edges.push_back({static_cast<int>(i), j});
    }
  }
  return from_edge_list(static_cast<int>(vertices.size()), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) {
    edges.push_back({e.u + a.order(), e.v + a.order()});
  }
  return from_edge_list(a.order() + b.order(), edges);
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.order(), -1);
  std::deque<int> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
  std::vector<std::vector<int>> d;
  d.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) d.push_back(bfs_distances(g, v));
  return d;
}

int min_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) {
    best = v == 0 ? g.degree(v) : std::min(best, g.degree(v));
  }
  return best;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

bool is_regular(const Graph& g) { return min_degree(g) == max_degree(g); }

std::vector<int> connected_components(const Graph& g) {
  std::vector<int> label(g.order(), -1);
  int next = 0;
  for (int s = 0; s < g.order(); ++s) {
    if (label[s] >= 0) continue;
    std::vector<int> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u)) {
        if (label[w] < 0) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

bool is_connected(const Graph& g) {
  const auto label = connected_components(g);
  return std::all_of(label.begin(), label.end(), [](int c) { return c == 0; });
}

std::optional<int> girth(const Graph& g) {
  // Shortest cycle through each root: BFS, a non-tree edge closing at
  // depths (a, b) gives a closed walk of length a + b + 1 that contains a
  // cycle; the minimum over roots is exact.
  int best = std::numeric_limits<int>::max();
  for (int root = 0; root < g.order(); ++root) {
    std::vector<int> dist(g.order(), -1);
    std::vector<int> parent(g.order(), -1);
    std::deque<int> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      if (2 * dist[u] + 1 >= best) break;
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

StructureInfo structure_queries(const Graph& g) {
  StructureInfo info;
  info.min_degree = min_degree(g);
  info.max_degree = max_degree(g);
  info.is_regular = info.min_degree == info.max_degree;
  info.is_connected = is_connected(g);
  info.girth = girth(g);
  info.distances = distance_matrix(g);
  return info;
}

}  // namespace curvlab
