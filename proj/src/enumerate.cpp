#include "curvlab/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace curvlab {
namespace {

using Row = std::uint16_t;

// Ordered partition of the vertices: `order` lists vertices by position and
// bit p of `ends` marks the last position of a cell.
struct Partition {
  std::array<std::int8_t, 16> order{};
  Row ends = 0;
};

class Canonizer {
 public:
  Canonizer(int n, const std::vector<Row>& adj) : n_(n) {
    std::copy(adj.begin(), adj.end(), adj_.begin());
  }

  std::uint64_t run() {
    if (n_ == 0) return 0;
    Partition start;
    for (int v = 0; v < n_; ++v) start.order[v] = static_cast<std::int8_t>(v);
    start.ends = static_cast<Row>(1U << (n_ - 1));
    search(start);
    return best_;
  }

 private:
  // Splits cells by neighbour counts into every cell until stable. A
  // vertex's counts are packed into 4-bit fields, first cell most
  // significant, so numeric order is lexicographic order and the split
  // order depends only on the counts, not on labels.
  void refine(Partition& p) const {
    while (true) {
      std::array<Row, 16> masks{};
      int cells = 0;
      Row current = 0;
      for (int pos = 0; pos < n_; ++pos) {
        current |= static_cast<Row>(1U << p.order[pos]);
        if (p.ends >> pos & 1U) {
          masks[cells++] = current;
          current = 0;
        }
      }
      std::array<std::uint64_t, 16> key{};
      for (int v = 0; v < n_; ++v) {
        std::uint64_t k = 0;
        for (int c = 0; c < cells; ++c) k = (k << 4) | static_cast<std::uint64_t>(std::popcount<Row>(adj_[v] & masks[c]));
        key[v] = k;
      }
      Row ends = p.ends;
      int first = 0;
      for (int pos = 0; pos < n_; ++pos) {
        if (!(p.ends >> pos & 1U)) continue;
        for (int i = first + 1; i <= pos; ++i) {  // stable insertion sort
          const std::int8_t v = p.order[i];
          int j = i;
          for (; j > first && key[p.order[j - 1]] > key[v]; --j) p.order[j] = p.order[j - 1];
          p.order[j] = v;
        }
        for (int i = first; i < pos; ++i) {
          if (key[p.order[i]] != key[p.order[i + 1]]) ends |= static_cast<Row>(1U << i);
        }
        first = pos + 1;
      }
      if (ends == p.ends) return;
      p.ends = ends;
    }
  }

  bool twins(int v, int w) const {
    const Row without_w = adj_[v] & static_cast<Row>(~(1U << w));
    const Row without_v = adj_[w] & static_cast<Row>(~(1U << v));
    return without_w == without_v;
  }

  void search(Partition p) {
    refine(p);
    int first = 0;
    int last = -1;
    for (int pos = 0; pos < n_; ++pos) {
      if (p.ends >> pos & 1U) {
        if (pos > first) {
          last = pos;
          break;
        }
        first = pos + 1;
      }
    }
    if (last < 0) {
      std::uint64_t code = 0;
      for (int j = 1; j < n_; ++j) {
        for (int i = 0; i < j; ++i) code = (code << 1) | (adj_[p.order[i]] >> p.order[j] & 1U);
      }
      best_ = std::max(best_, code);
      return;
    }
    std::array<int, 16> tried{};
    int tried_count = 0;
    for (int idx = first; idx <= last; ++idx) {
      const int v = p.order[idx];
      // swapping twins is an automorphism fixing the partition
      if (std::any_of(tried.begin(), tried.begin() + tried_count, [&](int w) { return twins(v, w); })) continue;
      tried[tried_count++] = v;
      Partition child = p;
      child.order[first] = static_cast<std::int8_t>(v);
      int out = first + 1;
      for (int i = first; i <= last; ++i) {
        if (i != idx) child.order[out++] = p.order[i];
      }
      child.ends |= static_cast<Row>(1U << first);
      search(child);
    }
  }

  int n_;
  std::array<Row, 16> adj_{};
  std::uint64_t best_ = 0;
};

std::uint64_t canonical_code_rows(int n, const std::vector<Row>& adj) {
  return Canonizer(n, adj).run();
}

std::vector<Row> rows_from_code(int n, std::uint64_t code) {
  std::vector<Row> adj(n, 0);
  int bit = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      --bit;
      if (code >> bit & 1U) {
        adj[i] |= static_cast<Row>(1U << j);
        adj[j] |= static_cast<Row>(1U << i);
      }
    }
  }
  return adj;
}

void check_order(int n) {
  if (n < 0 || n > kCanonicalMaxOrder) {
    throw std::invalid_argument("canonical forms support at most " +
                                std::to_string(kCanonicalMaxOrder) + " vertices");
  }
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  check_order(g.order());
  std::vector<Row> adj(g.order(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= static_cast<Row>(1U << e.v);
    adj[e.v] |= static_cast<Row>(1U << e.u);
  }
  return canonical_code_rows(g.order(), adj);
}

Graph graph_from_code(int n, std::uint64_t code) {
  check_order(n);
  const auto adj = rows_from_code(n, code);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (adj[u] >> v & 1U) edges.push_back({u, v});
    }
  }
  return from_edge_list(n, edges);
}

namespace {

bool connected_rows(const std::vector<Row>& adj) {
  const int n = static_cast<int>(adj.size());
  Row seen = 1;
  Row frontier = 1;
  while (frontier) {
    Row next = 0;
    for (int v = 0; v < n; ++v) {
      if (frontier >> v & 1U) next |= adj[v];
    }
    frontier = static_cast<Row>(next & ~seen);
    seen |= next;
  }
  return seen == static_cast<Row>((1U << n) - 1);
}

// Canonical codes of every graph obtained from a (k-1)-vertex parent by
// adding a vertex of minimum degree. Deleting a minimum-degree vertex from
// any k-vertex graph leaves some parent, so iterating over all parent
// classes reaches every k-vertex class.
std::vector<std::uint64_t> extend_level(int k, const std::vector<std::uint64_t>& parents, bool connected_only) {
  std::unordered_set<std::uint64_t> seen;
  for (std::uint64_t parent : parents) {
    std::vector<Row> adj = rows_from_code(k - 1, parent);
    std::vector<int> degree(k - 1);
    for (int v = 0; v < k - 1; ++v) degree[v] = std::popcount(adj[v]);
    adj.push_back(0);
    for (Row mask = connected_only ? 1 : 0; mask < (1U << (k - 1)); ++mask) {
      const int d = std::popcount(mask);
      bool minimal = true;
      for (int v = 0; v < k - 1 && minimal; ++v) minimal = degree[v] + (mask >> v & 1) >= d;
      if (!minimal) continue;
      std::vector<Row> child = adj;
      child[k - 1] = mask;
      for (int v = 0; v < k - 1; ++v) {
        if (mask >> v & 1U) child[v] |= static_cast<Row>(1U << (k - 1));
      }
      if (connected_only && !connected_rows(child)) continue;
      seen.insert(canonical_code_rows(k, child));
    }
  }
  std::vector<std::uint64_t> level(seen.begin(), seen.end());
  std::sort(level.begin(), level.end());
  return level;
}

}  // namespace

std::vector<std::uint64_t> connected_graph_codes(int n) {
  if (n < 1) throw std::invalid_argument("connected_graphs needs n >= 1");
  check_order(n);
  std::vector<std::uint64_t> all{0};
  for (int k = 2; k < n; ++k) all = extend_level(k, all, false);
  return n == 1 ? all : extend_level(n, all, true);
}

std::vector<Graph> connected_graphs(int n) {
  const std::vector<std::uint64_t> level = connected_graph_codes(n);
  std::vector<Graph> out;
  out.reserve(level.size());
  for (std::uint64_t code : level) out.push_back(graph_from_code(n, code));
  return out;
}

std::vector<Graph> connected_graphs_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto level = connected_graphs(n);
    out.insert(out.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
  }
  return out;
}

}  // namespace curvlab
