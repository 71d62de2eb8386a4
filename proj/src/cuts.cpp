#include "curvlab/cuts.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

namespace curvlab {

CutCertificate make_cut(const Graph& g, std::vector<int> side) {
  std::sort(side.begin(), side.end());
  side.erase(std::unique(side.begin(), side.end()), side.end());
  if (side.empty() || static_cast<int>(side.size()) >= g.order()) {
    throw std::invalid_argument("cut side must be a nonempty proper subset");
  }
  std::vector<bool> in(g.order(), false);
  for (int v : side) in.at(v) = true;
  CutCertificate cert;
  cert.side = std::move(side);
  for (const Edge& e : g.edges()) {
    if (in[e.u] != in[e.v]) cert.cut_edges.push_back(e);
  }
  cert.value = static_cast<int>(cert.cut_edges.size());
  return cert;
}

bool verify_cut(const Graph& g, const CutCertificate& cert) {
  if (cert.side.empty() || static_cast<int>(cert.side.size()) >= g.order()) return false;
  if (!std::is_sorted(cert.side.begin(), cert.side.end())) return false;
  for (int v : cert.side) {
    if (v < 0 || v >= g.order()) return false;
  }
  const CutCertificate fresh = make_cut(g, cert.side);
  return fresh.cut_edges == cert.cut_edges && fresh.value == cert.value &&
         cert.value == static_cast<int>(cert.cut_edges.size());
}

bool is_star_cut(const Graph& g, const CutCertificate& cert) {
  return cert.side.size() == 1 || static_cast<int>(cert.side.size()) == g.order() - 1;
}

namespace {

std::vector<int> side_with_zero(const Graph& g, std::vector<int> side) {
  if (std::find(side.begin(), side.end(), 0) != side.end()) return side;
  std::vector<bool> in(g.order(), false);
  for (int v : side) in[v] = true;
  std::vector<int> other;
  for (int v = 0; v < g.order(); ++v) {
    if (!in[v]) other.push_back(v);
  }
  return other;
}

}  // namespace

EdgeConnectivity edge_connectivity(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw std::invalid_argument("edge connectivity of the empty graph is undefined");
  if (n == 1) return {0, std::nullopt};

  const auto component = connected_components(g);
  if (std::any_of(component.begin(), component.end(), [](int c) { return c != 0; })) {
    std::vector<int> side;
    for (int v = 0; v < n; ++v) {
      if (component[v] == 0) side.push_back(v);
    }
    return {0, make_cut(g, side)};
  }

  // Stoer–Wagner on a dense weight matrix; ties go to the lowest index.
  std::vector<std::vector<int>> weight(n, std::vector<int>(n, 0));
  for (const Edge& e : g.edges()) weight[e.u][e.v] = weight[e.v][e.u] = 1;
  std::vector<std::vector<int>> members(n);
  for (int v = 0; v < n; ++v) members[v] = {v};
  std::vector<int> active(n);
  for (int v = 0; v < n; ++v) active[v] = v;

  int best = std::numeric_limits<int>::max();
  std::vector<int> best_side;
  while (active.size() > 1) {
    const int k = static_cast<int>(active.size());
    std::vector<int> key(k, 0);
    std::vector<bool> added(k, false);
    int prev = -1;
    int last = -1;
    for (int step = 0; step < k; ++step) {
      int pick = -1;
      for (int i = 0; i < k; ++i) {
        if (!added[i] && (pick < 0 || key[i] > key[pick])) pick = i;
      }
      added[pick] = true;
      prev = last;
      last = pick;
      for (int i = 0; i < k; ++i) {
        if (!added[i]) key[i] += weight[active[pick]][active[i]];
      }
    }
    const int s = active[prev];
    const int t = active[last];
    if (key[last] < best) {
      best = key[last];
      best_side = members[t];
    }
    for (int v = 0; v < n; ++v) {
      weight[s][v] += weight[t][v];
      weight[v][s] = weight[s][v];
    }
    weight[s][s] = 0;
    members[s].insert(members[s].end(), members[t].begin(), members[t].end());
    active.erase(active.begin() + last);
  }
  CutCertificate cert = make_cut(g, side_with_zero(g, best_side));
  return {cert.value, std::move(cert)};
}

MinCutEnumeration min_cut_bruteforce(const Graph& g) {
  const int n = g.order();
  if (n < 2 || n > kBruteForceCutMaxOrder) {
    throw std::invalid_argument("min_cut_bruteforce needs 2 <= n <= " +
                                std::to_string(kBruteForceCutMaxOrder));
  }
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1U << e.v;
    adj[e.v] |= 1U << e.u;
  }
  const std::uint32_t full = (n == 32) ? ~0U : ((1U << n) - 1);
  MinCutEnumeration out;
  out.lambda = std::numeric_limits<int>::max();
  std::vector<std::uint32_t> best_masks;
  // vertex 0 always on the enumerated side
  for (std::uint32_t rest = 0; rest < (1U << (n - 1)); ++rest) {
    const std::uint32_t side = (rest << 1) | 1U;
    if (side == full) continue;
    int value = 0;
    for (int v = 0; v < n; ++v) {
      if (side >> v & 1U) value += std::popcount(adj[v] & ~side & full);
    }
    if (value < out.lambda) {
      out.lambda = value;
      best_masks.clear();
    }
    if (value == out.lambda) best_masks.push_back(side);
  }
  for (std::uint32_t mask : best_masks) {
    std::vector<int> side;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1U) side.push_back(v);
    }
    out.cuts.push_back(make_cut(g, std::move(side)));
  }
  std::sort(out.cuts.begin(), out.cuts.end(),
            [](const CutCertificate& a, const CutCertificate& b) { return a.side < b.side; });
  return out;
}

namespace {

// Dinic's algorithm on a small residual network.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : head_(nodes, -1), level_(nodes), iter_(nodes) {}

  // Arc pair u->v (cap) and v->u (reverse_cap).
  void add(int u, int v, int cap, int reverse_cap) {
    arcs_.push_back({v, head_[u], cap});
    head_[u] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({u, head_[v], reverse_cap});
    head_[v] = static_cast<int>(arcs_.size()) - 1;
  }

  int run(int s, int t, int limit) {
    int flow = 0;
    while (flow < limit && bfs(s, t)) {
      iter_ = head_;
      while (flow < limit) {
        const int pushed = dfs(s, t, limit - flow);
        if (pushed == 0) break;
        flow += pushed;
      }
    }
    return flow;
  }

  std::vector<int> reachable(int s) const {
    std::vector<bool> seen(head_.size(), false);
    std::vector<int> stack{s};
    seen[s] = true;
    std::vector<int> out;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      out.push_back(u);
      for (int a = head_[u]; a >= 0; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = true;
          stack.push_back(arcs_[a].to);
        }
      }
    }
    return out;
  }

 private:
  struct Arc {
    int to;
    int next;
    int cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::deque<int> queue{s};
    level_[s] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int a = head_[u]; a >= 0; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[u] + 1;
          queue.push_back(arcs_[a].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  int dfs(int u, int t, int want) {
    if (u == t) return want;
    for (int& a = iter_[u]; a >= 0; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.cap > 0 && level_[arc.to] == level_[u] + 1) {
        const int got = dfs(arc.to, t, std::min(want, arc.cap));
        if (got > 0) {
          arc.cap -= got;
          arcs_[a ^ 1].cap += got;
          return got;
        }
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace

FlowResult max_flow(const Graph& g, const std::vector<int>& sources, const std::vector<int>& sinks,
                    int limit) {
  const int n = g.order();
  const int s = n;
  const int t = n + 1;
  const int big = g.size() + 1;
  FlowNetwork net(n + 2);
  for (const Edge& e : g.edges()) net.add(e.u, e.v, 1, 1);
  for (int v : sources) net.add(s, v, big, 0);
  for (int v : sinks) net.add(v, t, big, 0);
  FlowResult result;
  result.value = net.run(s, t, limit);
  for (int v : net.reachable(s)) {
    if (v < n) result.source_side.push_back(v);
  }
  std::sort(result.source_side.begin(), result.source_side.end());
  return result;
}

RestrictedConnectivity restricted_edge_connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 4) throw std::invalid_argument("restricted edge connectivity needs n >= 4");

  // Every admissible partition puts vertex 0 together with some u on one
  // side and some pair v < w on the other, so contracting {0, u} and
  // {v, w} and minimising over the max-flows covers all of them.
  RestrictedConnectivity out;
  int best = g.size() + 1;
  for (int u = 1; u < n; ++u) {
    for (int v = 1; v < n; ++v) {
      if (v == u) continue;
      for (int w = v + 1; w < n; ++w) {
        if (w == u) continue;
        const FlowResult flow = max_flow(g, {0, u}, {v, w}, best);
        if (flow.value < best) {
          best = flow.value;
          out.cert = make_cut(g, flow.source_side);
        }
      }
    }
  }
  if (out.cert) out.lambda = best;
  return out;
}

MinCutClassification classify_min_cuts(const Graph& g) {
  const int n = g.order();
  if (n < 2 || !is_connected(g)) {
    throw std::invalid_argument("classify_min_cuts needs a connected graph with n >= 2");
  }
  const EdgeConnectivity ec = edge_connectivity(g);
  MinCutClassification out;
  out.lambda = ec.lambda;
  if (n <= 3) {
    // every bipartition has a singleton side
    out.stars_only = true;
    return out;
  }
  if (ec.lambda < min_degree(g)) {
    // a star cut costs at least δ, so this minimum cut is not a star
    out.stars_only = false;
    out.witness = ec.cert;
    return out;
  }
  const RestrictedConnectivity restricted = restricted_edge_connectivity(g);
  out.stars_only = !restricted.lambda || *restricted.lambda > ec.lambda;
  if (!out.stars_only) out.witness = restricted.cert;
  return out;
}

}  // namespace curvlab
