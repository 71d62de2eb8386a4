#include "curvlab/matching.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>

namespace curvlab {

bool verify_matching(const Graph& g, const Matching& m) {
  std::vector<bool> used(g.order(), false);
  for (const Edge& e : m.edges) {
    if (e.u < 0 || e.v >= g.order() || e.u >= e.v || !g.adjacent(e.u, e.v)) return false;
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = true;
  }
  return m.is_perfect == (2 * static_cast<int>(m.edges.size()) == g.order());
}

namespace {

// Edmonds' algorithm with explicit blossom contraction through base labels.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(g.order()), mate_(n_, -1), parent_(n_), base_(n_), in_queue_(n_), in_blossom_(n_) {}

  std::vector<int> run() {
    for (int root = 0; root < n_; ++root) {
      if (mate_[root] >= 0) continue;
      const int end = find_augmenting_path(root);
      for (int v = end; v >= 0;) {
        const int pv = parent_[v];
        const int next = mate_[pv];
        mate_[v] = pv;
        mate_[pv] = v;
        v = next;
      }
    }
    return mate_;
  }

 private:
  int lowest_common_ancestor(int a, int b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (mate_[a] < 0) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  // Returns the free vertex ending an augmenting path from root, or -1.
  int find_augmenting_path(int root) {
    std::fill(parent_.begin(), parent_.end(), -1);
    std::fill(in_queue_.begin(), in_queue_.end(), false);
    for (int v = 0; v < n_; ++v) base_[v] = v;
    std::deque<int> queue{root};
    in_queue_[root] = true;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] >= 0 && parent_[mate_[to]] >= 0)) {
          // odd cycle: contract the blossom
          const int b = lowest_common_ancestor(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (int u = 0; u < n_; ++u) {
            if (in_blossom_[base_[u]]) {
              base_[u] = b;
              if (!in_queue_[u]) {
                in_queue_[u] = true;
                queue.push_back(u);
              }
            }
          }
        } else if (parent_[to] < 0) {
          parent_[to] = v;
          if (mate_[to] < 0) return to;
          in_queue_[mate_[to]] = true;
          queue.push_back(mate_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> mate_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> in_queue_;
  std::vector<bool> in_blossom_;
};

}  // namespace

Matching maximum_matching(const Graph& g) {
  const std::vector<int> mate = Blossom(g).run();
  Matching m;
  for (int v = 0; v < g.order(); ++v) {
    if (mate[v] > v) m.edges.push_back({v, mate[v]});
  }
  m.is_perfect = 2 * static_cast<int>(m.edges.size()) == g.order();
  return m;
}

namespace {

int best_matching(const Graph& g, std::vector<bool>& used, int start) {
  int v = start;
  while (v < g.order() && used[v]) ++v;
  if (v >= g.order()) return 0;
  used[v] = true;
  int best = best_matching(g, used, v + 1);  // leave v unmatched
  for (int w : g.neighbors(v)) {
    if (used[w]) continue;
    used[w] = true;
    best = std::max(best, 1 + best_matching(g, used, v + 1));
    used[w] = false;
  }
  used[v] = false;
  return best;
}

}  // namespace

int matching_bruteforce(const Graph& g) {
  if (g.size() > kBruteForceMatchingMaxEdges) {
    throw std::invalid_argument("matching_bruteforce supports at most " +
                                std::to_string(kBruteForceMatchingMaxEdges) + " edges");
  }
  std::vector<bool> used(g.order(), false);
  return best_matching(g, used, 0);
}

int odd_components_after_removal(const Graph& g, const std::vector<int>& removed) {
  std::vector<bool> gone(g.order(), false);
  for (int v : removed) gone.at(v) = true;
  std::vector<bool> seen(g.order(), false);
  int odd = 0;
  for (int s = 0; s < g.order(); ++s) {
    if (gone[s] || seen[s]) continue;
    int size = 0;
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      ++size;
      for (int w : g.neighbors(u)) {
        if (!gone[w] && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    odd += size % 2;
  }
  return odd;
}

std::optional<std::vector<int>> tutte_violation(const Graph& g) {
  const int n = g.order();
  if (n > kTutteScanMaxOrder) {
    throw std::invalid_argument("tutte_violation supports at most " +
                                std::to_string(kTutteScanMaxOrder) + " vertices");
  }
  for (int size = 0; size <= n; ++size) {
    // subsets of the given size in lexicographic order of their members
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + size, true);
    do {
      std::vector<int> subset;
      for (int v = 0; v < n; ++v) {
        if (pick[v]) subset.push_back(v);
      }
      if (odd_components_after_removal(g, subset) > size) return subset;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return std::nullopt;
}

}  // namespace curvlab
