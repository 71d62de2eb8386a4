#include "curvlab/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace curvlab {

std::string VertexId::to_string() const {
  if (coords.size() == 1) return std::to_string(coords[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coords[i]);
  }
  return out + ")";
}

std::size_t VertexIdHash::operator()(const VertexId& v) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (auto c : v.coords) {
    h ^= std::hash<std::int64_t>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

NeighborOracle::NeighborOracle(std::string name, std::size_t arity, NeighborFn fn)
    : name_(std::move(name)), arity_(arity), fn_(std::make_shared<const NeighborFn>(std::move(fn))) {}

std::vector<VertexId> NeighborOracle::neighbors(const VertexId& v) const {
  if (v.coords.size() != arity_) {
    throw std::invalid_argument("vertex " + v.to_string() + " has wrong arity for " + name_);
  }
  auto out = (*fn_)(v);
  std::sort(out.begin(), out.end());
  return out;
}

NeighborOracle oracle_of(Graph g, std::string name) {
  auto shared = std::make_shared<const Graph>(std::move(g));
  return NeighborOracle(std::move(name), 1, [shared](const VertexId& v) {
    const auto x = v.coords[0];
    if (x < 0 || x >= shared->order()) {
      throw std::out_of_range("vertex " + std::to_string(x) + " not in graph");
    }
    std::vector<VertexId> out;
    for (int w : shared->neighbors(static_cast<int>(x))) out.push_back({w});
    return out;
  });
}

NeighborOracle cartesian_product(const NeighborOracle& left, const NeighborOracle& right) {
  const std::size_t la = left.arity();
  const std::size_t ra = right.arity();
  return NeighborOracle(left.name() + "*" + right.name(), la + ra,
                        [left, right, la](const VertexId& v) {
                          VertexId a(std::vector<std::int64_t>(v.coords.begin(), v.coords.begin() + la));
                          VertexId b(std::vector<std::int64_t>(v.coords.begin() + la, v.coords.end()));
                          std::vector<VertexId> out;
                          auto join = [](const VertexId& p, const VertexId& q) {
                            VertexId r(p.coords);
                            r.coords.insert(r.coords.end(), q.coords.begin(), q.coords.end());
                            return r;
                          };
                          for (const auto& a2 : left.neighbors(a)) out.push_back(join(a2, b));
                          for (const auto& b2 : right.neighbors(b)) out.push_back(join(a, b2));
                          return out;
                        });
}

int Ball::index_of(const VertexId& v) const {
  auto it = std::find(ids.begin(), ids.end(), v);
  return it == ids.end() ? -1 : static_cast<int>(it - ids.begin());
}

namespace {

template <typename Id, typename NeighborsOf>
Ball build_ball(const Id& center, int radius, NeighborsOf&& neighbors_of,
                auto&& to_vertex_id) {
  if (radius != 1 && radius != 2) throw std::invalid_argument("ball radius must be 1 or 2");
  std::map<Id, std::vector<Id>> adjacency;
  auto nbrs = [&](const Id& v) -> const std::vector<Id>& {
    auto it = adjacency.find(v);
    if (it == adjacency.end()) it = adjacency.emplace(v, neighbors_of(v)).first;
    return it->second;
  };

  std::vector<Id> first = nbrs(center);
  std::set<Id> second;
  if (radius == 2) {
    const std::set<Id> inner(first.begin(), first.end());
    for (const Id& y : first) {
      for (const Id& z : nbrs(y)) {
        if (z != center && !inner.contains(z)) second.insert(z);
      }
    }
  }

  std::vector<Id> order{center};
  order.insert(order.end(), first.begin(), first.end());
  order.insert(order.end(), second.begin(), second.end());
  std::map<Id, int> local;
  for (std::size_t i = 0; i < order.size(); ++i) local.emplace(order[i], static_cast<int>(i));

  std::vector<Edge> edges;
  const std::size_t inner_end = 1 + first.size();
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const Id& w : nbrs(order[i])) {
      auto it = local.find(w);
      if (it != local.end() && it->second > static_cast<int>(i)) {
        edges.push_back({static_cast<int>(i), it->second});
      }
    }
  }

  Ball b;
  b.graph = from_edge_list(static_cast<int>(order.size()), edges);
  b.first_size = static_cast<int>(first.size());
  b.second_size = static_cast<int>(second.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    b.ids.push_back(to_vertex_id(order[i]));
    b.sphere.push_back(i == 0 ? Sphere::kCenter : i < inner_end ? Sphere::kFirst : Sphere::kSecond);
  }
  return b;
}

}  // namespace

Ball ball(const NeighborOracle& oracle, const VertexId& center, int radius) {
  return build_ball(
      center, radius, [&](const VertexId& v) { return oracle.neighbors(v); },
      [](const VertexId& v) { return v; });
}

Ball ball(const Graph& g, int x, int radius) {
  return build_ball(
      x, radius,
      [&](int v) {
        auto s = g.neighbors(v);
        return std::vector<int>(s.begin(), s.end());
      },
      [](int v) { return VertexId{v}; });
}

}  // namespace curvlab
