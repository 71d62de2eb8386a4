#include "curvlab/generators.hpp"

#include <charconv>
#include <stdexcept>
#include <string_view>

namespace curvlab {
namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int p = 2; p * p <= q; ++p) {
    if (q % p == 0) return false;
  }
  return true;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

Graph path_graph(int n) {
  require(n >= 1, "path requires n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return from_edge_list(n, edges);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle requires n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return from_edge_list(n, edges);
}

Graph complete_graph(int n) {
  require(n >= 1, "complete requires n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return from_edge_list(n, edges);
}

Graph complete_bipartite_graph(int m, int n) {
  require(m >= 1 && n >= 1, "complete_bipartite requires m, n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) edges.push_back({i, m + j});
  }
  return from_edge_list(m + n, edges);
}

Graph hypercube_graph(int d) {
  require(d >= 1 && d <= 20, "hypercube requires 1 <= d <= 20");
  const int n = 1 << d;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    for (int b = 0; b < d; ++b) {
      const int w = v ^ (1 << b);
      if (v < w) edges.push_back({v, w});
    }
  }
  return from_edge_list(n, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return from_edge_list(10, edges);
}

Graph triangular_graph(int n) {
  require(n >= 2, "triangular requires n >= 2");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      const auto [i, j] = pairs[a];
      const auto [k, l] = pairs[b];
      if (i == k || i == l || j == k || j == l) {
        edges.push_back({static_cast<int>(a), static_cast<int>(b)});
      }
    }
  }
  return from_edge_list(static_cast<int>(pairs.size()), edges);
}

Graph hamming2_graph(int q) {
  require(q >= 1, "hamming2 requires q >= 1");
  return cartesian_product(complete_graph(q), complete_graph(q));
}

Graph paley_graph(int q) {
  require(is_prime(q) && q % 4 == 1, "paley requires a prime q with q = 1 mod 4");
  std::vector<bool> square(q, false);
  for (int a = 1; a < q; ++a) square[(a * a) % q] = true;
  std::vector<Edge> edges;
  for (int i = 0; i < q; ++i) {
    for (int j = i + 1; j < q; ++j) {
      if (square[(j - i) % q]) edges.push_back({i, j});
    }
  }
  return from_edge_list(q, edges);
}

Graph cartesian_product(const Graph& a, const Graph& b) {
  const int nb = b.order();
  std::vector<Edge> edges;
  for (int u = 0; u < a.order(); ++u) {
    for (int v = 0; v < nb; ++v) {
      for (int w : b.neighbors(v)) {
        if (v < w) edges.push_back({u * nb + v, u * nb + w});
      }
      for (int w : a.neighbors(u)) {
        if (u < w) edges.push_back({u * nb + v, w * nb + v});
      }
    }
  }
  return from_edge_list(a.order() * nb, edges);
}

Graph beta1_counterexample() {
  std::vector<Edge> edges;
  for (const Edge& e : petersen_graph().edges()) {
    if (e == Edge{0, 1}) continue;
    edges.push_back(e);
    edges.push_back({e.u + 10, e.v + 10});
  }
  edges.push_back({0, 10});
  edges.push_back({1, 11});
  return from_edge_list(20, edges);
}

NeighborOracle integer_line() {
  return NeighborOracle("line", 1, [](const VertexId& v) {
    const auto i = v.coords[0];
    return std::vector<VertexId>{{i - 1}, {i + 1}};
  });
}

NeighborOracle line_times_complete(int k) {
  require(k >= 1, "line_times_complete requires k >= 1");
  return cartesian_product(integer_line(), oracle_of(complete_graph(k), "K" + std::to_string(k)));
}

bool FamilySpec::is_finite() const {
  return std::visit(Overloaded{
                        [](const family::IntegerLine&) { return false; },
                        [](const family::LineTimesComplete&) { return false; },
                        [](const family::CartesianProduct& p) {
                          return p.left->is_finite() && p.right->is_finite();
                        },
                        [](const auto&) { return true; },
                    },
                    kind);
}

FamilySpec product_spec(FamilySpec left, FamilySpec right) {
  return FamilySpec{family::CartesianProduct{std::make_shared<const FamilySpec>(std::move(left)),
                                             std::make_shared<const FamilySpec>(std::move(right))}};
}

Graph generate_graph(const FamilySpec& spec) {
  return std::visit(
      Overloaded{
          [](const family::Path& s) { return path_graph(s.n); },
          [](const family::Cycle& s) { return cycle_graph(s.n); },
          [](const family::Complete& s) { return complete_graph(s.n); },
          [](const family::CompleteBipartite& s) { return complete_bipartite_graph(s.m, s.n); },
          [](const family::Hypercube& s) { return hypercube_graph(s.d); },
          [](const family::Petersen&) { return petersen_graph(); },
          [](const family::Triangular& s) { return triangular_graph(s.n); },
          [](const family::Hamming2& s) { return hamming2_graph(s.q); },
          [](const family::Paley& s) { return paley_graph(s.q); },
          [](const family::CartesianProduct& s) {
            return cartesian_product(generate_graph(*s.left), generate_graph(*s.right));
          },
          [](const family::Beta1Counterexample&) { return beta1_counterexample(); },
          [](const auto&) -> Graph {
            throw std::invalid_argument("infinite family has no finite Graph; use an oracle");
          },
      },
      spec.kind);
}

NeighborOracle generate_oracle(const FamilySpec& spec) {
  if (spec.is_finite()) return oracle_of(generate_graph(spec), to_string(spec));
  return std::visit(Overloaded{
                        [](const family::IntegerLine&) { return integer_line(); },
                        [](const family::LineTimesComplete& s) { return line_times_complete(s.k); },
                        [](const family::CartesianProduct& s) {
                          return cartesian_product(generate_oracle(*s.left),
                                                   generate_oracle(*s.right));
                        },
                        [](const auto&) -> NeighborOracle {
                          throw std::logic_error("unreachable: finite spec");
                        },
                    },
                    spec.kind);
}

std::variant<Graph, NeighborOracle> generate(const FamilySpec& spec) {
  if (spec.is_finite()) return generate_graph(spec);
  return generate_oracle(spec);
}

namespace {

std::vector<int> parse_ints(std::string_view text, const std::string& context) {
  std::vector<int> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view token = text.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("bad integer parameter in \"" + context + "\"");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

FamilySpec parse_single(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  const std::vector<int> args =
      colon == std::string::npos ? std::vector<int>{} : parse_ints(std::string_view(text).substr(colon + 1), text);
  auto want = [&](std::size_t count) {
    if (args.size() != count) {
      throw std::invalid_argument("generator \"" + name + "\" takes " + std::to_string(count) +
                                  " parameter(s)");
    }
  };
  auto positive = [&](int v) {
    require(v >= 1, "generator parameters must be positive in \"" + text + "\"");
    return v;
  };

  if (name == "path") return want(1), FamilySpec{family::Path{positive(args[0])}};
  if (name == "cycle") return want(1), FamilySpec{family::Cycle{positive(args[0])}};
  if (name == "complete") return want(1), FamilySpec{family::Complete{positive(args[0])}};
  if (name == "kmn" || name == "complete_bipartite") {
    want(2);
    return FamilySpec{family::CompleteBipartite{positive(args[0]), positive(args[1])}};
  }
  if (name == "hypercube") return want(1), FamilySpec{family::Hypercube{positive(args[0])}};
  if (name == "petersen") return want(0), FamilySpec{family::Petersen{}};
  if (name == "triangular") return want(1), FamilySpec{family::Triangular{positive(args[0])}};
  if (name == "hamming2") return want(1), FamilySpec{family::Hamming2{positive(args[0])}};
  if (name == "paley") return want(1), FamilySpec{family::Paley{positive(args[0])}};
  if (name == "line" || name == "integer_line") return want(0), FamilySpec{family::IntegerLine{}};
  if (name == "zxk" || name == "line_times_complete") {
    return want(1), FamilySpec{family::LineTimesComplete{positive(args[0])}};
  }
  if (name == "beta1" || name == "beta1_counterexample") {
    return want(0), FamilySpec{family::Beta1Counterexample{}};
  }
  throw std::invalid_argument("unknown generator \"" + name + "\"");
}

}  // namespace

FamilySpec parse_family_spec(const std::string& text) {
  const auto star = text.find('*');
  if (star != std::string::npos) {
    return product_spec(parse_single(text.substr(0, star)), parse_family_spec(text.substr(star + 1)));
  }
  FamilySpec spec = parse_single(text);
  // validate eagerly so bad parameters surface at parse time
  if (spec.is_finite()) {
    (void)generate_graph(spec);
  }
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  auto n = [](int v) { return std::to_string(v); };
  return std::visit(
      Overloaded{
          [&](const family::Path& s) { return "path:" + n(s.n); },
          [&](const family::Cycle& s) { return "cycle:" + n(s.n); },
          [&](const family::Complete& s) { return "complete:" + n(s.n); },
          [&](const family::CompleteBipartite& s) { return "kmn:" + n(s.m) + "," + n(s.n); },
          [&](const family::Hypercube& s) { return "hypercube:" + n(s.d); },
          [&](const family::Petersen&) { return std::string("petersen"); },
          [&](const family::Triangular& s) { return "triangular:" + n(s.n); },
          [&](const family::Hamming2& s) { return "hamming2:" + n(s.q); },
          [&](const family::Paley& s) { return "paley:" + n(s.q); },
          [&](const family::CartesianProduct& s) {
            return to_string(*s.left) + "*" + to_string(*s.right);
          },
          [&](const family::IntegerLine&) { return std::string("line"); },
          [&](const family::LineTimesComplete& s) { return "zxk:" + n(s.k); },
          [&](const family::Beta1Counterexample&) { return std::string("beta1"); },
      },
      spec.kind);
}

}  // namespace curvlab
