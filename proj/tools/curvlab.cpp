// curvlab command line front end. Every subcommand prints JSON on stdout
// (check also speaks csv and markdown). Exit codes: 0 clean, 2 theorem
// violation, 3 input error.

#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "curvlab/curvature.hpp"
#include "curvlab/cuts.hpp"
#include "curvlab/generators.hpp"
#include "curvlab/graph_io.hpp"
#include "curvlab/matching.hpp"
#include "curvlab/parallel.hpp"
#include "curvlab/regularity.hpp"
#include "curvlab/report.hpp"
#include "curvlab/theorems.hpp"

namespace {

using namespace curvlab;
using nlohmann::ordered_json;

constexpr int kExitViolation = 2;
constexpr int kExitInput = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Resolved = std::variant<Graph, NeighborOracle>;

Resolved resolve(const std::string& spec) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) {
    auto graphs = read_graph_file(spec);
    if (graphs.size() != 1) {
      throw InputError(spec + ": expected exactly one graph, found " + std::to_string(graphs.size()));
    }
    return std::move(graphs.front());
  }
  return generate(parse_family_spec(spec));
}

Graph resolve_finite(const std::string& spec) {
  Resolved r = resolve(spec);
  if (auto* g = std::get_if<Graph>(&r)) return std::move(*g);
  throw InputError("'" + spec + "' is infinite; this command needs a finite graph");
}

double parse_dimension(const std::string& text) {
  if (text == "inf" || text == "infinity") return kInfiniteDimension;
  std::size_t used = 0;
  double n = 0;
  try {
    n = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !(n > 0)) throw InputError("dimension must be positive or 'inf'");
  return n;
}

VertexId parse_vertex(const std::string& text) {
  VertexId id;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string part = text.substr(start, comma - start);
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (part.empty() || used != part.size()) throw InputError("bad vertex '" + text + "'");
    id.coords.push_back(value);
    start = comma + 1;
  }
  return id;
}

ordered_json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

ordered_json report_json(const CurvatureReport& r) {
  ordered_json witness = ordered_json::array();
  for (const auto& [v, value] : r.witness.values()) {
    ordered_json w;
    w["vertex"] = v.coords;
    w["value"] = value;
    witness.push_back(std::move(w));
  }
  ordered_json j;
  j["vertex"] = r.vertex.coords;
  j["dimension"] = number(r.dimension);
  j["curvature"] = number(r.curvature);
  j["witness"] = std::move(witness);
  return j;
}

std::size_t thread_count(int requested) {
  return requested > 0 ? static_cast<std::size_t>(requested) : default_thread_count();
}

int cmd_curvature(const std::string& spec, const std::optional<std::string>& vertex,
                  const std::string& dimension_text, int threads) {
  const double dimension = parse_dimension(dimension_text);
  Resolved r = resolve(spec);
  ordered_json j;
  j["graph"] = spec;
  if (auto* g = std::get_if<Graph>(&r)) {
    if (vertex) {
      const VertexId id = parse_vertex(*vertex);
      if (id.coords.size() != 1 || id.coords[0] < 0 || id.coords[0] >= g->order()) {
        throw InputError("vertex " + *vertex + " is not in the graph");
      }
      j["report"] = report_json(bakry_emery_curvature(*g, static_cast<int>(id.coords[0]), dimension));
    } else {
      const GraphCurvature gc = graph_curvature(*g, dimension, thread_count(threads));
      j["dimension"] = number(dimension);
      j["curvature"] = number(gc.curvature);
      ordered_json per = ordered_json::array();
      for (double k : gc.per_vertex) per.push_back(number(k));
      j["per_vertex"] = std::move(per);
    }
  } else {
    const NeighborOracle& o = std::get<NeighborOracle>(r);
    VertexId id = vertex ? parse_vertex(*vertex) : VertexId(std::vector<std::int64_t>(o.arity(), 0));
    if (id.coords.size() != o.arity()) throw InputError("vertex needs " + std::to_string(o.arity()) + " coordinates");
    j["report"] = report_json(bakry_emery_curvature(o, id, dimension));
  }
  std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_connectivity(const std::string& spec, bool classify) {
  const Graph g = resolve_finite(spec);
  const EdgeConnectivity ec = edge_connectivity(g);
  ordered_json j;
  j["graph"] = spec;
  j["n"] = g.order();
  j["min_degree"] = min_degree(g);
  j["lambda"] = ec.lambda;
  j["cut"] = ec.cert ? to_json(*ec.cert) : ordered_json(nullptr);
  if (classify) {
    if (g.order() < 2 || !is_connected(g)) throw InputError("cut classification needs a connected graph with n >= 2");
    const MinCutClassification c = classify_min_cuts(g);
    j["stars_only"] = c.stars_only;
    j["non_star_cut"] = c.witness ? to_json(*c.witness) : ordered_json(nullptr);
  }
  std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_matching(const std::string& spec) {
  const Graph g = resolve_finite(spec);
  const Matching m = maximum_matching(g);
  ordered_json edges = ordered_json::array();
  for (const Edge& e : m.edges) edges.push_back({e.u, e.v});
  ordered_json j;
  j["graph"] = spec;
  j["n"] = g.order();
  j["size"] = m.edges.size();
  j["perfect"] = m.is_perfect;
  j["edges"] = std::move(edges);
  if (!m.is_perfect && g.order() <= kTutteScanMaxOrder) {
    const auto s = tutte_violation(g);
    j["tutte_set"] = s ? ordered_json(*s) : ordered_json(nullptr);
  }
  std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_regularity(const std::string& spec) {
  const Graph g = resolve_finite(spec);
  ordered_json j;
  j["graph"] = spec;
  j["regularity"] = to_json(detect_regularity(g));
  std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_check(const std::string& source, const std::string& theorems, const std::string& format,
              std::uint64_t seed, int threads) {
  const auto ids = parse_theorem_list(theorems);
  const ReportFormat fmt = parse_report_format(format);
  const auto entries = load_corpus(parse_corpus_source(source), seed);
  const ScanResult result = scan(entries, ids, thread_count(threads));
  if (fmt == ReportFormat::kJson) {
    std::cout << to_json(result).dump(2) << '\n';
  } else {
    emit_report(result.verdicts, fmt, std::cout);
  }
  return result.violations > 0 ? kExitViolation : 0;
}

int cmd_conjecture(int max_n, int threads) {
  const ConjectureReport report = conjecture_scan(max_n, thread_count(threads));
  std::cout << to_json(report).dump(2) << '\n';
  return 0;
}

int cmd_beta1(int max_n) {
  std::cout << to_json(beta1_search(max_n)).dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curvlab: Bakry-Emery curvature, edge-connectivity and matchings"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (default: CURVLAB_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);

  std::string spec;
  std::optional<std::string> vertex;
  std::string dimension = "inf";
  auto* curvature = app.add_subcommand("curvature", "curvature of a graph or at one vertex");
  curvature->add_option("graph", spec, "graph file or generator spec")->required();
  curvature->add_option("--vertex", vertex, "vertex index, or comma separated coordinates for oracles");
  curvature->add_option("--dimension", dimension, "dimension N (default inf)");

  bool classify = false;
  auto* connectivity = app.add_subcommand("connectivity", "edge-connectivity with a minimum cut");
  connectivity->add_option("graph", spec, "graph file or generator spec")->required();
  connectivity->add_flag("--classify-cuts", classify, "decide whether all minimum cuts are stars");

  auto* matching = app.add_subcommand("matching", "maximum matching");
  matching->add_option("graph", spec, "graph file or generator spec")->required();

  auto* regularity = app.add_subcommand("regularity", "regular / edge-regular / amply regular");
  regularity->add_option("graph", spec, "graph file or generator spec")->required();

  std::string source;
  std::string theorems = "all";
  std::string format = "json";
  std::uint64_t seed = 0;
  auto* check = app.add_subcommand("check", "run theorem checkers over a corpus");
  check->add_option("--source", source, "file, gen:SPEC;SPEC, exhaustive:N or random:COUNT:N:P")->required();
  check->add_option("--theorems", theorems, "comma separated ids or 'all'");
  check->add_option("--format", format, "json, csv or markdown");
  check->add_option("--seed", seed, "seed for random sources");

  int max_n = 8;
  auto* conjecture = app.add_subcommand("conjecture", "tabulate (min degree, lambda) for K >= 0");
  conjecture->add_option("--max-n", max_n, "largest order, at most 9");

  int beta1_max_n = 8;
  auto* beta1 = app.add_subcommand("beta1-search", "amply regular beta = 1 graphs with lambda < d");
  beta1->add_option("--max-n", beta1_max_n, "largest order for the exhaustive part");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*curvature) return cmd_curvature(spec, vertex, dimension, threads);
    if (*connectivity) return cmd_connectivity(spec, classify);
    if (*matching) return cmd_matching(spec);
    if (*regularity) return cmd_regularity(spec);
    if (*check) return cmd_check(source, theorems, format, seed, threads);
    if (*conjecture) return cmd_conjecture(max_n, threads);
    if (*beta1) return cmd_beta1(beta1_max_n);
  } catch (const FormatError& e) {
    std::cerr << "curvlab: " << e.what() << '\n';
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "curvlab: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "curvlab: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "curvlab: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "curvlab: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
