#include "curvlab/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "curvlab/enumerate.hpp"
#include "curvlab/generators.hpp"
#include "curvlab/graph_io.hpp"
#include "curvlab/parallel.hpp"

namespace curvlab {

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::kT1_1: return "T1.1";
    case TheoremId::kT1_2: return "T1.2";
    case TheoremId::kT1_3: return "T1.3";
    case TheoremId::kT1_4: return "T1.4";
    case TheoremId::kC1_6: return "C1.6";
    case TheoremId::kT2_4: return "T2.4";
    case TheoremId::kT2_5: return "T2.5-crosscheck";
  }
  return "unknown";
}

std::optional<TheoremId> parse_theorem_id(const std::string& text) {
  for (TheoremId id : all_theorems()) {
    if (text == to_string(id)) return id;
  }
  if (text == "T2.5") return TheoremId::kT2_5;
  return std::nullopt;
}

std::vector<TheoremId> all_theorems() {
  return {TheoremId::kT1_1, TheoremId::kT1_2, TheoremId::kT1_3, TheoremId::kT1_4,
          TheoremId::kC1_6, TheoremId::kT2_4, TheoremId::kT2_5};
}

std::vector<TheoremId> parse_theorem_list(const std::string& text) {
  if (text == "all" || text.empty()) return all_theorems();
  std::vector<TheoremId> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string token = text.substr(start, comma - start);
    const auto id = parse_theorem_id(token);
    if (!id) throw std::invalid_argument("unknown theorem id '" + token + "'");
    if (std::find(out.begin(), out.end(), *id) == out.end()) out.push_back(*id);
    start = comma + 1;
  }
  return out;
}

// ---- analysis cache ------------------------------------------------------

bool GraphAnalysis::connected() {
  if (!connected_) connected_ = g_.order() > 0 && is_connected(g_);
  return *connected_;
}

const GraphCurvature& GraphAnalysis::curvature() {
  if (!curvature_) curvature_ = graph_curvature(g_);
  return *curvature_;
}

const EdgeConnectivity& GraphAnalysis::connectivity() {
  if (!connectivity_) connectivity_ = edge_connectivity(g_);
  return *connectivity_;
}

const Matching& GraphAnalysis::matching() {
  if (!matching_) matching_ = maximum_matching(g_);
  return *matching_;
}

const RegularityClass& GraphAnalysis::regularity() {
  if (!regularity_) regularity_ = detect_regularity(g_);
  return *regularity_;
}

const MinCutClassification& GraphAnalysis::cuts() {
  if (!cuts_) cuts_ = classify_min_cuts(g_);
  return *cuts_;
}

double GraphAnalysis::formula_deviation() {
  if (deviation_) return *deviation_;
  const RegularityClass& rc = regularity();
  if (!rc.is_amply_regular()) throw std::invalid_argument("formula needs an amply regular graph");
  const auto& per_vertex = curvature().per_vertex;
  double worst = 0.0;
  for (int x = 0; x < g_.order(); ++x) {
    const double formula = arg_curvature_formula(rc.d, rc.alpha, rc.beta, local_graph_spectrum(g_, x));
    worst = std::max(worst, std::abs(formula - per_vertex[x]));
  }
  deviation_ = worst;
  return worst;
}

bool is_quadrangle(const Graph& g) {
  return g.order() == 4 && g.size() == 4 && is_regular(g) && is_connected(g);
}

// ---- checkers ------------------------------------------------------------

namespace {

bool nonnegative(double k) { return k >= -kNonnegativeTolerance; }

void require_perfect_matching(GraphAnalysis& a, TheoremVerdict& v) {
  v.evidence.matching = a.matching();
  v.holds = a.matching().is_perfect;
  if (!v.holds) {
    v.evidence.note = "maximum matching has " + std::to_string(a.matching().edges.size()) + " edges";
  }
}

void check_t1_1(GraphAnalysis& a, TheoremVerdict& v) {
  const RegularityClass& rc = a.regularity();
  v.evidence.regularity = rc;
  if (!rc.is_regular()) return void(v.evidence.note = "not regular");
  if (a.graph().order() % 2 != 0) return void(v.evidence.note = "odd order");
  v.evidence.curvature = a.curvature().curvature;
  if (!nonnegative(a.curvature().curvature)) return void(v.evidence.note = "negative curvature");
  v.applicable = true;
  require_perfect_matching(a, v);
}

void check_t1_2(GraphAnalysis& a, TheoremVerdict& v) {
  const RegularityClass& rc = a.regularity();
  v.evidence.regularity = rc;
  if (!rc.is_regular()) return void(v.evidence.note = "not regular");
  if (a.graph().order() % 2 != 0) return void(v.evidence.note = "odd order");
  v.evidence.lambda = a.connectivity().lambda;
  v.evidence.cut = a.connectivity().cert;
  if (a.connectivity().lambda < rc.d - 1) return void(v.evidence.note = "edge-connectivity below d-1");
  v.applicable = true;
  require_perfect_matching(a, v);
}

void check_t1_3(GraphAnalysis& a, TheoremVerdict& v) {
  const double k = a.curvature().curvature;
  v.evidence.curvature = k;
  v.evidence.min_degree = min_degree(a.graph());
  v.evidence.lambda = a.connectivity().lambda;
  v.evidence.cut = a.connectivity().cert;
  if (!nonnegative(k)) return void(v.evidence.note = "negative curvature");
  v.applicable = true;
  v.holds = a.connectivity().lambda >= *v.evidence.min_degree - 1;
}

bool amply_beta_at_least_two(GraphAnalysis& a, TheoremVerdict& v) {
  const RegularityClass& rc = a.regularity();
  v.evidence.regularity = rc;
  if (!rc.is_amply_regular()) {
    v.evidence.note = "not amply regular";
    return false;
  }
  if (rc.beta < 2) {
    v.evidence.note = "beta < 2";
    return false;
  }
  return true;
}

void check_t1_4(GraphAnalysis& a, TheoremVerdict& v) {
  if (!amply_beta_at_least_two(a, v)) return;
  v.applicable = true;
  const int d = a.regularity().d;
  v.evidence.lambda = a.connectivity().lambda;
  v.evidence.cut = a.connectivity().cert;
  if (a.connectivity().lambda != d) {
    v.holds = false;
    v.evidence.note = "edge-connectivity below degree";
    return;
  }
  const MinCutClassification& cuts = a.cuts();
  v.evidence.stars_only = cuts.stars_only;
  if (!cuts.stars_only) v.evidence.cut = cuts.witness;
  if (is_quadrangle(a.graph())) {
    v.evidence.note = "4-cycle";
    return;
  }
  v.holds = cuts.stars_only;
  if (!cuts.stars_only) v.evidence.note = "non-star minimum cut";
}

void check_c1_6(GraphAnalysis& a, TheoremVerdict& v) {
  if (!amply_beta_at_least_two(a, v)) return;
  if (a.graph().order() % 2 != 0) return void(v.evidence.note = "odd order");
  v.applicable = true;
  require_perfect_matching(a, v);
}

void check_t2_4(GraphAnalysis& a, TheoremVerdict& v) {
  v.evidence.regularity = a.regularity();
  const BcnVerdict bcn = bcn_check(a.graph());
  v.applicable = bcn.applicable;
  v.holds = bcn.holds;
  v.evidence.diamond = bcn.diamond;
  v.evidence.note = bcn.reason;
}

void check_t2_5(GraphAnalysis& a, TheoremVerdict& v) {
  v.evidence.regularity = a.regularity();
  if (!a.regularity().is_amply_regular()) return void(v.evidence.note = "not amply regular");
  v.applicable = true;
  v.evidence.curvature = a.curvature().curvature;
  const double deviation = a.formula_deviation();
  v.evidence.formula_deviation = deviation;
  v.holds = deviation <= kFormulaTolerance;
  if (!v.holds) v.evidence.note = "closed form disagrees with eigenvalue curvature";
}

}  // namespace

TheoremVerdict check_theorem(GraphAnalysis& analysis, TheoremId id, const std::string& graph_id) {
  TheoremVerdict v;
  v.id = id;
  v.graph_id = graph_id;
  v.graph6 = write_graph6(analysis.graph());
  if (!analysis.connected()) {
    v.evidence.note = analysis.graph().order() == 0 ? "empty graph" : "disconnected";
    return v;
  }
  switch (id) {
    case TheoremId::kT1_1: check_t1_1(analysis, v); break;
    case TheoremId::kT1_2: check_t1_2(analysis, v); break;
    case TheoremId::kT1_3: check_t1_3(analysis, v); break;
    case TheoremId::kT1_4: check_t1_4(analysis, v); break;
    case TheoremId::kC1_6: check_c1_6(analysis, v); break;
    case TheoremId::kT2_4: check_t2_4(analysis, v); break;
    case TheoremId::kT2_5: check_t2_5(analysis, v); break;
  }
  if (!v.applicable) v.holds = true;
  return v;
}

TheoremVerdict check_theorem(const Graph& g, TheoremId id, const std::string& graph_id) {
  GraphAnalysis analysis(g);
  return check_theorem(analysis, id, graph_id);
}

std::vector<TheoremVerdict> check_theorems(const Graph& g, const std::vector<TheoremId>& ids,
                                           const std::string& graph_id) {
  GraphAnalysis analysis(g);
  std::vector<TheoremVerdict> out;
  out.reserve(ids.size());
  for (TheoremId id : ids) out.push_back(check_theorem(analysis, id, graph_id));
  return out;
}

bool verify_evidence(const Graph& g, const TheoremVerdict& verdict) {
  if (verdict.graph6 != write_graph6(g)) return false;
  const Evidence& e = verdict.evidence;
  if (e.cut && !verify_cut(g, *e.cut)) return false;
  if (e.cut && e.lambda && e.cut->value != *e.lambda) return false;
  if (e.cut && e.stars_only && *e.stars_only != is_star_cut(g, *e.cut)) return false;
  if (e.matching && !verify_matching(g, *e.matching)) return false;
  if (e.diamond) {
    const auto [c, d, p, q] = *e.diamond;
    if (!g.adjacent(c, d) || !g.adjacent(c, p) || !g.adjacent(c, q) || !g.adjacent(d, p) ||
        !g.adjacent(d, q) || p == q || g.adjacent(p, q)) {
      return false;
    }
  }
  if (e.regularity) {
    const RegularityClass rc = detect_regularity(g);
    if (rc.kind != e.regularity->kind || rc.d != e.regularity->d || rc.alpha != e.regularity->alpha ||
        rc.beta != e.regularity->beta) {
      return false;
    }
  }
  if (e.min_degree && *e.min_degree != min_degree(g)) return false;
  return true;
}

// ---- corpora -------------------------------------------------------------

CorpusSource parse_corpus_source(const std::string& text) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    const int value = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad number in corpus source '" + text + "'");
    return value;
  };
  try {
    if (text.rfind("exhaustive:", 0) == 0) {
      const int n = number(text.substr(11));
      if (n < 1 || n > kCanonicalMaxOrder) {
        throw std::invalid_argument("exhaustive order must be in 1.." + std::to_string(kCanonicalMaxOrder));
      }
      return corpus::Exhaustive{n};
    }
    if (text.rfind("gen:", 0) == 0) {
      corpus::Generators gens;
      std::size_t start = 4;
      while (start <= text.size()) {
        const std::size_t semi = std::min(text.find(';', start), text.size());
        const std::string spec = text.substr(start, semi - start);
        if (!spec.empty()) gens.specs.push_back(spec);
        start = semi + 1;
      }
      if (gens.specs.empty()) throw std::invalid_argument("empty generator list");
      return gens;
    }
    if (text.rfind("random:", 0) == 0) {
      const std::string rest = text.substr(7);
      const std::size_t a = rest.find(':');
      const std::size_t b = a == std::string::npos ? a : rest.find(':', a + 1);
      if (b == std::string::npos) throw std::invalid_argument("expected random:COUNT:N:P");
      const int count = number(rest.substr(0, a));
      const int n = number(rest.substr(a + 1, b - a - 1));
      const double p = std::stod(rest.substr(b + 1));
      if (count < 0 || n < 1 || !(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("random corpus needs COUNT >= 0, N >= 1, 0 <= P <= 1");
      }
      return corpus::Random{count, n, p};
    }
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("number out of range in corpus source '" + text + "'");
  }
  return corpus::GraphFile{text};
}

namespace {

double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

std::vector<CorpusEntry> load_corpus(const CorpusSource& source, std::uint64_t seed) {
  std::vector<CorpusEntry> out;
  if (const auto* file = std::get_if<corpus::GraphFile>(&source)) {
    auto graphs = read_graph_file(file->path);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      out.push_back({file->path + "#" + std::to_string(i + 1), std::move(graphs[i])});
    }
  } else if (const auto* gens = std::get_if<corpus::Generators>(&source)) {
    for (const std::string& text : gens->specs) {
      const FamilySpec spec = parse_family_spec(text);
      if (!spec.is_finite()) throw std::invalid_argument("'" + text + "' is an infinite family");
      out.push_back({to_string(spec), generate_graph(spec)});
    }
  } else if (const auto* ex = std::get_if<corpus::Exhaustive>(&source)) {
    for (Graph& g : connected_graphs_up_to(ex->max_n)) {
      std::string id = write_graph6(g);
      out.push_back({std::move(id), std::move(g)});
    }
  } else if (const auto* rnd = std::get_if<corpus::Random>(&source)) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < rnd->count; ++i) {
      std::vector<Edge> edges;
      for (int u = 0; u < rnd->n; ++u) {
        for (int v = u + 1; v < rnd->n; ++v) {
          if (unit_draw(rng) < rnd->p) edges.push_back({u, v});
        }
      }
      out.push_back({"random#" + std::to_string(i + 1), from_edge_list(rnd->n, edges)});
    }
  }
  return out;
}

namespace {

std::vector<CorpusEntry> from_specs(const std::vector<std::string>& specs) {
  return load_corpus(corpus::Generators{specs});
}

}  // namespace

std::vector<CorpusEntry> amply_regular_corpus() {
  return from_specs({"cycle:4", "kmn:3,3", "kmn:4,4", "hypercube:2", "hypercube:3", "hypercube:4",
                     "hypercube:5", "hypercube:6", "triangular:5", "triangular:6", "triangular:7",
                     "hamming2:3", "hamming2:4", "hamming2:5", "paley:13", "petersen"});
}

std::vector<CorpusEntry> standard_corpus() {
  auto out = amply_regular_corpus();
  auto extras = from_specs({"path:1", "path:2", "path:5", "cycle:5", "cycle:6", "cycle:7", "complete:4",
                            "complete:5", "kmn:1,4", "kmn:2,3", "cycle:3*path:2", "cycle:5*path:2",
                            "petersen*path:2", "beta1"});
  out.insert(out.end(), std::make_move_iterator(extras.begin()), std::make_move_iterator(extras.end()));
  return out;
}

// ---- scans ---------------------------------------------------------------

ScanResult scan(const std::vector<CorpusEntry>& entries, const std::vector<TheoremId>& ids,
                std::size_t threads) {
  if (threads == 0) threads = default_thread_count();
  auto per_graph = parallel_map(entries.size(), threads, [&](std::size_t i) {
    return check_theorems(entries[i].graph, ids, entries[i].id);
  });
  ScanResult result;
  for (TheoremId id : ids) result.summary[id] = Tally{};
  for (auto& verdicts : per_graph) {
    for (auto& v : verdicts) {
      Tally& t = result.summary[v.id];
      ++t.checked;
      if (v.applicable) {
        ++t.applicable;
        if (v.holds) {
          ++t.holds;
        } else {
          ++t.violations;
          ++result.violations;
        }
      }
      result.verdicts.push_back(std::move(v));
    }
  }
  return result;
}

ConjectureReport conjecture_scan(int max_n, std::size_t threads) {
  if (max_n < 2 || max_n > kConjectureMaxOrder) {
    throw std::invalid_argument("conjecture scan needs 2 <= max_n <= " + std::to_string(kConjectureMaxOrder));
  }
  if (threads == 0) threads = default_thread_count();
  ConjectureReport report;
  report.max_n = max_n;
  struct Row {
    bool nonnegative = false;
    int delta = 0;
    int lambda = 0;
  };
  for (int n = 2; n <= max_n; ++n) {
    const auto graphs = connected_graphs(n);
    const auto rows = parallel_map(graphs.size(), threads, [&](std::size_t i) {
      Row row;
      row.nonnegative = nonnegative(graph_curvature(graphs[i]).curvature);
      if (row.nonnegative) {
        row.delta = min_degree(graphs[i]);
        row.lambda = edge_connectivity(graphs[i]).lambda;
      }
      return row;
    });
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      ++report.graphs_considered;
      if (!rows[i].nonnegative) continue;
      ++report.nonnegative;
      ++report.table[{rows[i].delta, rows[i].lambda}];
      if (rows[i].lambda < rows[i].delta) report.below_min_degree.push_back(write_graph6(graphs[i]));
    }
  }
  return report;
}

std::vector<Beta1Candidate> beta1_search(int max_n) {
  if (max_n < 1 || max_n > kCanonicalMaxOrder) {
    throw std::invalid_argument("beta1 search order must be in 1.." + std::to_string(kCanonicalMaxOrder));
  }
  std::vector<CorpusEntry> pool = from_specs({"beta1", "petersen", "cycle:5", "cycle:6", "cycle:7"});
  auto named = standard_corpus();
  for (auto& e : named) {
    const bool present = std::any_of(pool.begin(), pool.end(), [&](const auto& p) { return p.id == e.id; });
    if (!present) pool.push_back(std::move(e));
  }
  for (Graph& g : connected_graphs_up_to(max_n)) pool.push_back({write_graph6(g), std::move(g)});

  std::vector<Beta1Candidate> out;
  std::set<std::pair<int, std::uint64_t>> seen;  // isomorphism classes already reported
  for (const CorpusEntry& entry : pool) {
    if (entry.graph.order() <= kCanonicalMaxOrder &&
        !seen.insert({entry.graph.order(), canonical_code(entry.graph)}).second) {
      continue;
    }
    RegularityClass rc = detect_regularity(entry.graph);
    if (!rc.is_amply_regular() || rc.beta != 1) continue;
    Beta1Candidate c;
    c.id = entry.id;
    c.graph6 = write_graph6(entry.graph);
    c.lambda = edge_connectivity(entry.graph).lambda;
    c.listed = *c.lambda < rc.d;
    c.status = c.listed ? "edge-connectivity below degree" : "edge-connectivity equals degree";
    c.regularity = std::move(rc);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace curvlab
