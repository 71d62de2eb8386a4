#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "curvlab/curvature.hpp"
#include "curvlab/cuts.hpp"
#include "curvlab/graph.hpp"
#include "curvlab/matching.hpp"
#include "curvlab/regularity.hpp"

namespace curvlab {

// Checked statements, for a finite connected graph G:
//   T1.1  regular, even order, K_BE(G) >= 0          => perfect matching
//   T1.2  d-regular, even order, (d-1)-edge-connected => perfect matching
//   T1.3  K_BE(G) >= 0                              => λ >= δ - 1
//   T1.4  amply regular (d, α, β), β >= 2           => λ = d, and unless G
//         is the 4-cycle every minimum cut is a vertex star
//   C1.6  amply regular with β >= 2, even order     => perfect matching
//   T2.4  amply regular (d, α, 2), d < α(α+3)/2     => no induced K_{2,1,1}
//   T2.5-crosscheck  amply regular => closed-form curvature equals the
//         eigenvalue curvature at every vertex
enum class TheoremId { kT1_1, kT1_2, kT1_3, kT1_4, kC1_6, kT2_4, kT2_5 };

std::string to_string(TheoremId id);
/// Accepts "T1.1", ..., "T2.5-crosscheck" (also "T2.5").
std::optional<TheoremId> parse_theorem_id(const std::string& text);
/// Comma separated ids, or "all". Throws std::invalid_argument.
std::vector<TheoremId> parse_theorem_list(const std::string& text);
std::vector<TheoremId> all_theorems();

inline constexpr double kFormulaTolerance = 1e-8;

struct Evidence {
  std::optional<double> curvature;  // K_BE(G)
  std::optional<int> min_degree;
  std::optional<int> lambda;
  std::optional<CutCertificate> cut;
  std::optional<Matching> matching;
  std::optional<RegularityClass> regularity;
  std::optional<bool> stars_only;
  std::optional<std::array<int, 4>> diamond;
  std::optional<double> formula_deviation;
  std::string note;
};

struct TheoremVerdict {
  TheoremId id = TheoremId::kT1_3;
  std::string graph_id;
  std::string graph6;
  bool applicable = false;
  bool holds = true;  // meaningful only when applicable
  Evidence evidence;

  bool violation() const { return applicable && !holds; }
};

/// Lazily computed, cached analyses of one graph.
class GraphAnalysis {
 public:
  explicit GraphAnalysis(const Graph& g) : g_(g) {}

  const Graph& graph() const { return g_; }
  bool connected();
  const GraphCurvature& curvature();
  const EdgeConnectivity& connectivity();
  const Matching& matching();
  const RegularityClass& regularity();
  const MinCutClassification& cuts();
  /// max_x |closed form - eigenvalue curvature|; requires amply regular.
  double formula_deviation();

 private:
  const Graph& g_;
  std::optional<bool> connected_;
  std::optional<GraphCurvature> curvature_;
  std::optional<EdgeConnectivity> connectivity_;
  std::optional<Matching> matching_;
  std::optional<RegularityClass> regularity_;
  std::optional<MinCutClassification> cuts_;
  std::optional<double> deviation_;
};

bool is_quadrangle(const Graph& g);

TheoremVerdict check_theorem(GraphAnalysis& analysis, TheoremId id, const std::string& graph_id = "");
TheoremVerdict check_theorem(const Graph& g, TheoremId id, const std::string& graph_id = "");
std::vector<TheoremVerdict> check_theorems(const Graph& g, const std::vector<TheoremId>& ids,
                                           const std::string& graph_id = "");

/// Re-validates every certificate carried by the verdict against g.
bool verify_evidence(const Graph& g, const TheoremVerdict& verdict);

// ---- corpora -------------------------------------------------------------

struct CorpusEntry {
  std::string id;
  Graph graph;
};

namespace corpus {
struct GraphFile { std::string path; };
struct Generators { std::vector<std::string> specs; };
struct Exhaustive { int max_n; };
struct Random { int count; int n; double p; };
}  // namespace corpus

using CorpusSource =
    std::variant<corpus::GraphFile, corpus::Generators, corpus::Exhaustive, corpus::Random>;

/// "exhaustive:N", "gen:SPEC;SPEC;...", "random:COUNT:N:P", or a file path.
CorpusSource parse_corpus_source(const std::string& text);

/// Materialises a source. Random graphs draw from std::mt19937_64(seed).
/// Throws FormatError for unreadable or malformed files.
std::vector<CorpusEntry> load_corpus(const CorpusSource& source, std::uint64_t seed = 0);

/// C4, K3,3, K4,4, Q2..Q6, T(5..7), K3□K3..K5□K5, Paley(13), Petersen.
std::vector<CorpusEntry> amply_regular_corpus();
/// The amply regular corpus plus paths, cycles, complete graphs, stars,
/// products and the β = 1 splice graph.
std::vector<CorpusEntry> standard_corpus();

// ---- scans ---------------------------------------------------------------

struct Tally {
  int checked = 0;
  int applicable = 0;
  int holds = 0;
  int violations = 0;
};

struct ScanResult {
  std::vector<TheoremVerdict> verdicts;  // corpus order, then id order
  std::map<TheoremId, Tally> summary;
  int violations = 0;
};

/// Checks every id on every entry; graph-level parallelism with an ordered
/// merge, so the result does not depend on `threads` (0 = default).
ScanResult scan(const std::vector<CorpusEntry>& entries, const std::vector<TheoremId>& ids,
                std::size_t threads = 1);

struct ConjectureReport {
  int max_n = 0;
  int graphs_considered = 0;            // connected, 2 <= n <= max_n
  int nonnegative = 0;                  // of those, K_BE >= -tol
  std::map<std::pair<int, int>, int> table;  // (δ, λ) -> count, nonnegative graphs
  std::vector<std::string> below_min_degree;  // graph6 of graphs with λ < δ
};

inline constexpr int kConjectureMaxOrder = 9;

/// Tabulates (δ, λ) over connected graphs with non-negative curvature on
/// 2..max_n vertices. Requires max_n <= 9.
ConjectureReport conjecture_scan(int max_n, std::size_t threads = 1);

struct Beta1Candidate {
  std::string id;
  std::string graph6;
  RegularityClass regularity;
  std::optional<int> lambda;
  bool listed = false;  // amply regular, β = 1, λ < d
  std::string status;
};

/// Checks the Petersen splice graph, the named corpus graphs and all
/// connected graphs up to max_n for amply regular β = 1 graphs whose
/// edge-connectivity is below their degree.
std::vector<Beta1Candidate> beta1_search(int max_n = 8);

}  // namespace curvlab
