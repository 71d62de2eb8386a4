#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "curvlab/graph.hpp"

namespace curvlab {

/// Malformed graph text. `line` is 1-based, 0 when not tied to a file line.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Largest order the graph6 size field can express.
inline constexpr std::uint64_t kGraph6MaxOrder = 68719476735ULL;

/// Decodes one graph6 line. A leading ">>graph6<<" header and trailing
/// newline / carriage return are accepted.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding, without header or newline.
std::string write_graph6(const Graph& g);

/// Decodes one sparse6 line (leading ':' required, ">>sparse6<<" optional).
Graph parse_sparse6(std::string_view text);
std::string write_sparse6(const Graph& g);

/// Edge-list text: "n m" followed by m lines "u v".
Graph parse_edge_list(std::istream& in);
std::string write_edge_list(const Graph& g);

/// Reads every graph in a stream. Formats are detected per file: edge-list
/// when the first significant line starts with a digit, otherwise one
/// graph6 or sparse6 graph per line. Blank lines are skipped; errors carry
/// the offending line number.
std::vector<Graph> read_graphs(std::istream& in);
std::vector<Graph> read_graph_file(const std::string& path);

}  // namespace curvlab
