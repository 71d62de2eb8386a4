#include "curvlab/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace curvlab {
namespace {

constexpr char kBias = 63;

std::string_view strip_line(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  return text;
}

std::string_view strip_header(std::string_view text, std::string_view header) {
  if (text.starts_with(header)) text.remove_prefix(header.size());
  return text;
}

void check_printable(std::string_view text) {
  for (char c : text) {
    if (c < kBias || c > 126) {
      throw FormatError("byte " + std::to_string(static_cast<unsigned char>(c)) +
                        " outside the printable range 63..126");
    }
  }
}

// Decodes the N(n) size field and advances `text` past it.
std::uint64_t read_order(std::string_view& text) {
  if (text.empty()) throw FormatError("missing length prefix");
  auto take = [&](std::size_t count) {
    if (text.size() < count) throw FormatError("truncated length prefix");
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < count; ++i) value = (value << 6) | (text[i] - kBias);
    text.remove_prefix(count);
    return value;
  };
  if (text[0] != '~') return take(1);
  text.remove_prefix(1);
  if (!text.empty() && text[0] == '~') {
    text.remove_prefix(1);
    const std::uint64_t n = take(6);
    if (n <= 258047) throw FormatError("non-canonical length prefix");
    return n;
  }
  const std::uint64_t n = take(3);
  if (n <= 62) throw FormatError("non-canonical length prefix");
  return n;
}

void write_order(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
}

// Big-endian 6-bit packing helper used by both formats.
class BitWriter {
 public:
  void push(bool bit) {
    current_ = static_cast<char>((current_ << 1) | (bit ? 1 : 0));
    if (++filled_ == 6) flush();
  }
  void push_value(std::uint64_t value, int width) {
    for (int b = width - 1; b >= 0; --b) push(((value >> b) & 1U) != 0);
  }
  int pending() const { return filled_; }
  // Pads the final group with `fill` bits.
  void finish(bool fill) {
    while (filled_ != 0) push(fill);
  }
  std::string take() { return std::move(out_); }

 private:
  void flush() {
    out_.push_back(static_cast<char>(current_ + kBias));
    current_ = 0;
    filled_ = 0;
  }
  std::string out_;
  char current_ = 0;
  int filled_ = 0;
};

int bits_for(std::uint64_t n) {
  // number of bits needed to write n - 1
  int k = 0;
  while ((std::uint64_t{1} << k) < n) ++k;
  return k;
}

int checked_order(std::uint64_t n) {
  if (n > 1'000'000) throw FormatError("graph order " + std::to_string(n) + " exceeds the supported cap");
  return static_cast<int>(n);
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = strip_header(strip_line(text), ">>graph6<<");
  check_printable(text);
  const int n = checked_order(read_order(text));
  const std::uint64_t bits = static_cast<std::uint64_t>(n) * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t groups = (bits + 5) / 6;
  if (text.size() != groups) {
    throw FormatError("expected " + std::to_string(groups) + " data bytes for n=" +
                      std::to_string(n) + ", found " + std::to_string(text.size()));
  }
  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[k / 6] - kBias;
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  if (groups > 0) {
    const int pad = static_cast<int>(groups * 6 - bits);
    const int last = text.back() - kBias;
    if ((last & ((1 << pad) - 1)) != 0) throw FormatError("nonzero padding bits");
  }
  return from_edge_list(n, edges);
}

std::string write_graph6(const Graph& g) {
  std::string out;
  write_order(out, static_cast<std::uint64_t>(g.order()));
  BitWriter bits;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) bits.push(g.adjacent(i, j));
  }
  bits.finish(false);
  return out + bits.take();
}

Graph parse_sparse6(std::string_view text) {
  text = strip_header(strip_line(text), ">>sparse6<<");
  if (text.empty() || text[0] != ':') throw FormatError("sparse6 line must start with ':'");
  text.remove_prefix(1);
  check_printable(text);
  const int n = checked_order(read_order(text));
  const int k = bits_for(static_cast<std::uint64_t>(n));
  const std::uint64_t total = text.size() * 6;
  auto bit_at = [&](std::uint64_t pos) {
    return ((text[pos / 6] - kBias) >> (5 - pos % 6)) & 1;
  };
  std::vector<Edge> edges;
  std::uint64_t pos = 0;
  std::int64_t v = 0;
  while (pos + 1 + k <= total) {
    const int b = bit_at(pos++);
    std::int64_t x = 0;
    for (int i = 0; i < k; ++i) x = (x << 1) | bit_at(pos++);
    if (b) ++v;
    if (v >= n) break;
    if (x > v) {
      v = x;
    } else if (x < n) {
      // loops are legal in sparse6 but not in a simple graph
      if (x == v) throw FormatError("sparse6 self-loop at vertex " + std::to_string(x));
      edges.push_back({static_cast<int>(x), static_cast<int>(v)});
    }
  }
  return from_edge_list(n, edges);
}

std::string write_sparse6(const Graph& g) {
  const int n = g.order();
  const int k = bits_for(static_cast<std::uint64_t>(n));
  std::string out = ":";
  write_order(out, static_cast<std::uint64_t>(n));
  BitWriter bits;
  int current = 0;
  for (int j = 0; j < n; ++j) {
    for (int i : g.neighbors(j)) {
      if (i > j) break;
      if (j == current) {
        bits.push(false);
        bits.push_value(i, k);
      } else if (j == current + 1) {
        bits.push(true);
        bits.push_value(i, k);
      } else {
        bits.push(true);
        bits.push_value(j, k);
        bits.push(false);
        bits.push_value(i, k);
      }
      current = j;
    }
  }
  // A plain all-ones pad could decode as a spurious edge when n is a power of
  // two and v sits at n - 2; a leading zero bit avoids it.
  if (bits.pending() != 0) {
    const int room = 6 - bits.pending();
    if (k < 6 && current == n - 2 && n == (1 << k) && room >= k + 1) bits.push(false);
    bits.finish(true);
  }
  return out + bits.take();
}

Graph parse_edge_list(std::istream& in) {
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m)) throw FormatError("edge list must start with \"n m\"", 1);
  if (n < 0 || m < 0) throw FormatError("negative counts in edge-list header", 1);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) {
      throw FormatError("expected " + std::to_string(m) + " edges, read " + std::to_string(i),
                        static_cast<int>(i + 2));
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw FormatError("edge endpoint out of range", static_cast<int>(i + 2));
    }
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  try {
    return from_edge_list(static_cast<int>(n), edges);
  } catch (const GraphError& e) {
    throw FormatError(e.what());
  }
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::vector<Graph> read_graphs(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);

  auto first = std::find_if(lines.begin(), lines.end(), [](const std::string& s) {
    return !strip_line(s).empty();
  });
  if (first != lines.end() && std::isdigit(static_cast<unsigned char>((*first)[0]))) {
    std::string joined;
    for (const auto& s : lines) joined += s + "\n";
    std::istringstream stream(joined);
    return {parse_edge_list(stream)};
  }

  std::vector<Graph> graphs;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view line = strip_line(lines[i]);
    if (line.empty()) continue;
    try {
      const bool sparse = line.starts_with(':') || line.starts_with(">>sparse6<<");
      graphs.push_back(sparse ? parse_sparse6(line) : parse_graph6(line));
    } catch (const FormatError& e) {
      throw FormatError(e.what(), static_cast<int>(i + 1));
    } catch (const GraphError& e) {
      throw FormatError(e.what(), static_cast<int>(i + 1));
    }
  }
  return graphs;
}

std::vector<Graph> read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return read_graphs(in);
}

}  // namespace curvlab
