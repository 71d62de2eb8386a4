#include "curvlab/report.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace curvlab {

using nlohmann::ordered_json;

ReportFormat parse_report_format(const std::string& text) {
  if (text == "json") return ReportFormat::kJson;
  if (text == "csv") return ReportFormat::kCsv;
  if (text == "markdown" || text == "md") return ReportFormat::kMarkdown;
  throw std::invalid_argument("unknown report format '" + text + "'");
}

namespace {

// +inf (single vertex) has no JSON number; it is written as null.
ordered_json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

ordered_json edges_json(const std::vector<Edge>& edges) {
  ordered_json out = ordered_json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

template <typename T, typename Fn>
ordered_json optional_json(const std::optional<T>& value, Fn&& fn) {
  return value ? fn(*value) : ordered_json(nullptr);
}

std::string format_double(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|' || c == '\\' || c == '`') out += '\\';
    out += c;
  }
  return out;
}

template <typename T>
std::string opt_text(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_floating_point_v<T>) {
    return format_double(*v);
  } else {
    return std::to_string(*v);
  }
}

std::string regularity_text(const std::optional<RegularityClass>& rc) {
  if (!rc) return "";
  std::string s = to_string(rc->kind);
  if (rc->is_amply_regular()) {
    s += "(" + std::to_string(rc->d) + "," + std::to_string(rc->alpha) + "," + std::to_string(rc->beta) + ")";
  } else if (rc->is_edge_regular()) {
    s += "(" + std::to_string(rc->d) + "," + std::to_string(rc->alpha) + ")";
  } else if (rc->is_regular()) {
    s += "(" + std::to_string(rc->d) + ")";
  }
  return s;
}

std::string status_text(const TheoremVerdict& v) {
  if (!v.applicable) return "n/a";
  return v.holds ? "holds" : "VIOLATED";
}

}  // namespace

ordered_json to_json(const RegularityClass& rc) {
  ordered_json j;
  j["kind"] = to_string(rc.kind);
  j["n"] = rc.n;
  j["d"] = rc.is_regular() ? ordered_json(rc.d) : ordered_json(nullptr);
  j["alpha"] = rc.is_edge_regular() ? ordered_json(rc.alpha) : ordered_json(nullptr);
  j["beta"] = rc.is_amply_regular() ? ordered_json(rc.beta) : ordered_json(nullptr);
  j["diagnostic"] = rc.diagnostic;
  j["first_violation"] = optional_json(rc.first_violation, [](const auto& p) {
    return ordered_json::array({p.first, p.second});
  });
  return j;
}

ordered_json to_json(const CutCertificate& cut) {
  ordered_json j;
  j["value"] = cut.value;
  j["side"] = cut.side;
  j["cut_edges"] = edges_json(cut.cut_edges);
  return j;
}

ordered_json to_json(const TheoremVerdict& v) {
  const Evidence& e = v.evidence;
  ordered_json ev;
  ev["curvature"] = optional_json(e.curvature, number);
  ev["min_degree"] = optional_json(e.min_degree, [](int x) { return ordered_json(x); });
  ev["lambda"] = optional_json(e.lambda, [](int x) { return ordered_json(x); });
  ev["cut"] = optional_json(e.cut, [](const CutCertificate& c) { return to_json(c); });
  ev["matching"] = optional_json(e.matching, [](const Matching& m) {
    ordered_json j;
    j["size"] = m.edges.size();
    j["perfect"] = m.is_perfect;
    j["edges"] = edges_json(m.edges);
    return j;
  });
  ev["regularity"] = optional_json(e.regularity, [](const RegularityClass& rc) { return to_json(rc); });
  ev["stars_only"] = optional_json(e.stars_only, [](bool b) { return ordered_json(b); });
  ev["diamond"] = optional_json(e.diamond, [](const std::array<int, 4>& d) { return ordered_json(d); });
  ev["formula_deviation"] = optional_json(e.formula_deviation, number);
  ev["note"] = e.note;

  ordered_json j;
  j["theorem"] = to_string(v.id);
  j["graph_id"] = v.graph_id;
  j["graph6"] = v.graph6;
  j["applicable"] = v.applicable;
  j["holds"] = v.holds;
  j["evidence"] = std::move(ev);
  return j;
}

ordered_json to_json(const ScanResult& result) {
  ordered_json summary = ordered_json::array();
  for (const auto& [id, t] : result.summary) {
    ordered_json s;
    s["theorem"] = to_string(id);
    s["checked"] = t.checked;
    s["applicable"] = t.applicable;
    s["holds"] = t.holds;
    s["violations"] = t.violations;
    summary.push_back(std::move(s));
  }
  ordered_json verdicts = ordered_json::array();
  for (const auto& v : result.verdicts) verdicts.push_back(to_json(v));
  ordered_json j;
  j["violations"] = result.violations;
  j["summary"] = std::move(summary);
  j["verdicts"] = std::move(verdicts);
  return j;
}

ordered_json to_json(const ConjectureReport& report) {
  ordered_json table = ordered_json::array();
  for (const auto& [key, count] : report.table) {
    ordered_json row;
    row["min_degree"] = key.first;
    row["lambda"] = key.second;
    row["count"] = count;
    table.push_back(std::move(row));
  }
  ordered_json j;
  j["max_n"] = report.max_n;
  j["graphs_considered"] = report.graphs_considered;
  j["nonnegative"] = report.nonnegative;
  j["table"] = std::move(table);
  j["below_min_degree"] = report.below_min_degree;
  return j;
}

ordered_json to_json(const std::vector<Beta1Candidate>& candidates) {
  ordered_json out = ordered_json::array();
  for (const auto& c : candidates) {
    ordered_json j;
    j["id"] = c.id;
    j["graph6"] = c.graph6;
    j["regularity"] = to_json(c.regularity);
    j["lambda"] = optional_json(c.lambda, [](int x) { return ordered_json(x); });
    j["listed"] = c.listed;
    j["status"] = c.status;
    out.push_back(std::move(j));
  }
  return out;
}

void emit_report(const std::vector<TheoremVerdict>& verdicts, ReportFormat format, std::ostream& out) {
  switch (format) {
    case ReportFormat::kJson: {
      ordered_json arr = ordered_json::array();
      for (const auto& v : verdicts) arr.push_back(to_json(v));
      out << arr.dump(2) << '\n';
      return;
    }
    case ReportFormat::kCsv: {
      out << "theorem,graph_id,graph6,applicable,holds,curvature,min_degree,lambda,regularity,"
             "stars_only,matching_size,perfect,formula_deviation,note\n";
      for (const auto& v : verdicts) {
        const Evidence& e = v.evidence;
        out << to_string(v.id) << ',' << csv_escape(v.graph_id) << ',' << csv_escape(v.graph6) << ','
            << (v.applicable ? "true" : "false") << ',' << (v.holds ? "true" : "false") << ','
            << opt_text(e.curvature) << ',' << opt_text(e.min_degree) << ',' << opt_text(e.lambda) << ','
            << csv_escape(regularity_text(e.regularity)) << ','
            << (e.stars_only ? (*e.stars_only ? "true" : "false") : "") << ','
            << (e.matching ? std::to_string(e.matching->edges.size()) : "") << ','
            << (e.matching ? (e.matching->is_perfect ? "true" : "false") : "") << ','
            << opt_text(e.formula_deviation) << ',' << csv_escape(e.note) << '\n';
      }
      return;
    }
    case ReportFormat::kMarkdown: {
      std::map<TheoremId, std::vector<const TheoremVerdict*>> by_id;
      for (const auto& v : verdicts) by_id[v.id].push_back(&v);
      bool first = true;
      for (const auto& [id, rows] : by_id) {
        if (!first) out << '\n';
        first = false;
        out << "## " << to_string(id) << "\n\n";
        out << "| graph | graph6 | status | curvature | min degree | lambda | regularity | note |\n";
        out << "|---|---|---|---|---|---|---|---|\n";
        for (const TheoremVerdict* v : rows) {
          const Evidence& e = v->evidence;
          out << "| " << md_escape(v->graph_id) << " | " << md_escape(v->graph6) << " | " << status_text(*v) << " | "
              << opt_text(e.curvature) << " | " << opt_text(e.min_degree) << " | " << opt_text(e.lambda)
              << " | " << regularity_text(e.regularity) << " | " << md_escape(e.note) << " |\n";
        }
      }
      return;
    }
  }
}

}  // namespace curvlab
