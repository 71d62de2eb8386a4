#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "curvlab/theorems.hpp"

namespace curvlab {

enum class ReportFormat { kJson, kCsv, kMarkdown };

/// "json", "csv" or "markdown" (also "md"). Throws std::invalid_argument.
ReportFormat parse_report_format(const std::string& text);

/// Field order is fixed; see docs/report-schema.md.
nlohmann::ordered_json to_json(const TheoremVerdict& v);
nlohmann::ordered_json to_json(const ScanResult& result);
nlohmann::ordered_json to_json(const ConjectureReport& report);
nlohmann::ordered_json to_json(const std::vector<Beta1Candidate>& candidates);
nlohmann::ordered_json to_json(const RegularityClass& rc);
nlohmann::ordered_json to_json(const CutCertificate& cut);

/// JSON: an array of verdict objects ("[]" when empty). CSV: a fixed
/// header and one row per verdict. Markdown: one table per theorem id in
/// id order, ids without verdicts omitted.
void emit_report(const std::vector<TheoremVerdict>& verdicts, ReportFormat format, std::ostream& out);

}  // namespace curvlab
