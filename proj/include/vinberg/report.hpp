#pragma once

// Serialization of a run verdict together with the post-hoc analyses.

#include <string>

#include "vinberg/engine.hpp"

namespace vinberg {

enum class ReportFormat { Json, Text, Dot };
ReportFormat parse_report_format(const std::string& name);

struct ReportOptions {
  bool arithmeticity = true;
  size_t cycle_cap = 12;
  /// Wall-clock seconds break byte-identical reruns, so they are opt-in.
  bool timing = false;
};

/// The analyses are computed for reflective verdicts only and written as
/// null otherwise.
std::string write_report(const RunVerdict& v, const GramForm& f, ReportFormat format, const ReportOptions& opt = {});

/// Rebuilds a verdict from a JSON report over f, re-deriving the diagram
/// from the stored roots.
RunVerdict read_report(const std::string& json_text, const GramForm& f);

}  // namespace vinberg
