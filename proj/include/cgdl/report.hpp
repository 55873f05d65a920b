#pragma once

#include "cgdl/audit.hpp"
#include "cgdl/axioms.hpp"
#include "cgdl/compare.hpp"
#include "cgdl/model_io.hpp"

#include <string>

namespace cgdl {

// Every report is built as JSON first; the text form is rendered from that
// document, so both always carry the same data.

struct EvalEntry {
  FormulaPtr formula;
  std::vector<Value> values;
  bool valid = false;
  std::vector<std::pair<FormulaPtr, std::vector<Value>>> trace;
};

json eval_report(const CgdlModel& model, Modes modes, const std::vector<EvalEntry>& entries,
                 bool converged);
json gdl_report(const GdlModel& model, const std::vector<EvalEntry>& entries);
json search_report(const SearchReport& report, const std::string& command);
json audit_report(const AuditReport& report);
json compare_report(const ComparisonReport& report);

json verdict_to_json(const Verdict& v);
json binary_to_json(const BinaryMultirelation& b);

/// Plain text rendering of any of the documents above.
std::string render_text(const json& report);

} // namespace cgdl
