#ifndef SEMSPACE_REPORT_HPP
#define SEMSPACE_REPORT_HPP

#include <string>
#include <vector>

#include "semspace/evaluate.hpp"

namespace semspace {

enum class ReportFormat { Table, Csv, Json };

// Renders one or more reports.
//   table: an overall table (one row per space, columns RC / SSRIC /
//          R-Prec / R-Rec) followed by one table per category with an
//          "N / Total" column; reals shown with 2 decimals.
//   csv:   per space, an overall block then a category block whose rows
//          are "<Category>,<N>,<Total>,<R-Prec>,<R-Rec>"; full precision.
//   json:  array of report objects, stable key order, full precision.
std::string render_report(const std::vector<EvalReport>& reports,
                          ReportFormat format);

// Parses render_report(Json) output back into reports.
std::vector<EvalReport> reports_from_json(const std::string& text);

} // namespace semspace

#endif
