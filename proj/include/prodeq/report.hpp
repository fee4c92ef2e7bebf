// Table emission: CSV with RFC-style quoting, JSON as an array of objects.
// Counts are serialized as decimal strings (they exceed 64 bits); floats are
// printed with 12 significant digits so repeated runs emit identical bytes.

#pragma once

#include <string>

#include <json.hpp>

#include "prodeq/counting.hpp"

namespace prodeq {

using json = nlohmann::ordered_json;

std::string format_g12(double v);

// rows: array of flat objects; columns appear in first-seen order
std::string to_csv(const json& rows);
std::string to_json_text(const json& rows);

json count_report_row(const CountReport& r, bool with_timings);

// writes to the path, or to stdout when path is empty
void emit_table(const json& rows, const std::string& format, const std::string& out_path);

}  // namespace prodeq
