#include "prodeq/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <vector>

namespace prodeq {

std::string format_g12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

std::string csv_quote(const std::string& s) {
    bool need = s.find_first_of(",\"\n\r") != std::string::npos;
    if (!need) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string cell_text(const json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_float()) return format_g12(v.get<double>());
    return v.dump();
}

}  // namespace

std::string to_csv(const json& rows) {
    std::vector<std::string> cols;
    for (const auto& row : rows)
        for (auto it = row.begin(); it != row.end(); ++it)
            if (std::find(cols.begin(), cols.end(), it.key()) == cols.end())
                cols.push_back(it.key());
    std::string out;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) out += ',';
        out += csv_quote(cols[i]);
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (i) out += ',';
            auto it = row.find(cols[i]);
            if (it != row.end()) out += csv_quote(cell_text(*it));
        }
        out += '\n';
    }
    return out;
}

std::string to_json_text(const json& rows) { return rows.dump(2) + "\n"; }

json count_report_row(const CountReport& r, bool with_timings) {
    json row;
    row["k"] = r.k;
    row["B"] = r.B;
    row["value"] = r.value.str();
    row["method"] = r.method;
    if (r.main_term) row["main_term"] = *r.main_term;
    if (r.gap) row["gap"] = *r.gap;
    if (r.ratio_lower) row["ratio_lower"] = *r.ratio_lower;
    if (r.ratio_upper) row["ratio_upper"] = *r.ratio_upper;
    if (with_timings) row["wall_time_s"] = r.wall_time_s;
    return row;
}

void emit_table(const json& rows, const std::string& format, const std::string& out_path) {
    std::string text = format == "csv" ? to_csv(rows) : to_json_text(rows);
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write to " + out_path);
    f << text;
}

}  // namespace prodeq
