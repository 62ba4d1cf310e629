#include "aco/csv.hpp"

#include <sstream>
#include <stdexcept>

#include "aco/format.hpp"

namespace aco {

std::string csv_escape(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
        return std::string(field);
    }
    std::string out = "\"";
    for (const char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

CsvDocuments emit_csv(std::span<const CellStats> stats, std::span<const RunRecord> runs) {
    std::ostringstream summary;
    summary << kSummaryHeader << '\n';
    for (const auto& s : stats) {
        summary << csv_escape(s.instance) << ',' << to_string(s.algorithm) << ',' << format_double(s.best) << ','
                << format_double(s.mean) << ',' << format_double(s.std) << ','
                << (s.mean_relative_error ? format_double(*s.mean_relative_error) : std::string{}) << ','
                << format_double(s.mean_time) << ',' << format_double(s.mean_iterations_to_best) << '\n';
    }
    std::ostringstream per_run;
    per_run << kRunsHeader << '\n';
    for (const auto& r : runs) {
        per_run << csv_escape(r.instance) << ',' << to_string(r.algorithm) << ',' << r.seed << ','
                << format_double(r.best_length) << ',' << r.iters_to_best << ',' << r.escapes << ','
                << format_double(r.time_s) << '\n';
    }
    return {summary.str(), per_run.str()};
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    bool row_started = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        row_started = true;
        if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            row.push_back(std::move(field));
            field.clear();
        } else if (c == '\n' || c == '\r') {
            if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
                ++i;
            }
            row.push_back(std::move(field));
            field.clear();
            rows.push_back(std::move(row));
            row.clear();
            row_started = false;
        } else {
            field += c;
        }
    }
    if (quoted) {
        throw std::invalid_argument("unterminated quoted CSV field");
    }
    if (row_started) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace aco
