#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aco/bench.hpp"

namespace aco {

inline constexpr std::string_view kSummaryHeader =
    "instance,algorithm,best,mean,std,mean_rel_err,mean_time_s,mean_iters_to_best";
inline constexpr std::string_view kRunsHeader = "instance,algorithm,seed,best_length,iters_to_best,escapes,time_s";

struct CsvDocuments {
    std::string summary;
    std::string runs;
};

/// RFC 4180 field quoting: fields containing a comma, quote, CR or LF are
/// wrapped in quotes with inner quotes doubled.
std::string csv_escape(std::string_view field);

/// Renders summary and per-run CSV documents, one "\n"-terminated row each;
/// numbers use round-trip precision; an unknown relative error is an empty
/// field.
CsvDocuments emit_csv(std::span<const CellStats> stats, std::span<const RunRecord> runs);

/// Splits a CSV document into rows of fields, honouring quoted fields.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

}  // namespace aco
