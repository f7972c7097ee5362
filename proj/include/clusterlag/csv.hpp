#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clusterlag/panel.hpp"

namespace clusterlag {

// Column mapping for long-format input: one row per (date, entity) with two
// count columns (series X and series Y).
struct CsvSchema {
    std::string date_column = "date";
    std::string entity_column = "location";
    std::string x_column = "total_cases";
    std::string y_column = "total_deaths";
};

struct ParseOptions {
    std::optional<Date> start; // clip the date axis
    std::optional<Date> end;
    std::vector<std::string> exclude; // entity identifiers to drop
};

// Parses a UTF-8 CSV with a header row into two aligned panels (X, Y).
// The date axis is the contiguous daily range spanned by the (clipped)
// input; cells with no row, an empty field, or a zero are floored to 1.
std::pair<CountPanel, CountPanel> parse_csv(const std::string& path, const CsvSchema& schema,
                                            const ParseOptions& options = {});

// Writes both panels back in the same long format; parse_csv of the result
// reproduces the panels bit-exactly.
void emit_csv(const std::string& path, const CsvSchema& schema, const CountPanel& x,
              const CountPanel& y);

// One CSV record split into fields (quoted fields may contain commas).
std::vector<std::string> split_csv_line(const std::string& line);

} // namespace clusterlag
