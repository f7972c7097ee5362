#include "clusterlag/csv.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "clusterlag/errors.hpp"
#include "clusterlag/io_util.hpp"

namespace clusterlag {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

namespace {

double parse_count(const std::string& cell, std::size_t row) {
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(cell.c_str(), &end);
    if (errno != 0 || end != cell.c_str() + cell.size() || cell.empty())
        throw DataError("non-numeric count '" + cell + "' at data row " + std::to_string(row));
    return v;
}

int find_column(const std::vector<std::string>& header, const std::string& name) {
    for (std::size_t c = 0; c < header.size(); ++c)
        if (header[c] == name)
            return static_cast<int>(c);
    throw DataError("column '" + name + "' not found in CSV header");
}

std::string strip_utf8_bom(std::string s) {
    if (s.size() >= 3 && s[0] == '\xEF' && s[1] == '\xBB' && s[2] == '\xBF')
        s.erase(0, 3);
    return s;
}

} // namespace

std::pair<CountPanel, CountPanel> parse_csv(const std::string& path, const CsvSchema& schema,
                                            const ParseOptions& options) {
    std::ifstream in(path);
    if (!in)
        throw DataError("cannot open input file '" + path + "'");

    std::string line;
    if (!std::getline(in, line))
        throw DataError("empty CSV '" + path + "'");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    const auto header = split_csv_line(strip_utf8_bom(line));
    const int date_col = find_column(header, schema.date_column);
    const int entity_col = find_column(header, schema.entity_column);
    const int x_col = find_column(header, schema.x_column);
    const int y_col = find_column(header, schema.y_column);
    const std::size_t min_cols =
        static_cast<std::size_t>(std::max({date_col, entity_col, x_col, y_col})) + 1;

    const std::set<std::string> excluded(options.exclude.begin(), options.exclude.end());

    // cell -> (x, y); NaN marks a missing field
    struct Cell {
        double x, y;
    };
    std::map<std::string, std::map<Date, Cell>> rows;
    Date min_date = Date(std::numeric_limits<std::int32_t>::max());
    Date max_date = Date(std::numeric_limits<std::int32_t>::min());

    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        const auto fields = split_csv_line(line);
        if (fields.size() < min_cols)
            throw DataError("too few fields at data row " + std::to_string(row));
        const std::string& entity = fields[entity_col];
        if (excluded.count(entity))
            continue;
        const Date date = Date::parse(fields[date_col]);
        if ((options.start && date < *options.start) || (options.end && date > *options.end))
            continue;
        const std::string& xs = fields[x_col];
        const std::string& ys = fields[y_col];
        Cell cell{xs.empty() ? std::numeric_limits<double>::quiet_NaN() : parse_count(xs, row),
                  ys.empty() ? std::numeric_limits<double>::quiet_NaN() : parse_count(ys, row)};
        rows[entity][date] = cell;
        min_date = std::min(min_date, date);
        max_date = std::max(max_date, date);
    }
    if (in.bad())
        throw DataError("I/O error while reading '" + path + "'");
    if (rows.empty())
        throw DataError("no usable rows in '" + path + "'");
    if (max_date - min_date < 1)
        throw DataError("need at least 2 dates, got " + std::to_string(max_date - min_date + 1));

    std::vector<std::string> entities;
    entities.reserve(rows.size());
    for (const auto& [entity, _] : rows)
        entities.push_back(entity);
    // std::map iteration is already sorted ascending

    std::vector<Date> dates;
    for (Date d = min_date; d <= max_date; ++d)
        dates.push_back(d);

    const std::size_t n = entities.size();
    const std::size_t T = dates.size();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> raw_x(n * T, nan), raw_y(n * T, nan);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [date, cell] : rows[entities[i]]) {
            const std::size_t t = static_cast<std::size_t>(date - min_date);
            raw_x[t * n + i] = cell.x;
            raw_y[t * n + i] = cell.y;
        }
    }

    try {
        CountPanel px = preprocess(std::move(raw_x), entities, dates);
        CountPanel py = preprocess(std::move(raw_y), std::move(entities), std::move(dates));
        return {std::move(px), std::move(py)};
    } catch (const ComputeError& e) {
        throw DataError(std::string("while assembling panels from '") + path + "': " + e.what());
    }
}

void emit_csv(const std::string& path, const CsvSchema& schema, const CountPanel& x,
              const CountPanel& y) {
    if (x.entities != y.entities || x.dates != y.dates)
        throw ComputeError("emit_csv: panels must share entity and date axes");
    std::ofstream out(path);
    if (!out)
        throw DataError("cannot open output file '" + path + "'");
    out << schema.date_column << ',' << schema.entity_column << ',' << schema.x_column << ','
        << schema.y_column << '\n';
    for (int i = 0; i < x.n(); ++i)
        for (int t = 0; t < x.T(); ++t)
            out << x.dates[t].iso() << ',' << csv_quote(x.entities[i]) << ','
                << format_double(x.value(i, t)) << ',' << format_double(y.value(i, t)) << '\n';
    if (!out)
        throw DataError("I/O error while writing '" + path + "'");
}

} // namespace clusterlag
