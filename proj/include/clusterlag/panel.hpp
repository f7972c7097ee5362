#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "clusterlag/date.hpp"

namespace clusterlag {

// Panel of cumulative counts: n entities x T contiguous daily dates.
// Values are stored date-major so one day's cross-section is a contiguous
// span. After preprocessing every value is >= 1 (zeros and missing cells
// are floored to 1); `floored` marks the cells where the floor was applied.
struct CountPanel {
    std::vector<std::string> entities; // sorted ascending
    std::vector<Date> dates;           // daily, no gaps
    std::vector<double> values;        // [t * n + i]
    std::vector<std::uint8_t> floored; // same layout; 1 where 0/missing was replaced

    int n() const { return static_cast<int>(entities.size()); }
    int T() const { return static_cast<int>(dates.size()); }
    double value(int i, int t) const { return values[static_cast<std::size_t>(t) * entities.size() + i]; }
    bool was_floored(int i, int t) const {
        return floored[static_cast<std::size_t>(t) * entities.size() + i] != 0;
    }
    std::span<const double> day(int t) const {
        return {values.data() + static_cast<std::size_t>(t) * entities.size(), entities.size()};
    }
    int date_index(Date d) const; // -1 if outside the axis
};

// Natural logs of a CountPanel; same axes, all values >= 0.
struct LogPanel {
    std::vector<std::string> entities;
    std::vector<Date> dates;
    std::vector<double> values; // [t * n + i]

    int n() const { return static_cast<int>(entities.size()); }
    int T() const { return static_cast<int>(dates.size()); }
    double value(int i, int t) const { return values[static_cast<std::size_t>(t) * entities.size() + i]; }
    std::span<const double> day(int t) const {
        return {values.data() + static_cast<std::size_t>(t) * entities.size(), entities.size()};
    }
};

// Trailing-window vectors of log counts: each (entity, date) cell holds the
// w most recent log values (oldest first). Dates before the w-th are padded
// by repeating the first observation.
struct RollingPanel {
    std::vector<std::string> entities;
    std::vector<Date> dates;
    int window = 0;
    std::vector<double> values; // [(t * n + i) * window + c]

    int n() const { return static_cast<int>(entities.size()); }
    int T() const { return static_cast<int>(dates.size()); }
    std::span<const double> vec(int i, int t) const {
        return {values.data() + (static_cast<std::size_t>(t) * entities.size() + i) * window,
                static_cast<std::size_t>(window)};
    }
    // All of day t's vectors, n x window row-major.
    std::span<const double> day(int t) const {
        return {values.data() + static_cast<std::size_t>(t) * entities.size() * window,
                entities.size() * static_cast<std::size_t>(window)};
    }
};

// Floors zeros and missing cells (NaN) to 1 so the log transform is defined.
// Positive entries pass through unchanged; negatives are rejected.
CountPanel preprocess(std::vector<double> raw, std::vector<std::string> entities,
                      std::vector<Date> dates);

LogPanel log_transform(const CountPanel& panel);

RollingPanel rolling_window(const LogPanel& panel, int w);

} // namespace clusterlag
