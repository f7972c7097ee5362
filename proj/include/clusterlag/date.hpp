#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace clusterlag {

// Calendar date stored as a serial day count (days since 1970-01-01,
// proleptic Gregorian). Cheap to copy and compare; arithmetic is in days.
class Date {
public:
    Date() = default;
    explicit Date(std::int32_t serial) : serial_(serial) {}

    static Date from_ymd(int year, int month, int day);

    // "YYYY-MM-DD"
    static std::optional<Date> try_parse(std::string_view iso);
    static Date parse(std::string_view iso); // throws DataError

    std::int32_t serial() const { return serial_; }
    std::string iso() const;

    Date operator+(int days) const { return Date(serial_ + days); }
    Date operator-(int days) const { return Date(serial_ - days); }
    int operator-(Date other) const { return serial_ - other.serial_; }
    Date& operator++() {
        ++serial_;
        return *this;
    }
    auto operator<=>(const Date&) const = default;

private:
    std::int32_t serial_ = 0;
};

} // namespace clusterlag
