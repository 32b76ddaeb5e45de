// dates.hpp
// Calendar dates (no intraday times). Serial arithmetic and ISO-8601 weeks.

#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace statarb {

struct Date {
    int year = 1970;
    int month = 1;  // 1..12
    int day = 1;    // 1..31

    auto operator<=>(const Date&) const = default;
};

// Days since 1970-01-01 (negative before). Proleptic Gregorian calendar.
std::int64_t to_serial(const Date& d);
Date from_serial(std::int64_t serial);

// 1 = Monday .. 7 = Sunday.
int weekday(const Date& d);

struct IsoWeek {
    int year = 0;
    int week = 0;  // 1..53

    auto operator<=>(const IsoWeek&) const = default;
};

IsoWeek iso_week(const Date& d);

bool is_valid(const Date& d);

// Strict "YYYY-MM-DD". Throws Error(malformed_input) otherwise.
Date parse_date(const std::string& text);
std::string format_date(const Date& d);

}  // namespace statarb
