#include "statarb/dates.hpp"

#include <array>
#include <cstdio>

#include "statarb/error.hpp"

namespace statarb {

namespace {

bool is_leap(int y) {
    return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

int days_in_month(int y, int m) {
    static constexpr std::array<int, 12> kDays = {31, 28, 31, 30, 31, 30,
                                                  31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap(y)) return 29;
    return kDays[m - 1];
}

}  // namespace

// Civil-calendar conversion in the style of Hinnant's days_from_civil.
std::int64_t to_serial(const Date& d) {
    std::int64_t y = d.year;
    y -= d.month <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy =
        (153u * (d.month + (d.month > 2 ? -3 : 9)) + 2u) / 5u + d.day - 1u;
    const unsigned doe = yoe * 365u + yoe / 4u - yoe / 100u + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

Date from_serial(std::int64_t serial) {
    std::int64_t z = serial + 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe =
        (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned day = doy - (153 * mp + 2) / 5 + 1;
    const unsigned month = mp + (mp < 10 ? 3 : -9);
    return Date{static_cast<int>(y + (month <= 2)), static_cast<int>(month),
                static_cast<int>(day)};
}

int weekday(const Date& d) {
    // 1970-01-01 was a Thursday.
    std::int64_t s = to_serial(d);
    int w = static_cast<int>(((s % 7) + 7 + 3) % 7);  // 0 = Monday
    return w + 1;
}

IsoWeek iso_week(const Date& d) {
    // The ISO week of a date is the week of its Thursday.
    std::int64_t thursday = to_serial(d) + (4 - weekday(d));
    Date th = from_serial(thursday);
    std::int64_t jan1 = to_serial(Date{th.year, 1, 1});
    int week = static_cast<int>((thursday - jan1) / 7) + 1;
    return IsoWeek{th.year, week};
}

bool is_valid(const Date& d) {
    if (d.month < 1 || d.month > 12) return false;
    if (d.day < 1 || d.day > days_in_month(d.year, d.month)) return false;
    return true;
}

Date parse_date(const std::string& text) {
    int y = 0, m = 0, day = 0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%4d-%2d-%2d%c", &y, &m, &day, &extra) != 3 ||
        text.size() != 10) {
        throw Error(ErrorCode::malformed_input,
                    "expected ISO-8601 date (YYYY-MM-DD), got '" + text + "'");
    }
    Date d{y, m, day};
    if (!is_valid(d)) {
        throw Error(ErrorCode::malformed_input, "invalid calendar date '" + text + "'");
    }
    return d;
}

std::string format_date(const Date& d) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", d.year, d.month, d.day);
    return buf;
}

}  // namespace statarb
