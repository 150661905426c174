#pragma once

#include <string>
#include <utility>

#include "tibcal/months.hpp"

namespace tibcal {

struct CivilDate {
    long year = 0;
    int month = 1;
    int day = 1;
    bool gregorian = true;

    std::string str() const;  // ISO "2017-02-27", Julian dates get a "J" suffix
};

long jd_from_gregorian(long year, int month, int day);
long jd_from_julian(long year, int month, int day);
CivilDate gregorian_from_jd(long jd);
CivilDate julian_from_jd(long jd);
// Gregorian from JD 2299161 (15 October 1582), Julian before.
CivilDate civil_from_jd(long jd);
long jd_from_civil(const CivilDate& c);

struct Weekday {
    int number;  // (JD + 2) mod 7, 0 = Saturday
    const char* english;
    const char* tibetan;
    const char* planet;
    const char* element;
};

int day_of_week(long jd);
Weekday weekday(long jd, int tibetan_name_offset = 0);
Weekday weekday(const TraditionConfig& cfg, long jd);

enum class DayStatus { normal, repeated, skipped };
const char* status_name(DayStatus s);

struct TibetanDate {
    MonthLabel month;
    int day = 1;            // 1..30
    bool leap_day = false;  // first of a repeated pair

    bool operator==(const TibetanDate&) const = default;
    // "2000-01L-05", with "a"/"b" on the two days of a repeated date
    // when the status is known.
    std::string str(DayStatus status = DayStatus::normal) const;
};

// Accepts YYYY-MM[L]-DD[a|b].  Throws std::invalid_argument.
TibetanDate parse_tibetan_date(const std::string& text);

struct DayResult {
    long jd;
    DayStatus status;
};

DayStatus day_status(const TraditionConfig& cfg, long n, int day);
// Throws std::domain_error for a leap day on a date that is not repeated,
// or for a leap month that does not exist.
DayResult jd_from_tibetan(const TraditionConfig& cfg, const TibetanDate& date);
TibetanDate tibetan_from_jd(const TraditionConfig& cfg, long jd);

// Position in the lunar day sequence: 30 n + day - 1.
struct LunarDay {
    long n;
    int day;
};
// The lunar day that labels calendar day jd, and whether jd is its first
// (leap) day.
LunarDay lunar_day_of_jd(const TraditionConfig& cfg, long jd, bool* leap_day = nullptr);

std::pair<long, long> month_bounds(const TraditionConfig& cfg, const MonthLabel& m);
std::pair<long, long> month_bounds(const TraditionConfig& cfg, long n);

// First month count of year Y.
long first_month_count(const TraditionConfig& cfg, long Y);
long losar(const TraditionConfig& cfg, long Y);
long year_length(const TraditionConfig& cfg, long Y);

// Fixed-date observance in month M, day D of year Y.  Leap months are
// passed over (except for New Year), a skipped date falls on the
// preceding day and a repeated date on its first day.
long holiday_day(const TraditionConfig& cfg, long Y, int M, int D);

}  // namespace tibcal
