#include "tibcal/days.hpp"

#include <cstdio>
#include <regex>
#include <stdexcept>

#include "tibcal/astro.hpp"

namespace tibcal {

namespace {

long fdiv(long a, long b) { return floor_long(rat(a, b)); }

}  // namespace

std::string CivilDate::str() const {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%04ld-%02d-%02d%s", year, month, day, gregorian ? "" : "J");
    return buf;
}

long jd_from_gregorian(long y, int m, int d) {
    long a = fdiv(14 - m, 12);
    long yy = y + 4800 - a;
    long mm = m + 12 * a - 3;
    return d + fdiv(153 * mm + 2, 5) + 365 * yy + fdiv(yy, 4) - fdiv(yy, 100) + fdiv(yy, 400) -
           32045;
}

long jd_from_julian(long y, int m, int d) {
    long a = fdiv(14 - m, 12);
    long yy = y + 4800 - a;
    long mm = m + 12 * a - 3;
    return d + fdiv(153 * mm + 2, 5) + 365 * yy + fdiv(yy, 4) - 32083;
}

CivilDate gregorian_from_jd(long jd) {
    long a = jd + 32044;
    long b = fdiv(4 * a + 3, 146097);
    long c = a - fdiv(146097 * b, 4);
    long d = fdiv(4 * c + 3, 1461);
    long e = c - fdiv(1461 * d, 4);
    long m = fdiv(5 * e + 2, 153);
    CivilDate out;
    out.day = static_cast<int>(e - fdiv(153 * m + 2, 5) + 1);
    out.month = static_cast<int>(m + 3 - 12 * fdiv(m, 10));
    out.year = 100 * b + d - 4800 + fdiv(m, 10);
    out.gregorian = true;
    return out;
}

CivilDate julian_from_jd(long jd) {
    long c = jd + 32082;
    long d = fdiv(4 * c + 3, 1461);
    long e = c - fdiv(1461 * d, 4);
    long m = fdiv(5 * e + 2, 153);
    CivilDate out;
    out.day = static_cast<int>(e - fdiv(153 * m + 2, 5) + 1);
    out.month = static_cast<int>(m + 3 - 12 * fdiv(m, 10));
    out.year = d - 4800 + fdiv(m, 10);
    out.gregorian = false;
    return out;
}

CivilDate civil_from_jd(long jd) {
    return jd >= 2299161 ? gregorian_from_jd(jd) : julian_from_jd(jd);
}

long jd_from_civil(const CivilDate& c) {
    return c.gregorian ? jd_from_gregorian(c.year, c.month, c.day)
                       : jd_from_julian(c.year, c.month, c.day);
}

namespace {

const char* const kEnglish[] = {"Saturday",  "Sunday",   "Monday", "Tuesday",
                                "Wednesday", "Thursday", "Friday"};
const char* const kTibetan[] = {"spen pa", "nyi ma", "zla ba", "mig dmar",
                                "lhag pa", "phur bu", "pa sangs"};
const char* const kPlanet[] = {"Saturn", "Sun", "Moon", "Mars", "Mercury", "Jupiter", "Venus"};
const char* const kWeekdayElement[] = {"earth", "fire", "water", "fire", "water", "wind", "earth"};

}  // namespace

int day_of_week(long jd) { return static_cast<int>(mod(jd + 2, 7)); }

Weekday weekday(long jd, int offset) {
    int k = day_of_week(jd);
    return {k, kEnglish[k], kTibetan[mod(k + offset, 7)], kPlanet[k], kWeekdayElement[k]};
}

Weekday weekday(const TraditionConfig& cfg, long jd) {
    return weekday(jd, cfg.weekday_name_offset);
}

const char* status_name(DayStatus s) {
    switch (s) {
        case DayStatus::normal: return "normal";
        case DayStatus::repeated: return "repeated";
        case DayStatus::skipped: return "skipped";
    }
    return "?";
}

std::string TibetanDate::str(DayStatus status) const {
    char buf[48];
    const char* suffix = leap_day ? "a" : (status == DayStatus::repeated ? "b" : "");
    std::snprintf(buf, sizeof buf, "%s-%02d%s", month.str().c_str(), day, suffix);
    return buf;
}

TibetanDate parse_tibetan_date(const std::string& text) {
    static const std::regex re(R"(^(-?\d+)-(\d{1,2})(L?)-(\d{1,2})([ab]?)$)");
    std::smatch m;
    if (!std::regex_match(text, m, re))
        throw std::invalid_argument("malformed Tibetan date: " + text +
                                    " (expected YYYY-MM[L]-DD[a|b])");
    TibetanDate t;
    t.month.year = std::stol(m[1]);
    t.month.month = std::stoi(m[2]);
    t.month.leap = m[3] == "L";
    t.day = std::stoi(m[4]);
    t.leap_day = m[5] == "a";
    if (t.month.month < 1 || t.month.month > 12)
        throw std::invalid_argument("month must be 1..12: " + text);
    if (t.day < 1 || t.day > 30) throw std::invalid_argument("day must be 1..30: " + text);
    return t;
}

namespace {

long prev_jd(const TraditionConfig& cfg, long n, int day) {
    return day > 1 ? lunar_day_jd(cfg, day - 1, n) : lunar_day_jd(cfg, 30, n - 1);
}

DayStatus classify(long jd, long prev) {
    if (jd == prev) return DayStatus::skipped;
    if (jd == prev + 2) return DayStatus::repeated;
    return DayStatus::normal;
}

long floor_td(const TraditionConfig& cfg, long L) {
    long n = floor_long(rat(L, 30));
    return lunar_day_jd(cfg, L - 30 * n + 1, n);
}

}  // namespace

DayStatus day_status(const TraditionConfig& cfg, long n, int day) {
    return classify(lunar_day_jd(cfg, day, n), prev_jd(cfg, n, day));
}

DayResult jd_from_tibetan(const TraditionConfig& cfg, const TibetanDate& date) {
    if (date.day < 1 || date.day > 30) throw std::invalid_argument("day must be 1..30");
    long n = month_count(cfg, date.month);
    long jd = lunar_day_jd(cfg, date.day, n);
    DayStatus st = classify(jd, prev_jd(cfg, n, date.day));
    if (date.leap_day) {
        if (st != DayStatus::repeated)
            throw std::domain_error("date " + date.str() + " is not repeated");
        jd -= 1;
    }
    return {jd, st};
}

LunarDay lunar_day_of_jd(const TraditionConfig& cfg, long jd, bool* leap_day) {
    // The first lunar day whose end falls on or after jd labels that day.
    long L = floor_long((jd - cfg.m0) / cfg.m2) - 1;
    while (floor_td(cfg, L) >= jd) L -= 2;
    while (floor_td(cfg, L) < jd) ++L;
    long end = floor_td(cfg, L);
    if (leap_day) *leap_day = end > jd;
    long n = floor_long(rat(L, 30));
    return {n, static_cast<int>(L - 30 * n + 1)};
}

TibetanDate tibetan_from_jd(const TraditionConfig& cfg, long jd) {
    bool leap = false;
    LunarDay ld = lunar_day_of_jd(cfg, jd, &leap);
    TibetanDate t;
    t.month = month_from_count(cfg, ld.n);
    t.day = ld.day;
    t.leap_day = leap;
    return t;
}

std::pair<long, long> month_bounds(const TraditionConfig& cfg, long n) {
    return {lunar_day_jd(cfg, 30, n - 1) + 1, lunar_day_jd(cfg, 30, n)};
}

std::pair<long, long> month_bounds(const TraditionConfig& cfg, const MonthLabel& m) {
    return month_bounds(cfg, month_count(cfg, m));
}

long first_month_count(const TraditionConfig& cfg, long Y) {
    long n = true_month(cfg, Y, 1, false).n;
    if (is_leap_month(cfg, Y, 1)) n = std::min(n, true_month(cfg, Y, 1, true).n);
    return n;
}

long losar(const TraditionConfig& cfg, long Y) {
    return lunar_day_jd(cfg, 30, first_month_count(cfg, Y) - 1) + 1;
}

long year_length(const TraditionConfig& cfg, long Y) { return losar(cfg, Y + 1) - losar(cfg, Y); }

long holiday_day(const TraditionConfig& cfg, long Y, int M, int D) {
    if (M == 1 && D == 1) return losar(cfg, Y);
    TibetanDate t;
    t.month = {Y, M, false};
    t.day = D;
    DayResult r = jd_from_tibetan(cfg, t);
    if (r.status == DayStatus::repeated) return r.jd - 1;
    // A skipped date's JD already carries the preceding day's label.
    return r.jd;
}

}  // namespace tibcal
