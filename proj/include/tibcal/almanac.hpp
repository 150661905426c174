#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tibcal/days.hpp"

namespace tibcal {

struct NamePair {
    std::string tibetan;
    std::string sanskrit;
};

// Tables from data/almanac_names.json.
const std::vector<NamePair>& mansion_names();
const std::vector<NamePair>& yoga_names();
const std::vector<NamePair>& changing_karana_names();  // 7
const std::vector<NamePair>& fixed_karana_names();     // 4
const std::vector<std::string>& mansion_elements();    // 27, wind/fire/earth/water
// The 10 unordered element pairs of the elemental yogas.
const std::vector<std::pair<std::string, std::string>>& elemental_yoga_pairs();

struct KaranaInfo {
    int half_day;  // H = 1..60
    bool fixed;
    int index;     // fixed: 1..4, changing: 1..7
    const NamePair* name;
};

// half is 1 or 2.  Throws std::invalid_argument.
KaranaInfo karana_of_halfday(int day, int half);

struct AlmanacDayRecord {
    long jd;
    CivilDate civil;
    TibetanDate date;
    DayStatus status;
    long n;  // true month count of the labelling lunar day
    bool first_of_repeated = false;

    // (true_date + 2) mod 7.  On the first day of a repeated pair this is
    // the end of the calendar day, weekday + 1, printed as x;60,0.
    Rational true_weekday;
    Rational moon_long_lunar_day_end;
    Rational moon_long_day_start;
    int mansion;
    Rational true_sun;
    Rational yoga_longitude;
    int yoga;
    KaranaInfo karana;  // in effect at the start of the calendar day
    std::optional<Rational> mean_sun;  // omitted on the first of a repeated pair
    Rational karana_system_moon_long;

    std::string true_weekday_str() const;  // <60,60,6,707>, 3 terms
};

AlmanacDayRecord day_record(const TraditionConfig& cfg, long jd);
AlmanacDayRecord day_record(const TraditionConfig& cfg, const TibetanDate& date);
std::vector<AlmanacDayRecord> month_records(const TraditionConfig& cfg, const MonthLabel& m);

struct MonthHeader {
    MonthLabel label;
    TrueMonth true_month;
    Rational mean_date, mean_sun, anomaly;
    MonthLabel karana_label;
    TrueMonth karana_true_month;
    Rational karana_mean_date, karana_mean_sun, karana_anomaly;
};

MonthHeader month_header(const TraditionConfig& cfg, const MonthLabel& m);

// Karana month count for the lunation with count n under cfg.
long karana_month_count(const TraditionConfig& cfg, long n);

enum class SpecialKind { sign_entry, sgang_point, dbugs_midpoint, extra_longitude, true_sun_zero };
const char* special_kind_name(SpecialKind k);

struct SpecialDay {
    SpecialKind kind;
    Rational longitude;  // revolutions, [0, 1)
    Rational lunar_days;  // lunar days after the start of month count 0
    long n;
    Rational lunar_date;  // within month n, [0, 30)
    MonthLabel month;
    // Mean date of the instant; for true_sun_zero the true date.
    Rational date;
    long jd;
};

// Extra longitudes in degrees printed in one almanac year.
std::vector<long> default_extra_longitudes();

// Mean-sun days of Tibetan year Y from the closed form, ordered by time.
std::vector<SpecialDay> special_days(const TraditionConfig& cfg, long Y,
                                     const std::vector<long>& extra_degrees =
                                         default_extra_longitudes());

// Sign entries, sgang and dbugs points through the 6 ix/13 rule.  The
// rule hits the intended longitudes only when s0 + beta_x s1/65 is a
// multiple of 1/12; otherwise the longitudes reported are the ones the
// rule actually reaches.
bool traditional_rule_exact(const TraditionConfig& cfg);
std::vector<SpecialDay> special_days_traditional(const TraditionConfig& cfg, long Y);

// The instant of year Y when the true sun passes longitude 0.
SpecialDay true_sun_zero(const TraditionConfig& cfg, long Y);

// Calendar day on which the mean sun reaches 250 degrees in the winter
// around 1 January of Gregorian year Y.
long bhutan_winter_solstice(const TraditionConfig& cfg, long Y);
long bhutan_winter_solstice(long Y);

}  // namespace tibcal
