#pragma once

#include "tibcal/tradition.hpp"

namespace tibcal {

// Values at the end of lunar day d (0..30, may be fractional) of true month n.
Rational mean_date(const TraditionConfig& cfg, const Rational& d, long n);
// Linear value; reduce with frac() for an angle.
Rational mean_sun(const TraditionConfig& cfg, const Rational& d, long n);
Rational anomaly_moon(const TraditionConfig& cfg, const Rational& d, long n);

// Tables with their symmetric extension and linear interpolation.
Rational moon_tab(const Rational& arg);  // period 28
Rational sun_tab(const Rational& arg);   // period 12

Rational moon_equ(const Rational& anomaly);
Rational sun_equ(const Rational& mean_sun);

Rational semi_true_date(const TraditionConfig& cfg, const Rational& d, long n);
Rational true_date(const TraditionConfig& cfg, const Rational& d, long n);
Rational true_sun(const TraditionConfig& cfg, const Rational& d, long n);

// JD of the calendar day on which lunar day d of month n ends.
long lunar_day_jd(const TraditionConfig& cfg, long d, long n);

// Common period of mean date, anomaly and mean sun.
struct CalendarPeriod {
    Int months;
    Rational days;   // m1 * months
    Rational years;  // s1 * months
};
CalendarPeriod calendar_period(const TraditionConfig& cfg);

}  // namespace tibcal
