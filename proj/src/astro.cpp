#include "tibcal/astro.hpp"

namespace tibcal {

namespace {

const long kMoonQuarter[] = {0, 5, 10, 15, 19, 22, 24, 25};
const long kSunQuarter[] = {0, 6, 10, 11};

// Knot value of a table with tab(half - i) = tab(i), tab(half + i) = -tab(i).
long knot(const long* quarter, long half, long i) {
    long period = 2 * half;
    i = mod(i, period);
    if (i >= half) return -knot(quarter, half, i - half);
    if (2 * i > half) i = half - i;
    return quarter[i];
}

Rational interpolate(const long* quarter, long half, const Rational& arg) {
    auto [i, f] = floor_frac(arg);
    long k = to_long(mod(i, Int(2 * half)));
    long a = knot(quarter, half, k), b = knot(quarter, half, k + 1);
    return a + f * (b - a);
}

Rational karana_mean_sun(const TraditionConfig& cfg, const Rational& d, long n) {
    static const TraditionConfig k = get_tradition("karana");
    long offset = to_long(floor((cfg.m0 - k.m0) / k.m1 + rat(1, 2)));
    return (n + offset) * k.s1 + d * k.s2 + k.s0;
}

}  // namespace

Rational mean_date(const TraditionConfig& cfg, const Rational& d, long n) {
    return n * cfg.m1 + d * cfg.m2 + cfg.m0;
}

Rational mean_sun(const TraditionConfig& cfg, const Rational& d, long n) {
    return n * cfg.s1 + d * cfg.s2 + cfg.s0;
}

Rational anomaly_moon(const TraditionConfig& cfg, const Rational& d, long n) {
    return frac(n * cfg.a1 + d * cfg.a2 + cfg.a0);
}

Rational moon_tab(const Rational& arg) { return interpolate(kMoonQuarter, 14, arg); }

Rational sun_tab(const Rational& arg) { return interpolate(kSunQuarter, 6, arg); }

Rational moon_equ(const Rational& anomaly) { return moon_tab(28 * anomaly); }

Rational sun_equ(const Rational& ms) { return sun_tab(12 * (ms - rat(1, 4))); }

Rational semi_true_date(const TraditionConfig& cfg, const Rational& d, long n) {
    return mean_date(cfg, d, n) + moon_equ(anomaly_moon(cfg, d, n)) / 60;
}

Rational true_date(const TraditionConfig& cfg, const Rational& d, long n) {
    Rational ms = cfg.karana_sun_in_true_date ? karana_mean_sun(cfg, d, n) : mean_sun(cfg, d, n);
    return semi_true_date(cfg, d, n) - sun_equ(ms) / 60;
}

Rational true_sun(const TraditionConfig& cfg, const Rational& d, long n) {
    Rational ms = mean_sun(cfg, d, n);
    return frac(ms - sun_equ(ms) / 1620);
}

long lunar_day_jd(const TraditionConfig& cfg, long d, long n) {
    return floor_long(true_date(cfg, Rational(d), n));
}

CalendarPeriod calendar_period(const TraditionConfig& cfg) {
    CalendarPeriod p;
    Int l = 1;
    for (const Rational* q : {&cfg.m1, &cfg.a1, &cfg.s1}) {
        Int d = q->get_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    p.months = l;
    p.days = cfg.m1 * Rational(l);
    p.years = cfg.s1 * Rational(l);
    return p;
}

}  // namespace tibcal
