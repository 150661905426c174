#include "tibcal/planets.hpp"

#include <cctype>
#include <stdexcept>

#include "tibcal/astro.hpp"

namespace tibcal {

namespace {

const PlanetSpec kSpecs[] = {
    {Planet::mercury, "mercury", 8797, 4639, 8797, rat(11, 18), 100, true,
     {0, 10, 17, 20}, {0, 16, 32, 47, 61, 74, 85, 92, 97, 97, 93, 82, 62, 34}},
    {Planet::venus, "venus", 2247, 301, 749, rat(2, 9), 10, true,
     {0, 5, 9, 10}, {0, 25, 50, 75, 99, 123, 145, 167, 185, 200, 208, 202, 172, 83}},
    {Planet::mars, "mars", 687, 157, 229, rat(19, 54), 1, false,
     {0, 25, 43, 50}, {0, 24, 47, 70, 93, 114, 135, 153, 168, 179, 182, 171, 133, 53}},
    {Planet::jupiter, "jupiter", 4332, 3964, 361, rat(4, 9), 1, false,
     {0, 11, 20, 23}, {0, 10, 20, 29, 37, 43, 49, 51, 52, 49, 43, 34, 23, 7}},
    {Planet::saturn, "saturn", 10766, 6286, 5383, rat(2, 3), 1, false,
     {0, 22, 37, 43}, {0, 6, 11, 16, 20, 24, 26, 28, 28, 26, 22, 17, 11, 3}},
};

// tab(6 - i) = tab(i), tab(6 + i) = -tab(i)
long equ_knot(const PlanetSpec& s, long i) {
    i = mod(i, 12);
    if (i >= 6) return -equ_knot(s, i - 6);
    return s.equ[i > 3 ? 6 - i : i];
}

// tab(27 - i) = -tab(i), tab(27 + i) = tab(i)
long corr_knot(const PlanetSpec& s, long i) {
    i = mod(i, 27);
    return i <= 13 ? s.corr[i] : -s.corr[27 - i];
}

template <class Knot>
Rational interpolate(const Knot& knot, const Rational& arg) {
    auto [i, f] = floor_frac(arg);
    long k = to_long(i);
    long a = knot(k), b = knot(k + 1);
    return a + f * (b - a);
}

}  // namespace

const std::vector<Planet>& planets() {
    static const std::vector<Planet> all{Planet::mercury, Planet::venus, Planet::mars,
                                         Planet::jupiter, Planet::saturn};
    return all;
}

PlanetSpec planet_spec(Planet p) { return kSpecs[static_cast<int>(p)]; }

Planet parse_planet(const std::string& name) {
    std::string lower = name;
    for (auto& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    for (const auto& s : kSpecs)
        if (s.name == lower) return s.planet;
    throw std::invalid_argument("unknown planet: " + name);
}

long general_day(long jd) { return jd - kPlanetEpochJd; }

long general_day_traditional(const TibetanDate& date) {
    static const TraditionConfig cfg = get_tradition("phugpa", "E1927");
    long n = month_count(cfg, date.month);
    long ld = 30 * n + date.day;
    long gd = ceil_long(rat(11135, 11312) * ld - rat(199, 5656));
    // The true weekday fixes the remaining error of at most one day.
    long wd = floor_long(mod(true_date(cfg, Rational(date.day), n) + 2, Rational(7)));
    if (date.leap_day) wd = mod(wd - 1, 7);
    const long wd0 = 6;
    long have = mod(gd + wd0, 7);
    if (mod(have - wd, 7) == 1) return gd - 1;
    if (mod(wd - have, 7) == 1) return gd + 1;
    if (have != wd) throw std::logic_error("general day off by more than one");
    return gd;
}

long particular_day(const PlanetSpec& spec, long gd) {
    return mod(spec.multiplier * (gd % spec.R) + spec.pd0, spec.R);
}

Rational planet_mean_solar(long gd) {
    return frac(rat(18382, 6714405) * gd + 1 - rat(458772, 6714405));
}

Rational planet_equ_tab(const PlanetSpec& spec, const Rational& arg) {
    return interpolate([&](long i) { return equ_knot(spec, i); }, arg);
}

Rational planet_corr_tab(const PlanetSpec& spec, const Rational& arg) {
    return interpolate([&](long i) { return corr_knot(spec, i); }, arg);
}

PlanetPosition planet_position(const PlanetSpec& spec, long gd) {
    PlanetPosition p;
    p.general_day = gd;
    p.particular_day = particular_day(spec, gd);
    p.mean_helio = rat(p.particular_day, spec.R);
    p.mean_solar = planet_mean_solar(gd);
    p.mean_slow = spec.inner ? p.mean_solar : p.mean_helio;
    p.step = spec.inner ? p.mean_helio : p.mean_solar;
    p.anomaly = frac(p.mean_slow - spec.birth_sign);
    p.equ = planet_equ_tab(spec, 12 * p.anomaly);
    p.true_slow = frac(p.mean_slow - p.equ / 1620);
    p.diff = frac(p.step - p.true_slow);
    p.corr = planet_corr_tab(spec, 27 * p.diff);
    p.fast = frac(p.true_slow + p.corr / 1620);
    return p;
}

RahuPosition rahu_from_count(long x) {
    RahuPosition r;
    r.x = x;
    r.head = frac(rat(-x, 6900));
    r.tail = frac(r.head + rat(1, 2));
    return r;
}

RahuPosition rahu(const TraditionConfig& cfg, const TibetanDate& date) {
    if (!cfg.rahu_rd0)
        throw std::domain_error("no Rahu epoch value for " + cfg.name());
    long n = month_count(cfg, date.month);
    return rahu_from_count(30 * (n + *cfg.rahu_rd0) + date.day);
}

Rational joint_period_years() {
    const TraditionConfig cfg = get_tradition("phugpa", "E1927");
    CalendarPeriod cal = calendar_period(cfg);
    // Rahu needs whole 230 month cycles.
    Int months = cal.months;
    mpz_lcm_ui(months.get_mpz_t(), months.get_mpz_t(), 230);
    Rational days = cfg.m1 * Rational(months);
    if (days.get_den() != 1) throw std::logic_error("calendar period is not whole days");
    Int d = days.get_num();
    for (const auto& s : kSpecs) {
        // multiplier * gd mod R repeats after R / gcd(multiplier, R) days.
        Int g;
        Int R = s.R, m = s.multiplier;
        mpz_gcd(g.get_mpz_t(), R.get_mpz_t(), m.get_mpz_t());
        Int per = R / g;
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), per.get_mpz_t());
    }
    Int solar = rat(18382, 6714405).get_den();
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), solar.get_mpz_t());
    return Rational(d) / cfg.m1 * cfg.s1;
}

}  // namespace tibcal
