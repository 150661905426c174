#include "tibcal/almanac.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "tibcal/astro.hpp"

namespace tibcal::detail {
extern const char* const kAlmanacNamesJson;
}

namespace tibcal {

namespace {

struct NameTables {
    std::vector<NamePair> mansions, yogas, changing, fixed;
    std::vector<std::string> mansion_elements;
    std::vector<std::pair<std::string, std::string>> elemental_yogas;
};

std::vector<NamePair> read_pairs(const nlohmann::json& j, const char* key, std::size_t count) {
    std::vector<NamePair> out;
    for (const auto& e : j.at(key)) out.push_back({e.at(0).get<std::string>(), e.at(1).get<std::string>()});
    if (out.size() != count) throw std::logic_error(std::string("name table size: ") + key);
    return out;
}

const NameTables& tables() {
    static const NameTables t = [] {
        auto j = nlohmann::json::parse(detail::kAlmanacNamesJson);
        NameTables t;
        t.mansions = read_pairs(j, "mansions", 27);
        t.yogas = read_pairs(j, "yogas", 27);
        t.changing = read_pairs(j, "karanas_changing", 7);
        t.fixed = read_pairs(j, "karanas_fixed", 4);
        t.mansion_elements = j.at("mansion_elements").get<std::vector<std::string>>();
        if (t.mansion_elements.size() != 27) throw std::logic_error("mansion element table size");
        for (const auto& e : j.at("elemental_yogas"))
            t.elemental_yogas.push_back({e.at(0).get<std::string>(), e.at(1).get<std::string>()});
        if (t.elemental_yogas.size() != 10) throw std::logic_error("elemental yoga table size");
        return t;
    }();
    return t;
}

const TraditionConfig& karana_cfg() {
    static const TraditionConfig k = get_tradition("karana");
    return k;
}

// Moon at the start of calendar day jd for the lunar day (n, D) labelling it.
Rational moon_day_start(const TraditionConfig& cfg, long n, int D, bool first_of_repeated) {
    Rational end = frac(true_sun(cfg, Rational(D), n) + rat(D, 30));
    if (first_of_repeated) return frac(end - rat(1, 27));
    return frac(end - frac(true_date(cfg, Rational(D), n)) / 27);
}

Rational td_at(const TraditionConfig& cfg, long L) {
    long n = floor_long(rat(L, 30));
    return true_date(cfg, Rational(L - 30 * n + 1), n);
}

AlmanacDayRecord build(const TraditionConfig& cfg, long jd, long n, int D, bool first,
                       DayStatus status) {
    AlmanacDayRecord r;
    r.jd = jd;
    r.civil = civil_from_jd(jd);
    r.date.month = month_from_count(cfg, n);
    r.date.day = D;
    r.date.leap_day = first;
    r.status = status;
    r.n = n;
    r.first_of_repeated = first;

    Rational td = true_date(cfg, Rational(D), n);
    r.true_weekday = first ? Rational(day_of_week(jd) + 1) : mod(td + 2, Rational(7));
    r.true_sun = true_sun(cfg, Rational(D), n);
    r.moon_long_lunar_day_end = frac(r.true_sun + rat(D, 30));
    r.moon_long_day_start = moon_day_start(cfg, n, D, first);
    r.mansion = floor_long(27 * r.moon_long_day_start);
    r.yoga_longitude = frac(r.moon_long_day_start + r.true_sun);
    r.yoga = floor_long(27 * r.yoga_longitude);
    if (!first) r.mean_sun = frac(mean_sun(cfg, Rational(D), n));

    // Karana in progress at the instant jd, the start of the calendar day.
    long L = 30 * n + D - 1;
    while (td_at(cfg, L - 1) > jd) --L;
    while (td_at(cfg, L) <= jd) ++L;
    Rational mid = (td_at(cfg, L - 1) + td_at(cfg, L)) / 2;
    long ln = floor_long(rat(L, 30));
    r.karana = karana_of_halfday(static_cast<int>(L - 30 * ln + 1), Rational(jd) < mid ? 1 : 2);

    const TraditionConfig& k = karana_cfg();
    bool kfirst = false;
    LunarDay kl = lunar_day_of_jd(k, jd, &kfirst);
    r.karana_system_moon_long = moon_day_start(k, kl.n, kl.day, kfirst);
    return r;
}

}  // namespace

const std::vector<NamePair>& mansion_names() { return tables().mansions; }
const std::vector<NamePair>& yoga_names() { return tables().yogas; }
const std::vector<NamePair>& changing_karana_names() { return tables().changing; }
const std::vector<NamePair>& fixed_karana_names() { return tables().fixed; }
const std::vector<std::string>& mansion_elements() { return tables().mansion_elements; }
const std::vector<std::pair<std::string, std::string>>& elemental_yoga_pairs() {
    return tables().elemental_yogas;
}

KaranaInfo karana_of_halfday(int day, int half) {
    if (day < 1 || day > 30) throw std::invalid_argument("lunar day must be 1..30");
    if (half != 1 && half != 2) throw std::invalid_argument("half must be 1 or 2");
    int H = 2 * day - 2 + half;
    KaranaInfo k{H, false, 0, nullptr};
    switch (H) {
        case 1: k.fixed = true; k.index = 1; break;
        case 58: k.fixed = true; k.index = 2; break;
        case 59: k.fixed = true; k.index = 3; break;
        case 60: k.fixed = true; k.index = 4; break;
        default: k.index = static_cast<int>(amod(H - 1, 7));
    }
    k.name = k.fixed ? &fixed_karana_names()[k.index - 1] : &changing_karana_names()[k.index - 1];
    return k;
}

std::string AlmanacDayRecord::true_weekday_str() const {
    if (first_of_repeated) return std::to_string(day_of_week(jd)) + ";60,0";
    return to_mixed_radix(true_weekday, {60, 60, 6, 707}).str(3);
}

AlmanacDayRecord day_record(const TraditionConfig& cfg, long jd) {
    bool first = false;
    LunarDay ld = lunar_day_of_jd(cfg, jd, &first);
    return build(cfg, jd, ld.n, ld.day, first, day_status(cfg, ld.n, ld.day));
}

AlmanacDayRecord day_record(const TraditionConfig& cfg, const TibetanDate& date) {
    DayResult r = jd_from_tibetan(cfg, date);
    return build(cfg, r.jd, month_count(cfg, date.month), date.day, date.leap_day, r.status);
}

std::vector<AlmanacDayRecord> month_records(const TraditionConfig& cfg, const MonthLabel& m) {
    auto [first, last] = month_bounds(cfg, m);
    std::vector<AlmanacDayRecord> out;
    for (long jd = first; jd <= last; ++jd) out.push_back(day_record(cfg, jd));
    return out;
}

long karana_month_count(const TraditionConfig& cfg, long n) {
    const TraditionConfig& k = karana_cfg();
    return n + floor_long((cfg.m0 - k.m0) / k.m1 + rat(1, 2));
}

MonthHeader month_header(const TraditionConfig& cfg, const MonthLabel& m) {
    MonthHeader h;
    h.label = m;
    h.true_month = true_month(cfg, m);
    long n = h.true_month.n;
    h.mean_date = mean_date(cfg, 0, n);
    h.mean_sun = frac(mean_sun(cfg, 0, n));
    h.anomaly = anomaly_moon(cfg, 0, n);

    const TraditionConfig& k = karana_cfg();
    long kn = karana_month_count(cfg, n);
    h.karana_label = month_from_count(k, kn);
    h.karana_true_month = true_month(k, h.karana_label);
    h.karana_mean_date = mean_date(k, 0, kn);
    h.karana_mean_sun = frac(mean_sun(k, 0, kn));
    h.karana_anomaly = anomaly_moon(k, 0, kn);
    return h;
}

const char* special_kind_name(SpecialKind k) {
    switch (k) {
        case SpecialKind::sign_entry: return "sign_entry";
        case SpecialKind::sgang_point: return "sgang";
        case SpecialKind::dbugs_midpoint: return "dbugs";
        case SpecialKind::extra_longitude: return "extra";
        case SpecialKind::true_sun_zero: return "true_sun_zero";
    }
    return "?";
}

std::vector<long> default_extra_longitudes() { return {66, 132, 147, 235}; }

namespace {

SpecialDay make_special(const TraditionConfig& cfg, SpecialKind kind, const Rational& t) {
    SpecialDay s;
    s.kind = kind;
    s.lunar_days = t;
    s.longitude = frac(mean_sun(cfg, t, 0));
    s.n = floor_long(t / 30);
    s.lunar_date = t - 30 * s.n;
    s.month = month_from_count(cfg, s.n);
    s.date = mean_date(cfg, t, 0);
    s.jd = floor_long(s.date);
    return s;
}

bool by_time(const SpecialDay& a, const SpecialDay& b) {
    if (a.lunar_days != b.lunar_days) return a.lunar_days < b.lunar_days;
    return a.kind < b.kind;
}

}  // namespace

std::vector<SpecialDay> special_days(const TraditionConfig& cfg, long Y,
                                     const std::vector<long>& extra_degrees) {
    Rational lo = 30 * first_month_count(cfg, Y);
    Rational hi = 30 * first_month_count(cfg, Y + 1);
    Rational sun_lo = mean_sun(cfg, lo, 0), sun_hi = mean_sun(cfg, hi, 0);

    std::vector<std::pair<SpecialKind, long>> targets;
    for (long k = 0; k < 12; ++k) {
        targets.push_back({SpecialKind::sign_entry, 30 * k});
        targets.push_back({SpecialKind::sgang_point, 30 * k + 8});
        targets.push_back({SpecialKind::dbugs_midpoint, 30 * k + 23});
    }
    for (long deg : extra_degrees) targets.push_back({SpecialKind::extra_longitude, mod(deg, 360)});

    std::vector<SpecialDay> out;
    for (auto [kind, deg] : targets) {
        Rational lambda = rat(deg, 360);
        // Linear longitudes lambda + j inside [sun_lo, sun_hi).
        for (Int j = ceil(sun_lo - lambda); lambda + Rational(j) < sun_hi; ++j) {
            Rational t = (lambda + Rational(j) - cfg.s0) / cfg.s2;
            out.push_back(make_special(cfg, kind, t));
        }
    }
    std::sort(out.begin(), out.end(), by_time);
    return out;
}

bool traditional_rule_exact(const TraditionConfig& cfg) {
    Rational x = 12 * (cfg.s0 + cfg.beta_x * cfg.s1 / 65);
    return x.get_den() == 1 && cfg.s2 * 67 / 65 == rat(1, 360);
}

std::vector<SpecialDay> special_days_traditional(const TraditionConfig& cfg, long Y) {
    long n_lo = first_month_count(cfg, Y), n_hi = first_month_count(cfg, Y + 1);
    Rational lo = 30 * n_lo, hi = 30 * n_hi;
    const Rational sgang = 8 + rat(16, 65), dbugs = 7 + rat(14, 65);
    std::vector<SpecialDay> out;
    for (long n = n_lo - 1; n <= n_hi; ++n) {
        TrueMonth tm = true_month(cfg, month_from_count(cfg, n));
        Rational t = 30 * n + Rational(6 * tm.ix, 13);
        std::pair<SpecialKind, Rational> cands[] = {{SpecialKind::sign_entry, t},
                                                    {SpecialKind::sgang_point, t + sgang},
                                                    {SpecialKind::dbugs_midpoint, t - dbugs}};
        for (auto& [kind, x] : cands) {
            if (x < lo || x >= hi) continue;
            bool dup = std::any_of(out.begin(), out.end(), [&](const SpecialDay& s) {
                return s.kind == kind && s.lunar_days == x;
            });
            if (!dup) out.push_back(make_special(cfg, kind, x));
        }
    }
    std::sort(out.begin(), out.end(), by_time);
    return out;
}

namespace {

// Unreduced true solar longitude as a function of lunar days since month 0.
Rational linear_true_sun(const TraditionConfig& cfg, const Rational& t) {
    Rational ms = mean_sun(cfg, t, 0);
    return ms - sun_equ(ms) / 1620;
}

}  // namespace

SpecialDay true_sun_zero(const TraditionConfig& cfg, long Y) {
    long lo = 30 * first_month_count(cfg, Y), hi = 30 * first_month_count(cfg, Y + 1);
    for (long L = lo; L < hi; ++L) {
        Rational a = linear_true_sun(cfg, Rational(L)), b = linear_true_sun(cfg, Rational(L + 1));
        // An integer longitude in (a, b] is a crossing of 0.
        Int target = floor(b);
        if (Rational(target) <= a) continue;
        // Pieces of linearity: the solar table argument 12 (ms - 1/4) is an integer.
        std::vector<Rational> cuts{Rational(L)};
        Rational ms_a = mean_sun(cfg, Rational(L), 0), ms_b = mean_sun(cfg, Rational(L + 1), 0);
        for (Int j = floor(12 * (ms_a - rat(1, 4))) + 1; Rational(j) < 12 * (ms_b - rat(1, 4)); ++j)
            cuts.push_back((Rational(j) / 12 + rat(1, 4) - cfg.s0) / cfg.s2);
        cuts.push_back(Rational(L + 1));
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            Rational fa = linear_true_sun(cfg, cuts[i]), fb = linear_true_sun(cfg, cuts[i + 1]);
            if (fa <= Rational(target) && Rational(target) <= fb && fa != fb) {
                Rational t = cuts[i] + (Rational(target) - fa) * (cuts[i + 1] - cuts[i]) / (fb - fa);
                SpecialDay s = make_special(cfg, SpecialKind::true_sun_zero, t);
                s.longitude = frac(linear_true_sun(cfg, t));
                s.date = true_date(cfg, s.lunar_date, s.n);
                s.jd = floor_long(s.date);
                return s;
            }
        }
    }
    throw std::domain_error("true sun does not pass longitude 0 in year " + std::to_string(Y));
}

long bhutan_winter_solstice(const TraditionConfig& cfg, long Y) {
    Rational jan1 = jd_from_gregorian(Y, 1, 1);
    Rational t0 = (jan1 - cfg.m0) / cfg.m2;
    Rational lambda = rat(250, 360);
    // The crossing of lambda + j nearest to 1 January.
    Int j = floor(mean_sun(cfg, t0, 0) - lambda + rat(1, 2));
    Rational t = (lambda + Rational(j) - cfg.s0) / cfg.s2;
    return floor_long(mean_date(cfg, t, 0));
}

long bhutan_winter_solstice(long Y) { return bhutan_winter_solstice(get_tradition("bhutan"), Y); }

}  // namespace tibcal
