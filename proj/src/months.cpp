#include "tibcal/months.hpp"

#include <cstdio>
#include <stdexcept>

namespace tibcal {

std::string MonthLabel::str() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%ld-%02d%s", year, month, leap ? "L" : "");
    return buf;
}

long solar_month_count(const TraditionConfig& cfg, long Y, int M) {
    return 12 * (Y - cfg.Y0) + M - cfg.M0;
}

namespace {

// x = 12(Y - Y0) + M for the month with count n.
long label_index(const TraditionConfig& cfg, long n) {
    return ceil_long(rat(65 * n + cfg.beta, 67));
}

// Counts n with label_index(n) == x form the range [lo, hi].
std::pair<long, long> count_range(const TraditionConfig& cfg, long x) {
    long hi = floor_long(rat(67 * x - cfg.beta, 65));
    long lo = floor_long(rat(67 * (x - 1) - cfg.beta, 65)) + 1;
    return {lo, hi};
}

void check_month(int M) {
    if (M < 1 || M > 12) throw std::invalid_argument("month must be 1..12");
}

}  // namespace

TrueMonth true_month(const TraditionConfig& cfg, long Y, int M, bool leap) {
    check_month(M);
    long x = 12 * (Y - cfg.Y0) + M;
    auto [lo, hi] = count_range(cfg, x);
    bool has_leap = hi > lo;
    if (leap && !has_leap)
        throw std::domain_error("no leap month " + std::to_string(M) + " in " + std::to_string(Y));
    long n;
    if (!has_leap)
        n = hi;
    else if (cfg.numbering == LeapNumbering::follows_next)
        n = leap ? lo : hi;
    else
        n = leap ? hi : lo;

    long MM = solar_month_count(cfg, Y, M);
    long raw = mod(67 * MM + cfg.beta_x, 65);
    long base = floor_long(rat(67 * MM + cfg.beta_x, 65));
    long ix = n - base == 1 ? raw + 2 : raw;
    return {n, ix};
}

TrueMonth true_month(const TraditionConfig& cfg, const MonthLabel& m) {
    return true_month(cfg, m.year, m.month, m.leap);
}

long month_count(const TraditionConfig& cfg, const MonthLabel& m) {
    return true_month(cfg, m).n;
}

bool is_leap_month(const TraditionConfig& cfg, long Y, int M) {
    check_month(M);
    long r = mod(24 * (Y - cfg.Y0) + 2 * M - cfg.beta, 65);
    return r == 0 || r == 1;
}

MonthLabel month_from_count(const TraditionConfig& cfg, long n) {
    long x = label_index(cfg, n);
    MonthLabel m;
    m.month = static_cast<int>(amod(x, 12));
    m.year = ceil_long(rat(x, 12)) - 1 + cfg.Y0;
    long neighbour = cfg.numbering == LeapNumbering::follows_next ? n + 1 : n - 1;
    m.leap = label_index(cfg, neighbour) == x;
    return m;
}

bool is_leap_year(const TraditionConfig& cfg, long Y) {
    return mod(24 * Y + cfg.gamma_x, 65) >= 41;
}

std::optional<int> leap_month_of_year(const TraditionConfig& cfg, long Y) {
    long M = floor_long(33 - rat(mod(24 * Y + cfg.gamma_x, 65), 2));
    if (M > 12) return std::nullopt;
    return static_cast<int>(M);
}

long leap_years_in_range(const TraditionConfig& cfg, long Y1, long Y2) {
    if (Y1 > Y2) throw std::invalid_argument("empty year range");
    return floor_long(rat(24 * (Y2 + 1) + cfg.gamma_x, 65)) -
           floor_long(rat(24 * Y1 + cfg.gamma_x, 65));
}

namespace {

// The month rule works with the regular solar motion even for karana,
// whose own s1 is used only for longitudes.
const Rational& month_s1() {
    static const Rational s1 = rat(65, 804);
    return s1;
}

Rational effective_alpha(const TraditionConfig& cfg) {
    Rational a = dp_alpha(cfg);
    if (cfg.numbering == LeapNumbering::follows_previous) a -= rat(2, 67);
    return a;
}

long dp_index(const Rational& alpha, long n) {
    Rational v = 12 * month_s1() * n + alpha;
    if (v.get_den() == 1)
        throw std::logic_error("mean sun exactly on a definition point at month " +
                               std::to_string(n));
    return ceil_long(v);
}

}  // namespace

Rational dp_alpha(const TraditionConfig& cfg) { return 12 * (normalized_s0(cfg) - cfg.p0()); }

long dp_beta(const TraditionConfig& cfg) {
    long b = ceil_long(67 * dp_alpha(cfg));
    return cfg.numbering == LeapNumbering::follows_previous ? b - 2 : b;
}

MonthLabel dp_month_assign(const TraditionConfig& cfg, long n) {
    Rational alpha = effective_alpha(cfg);
    long x = dp_index(alpha, n);
    MonthLabel m;
    m.month = static_cast<int>(amod(x, 12));
    m.year = cfg.Y0 + (x - m.month) / 12;
    long neighbour = cfg.numbering == LeapNumbering::follows_next ? n + 1 : n - 1;
    m.leap = dp_index(alpha, neighbour) == x;
    return m;
}

}  // namespace tibcal
