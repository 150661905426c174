#pragma once

#include <optional>
#include <string>

#include "tibcal/tradition.hpp"

namespace tibcal {

struct MonthLabel {
    long year = 0;
    int month = 1;  // 1..12
    bool leap = false;

    bool operator==(const MonthLabel&) const = default;
    std::string str() const;  // "2000-01L"
};

struct TrueMonth {
    long n = 0;   // true month count
    long ix = 0;  // corrected intercalation index, 0..66
};

long solar_month_count(const TraditionConfig& cfg, long Y, int M);

// Throws std::domain_error when leap is requested for a regular-only month.
TrueMonth true_month(const TraditionConfig& cfg, long Y, int M, bool leap);
TrueMonth true_month(const TraditionConfig& cfg, const MonthLabel& m);
long month_count(const TraditionConfig& cfg, const MonthLabel& m);

bool is_leap_month(const TraditionConfig& cfg, long Y, int M);
MonthLabel month_from_count(const TraditionConfig& cfg, long n);

bool is_leap_year(const TraditionConfig& cfg, long Y);
std::optional<int> leap_month_of_year(const TraditionConfig& cfg, long Y);
// Throws std::invalid_argument when Y1 > Y2.
long leap_years_in_range(const TraditionConfig& cfg, long Y1, long Y2);

// Month naming from the mean sun crossing the definition points.
// Independent of the beta formulas above and expected to agree with them.
Rational dp_alpha(const TraditionConfig& cfg);
long dp_beta(const TraditionConfig& cfg);
// Throws std::logic_error if the mean sun sits exactly on a definition point.
MonthLabel dp_month_assign(const TraditionConfig& cfg, long n);

}  // namespace tibcal
