#pragma once

#include <array>
#include <string>
#include <vector>

#include "tibcal/days.hpp"

namespace tibcal {

enum class Planet { mercury, venus, mars, jupiter, saturn };

struct PlanetSpec {
    Planet planet;
    std::string name;
    long R;           // particular day modulus
    long pd0;         // particular day at the epoch
    long r;           // last display radix
    Rational birth_sign;
    long multiplier;  // 100, 10 or 1
    bool inner;
    std::array<long, 4> equ;    // knots 0..3
    std::array<long, 14> corr;  // knots 0..13
};

const std::vector<Planet>& planets();
// Epoch E1927 constants; copy and edit pd0 for other epochs.
PlanetSpec planet_spec(Planet p);
Planet parse_planet(const std::string& name);  // throws std::invalid_argument

constexpr long kPlanetEpochJd = 2424972;

long general_day(long jd);

// General day of the calendar day on which the given lunar day ends,
// from the lunar day count and the true weekday.  Uses the Phugpa
// E1927 constants.
long general_day_traditional(const TibetanDate& date);

long particular_day(const PlanetSpec& spec, long general_day);

// Mean solar longitude at the end of the calendar day.
Rational planet_mean_solar(long general_day);

// Extended tables with linear interpolation.
Rational planet_equ_tab(const PlanetSpec& spec, const Rational& arg);   // period 12
Rational planet_corr_tab(const PlanetSpec& spec, const Rational& arg);  // period 27

struct PlanetPosition {
    long general_day;
    long particular_day;
    Rational mean_helio;
    Rational mean_solar;
    Rational mean_slow;
    Rational step;
    Rational anomaly;
    Rational equ;
    Rational true_slow;
    Rational diff;
    Rational corr;
    Rational fast;
};

PlanetPosition planet_position(const PlanetSpec& spec, long general_day);

struct RahuPosition {
    long x;  // lunar days since the head was at longitude 0
    Rational head;
    Rational tail;
};

RahuPosition rahu_from_count(long x);
// Throws std::domain_error when the configuration has no Rahu epoch value.
RahuPosition rahu(const TraditionConfig& cfg, const TibetanDate& date);

// Years after which the calendar and all planets repeat together.
Rational joint_period_years();

}  // namespace tibcal
