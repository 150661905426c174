#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tibcal/rational.hpp"

namespace tibcal {

// Where a leap month sits relative to the regular month with the same number.
enum class LeapNumbering { follows_next, follows_previous };

struct TraditionConfig {
    std::string id;     // phugpa, tsurphu, mongolia, bhutan, karana
    std::string epoch;  // E806, E1927, ...
    long epoch_jd = 0;

    // Mean motions: days, revolutions, revolutions.
    Rational m0, m1, m2;
    Rational s0, s1, s2;
    Rational a0, a1, a2;

    long beta_x = 0;  // intercalation index of the epoch month
    long beta = 0;    // leap month M in Y iff 24(Y-Y0)+2M = beta or beta+1 (mod 65)
    // Corrected intercalation index values carried by a leap month.
    std::pair<int, int> leap_window{48, 49};
    LeapNumbering numbering = LeapNumbering::follows_next;
    long gamma = 0, gamma_x = 0;

    Rational p1;  // first definition point
    long Y0 = 0;
    long M0 = 3;

    std::optional<long> rahu_rd0;
    int weekday_name_offset = 0;

    // Tsurphu option: solar equation inside true_date uses karana s0/s1.
    bool karana_sun_in_true_date = false;

    Rational p0() const;  // p1 - 1/12
    std::string name() const { return id + " " + epoch; }
};

const std::vector<std::string>& tradition_ids();
std::vector<std::string> tradition_epochs(const std::string& id);

// Default epoch is the latest one.  Throws std::domain_error.
TraditionConfig get_tradition(const std::string& id, const std::string& epoch = "");

// Moves the epoch by k true months.  The new epoch month must again be
// month 3 of some year; throws std::domain_error otherwise.
TraditionConfig shift_epoch(const TraditionConfig& cfg, long k);

// a2 = (1 + a1)/30 instead of 1/28.
TraditionConfig with_exact_a2(TraditionConfig cfg);

// p_M = p0 + M/12 for M = 1..12.
std::vector<Rational> definition_points(const TraditionConfig& cfg);

// s0 with its integer part chosen so that p0 < s0 <= p0 + 1.
Rational normalized_s0(const TraditionConfig& cfg);

// Closed-form leap year constants derived from Y0 and beta.
long derived_gamma(const TraditionConfig& cfg);
long derived_gamma_x(const TraditionConfig& cfg);

// Reads a custom tradition from a JSON file; fractions are "num/den"
// strings.  Throws std::invalid_argument on schema errors.
TraditionConfig load_tradition_file(const std::string& path);
TraditionConfig parse_tradition_json(const std::string& text);

}  // namespace tibcal
