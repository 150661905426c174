#include <map>
#include <stdexcept>

#include "doctest.h"
#include "tibcal/almanac.hpp"
#include "tibcal/astro.hpp"

using namespace tibcal;

TEST_CASE("karanas partition the sixty half days") {
    int fixed = 0;
    std::map<int, int> changing;
    int prev = 0;
    for (int D = 1; D <= 30; ++D) {
        for (int half = 1; half <= 2; ++half) {
            KaranaInfo k = karana_of_halfday(D, half);
            CHECK(k.half_day == 2 * D - 2 + half);
            REQUIRE(k.name != nullptr);
            if (k.fixed) {
                ++fixed;
                CHECK(k.index == (k.half_day == 1 ? 1 : k.half_day - 56));
            } else {
                ++changing[k.index];
                if (prev) CHECK(k.index == prev % 7 + 1);
                prev = k.index;
            }
        }
    }
    CHECK(fixed == 4);
    CHECK(changing.size() == 7);
    for (auto [i, c] : changing) CHECK(c == 8);
    CHECK_THROWS_AS(karana_of_halfday(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(karana_of_halfday(1, 3), std::invalid_argument);
}

TEST_CASE("name tables") {
    CHECK(mansion_names().size() == 27);
    CHECK(yoga_names().size() == 27);
    CHECK(changing_karana_names().size() == 7);
    CHECK(fixed_karana_names().size() == 4);
    CHECK(mansion_elements().size() == 27);
    CHECK(elemental_yoga_pairs().size() == 10);
}

TEST_CASE("day records") {
    TraditionConfig c = get_tradition("phugpa");
    long lo = jd_from_gregorian(2012, 1, 1);
    for (long jd = lo; jd < lo + 400; ++jd) {
        AlmanacDayRecord r = day_record(c, jd);
        CHECK(r.jd == jd);
        CHECK(r.mansion >= 0);
        CHECK(r.mansion < 27);
        CHECK(r.yoga >= 0);
        CHECK(r.yoga < 27);
        CHECK(r.karana.half_day >= 1);
        CHECK(r.karana.half_day <= 60);
        long wd = floor_long(r.true_weekday);
        CHECK(wd == day_of_week(jd) + (r.first_of_repeated ? 1 : 0));
        CHECK(r.mean_sun.has_value() == !r.first_of_repeated);
        if (!r.first_of_repeated)
            CHECK(r.true_weekday == mod(true_date(c, r.date.day, r.n) + 2, Rational(7)));
    }
}

TEST_CASE("month records cover the month once per calendar day") {
    TraditionConfig c = get_tradition("phugpa");
    MonthLabel m{2012, 2, false};
    auto recs = month_records(c, m);
    auto [a, b] = month_bounds(c, m);
    REQUIRE(static_cast<long>(recs.size()) == b - a + 1);
    for (std::size_t i = 0; i < recs.size(); ++i) CHECK(recs[i].jd == a + static_cast<long>(i));
}

TEST_CASE("special days") {
    for (const auto& id : {"phugpa", "tsurphu", "mongolia", "bhutan"}) {
        TraditionConfig c = get_tradition(id);
        for (long Y = 2010; Y <= 2014; ++Y) {
            auto days = special_days(c, Y);
            int signs = 0;
            for (std::size_t i = 0; i < days.size(); ++i) {
                if (days[i].kind == SpecialKind::sign_entry) ++signs;
                if (i) CHECK(days[i - 1].date < days[i].date);
                CHECK(days[i].jd == floor_long(days[i].date));
                CHECK(frac(mean_sun(c, days[i].lunar_date, days[i].n)) == days[i].longitude);
            }
            CHECK(signs >= 11);
            CHECK(signs <= 13);
        }
    }
}

TEST_CASE("traditional rule") {
    CHECK(traditional_rule_exact(get_tradition("phugpa")));
    CHECK(traditional_rule_exact(get_tradition("mongolia")));
    CHECK_FALSE(traditional_rule_exact(get_tradition("tsurphu")));
    CHECK_FALSE(traditional_rule_exact(get_tradition("bhutan")));
    TraditionConfig c = get_tradition("phugpa");
    for (long Y = 2000; Y < 2010; ++Y) {
        std::map<long, Rational> closed;
        for (const auto& d : special_days(c, Y, {}))
            if (d.kind != SpecialKind::extra_longitude) closed[d.jd] = d.longitude;
        auto trad = special_days_traditional(c, Y);
        CHECK(trad.size() == closed.size());
        for (const auto& d : trad) {
            REQUIRE(closed.count(d.jd) == 1);
            CHECK(closed[d.jd] == d.longitude);
        }
    }
}

TEST_CASE("true sun zero lies near the mean sign entry") {
    TraditionConfig c = get_tradition("phugpa");
    for (long Y = 2000; Y < 2020; ++Y) {
        SpecialDay z = true_sun_zero(c, Y);
        CHECK(z.kind == SpecialKind::true_sun_zero);
        CHECK(frac(true_sun(c, z.lunar_date, z.n)) == 0);
        for (const auto& d : special_days(c, Y, {})) {
            if (d.kind == SpecialKind::sign_entry && d.longitude == 0) {
                Rational gap = d.date - z.date;
                CHECK(gap > 0);
                CHECK(gap < 4);
            }
        }
    }
}

TEST_CASE("Bhutan winter solstice") {
    CHECK(gregorian_from_jd(bhutan_winter_solstice(2019)).str() == "2019-01-02");
    CHECK(gregorian_from_jd(bhutan_winter_solstice(2020)).str() == "2020-01-03");
}
