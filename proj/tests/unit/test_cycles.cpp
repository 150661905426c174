#include <stdexcept>

#include "doctest.h"
#include "tibcal/cycles.hpp"

using namespace tibcal;

TEST_CASE("year names") {
    CHECK(year_name(1027).label() == "Fire-Female-Rabbit");
    CHECK(year_name(2017).label() == "Fire-Female-Bird");
    CHECK(year_name(1984).label() == "Wood-Male-Mouse");
    CHECK(year_name(1027).prabhava_cycle == 1);
    CHECK(year_name(1027).prabhava_index == 1);
    CHECK(year_name(2017).regnal_year == 2144);
}

TEST_CASE("year names repeat every 60 years") {
    for (long Y = 900; Y < 1100; ++Y) {
        YearName a = year_name(Y), b = year_name(Y + 60);
        CHECK(a.label() == b.label());
        CHECK(a.prabhava_index == b.prabhava_index);
        CHECK(b.prabhava_cycle == a.prabhava_cycle + 1);
        CHECK(year_from_prabhava(a.prabhava_cycle, a.prabhava_index) == Y);
    }
    CHECK_THROWS_AS(year_from_prabhava(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(year_from_prabhava(1, 61), std::invalid_argument);
}

TEST_CASE("element, gender and animal follow the cycle index") {
    for (long Y = 1984; Y < 2044; ++Y) {
        YearName n = year_name(Y);
        long ci = Y - 1983;
        CHECK(n.chinese_cycle_index == ci);
        CHECK(n.animal == (ci - 1) % 12 + 1);
        CHECK(n.gender == (ci % 2 == 1 ? Gender::male : Gender::female));
        CHECK(static_cast<long>(n.element) == (ci - 1) % 10 / 2 + 1);
    }
}
