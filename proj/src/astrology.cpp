#include "tibcal/astrology.hpp"

#include <algorithm>
#include <stdexcept>

#include "tibcal/almanac.hpp"
#include "tibcal/days.hpp"

namespace tibcal {

namespace {

const Trigram kTrigrams[] = {
    {1, "li", "li", "S", "fire"},         {2, "khon", "kun", "SW", "earth"},
    {3, "dwa", "dui", "W", "iron"},       {4, "khen", "qian", "NW", "sky"},
    {5, "kham", "kan", "N", "water"},     {6, "gin", "gen", "NE", "mountain"},
    {7, "zin", "zhen", "E", "wood"},      {8, "zon", "xun", "SE", "wind"},
};

const NineNumber kNine[] = {
    {1, "white", "iron", "N"},       {2, "black", "water", "SW"}, {3, "blue", "water", "E"},
    {4, "green", "wood", "SE"},      {5, "yellow", "earth", "Centre"},
    {6, "white", "iron", "NW"},      {7, "red", "fire", "W"},
    {8, "white", "iron", "NE"},      {9, "red", "fire", "S"},
};

using E = Element;

// Life element by animal, Mouse first.
const E kLife[] = {E::water, E::earth, E::wood, E::wood,  E::earth, E::fire,
                   E::fire,  E::earth, E::iron, E::iron,  E::earth, E::water};
// Fortune element by (Y - 3) amod 4.
const E kFortune[] = {E::wood, E::water, E::iron, E::fire};
// Intermediate body element x by (Y - 3) amod 6.
const E kBodyX[] = {E::wood, E::wood, E::water, E::water, E::iron, E::iron};
// Body element by (power - x) mod 5.
const E kBody[] = {E::iron, E::water, E::fire, E::earth, E::wood};

int elem(E e) { return static_cast<int>(e); }

}  // namespace

const Trigram& trigram(long index) {
    if (index < 1 || index > 8) throw std::invalid_argument("trigram index must be 1..8");
    return kTrigrams[index - 1];
}

const NineNumber& nine_number(long value) {
    if (value < 1 || value > 9) throw std::invalid_argument("nine number must be 1..9");
    return kNine[value - 1];
}

std::array<std::array<int, 3>, 3> magic_square() {
    const char* layout[3][3] = {{"SE", "S", "SW"}, {"E", "Centre", "W"}, {"NE", "N", "NW"}};
    std::array<std::array<int, 3>, 3> out{};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            for (const auto& n : kNine)
                if (std::string(n.direction) == layout[r][c]) out[r][c] = n.value;
    return out;
}

ElementSet cycle_elements(long ci) {
    if (ci < 1 || ci > 60) throw std::invalid_argument("cycle index must be 1..60");
    ElementSet s;
    s.power = element_from_index(ceil_long(rat(amod(ci, 10), 2)));
    long animal = amod(ci, 12);
    s.life = kLife[animal - 1];
    s.fortune = kFortune[amod(ci, 4) - 1];
    E x = kBodyX[amod(ci, 6) - 1];
    s.body = kBody[mod(elem(s.power) - elem(x), 5)];
    s.spirit = element_from_index(amod(elem(s.life) - 1, 5));
    return s;
}

ElementSet year_elements(long Y) { return cycle_elements(amod(Y - 3, 60)); }

YearNumbers year_numbers(long Y) {
    return {static_cast<int>(amod(2 - Y, 9)), static_cast<int>(amod(8 - Y, 9)),
            static_cast<int>(amod(5 - Y, 9))};
}

AttributeStyle attribute_style(const TraditionConfig& cfg) {
    return cfg.id == "tsurphu" || cfg.id == "mongolia" ? AttributeStyle::tsurphu
                                                         : AttributeStyle::phugpa;
}

MonthAttributes month_attributes(AttributeStyle style, long Y, int M) {
    if (M < 1 || M > 12) throw std::invalid_argument("month must be 1..12");
    MonthAttributes a;
    a.gender = M % 2 == 1 ? Gender::male : Gender::female;
    if (style == AttributeStyle::phugpa) {
        a.animal = amod(M + 4, 12);
        long e = M <= 10 ? ceil_long(rat(Y - 1, 2)) + floor_long(rat(M + 1, 2))
                         : ceil_long(rat(Y, 2)) + floor_long(rat(M - 11, 2));
        a.element = element_from_index(amod(e, 5));
        a.nine_number = 0;
    } else {
        a.animal = amod(M + 2, 12);
        a.element = element_from_index(amod(Y - 2 + floor_long(rat(M - 1, 2)), 5));
        a.nine_number = static_cast<int>(amod(3 - (12 * Y + M), 9));
    }
    return a;
}

LunarDayAttributes lunar_day_attributes(AttributeStyle style, long Y, int M, int D) {
    if (D < 1 || D > 30) throw std::invalid_argument("lunar day must be 1..30");
    MonthAttributes m = month_attributes(style, Y, M);
    LunarDayAttributes a;
    a.animal = amod(D + 6 * M + 8, 12);
    a.element = element_from_index(amod(elem(m.element) + D, 5));
    a.trigram = static_cast<int>(amod(D + 6 * m.animal + 6, 8));
    a.nine_number = static_cast<int>(amod(D + 3 * m.animal, 9));
    return a;
}

CalendarDayAttributes calendar_day_attributes(long jd) {
    CalendarDayAttributes a;
    a.element = element_from_index(ceil_long(rat(amod(jd, 10), 2)));
    a.gender = mod(jd, 2) == 1 ? Gender::male : Gender::female;
    a.animal = amod(jd + 2, 12);
    a.trigram = static_cast<int>(amod(jd + 2, 8));
    a.nine_number = static_cast<int>(amod(-jd, 9));
    a.sixty_row = amod(jd - 10, 60);
    a.elements = cycle_elements(a.sixty_row);
    return a;
}

const char* weekday_element(int wd) {
    if (wd < 0 || wd > 6) throw std::invalid_argument("weekday must be 0..6");
    return weekday(wd + 5).element;
}

std::string ElementalYoga::name() const { return first + "-" + second; }

ElementalYoga elemental_yoga(int wd, int mansion) {
    if (mansion < 0 || mansion > 26) throw std::invalid_argument("mansion must be 0..26");
    std::string a = weekday_element(wd), b = mansion_elements()[mansion];
    const auto& pairs = elemental_yoga_pairs();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& [x, y] = pairs[i];
        if ((x == a && y == b) || (x == b && y == a))
            return {static_cast<int>(i), x, y};
    }
    throw std::logic_error("element pair missing from yoga table: " + a + ", " + b);
}

}  // namespace tibcal
