#pragma once

#include <array>
#include <string>

#include "tibcal/cycles.hpp"
#include "tibcal/tradition.hpp"

namespace tibcal {

struct ElementSet {
    Element power, life, body, fortune, spirit;
    bool operator==(const ElementSet&) const = default;
};

struct Trigram {
    int index;  // 1..8
    const char* tibetan;
    const char* chinese;
    const char* direction;
    const char* element;
};

struct NineNumber {
    int value;  // 1..9
    const char* colour;
    const char* element;
    const char* direction;
};

const Trigram& trigram(long index);        // 1..8
const NineNumber& nine_number(long value);  // 1..9

// Numbers by direction, rows SE S SW / E C W / NE N NW.
std::array<std::array<int, 3>, 3> magic_square();

// Elements of the row with Chinese cycle index 1..60.
ElementSet cycle_elements(long cycle_index);
ElementSet year_elements(long Y);

struct YearNumbers {
    int central, life, power;
};
YearNumbers year_numbers(long Y);

// Month and lunar day attributes follow one of two patterns.
enum class AttributeStyle { phugpa, tsurphu };
AttributeStyle attribute_style(const TraditionConfig& cfg);

struct MonthAttributes {
    long animal;  // 1..12
    Gender gender;
    Element element;
    int nine_number;  // 0 unless tsurphu style
};
// Leap months take the attributes of the regular month with the same number.
MonthAttributes month_attributes(AttributeStyle style, long Y, int M);

struct LunarDayAttributes {
    long animal;
    Element element;
    int trigram;
    int nine_number;
};
LunarDayAttributes lunar_day_attributes(AttributeStyle style, long Y, int M, int D);

struct CalendarDayAttributes {
    Element element;
    Gender gender;
    long animal;
    int trigram;
    int nine_number;
    long sixty_row;  // row of the 60 cycle, 1..60
    ElementSet elements;
};
CalendarDayAttributes calendar_day_attributes(long jd);

// Element of a weekday, 0 = Saturday.
const char* weekday_element(int weekday);

struct ElementalYoga {
    int index;  // 0..9
    std::string first, second;
    std::string name() const;  // "earth-fire"
};
ElementalYoga elemental_yoga(int weekday, int mansion);

}  // namespace tibcal
