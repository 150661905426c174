#pragma once

#include <array>
#include <string>

namespace tibcal {

// 1 wood, 2 fire, 3 earth, 4 iron, 5 water.
enum class Element { wood = 1, fire, earth, iron, water };
enum class Gender { male, female };

const char* element_name(Element e);
// Mongolian colour naming of the elements.
const char* element_colour(Element e);
Element element_from_index(long i);  // 1..5

// 1 Mouse .. 12 Pig.
const char* animal_name(long index);

struct PrabhavaName {
    const char* tibetan;
    const char* sanskrit;
};

struct YearName {
    long year;
    Element element;
    Gender gender;
    long animal;               // 1..12
    long chinese_cycle_index;  // 1..60
    long prabhava_cycle;       // >= 1 from 1027
    long prabhava_index;       // 1..60
    PrabhavaName prabhava;
    long regnal_year;          // Y + 127

    std::string label() const;  // "Fire-Female-Pig"
};

YearName year_name(long year);

// Throws std::invalid_argument unless 1 <= index <= 60.
long year_from_prabhava(long cycle, long index);

const std::array<PrabhavaName, 60>& prabhava_names();

}  // namespace tibcal
