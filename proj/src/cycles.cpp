#include "tibcal/cycles.hpp"

#include <stdexcept>

#include "tibcal/rational.hpp"

namespace tibcal {

namespace {

const char* const kElements[] = {"wood", "fire", "earth", "iron", "water"};
const char* const kColours[] = {"blue", "red", "yellow", "white", "black"};
const char* const kAnimals[] = {"Mouse", "Ox",    "Tiger",  "Rabbit", "Dragon", "Snake",
                                "Horse", "Sheep", "Monkey", "Bird",   "Dog",    "Pig"};

// Indian cycle, year 1 = 1027 (Fire-Rabbit).
const std::array<PrabhavaName, 60> kPrabhava = {{
    {"rab byung", "prabhava"},
    {"rnam byung", "vibhava"},
    {"dkar po", "suklata"},
    {"rab myos", "pramadi"},
    {"skyes bdag", "prajapati"},
    {"anggi ra", "ankira"},
    {"dpal gdong", "srimukha"},
    {"dngos po", "bhava"},
    {"na tshod ldan", "yuvika"},
    {"'dzin byed", "dhritu"},
    {"dbang phyug", "isvara"},
    {"'bru mang po", "vahudhvanya"},
    {"myos ldan", "pramadi"},
    {"rnam gnon", "vikrama"},
    {"khyu mchog", "brisabha"},
    {"sna tshogs", "citra"},
    {"nyi ma", "bhanu"},
    {"nyi sgrol byed", "bhanutara"},
    {"sa skyong", "virthapa"},
    {"mi zad", "aksaya"},
    {"thams cad 'dul", "sarvajit"},
    {"kun 'dzin", "sarvadhari"},
    {"'gal ba", "virodhi"},
    {"rnam 'gyur", "vikrita"},
    {"bong bu", "khara"},
    {"dga' ba", "nanda"},
    {"rnam rgyal", "vijaya"},
    {"rgyal ba", "jaya"},
    {"myos byed", "mada"},
    {"gdong ngan", "durmukha"},
    {"gser 'phyang", "hemalambha"},
    {"rnam 'phyang", "vilambhi"},
    {"sgyur byed", "vikari"},
    {"kun ldan", "sarvavati"},
    {"'phar ba", "slava"},
    {"dge byed", "subhakrita"},
    {"mdzes byed", "sobhana"},
    {"khro mo", "krodhi"},
    {"sna tshogs dbyig", "visvabandhu"},
    {"zil gnon", "parabhava"},
    {"spre'u", "pravamga"},
    {"phur bu", "kilaka"},
    {"zhi ba", "saumya"},
    {"thun mong", "sadharana"},
    {"'gal byed", "virobhakrita"},
    {"yongs 'dzin", "paradhari"},
    {"bag med", "pramadi"},
    {"kun dga'", "ananda"},
    {"srin bu", "raksasa"},
    {"me", "anala"},
    {"dmar ser can", "vingala"},
    {"dus kyi pho nya", "kaladuti"},
    {"don grub", "siddhartha"},
    {"drag po", "rudra"},
    {"blo ngan", "durmati"},
    {"rnga chen", "dundubhi"},
    {"khrag skyug", "rudhirura"},
    {"mig dmar", "raktaksi"},
    {"khro bo", "krodhana"},
    {"zad pa", "ksayaka"},
}};

}  // namespace

const char* element_name(Element e) { return kElements[static_cast<int>(e) - 1]; }
const char* element_colour(Element e) { return kColours[static_cast<int>(e) - 1]; }

Element element_from_index(long i) {
    if (i < 1 || i > 5) throw std::invalid_argument("element index out of range");
    return static_cast<Element>(i);
}

const char* animal_name(long index) {
    if (index < 1 || index > 12) throw std::invalid_argument("animal index out of range");
    return kAnimals[index - 1];
}

std::string YearName::label() const {
    std::string g = gender == Gender::male ? "Male" : "Female";
    std::string e = element_name(element);
    e[0] = static_cast<char>(e[0] - 'a' + 'A');
    return e + "-" + g + "-" + animal_name(animal);
}

YearName year_name(long year) {
    YearName y;
    y.year = year;
    y.chinese_cycle_index = amod(year - 3, 60);
    y.element = element_from_index((amod(year - 3, 10) + 1) / 2);
    y.animal = amod(year - 3, 12);
    y.gender = y.animal % 2 == 1 ? Gender::male : Gender::female;
    y.prabhava_index = amod(year - 1026, 60);
    y.prabhava_cycle = ceil_long(rat(year - 1026, 60));
    y.prabhava = kPrabhava[y.prabhava_index - 1];
    y.regnal_year = year + 127;
    return y;
}

long year_from_prabhava(long cycle, long index) {
    if (index < 1 || index > 60) throw std::invalid_argument("Prabhava index must be 1..60");
    return 1027 + (cycle - 1) * 60 + (index - 1);
}

const std::array<PrabhavaName, 60>& prabhava_names() { return kPrabhava; }

}  // namespace tibcal
