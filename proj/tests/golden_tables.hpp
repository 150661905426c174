#pragma once

// Reference tables transcribed from the published tables of the calendar.
// Dates are (year, month, day) Gregorian.

#include <array>
#include <vector>

namespace golden {

struct YMD {
    int year, month, day;
};

// Phugpa New Year 1927 to 2046.
inline const std::array<YMD, 120> kPhugpaNewYear = {{
    {1927, 3, 4},
    {1928, 2, 22},
    {1929, 2, 10},
    {1930, 3, 1},
    {1931, 2, 18},
    {1932, 2, 7},
    {1933, 2, 25},
    {1934, 2, 14},
    {1935, 2, 4},
    {1936, 2, 23},
    {1937, 2, 12},
    {1938, 3, 3},
    {1939, 2, 20},
    {1940, 2, 9},
    {1941, 2, 26},
    {1942, 2, 16},
    {1943, 2, 5},
    {1944, 2, 24},
    {1945, 2, 13},
    {1946, 3, 4},
    {1947, 2, 21},
    {1948, 2, 10},
    {1949, 2, 28},
    {1950, 2, 17},
    {1951, 2, 7},
    {1952, 2, 26},
    {1953, 2, 14},
    {1954, 2, 4},
    {1955, 2, 23},
    {1956, 2, 12},
    {1957, 3, 2},
    {1958, 2, 19},
    {1959, 2, 8},
    {1960, 2, 27},
    {1961, 2, 16},
    {1962, 2, 5},
    {1963, 2, 24},
    {1964, 2, 14},
    {1965, 3, 4},
    {1966, 2, 21},
    {1967, 2, 10},
    {1968, 2, 29},
    {1969, 2, 17},
    {1970, 2, 7},
    {1971, 2, 26},
    {1972, 2, 15},
    {1973, 3, 5},
    {1974, 2, 22},
    {1975, 2, 11},
    {1976, 3, 1},
    {1977, 2, 19},
    {1978, 2, 8},
    {1979, 2, 27},
    {1980, 2, 17},
    {1981, 2, 5},
    {1982, 2, 24},
    {1983, 2, 13},
    {1984, 3, 3},
    {1985, 2, 20},
    {1986, 2, 9},
    {1987, 2, 28},
    {1988, 2, 18},
    {1989, 2, 7},
    {1990, 2, 26},
    {1991, 2, 15},
    {1992, 3, 5},
    {1993, 2, 22},
    {1994, 2, 11},
    {1995, 3, 2},
    {1996, 2, 19},
    {1997, 2, 8},
    {1998, 2, 27},
    {1999, 2, 17},
    {2000, 2, 6},
    {2001, 2, 24},
    {2002, 2, 13},
    {2003, 3, 3},
    {2004, 2, 21},
    {2005, 2, 9},
    {2006, 2, 28},
    {2007, 2, 18},
    {2008, 2, 7},
    {2009, 2, 25},
    {2010, 2, 14},
    {2011, 3, 5},
    {2012, 2, 22},
    {2013, 2, 11},
    {2014, 3, 2},
    {2015, 2, 19},
    {2016, 2, 9},
    {2017, 2, 27},
    {2018, 2, 16},
    {2019, 2, 5},
    {2020, 2, 24},
    {2021, 2, 12},
    {2022, 3, 3},
    {2023, 2, 21},
    {2024, 2, 10},
    {2025, 2, 28},
    {2026, 2, 18},
    {2027, 2, 7},
    {2028, 2, 26},
    {2029, 2, 14},
    {2030, 3, 5},
    {2031, 2, 22},
    {2032, 2, 12},
    {2033, 3, 2},
    {2034, 2, 19},
    {2035, 2, 9},
    {2036, 2, 27},
    {2037, 2, 15},
    {2038, 3, 6},
    {2039, 2, 23},
    {2040, 2, 13},
    {2041, 3, 3},
    {2042, 2, 21},
    {2043, 2, 10},
    {2044, 2, 29},
    {2045, 2, 17},
    {2046, 2, 6},
}};

// New Year 2000 to 2030 as (day, month); Phugpa, Tsurphu, Mongolia, Bhutan.
struct FourNewYears {
    int year;
    std::array<std::array<int, 2>, 4> dm;
};
inline const std::array<FourNewYears, 31> kFourNewYears = {{
    {2000, {{{6, 2}, {6, 2}, {6, 2}, {6, 2}}}},
    {2001, {{{24, 2}, {24, 2}, {24, 2}, {24, 2}}}},
    {2002, {{{13, 2}, {13, 2}, {13, 2}, {13, 2}}}},
    {2003, {{{3, 3}, {2, 2}, {2, 2}, {4, 3}}}},
    {2004, {{{21, 2}, {21, 2}, {21, 2}, {21, 2}}}},
    {2005, {{{9, 2}, {9, 2}, {9, 2}, {9, 2}}}},
    {2006, {{{28, 2}, {30, 1}, {30, 1}, {28, 2}}}},
    {2007, {{{18, 2}, {18, 2}, {18, 2}, {18, 2}}}},
    {2008, {{{7, 2}, {8, 2}, {8, 2}, {8, 2}}}},
    {2009, {{{25, 2}, {25, 2}, {25, 2}, {25, 2}}}},
    {2010, {{{14, 2}, {14, 2}, {14, 2}, {14, 2}}}},
    {2011, {{{5, 3}, {3, 2}, {3, 2}, {3, 2}}}},
    {2012, {{{22, 2}, {22, 2}, {22, 2}, {22, 2}}}},
    {2013, {{{11, 2}, {11, 2}, {11, 2}, {11, 2}}}},
    {2014, {{{2, 3}, {31, 1}, {31, 1}, {2, 3}}}},
    {2015, {{{19, 2}, {19, 2}, {19, 2}, {19, 2}}}},
    {2016, {{{9, 2}, {9, 2}, {9, 2}, {9, 2}}}},
    {2017, {{{27, 2}, {27, 2}, {27, 2}, {27, 2}}}},
    {2018, {{{16, 2}, {16, 2}, {16, 2}, {16, 2}}}},
    {2019, {{{5, 2}, {5, 2}, {5, 2}, {5, 2}}}},
    {2020, {{{24, 2}, {24, 2}, {24, 2}, {24, 2}}}},
    {2021, {{{12, 2}, {12, 2}, {12, 2}, {12, 2}}}},
    {2022, {{{3, 3}, {2, 2}, {2, 2}, {3, 3}}}},
    {2023, {{{21, 2}, {21, 2}, {21, 2}, {21, 2}}}},
    {2024, {{{10, 2}, {10, 2}, {10, 2}, {10, 2}}}},
    {2025, {{{28, 2}, {1, 3}, {1, 3}, {28, 2}}}},
    {2026, {{{18, 2}, {18, 2}, {18, 2}, {18, 2}}}},
    {2027, {{{7, 2}, {7, 2}, {7, 2}, {7, 2}}}},
    {2028, {{{26, 2}, {26, 2}, {26, 2}, {26, 2}}}},
    {2029, {{{14, 2}, {14, 2}, {14, 2}, {14, 2}}}},
    {2030, {{{5, 3}, {3, 2}, {3, 2}, {3, 2}}}},
}};

// Leap month number 2000 to 2020, 0 for none; same tradition order.
struct FourLeaps {
    int year;
    std::array<int, 4> month;
};
inline const std::array<FourLeaps, 21> kFourLeaps = {{
    {2000, {1, 8, 8, 4}},
    {2001, {0, 0, 0, 0}},
    {2002, {10, 0, 0, 12}},
    {2003, {0, 4, 4, 0}},
    {2004, {0, 0, 0, 0}},
    {2005, {6, 0, 0, 9}},
    {2006, {0, 1, 1, 0}},
    {2007, {0, 0, 0, 0}},
    {2008, {3, 9, 9, 5}},
    {2009, {0, 0, 0, 0}},
    {2010, {11, 0, 0, 0}},
    {2011, {0, 6, 6, 2}},
    {2012, {0, 0, 0, 0}},
    {2013, {8, 0, 0, 10}},
    {2014, {0, 2, 2, 0}},
    {2015, {0, 0, 0, 0}},
    {2016, {4, 11, 11, 7}},
    {2017, {0, 0, 0, 0}},
    {2018, {0, 0, 0, 0}},
    {2019, {1, 7, 7, 3}},
    {2020, {0, 0, 0, 0}},
}};

// Repeated (positive) and skipped (negative) days of each month of 2012.
struct FourDays {
    int month;
    std::array<std::vector<int>, 4> days;
};
inline const std::array<FourDays, 12> kDays2012 = {{
    {1, {{{5, -19}, {4, -20}, {4, -20}, {4, -19}}}},
    {2, {{{9, -12, -25, 27}, {8, -13}, {8, -13}, {8, -13}}}},
    {3, {{{-17}, {-17}, {-17}, {-17}}}},
    {4, {{{3, -10}, {2, -11}, {2, -11}, {2, -10}}}},
    {5, {{{-13, 29}, {-14, 28}, {-14, 28}, {-13, 28}}}},
    {6, {{{-6}, {-6}, {-6}, {-6}}}},
    {7, {{{-9, 25}, {-9, 25}, {-9, 25}, {-9, 24}}}},
    {8, {{{-1}, {-2}, {-2}, {-1}}}},
    {9, {{{-5, 20, -29}, {-6, 19, -29}, {-6, 20, -29}, {-5, 19, -29}}}},
    {10, {{{}, {}, {}, {}}}},
    {11, {{{-3, 13, -27}, {-3, 12, -28}, {-4, 12, -28}, {-3, 12, -27}}}},
    {12, {{{17, -21}, {15, -22}, {15, -22}, {15, -21}}}},
}};

// Epoch values at JD 2015531, six decimals: m0 - 2015529, s0, a0.
struct EpochRow {
    const char* id;
    const char* m0;
    const char* s0;
    const char* a0;
};
inline const std::array<EpochRow, 4> kEpoch806 = {{
    {"phugpa", "2.376238", "0.004975", "0.206349"},
    {"tsurphu", "2.422338", "0.018261", "0.210317"},
    {"mongolia", "2.418494", "0.023632", "0.207200"},
    {"bhutan", "2.410537", "0.017413", "0.220522"},
}};

// 30 year body element cycle: (row, power, body); row 1 is Wood-Mouse.
struct BodyRow {
    int row;
    const char* power;
    const char* body;
};
inline const std::array<BodyRow, 30> kBody30 = {{
    {1, "wood", "iron"},
    {2, "wood", "iron"},
    {3, "fire", "fire"},
    {4, "fire", "fire"},
    {5, "earth", "wood"},
    {6, "earth", "wood"},
    {7, "iron", "earth"},
    {8, "iron", "earth"},
    {9, "water", "iron"},
    {10, "water", "iron"},
    {11, "wood", "fire"},
    {12, "wood", "fire"},
    {13, "fire", "water"},
    {14, "fire", "water"},
    {15, "earth", "earth"},
    {16, "earth", "earth"},
    {17, "iron", "iron"},
    {18, "iron", "iron"},
    {19, "water", "wood"},
    {20, "water", "wood"},
    {21, "wood", "water"},
    {22, "wood", "water"},
    {23, "fire", "earth"},
    {24, "fire", "earth"},
    {25, "earth", "fire"},
    {26, "earth", "fire"},
    {27, "iron", "wood"},
    {28, "iron", "wood"},
    {29, "water", "water"},
    {30, "water", "water"},
}};

// 60 year cycle: (row, power, animal, life, body, fortune, spirit).
struct ElementRow {
    int row;
    const char* power;
    const char* animal;
    const char* life;
    const char* body;
    const char* fortune;
    const char* spirit;
};
inline const std::array<ElementRow, 60> kElements60 = {{
    {1, "wood", "mouse", "water", "iron", "wood", "iron"},
    {2, "wood", "ox", "earth", "iron", "water", "fire"},
    {3, "fire", "tiger", "wood", "fire", "iron", "water"},
    {4, "fire", "rabbit", "wood", "fire", "fire", "water"},
    {5, "earth", "dragon", "earth", "wood", "wood", "fire"},
    {6, "earth", "snake", "fire", "wood", "water", "wood"},
    {7, "iron", "horse", "fire", "earth", "iron", "wood"},
    {8, "iron", "sheep", "earth", "earth", "fire", "fire"},
    {9, "water", "monkey", "iron", "iron", "wood", "earth"},
    {10, "water", "bird", "iron", "iron", "water", "earth"},
    {11, "wood", "dog", "earth", "fire", "iron", "fire"},
    {12, "wood", "pig", "water", "fire", "fire", "iron"},
    {13, "fire", "mouse", "water", "water", "wood", "iron"},
    {14, "fire", "ox", "earth", "water", "water", "fire"},
    {15, "earth", "tiger", "wood", "earth", "iron", "water"},
    {16, "earth", "rabbit", "wood", "earth", "fire", "water"},
    {17, "iron", "dragon", "earth", "iron", "wood", "fire"},
    {18, "iron", "snake", "fire", "iron", "water", "wood"},
    {19, "water", "horse", "fire", "wood", "iron", "wood"},
    {20, "water", "sheep", "earth", "wood", "fire", "fire"},
    {21, "wood", "monkey", "iron", "water", "wood", "earth"},
    {22, "wood", "bird", "iron", "water", "water", "earth"},
    {23, "fire", "dog", "earth", "earth", "iron", "fire"},
    {24, "fire", "pig", "water", "earth", "fire", "iron"},
    {25, "earth", "mouse", "water", "fire", "wood", "iron"},
    {26, "earth", "ox", "earth", "fire", "water", "fire"},
    {27, "iron", "tiger", "wood", "wood", "iron", "water"},
    {28, "iron", "rabbit", "wood", "wood", "fire", "water"},
    {29, "water", "dragon", "earth", "water", "wood", "fire"},
    {30, "water", "snake", "fire", "water", "water", "wood"},
    {31, "wood", "horse", "fire", "iron", "iron", "wood"},
    {32, "wood", "sheep", "earth", "iron", "fire", "fire"},
    {33, "fire", "monkey", "iron", "fire", "wood", "earth"},
    {34, "fire", "bird", "iron", "fire", "water", "earth"},
    {35, "earth", "dog", "earth", "wood", "iron", "fire"},
    {36, "earth", "pig", "water", "wood", "fire", "iron"},
    {37, "iron", "mouse", "water", "earth", "wood", "iron"},
    {38, "iron", "ox", "earth", "earth", "water", "fire"},
    {39, "water", "tiger", "wood", "iron", "iron", "water"},
    {40, "water", "rabbit", "wood", "iron", "fire", "water"},
    {41, "wood", "dragon", "earth", "fire", "wood", "fire"},
    {42, "wood", "snake", "fire", "fire", "water", "wood"},
    {43, "fire", "horse", "fire", "water", "iron", "wood"},
    {44, "fire", "sheep", "earth", "water", "fire", "fire"},
    {45, "earth", "monkey", "iron", "earth", "wood", "earth"},
    {46, "earth", "bird", "iron", "earth", "water", "earth"},
    {47, "iron", "dog", "earth", "iron", "iron", "fire"},
    {48, "iron", "pig", "water", "iron", "fire", "iron"},
    {49, "water", "mouse", "water", "wood", "wood", "iron"},
    {50, "water", "ox", "earth", "wood", "water", "fire"},
    {51, "wood", "tiger", "wood", "water", "iron", "water"},
    {52, "wood", "rabbit", "wood", "water", "fire", "water"},
    {53, "fire", "dragon", "earth", "earth", "wood", "fire"},
    {54, "fire", "snake", "fire", "earth", "water", "wood"},
    {55, "earth", "horse", "fire", "fire", "iron", "wood"},
    {56, "earth", "sheep", "earth", "fire", "fire", "fire"},
    {57, "iron", "monkey", "iron", "wood", "wood", "earth"},
    {58, "iron", "bird", "iron", "wood", "water", "earth"},
    {59, "water", "dog", "earth", "water", "iron", "fire"},
    {60, "water", "pig", "water", "water", "fire", "iron"},
}};

}  // namespace golden
