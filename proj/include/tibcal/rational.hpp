#pragma once

// Exact rationals, mixed radix notation and the modular helpers.
//
// Everything in the calendar core is an exact fraction.  Integers are
// GMP integers so month counts near 10^7 times denominators near 10^7
// never overflow.

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace tibcal {

using Int = mpz_class;
using Rational = mpq_class;

Rational rat(long num, long den = 1);

// Parses "p", "p/q" or "a+p/q" (and "-p/q").  Throws std::invalid_argument.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& x);

Int floor(const Rational& x);
Int ceil(const Rational& x);
Rational frac(const Rational& x);
std::pair<Int, Rational> floor_frac(const Rational& x);

long to_long(const Int& x);
long floor_long(const Rational& x);
long ceil_long(const Rational& x);

// Result in [0, n) for n > 0.
long mod(long m, long n);
Int mod(const Int& m, const Int& n);
Rational mod(const Rational& x, const Rational& n);

// Result in (0, n].  Throws std::invalid_argument for n <= 0.
long amod(long m, long n);

// a0;a1,...,an <b1,...,bn>
struct MixedRadix {
    Int integer_part;
    std::vector<long> digits;
    std::vector<long> radices;

    // "a0;a1,a2,..." in the traditional layout.
    std::string str() const;
    // Same, keeping only the first `terms` terms (integer part counts).
    std::string str(std::size_t terms) const;
};

// Throws std::invalid_argument when a digit is not below its radix or a
// radix is below 1.
Rational from_mixed_radix(const MixedRadix& v);

// Successive multiply-and-floor; the last digit is truncated.
MixedRadix to_mixed_radix(const Rational& x, const std::vector<long>& radices);

// Decimal expansion truncated toward minus infinity.
std::string to_decimal(const Rational& x, int places);
// Decimal expansion rounded half up.
std::string to_decimal_rounded(const Rational& x, int places);

}  // namespace tibcal
