#include "tibcal/rational.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace tibcal {

Rational rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

Rational parse_simple(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty number");
    auto slash = s.find('/');
    auto check = [](const std::string& part, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') return false;
        return true;
    };
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!check(num, true) || !check(den, false))
        throw std::invalid_argument("malformed fraction: " + s);
    if (num[0] == '+') num.erase(0, 1);
    Int n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + s);
    Rational r(n, d);
    r.canonicalize();
    return r;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s += c;
    // "a+p/q" or "a-p/q": split at a sign that is not the leading one.
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] == '+' || s[i] == '-') {
            Rational a = parse_simple(s.substr(0, i));
            Rational b = parse_simple(s.substr(i + 1));
            return s[i] == '+' ? Rational(a + b) : Rational(a - b);
        }
    }
    return parse_simple(s);
}

std::string to_string(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Int floor(const Rational& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Int ceil(const Rational& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Rational frac(const Rational& x) { return x - Rational(floor(x)); }

std::pair<Int, Rational> floor_frac(const Rational& x) {
    Int f = floor(x);
    return {f, x - Rational(f)};
}

long to_long(const Int& x) {
    if (!x.fits_slong_p()) throw std::overflow_error("integer does not fit in long");
    return x.get_si();
}

long floor_long(const Rational& x) { return to_long(floor(x)); }
long ceil_long(const Rational& x) { return to_long(ceil(x)); }

long mod(long m, long n) {
    if (n <= 0) throw std::invalid_argument("mod needs a positive modulus");
    long r = m % n;
    return r < 0 ? r + n : r;
}

Int mod(const Int& m, const Int& n) {
    if (n <= 0) throw std::invalid_argument("mod needs a positive modulus");
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
    return r;
}

Rational mod(const Rational& x, const Rational& n) {
    if (n <= 0) throw std::invalid_argument("mod needs a positive modulus");
    Rational q = x / n;
    return x - n * Rational(floor(q));
}

long amod(long m, long n) {
    if (n <= 0) throw std::invalid_argument("amod needs a positive modulus");
    return 1 + mod(m - 1, n);
}

std::string MixedRadix::str() const { return str(digits.size() + 1); }

std::string MixedRadix::str(std::size_t terms) const {
    std::ostringstream os;
    os << integer_part.get_str();
    std::size_t shown = terms == 0 ? 0 : terms - 1;
    if (shown > digits.size()) shown = digits.size();
    for (std::size_t i = 0; i < shown; ++i) os << (i == 0 ? ";" : ",") << digits[i];
    return os.str();
}

Rational from_mixed_radix(const MixedRadix& v) {
    if (v.digits.size() != v.radices.size())
        throw std::invalid_argument("digit and radix counts differ");
    Rational acc = 0;
    for (std::size_t i = v.digits.size(); i-- > 0;) {
        long b = v.radices[i], a = v.digits[i];
        if (b < 1) throw std::invalid_argument("radix below 1");
        if (a < 0 || a >= b) throw std::invalid_argument("digit not below its radix");
        acc = (Rational(a) + acc) / b;
    }
    return Rational(v.integer_part) + acc;
}

MixedRadix to_mixed_radix(const Rational& x, const std::vector<long>& radices) {
    if (radices.empty()) throw std::invalid_argument("no radices");
    MixedRadix out;
    out.radices = radices;
    auto [ip, rest] = floor_frac(x);
    out.integer_part = ip;
    for (long b : radices) {
        if (b < 1) throw std::invalid_argument("radix below 1");
        rest *= b;
        auto [d, r] = floor_frac(rest);
        out.digits.push_back(to_long(d));
        rest = r;
    }
    return out;
}

std::string to_decimal(const Rational& x, int places) {
    Int scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    Int scaled = floor(x * Rational(scale));
    bool negative = scaled < 0;
    Int magnitude = abs(scaled);
    Int ip = magnitude / scale;
    Int fp = magnitude - ip * scale;
    std::string digits = fp.get_str();
    if (static_cast<int>(digits.size()) < places)
        digits = std::string(places - digits.size(), '0') + digits;
    std::string out = places > 0 ? ip.get_str() + "." + digits : ip.get_str();
    return negative ? "-" + out : out;
}

std::string to_decimal_rounded(const Rational& x, int places) {
    Int scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    return to_decimal(x + Rational(1, 2) / Rational(scale), places);
}

}  // namespace tibcal
