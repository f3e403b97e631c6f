#ifndef NPOLY_RATIONAL_HPP
#define NPOLY_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace npoly {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int rat_den(const Rat& x) { return boost::multiprecision::denominator(x); }

// floor(a/b) for b > 0
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && a < 0) --q;
    return q;
}

inline Int floor_rat(const Rat& x) { return floor_div(rat_num(x), rat_den(x)); }

inline Int ceil_rat(const Rat& x) {
    Int f = floor_rat(x);
    return (Rat(f) == x) ? f : f + 1;
}

// x - floor(x), always in [0,1)
inline Rat frac_part(const Rat& x) { return x - Rat(floor_rat(x)); }

std::string rat_str(const Rat& x);

// Parses "a/b" or "a"; throws ParseError on malformed input or b == 0.
Rat parse_rat(const std::string& s);

long mod_pow(long base, long exp, long mod);
long mul_order(long g, long m);  // multiplicative order of g modulo m, gcd(g,m)=1

}  // namespace npoly

#endif
