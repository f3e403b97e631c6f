#include "npoly/rational.hpp"

#include <cctype>

#include "npoly/errors.hpp"

namespace npoly {

std::string rat_str(const Rat& x) {
    std::string s = rat_num(x).str();
    if (rat_den(x) != 1) s += "/" + rat_den(x).str();
    return s;
}

Rat parse_rat(const std::string& s) {
    auto bad = [&]() { throw ParseError("malformed rational: '" + s + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    auto check_int = [&](const std::string& t) {
        if (t.empty()) bad();
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) bad();
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) bad();
    };
    try {
        if (slash == std::string::npos) {
            check_int(s);
            return Rat(Int(s));
        }
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        check_int(num);
        check_int(den);
        Int d(den);
        if (d == 0) bad();
        return Rat(Int(num), d);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        bad();
    }
    return Rat(0);  // unreachable
}

long mod_pow(long base, long exp, long mod) {
    long result = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) result = (result * base) % mod;
        base = (base * base) % mod;
        exp >>= 1;
    }
    return result;
}

long mul_order(long g, long m) {
    if (m == 1) return 1;
    long x = g % m;
    if (x < 0) x += m;
    long ord = 1;
    long y = x;
    while (y != 1) {
        y = (y * x) % m;
        ++ord;
        if (ord > m) throw MathError("mul_order: element is not invertible");
    }
    return ord;
}

}  // namespace npoly
