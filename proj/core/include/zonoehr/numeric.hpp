#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace zonoehr {

// All arithmetic in this library is exact. Int is an arbitrary-precision
// integer, Rat an arbitrary-precision rational kept in lowest terms with
// positive denominator.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

// g = gcd(a,b) >= 0 together with s,t such that s*a + t*b = g.
struct XGcd {
    Int g, s, t;
};

inline XGcd xgcd(Int a, Int b) {
    Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        Int q = a / b;  // truncated division is fine, signs wash out below
        Int r = a - q * b;
        a = b; b = r;
        Int s2 = s0 - q * s1; s0 = s1; s1 = s2;
        Int t2 = t0 - q * t1; t0 = t1; t1 = t2;
    }
    if (a < 0) { a = -a; s0 = -s0; t0 = -t0; }
    return {a, s0, t0};
}

// Floor division for integers, exact for any signs of num (den != 0).
inline Int floor_div(const Int& num, const Int& den) {
    Int q = num / den;
    if ((num % den) != 0 && ((num < 0) != (den < 0))) --q;
    return q;
}

inline Int ceil_div(const Int& num, const Int& den) {
    return -floor_div(-num, den);
}

inline Int rat_floor(const Rat& r) {
    return floor_div(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

inline bool is_integer(const Rat& r) { return boost::multiprecision::denominator(r) == 1; }

inline Int to_integer(const Rat& r) {
    if (!is_integer(r)) throw std::domain_error("rational value " + r.str() + " is not an integer");
    return boost::multiprecision::numerator(r);
}

// Canonical serialization: lowest terms, positive denominator, "p" or "p/q".
inline std::string rational_string(const Rat& r) { return r.str(); }

// Accepts "p" or "p/q" with optional sign on either part.
inline Rat parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
}

}  // namespace zonoehr
