// rat.hpp
// Exact rational arithmetic: a thin layer over GMP-backed rationals with
// string (de)serialization in "p/q" form for reports and golden files.
#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dwork {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

struct DivisionByZero : std::runtime_error {
    explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    return Rat(num, den);
}

// Serialize as "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Parse "p" or "p/q".
inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw DivisionByZero("rational parse: zero denominator");
    return Rat(num, den);
}

} // namespace dwork
