// numeric.hpp
// Arbitrary-precision complex enclosures for cyclotomic numbers, plus the
// floating scalar types used by the numeric sampling checks.
//
// A ComplexInterval is a midpoint-radius ball: midpoint stored as a pair of
// MPFR floats at the working precision, radius a conservative bound covering
// both the evaluation error of eta = exp(2*pi*i/15) and all rounding in the
// subsequent polynomial combination.  Balls support the few operations the
// checks need (add, mul, real square root, containment).
#pragma once

#include "dwork/cyclotomic.hpp"

#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <complex>

namespace dwork {

using BigFloat = boost::multiprecision::mpfr_float;

// High-precision complex scalar (~334 bits) for the 128-bit retry path of the
// numeric line checks.
using ComplexHP = boost::multiprecision::cpp_complex_100;

struct ComplexInterval {
    BigFloat re;
    BigFloat im;
    BigFloat rad;  // radius of a disc around (re, im) containing the true value

    double re_d() const { return static_cast<double>(re); }
    double im_d() const { return static_cast<double>(im); }
    double rad_d() const { return static_cast<double>(rad); }

    bool contains(double x, double y) const;
    // True if the two balls have nonempty intersection (used to test
    // "embed(a*b) is consistent with embed(a)*embed(b)").
    bool overlaps(const ComplexInterval& o) const;
};

// Enclosure of the image of a under eta -> exp(2*pi*i/15).  prec_bits >= 64.
ComplexInterval embed_complex(const CycElem& a, unsigned prec_bits);

ComplexInterval ci_add(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval ci_mul(const ComplexInterval& a, const ComplexInterval& b);
// Square root of a ball around a positive real (throws if not positive real).
ComplexInterval ci_sqrt_positive_real(const ComplexInterval& a);

// Plain double-precision value of a cyclotomic number (midpoint only).
std::complex<double> embed_double(const CycElem& a);
ComplexHP embed_hp(const CycElem& a);

} // namespace dwork
