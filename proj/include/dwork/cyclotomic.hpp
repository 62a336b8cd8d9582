// cyclotomic.hpp
// Exact arithmetic in the degree-8 cyclotomic field Q(eta), where eta is a
// primitive 15th root of unity.  Elements are stored as polynomials in eta of
// degree < 8, reduced modulo the minimal polynomial
//     Phi_15(x) = x^8 - x^7 + x^5 - x^4 + x^3 - x + 1.
// The field contains the fifth root of unity zeta = eta^3, the cube root of
// unity omega = eta^5, and sqrt(5) = 1 + 2*zeta + 2*zeta^-1; these cover every
// algebraic constant needed by the verification suites.
#pragma once

#include "dwork/rat.hpp"

#include <array>
#include <string>

namespace dwork {

class CycElem {
public:
    static constexpr int kDegree = 8;

    CycElem() = default;
    CycElem(const Rat& r) { c_[0] = r; }      // NOLINT(google-explicit-constructor)
    CycElem(long n) { c_[0] = n; }            // NOLINT(google-explicit-constructor)

    // Generators and named constants.
    static CycElem eta();                 // primitive 15th root of unity
    static CycElem eta_pow(long k);       // eta^k, any integer k
    static CycElem zeta();                // primitive 5th root: eta^3
    static CycElem zeta_pow(long k);
    static CycElem omega();               // primitive cube root: eta^5
    static CycElem omega_pow(long k);
    static CycElem sqrt5();               // 1 + 2*zeta + 2*zeta^4; squares to 5
    static CycElem sqrt_minus15();        // sqrt5 * (omega - omega^2) = sqrt(-15)
    static CycElem w_infinity();          // -2*eta^7 + eta^5 - eta^4 + eta^3 - eta + 2

    // Construct from explicit coefficients (c0 + c1*eta + ... + c7*eta^7).
    static CycElem from_coeffs(const std::array<Rat, kDegree>& coeffs);

    const std::array<Rat, kDegree>& coeffs() const { return c_; }
    const Rat& coeff(int i) const { return c_[static_cast<size_t>(i)]; }

    bool is_zero() const;
    bool is_rational() const;
    Rat as_rational() const;  // throws std::runtime_error if not rational

    CycElem operator-() const;
    CycElem& operator+=(const CycElem& o);
    CycElem& operator-=(const CycElem& o);
    CycElem& operator*=(const CycElem& o);
    CycElem& operator/=(const CycElem& o);

    friend CycElem operator+(CycElem a, const CycElem& b) { return a += b; }
    friend CycElem operator-(CycElem a, const CycElem& b) { return a -= b; }
    friend CycElem operator*(CycElem a, const CycElem& b) { return a *= b; }
    friend CycElem operator/(CycElem a, const CycElem& b) { return a /= b; }
    friend bool operator==(const CycElem& a, const CycElem& b) { return a.c_ == b.c_; }
    friend bool operator!=(const CycElem& a, const CycElem& b) { return !(a == b); }

    CycElem inverse() const;              // throws DivisionByZero on 0
    CycElem pow(long k) const;            // integer powers, negative allowed

    // Human-readable form, e.g. "1 - 2*eta^3".  Rational elements print as
    // plain rationals.
    std::string str() const;
    // Length-8 array of "p/q" strings (report serialization).
    std::array<std::string, kDegree> serialize() const;

private:
    std::array<Rat, kDegree> c_{};  // value-initialized: all zero
};

inline CycElem operator*(const Rat& r, CycElem a) { return a *= CycElem(r); }

} // namespace dwork
