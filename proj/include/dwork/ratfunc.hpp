// ratfunc.hpp
// Quotients of multivariate polynomials.  No canonical (gcd-reduced) form is
// maintained; equality is decided by cross-multiplication, which is exact and
// avoids multivariate gcd entirely.
#pragma once

#include "dwork/poly.hpp"

namespace dwork {

class RatFunc {
public:
    RatFunc() : num_(), den_(MPoly(1)) {}
    RatFunc(MPoly num) : num_(std::move(num)), den_(MPoly(1)) {}  // NOLINT
    RatFunc(MPoly num, MPoly den);
    RatFunc(long n) : RatFunc(MPoly(n)) {}  // NOLINT
    RatFunc(const CycElem& c) : RatFunc(MPoly(c)) {}  // NOLINT

    static RatFunc variable(Var v) { return RatFunc(MPoly::variable(v)); }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;  // throws DivisionByZero
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc pow(long k) const;
    RatFunc inverse() const;

    // Cross-multiplication equality: a/b == c/d iff a*d == c*b.
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string str() const;

private:
    MPoly num_;
    MPoly den_;
};

} // namespace dwork
