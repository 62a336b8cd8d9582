#include "dwork/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace dwork {

namespace {

// Phi_15(x) = x^8 - x^7 + x^5 - x^4 + x^3 - x + 1, so
// x^8 = x^7 - x^5 + x^4 - x^3 + x - 1.
const std::array<long, 8> kReduction = {-1, 1, 0, -1, 1, -1, 0, 1};

// Dense polynomial helpers used only for the extended Euclid in inverse().
using Poly = std::vector<Rat>;

int degree(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[static_cast<size_t>(i)] != 0) return i;
    return -1;
}

Poly sub_scaled(const Poly& a, const Poly& b, const Rat& s, int shift) {
    // a - s * x^shift * b
    Poly r = a;
    size_t need = b.size() + static_cast<size_t>(shift);
    if (r.size() < need) r.resize(need);
    for (size_t i = 0; i < b.size(); ++i) r[i + static_cast<size_t>(shift)] -= s * b[i];
    return r;
}

Poly phi15_poly() {
    Poly p(9);
    p[8] = 1; p[7] = -1; p[5] = 1; p[4] = -1; p[3] = 1; p[1] = -1; p[0] = 1;
    return p;
}

} // namespace

CycElem CycElem::from_coeffs(const std::array<Rat, kDegree>& coeffs) {
    CycElem e;
    e.c_ = coeffs;
    return e;
}

CycElem CycElem::eta() { return eta_pow(1); }

CycElem CycElem::eta_pow(long k) {
    k %= 15;
    if (k < 0) k += 15;
    // Build x^k and reduce top-down via the x^8 rule.
    std::array<Rat, 15> work{};
    work[static_cast<size_t>(k)] = 1;
    for (int d = 14; d >= kDegree; --d) {
        Rat top = work[static_cast<size_t>(d)];
        if (top == 0) continue;
        work[static_cast<size_t>(d)] = 0;
        for (int i = 0; i < kDegree; ++i)
            work[static_cast<size_t>(d - kDegree + i)] += top * kReduction[static_cast<size_t>(i)];
    }
    CycElem e;
    for (int i = 0; i < kDegree; ++i) e.c_[static_cast<size_t>(i)] = work[static_cast<size_t>(i)];
    return e;
}

CycElem CycElem::zeta() { return eta_pow(3); }
CycElem CycElem::zeta_pow(long k) { return eta_pow(3 * (((k % 5) + 5) % 5)); }
CycElem CycElem::omega() { return eta_pow(5); }
CycElem CycElem::omega_pow(long k) { return eta_pow(5 * (((k % 3) + 3) % 3)); }

CycElem CycElem::sqrt5() {
    // 1 + 2*zeta + 2*zeta^-1 = 1 + 2*(eta^3 + eta^12); squares to 5.
    return CycElem(1) + CycElem(2) * zeta_pow(1) + CycElem(2) * zeta_pow(4);
}

CycElem CycElem::sqrt_minus15() {
    // omega - omega^2 = i*sqrt(3), so sqrt5 * (omega - omega^2) squares to -15.
    return sqrt5() * (omega_pow(1) - omega_pow(2));
}

CycElem CycElem::w_infinity() {
    std::array<Rat, kDegree> c{};
    c[0] = 2; c[1] = -1; c[3] = 1; c[4] = -1; c[5] = 1; c[7] = -2;
    return from_coeffs(c);
}

bool CycElem::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycElem::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat CycElem::as_rational() const {
    if (!is_rational()) throw std::runtime_error("CycElem is not rational: " + str());
    return c_[0];
}

CycElem CycElem::operator-() const {
    CycElem r;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

CycElem& CycElem::operator+=(const CycElem& o) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycElem& CycElem::operator-=(const CycElem& o) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycElem& CycElem::operator*=(const CycElem& o) {
    std::array<Rat, 2 * kDegree - 1> prod{};
    for (int i = 0; i < kDegree; ++i) {
        if (c_[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < kDegree; ++j) {
            if (o.c_[static_cast<size_t>(j)] == 0) continue;
            prod[static_cast<size_t>(i + j)] += c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)];
        }
    }
    for (int d = 2 * kDegree - 2; d >= kDegree; --d) {
        Rat top = prod[static_cast<size_t>(d)];
        if (top == 0) continue;
        prod[static_cast<size_t>(d)] = 0;
        for (int i = 0; i < kDegree; ++i)
            prod[static_cast<size_t>(d - kDegree + i)] += top * kReduction[static_cast<size_t>(i)];
    }
    for (int i = 0; i < kDegree; ++i) c_[static_cast<size_t>(i)] = prod[static_cast<size_t>(i)];
    return *this;
}

CycElem& CycElem::operator/=(const CycElem& o) { return *this *= o.inverse(); }

CycElem CycElem::inverse() const {
    if (is_zero()) throw DivisionByZero("CycElem inverse of zero");
    if (is_rational()) return CycElem(Rat(1) / c_[0]);
    // Extended Euclid: find u with u*a = 1 mod Phi_15.
    Poly a(c_.begin(), c_.end());
    Poly b = phi15_poly();
    Poly ua(1, Rat(1)), ub(1, Rat(0));  // invariants: ua*a = a_cur, ub*a = b_cur (mod Phi)
    while (true) {
        int da = degree(a);
        int db = degree(b);
        if (da < 0) throw DivisionByZero("CycElem inverse: unexpected zero remainder chain");
        if (da == 0) {
            CycElem r;
            Rat inv_lead = Rat(1) / a[0];
            for (int i = 0; i < kDegree && i < static_cast<int>(ua.size()); ++i)
                r.c_[static_cast<size_t>(i)] = ua[static_cast<size_t>(i)] * inv_lead;
            return r;
        }
        if (db < da) {
            std::swap(a, b);
            std::swap(ua, ub);
            continue;
        }
        Rat s = b[static_cast<size_t>(db)] / a[static_cast<size_t>(da)];
        b = sub_scaled(b, a, s, db - da);
        ub = sub_scaled(ub, ua, s, db - da);
    }
}

CycElem CycElem::pow(long k) const {
    CycElem base = *this;
    if (k < 0) {
        base = base.inverse();
        k = -k;
    }
    CycElem r(1);
    while (k > 0) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

std::string CycElem::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < kDegree; ++i) {
        const Rat& co = c_[static_cast<size_t>(i)];
        if (co == 0) continue;
        Rat abs_co = co < 0 ? Rat(-co) : co;
        if (first) {
            if (co < 0) os << "-";
            first = false;
        } else {
            os << (co < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << to_string(abs_co);
        } else {
            if (abs_co != 1) os << to_string(abs_co) << "*";
            os << "eta";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) return "0";
    return os.str();
}

std::array<std::string, CycElem::kDegree> CycElem::serialize() const {
    std::array<std::string, kDegree> out;
    for (int i = 0; i < kDegree; ++i) out[static_cast<size_t>(i)] = to_string(c_[static_cast<size_t>(i)]);
    return out;
}

} // namespace dwork
