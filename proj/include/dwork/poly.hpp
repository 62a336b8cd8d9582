// poly.hpp
// Sparse multivariate polynomials over the cyclotomic ground field, with a
// fixed variable catalog.  Monomials are exponent vectors over the catalog;
// the term order is lexicographic in catalog order (a genuine monomial order,
// used by the exact-division algorithm).
#pragma once

#include "dwork/cyclotomic.hpp"

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace dwork {

enum class Var : uint8_t {
    sigma, tau, rho,
    sigma1, sigma2, tau1, tau2,
    u, v, psi, P, phi, gamma,
    b, c, d, r, s, t,
    delta, kappa, psitilde,
    z0, z1, z2, z3, z4, z5,
    x, y, z,        // the P^2 chart of the del Pezzo dictionary
    zline, w,       // conifold coordinate and its homogenizing partner
    sparam, tparam, // rational parametrizations of divisor components
    aparam, bparam, // exceptional-curve parameters
    Asigtau, Atausig, Bsig, Btau, Bsigtau, Rsig, Rtau,  // formal fifth roots
    x1, x2, x3, x4, x5,   // ambient coordinates of P^4
    eps1, eps2,           // local coordinates at a node
    Tcov, Ucov,           // covering variables of the Fermat-fiber polynomials
    kCount
};

constexpr size_t kVarCount = static_cast<size_t>(Var::kCount);

const char* var_name(Var v);

struct Monomial {
    std::array<uint8_t, kVarCount> e{};

    uint8_t exp(Var v) const { return e[static_cast<size_t>(v)]; }
    void set(Var v, uint8_t n) { e[static_cast<size_t>(v)] = n; }
    unsigned total_degree() const;
    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const;  // caller guarantees divisibility
    auto operator<=>(const Monomial&) const = default;
};

struct NotDivisible : std::runtime_error {
    explicit NotDivisible(std::string witness)
        : std::runtime_error("polynomial division left a nonzero remainder"),
          remainder(std::move(witness)) {}
    std::string remainder;  // printable witness
};

class MPoly {
public:
    using TermMap = std::map<Monomial, CycElem, std::greater<Monomial>>;

    MPoly() = default;
    MPoly(const CycElem& c);  // NOLINT(google-explicit-constructor)
    MPoly(long n) : MPoly(CycElem(n)) {}  // NOLINT(google-explicit-constructor)
    MPoly(const Rat& r) : MPoly(CycElem(r)) {}  // NOLINT(google-explicit-constructor)

    static MPoly variable(Var v);
    static MPoly term(const CycElem& coeff, std::initializer_list<std::pair<Var, unsigned>> exps);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    CycElem constant_value() const;  // throws if not constant
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    int degree(Var v) const;            // -1 for the zero polynomial
    int total_degree() const;
    bool contains(Var v) const { return degree(v) > 0; }
    std::vector<Var> variables() const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    MPoly operator*(const MPoly& o) const;
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly pow(unsigned k) const;
    // Exact quotient; throws NotDivisible (with remainder witness) otherwise.
    MPoly exact_div(const MPoly& divisor) const;
    MPoly derivative(Var v) const;

    // Coefficients of powers of v: result[k] is the coefficient of v^k.
    std::vector<MPoly> coefficients_in(Var v) const;
    // Substitute an exact field value for one variable.
    MPoly eval_var(Var v, const CycElem& value) const;
    // Full evaluation; every variable of the polynomial must be bound.
    CycElem eval(const std::map<Var, CycElem>& point) const;

    // Replace variable v by another variable (used for sigma<->tau swaps).
    MPoly rename_var(Var from, Var to) const;

    std::string str() const;

private:
    void add_term(const Monomial& m, const CycElem& c);
    TermMap terms_;
    friend class RatFunc;
};

inline MPoly operator*(const CycElem& c, const MPoly& p) { return MPoly(c) * p; }
inline MPoly operator*(long n, const MPoly& p) { return MPoly(n) * p; }

MPoly var(Var v);  // shorthand for MPoly::variable

} // namespace dwork
