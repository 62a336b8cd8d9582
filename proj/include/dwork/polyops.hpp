// polyops.hpp
// Structural operations on multivariate polynomials: substitution by rational
// functions (single common denominator, no per-term fraction blowup),
// homogenization, formal-radical reduction, and reduction modulo the defining
// relations of the formal quantities phi and gamma.
#pragma once

#include "dwork/ratfunc.hpp"

#include <map>
#include <vector>

namespace dwork {

struct DegreeTooSmall : std::runtime_error {
    explicit DegreeTooSmall(const std::string& what) : std::runtime_error(what) {}
};

struct IdentityFailed : std::runtime_error {
    explicit IdentityFailed(const std::string& what) : std::runtime_error(what) {}
};

// Substitute rational functions for variables.  Unbound variables are left as
// themselves.  The result denominator is the product over bound variables v of
// den(v)^deg_v(f); the numerator is accumulated as a single polynomial.
RatFunc substitute(const MPoly& f, const std::map<Var, RatFunc>& bindings);

// Polynomial-only substitution (every binding has denominator 1).
MPoly substitute_poly(const MPoly& f, const std::map<Var, MPoly>& bindings);

struct HomGroup {
    Var affine;       // variable to homogenize away
    Var num;          // numerator variable of the projective pair
    Var den;          // denominator variable of the projective pair
    unsigned degree;  // requested homogeneous degree in (num, den)
};

// Replace each affine variable v of a group by num/den and multiply through by
// den^degree; throws DegreeTooSmall if degree < deg_v(f).
MPoly homogenize(const MPoly& f, const std::vector<HomGroup>& groups);

// Rewrite rules X^5 -> polynomial for the formal fifth roots.
const std::map<Var, MPoly>& radical_rules();

// Apply the X^5 rewrite rules until every radical exponent is < 5.
MPoly radical_reduce(MPoly f);

// Reduce all powers v^e with e >= deg using v^deg = rhs.  rhs may still
// contain lower powers of v (the gamma relation does); reduction iterates to a
// fixed point.  The denominator of f must not contain v.
RatFunc reduce_modulo(RatFunc f, Var v, unsigned deg, const RatFunc& rhs);

// phi^2 = 32/P - 3/4, P := psi^5, as a rewrite phi^2 -> (128 - 3P)/(4P).
RatFunc phi_square_rhs();
RatFunc reduce_phi(const RatFunc& f);

// Assert helpers used throughout the check suites.
void require_zero(const MPoly& f, const std::string& what);
void require_zero(const RatFunc& f, const std::string& what);
void require_equal(const RatFunc& a, const RatFunc& b, const std::string& what);

// Quotient a/b when it must be a nonzero constant of the ground field; throws
// IdentityFailed otherwise.  Used for "equal up to a recorded constant" checks.
CycElem constant_ratio(const MPoly& a, const MPoly& b, const std::string& what);

} // namespace dwork
