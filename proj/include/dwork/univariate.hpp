// univariate.hpp
// Dense univariate polynomials over the cyclotomic field: Euclidean division,
// gcd, and conversion from/to the sparse multivariate representation.  Also a
// fraction-free (Bareiss) determinant over multivariate polynomials, used for
// resultants.
#pragma once

#include "dwork/poly.hpp"

#include <vector>

namespace dwork {

// coeffs[i] is the coefficient of x^i; trailing zeros are trimmed.
using UPoly = std::vector<CycElem>;

int u_degree(const UPoly& p);            // -1 for zero
void u_trim(UPoly& p);
UPoly u_from_mpoly(const MPoly& f, Var v);  // throws if f involves other variables
MPoly u_to_mpoly(const UPoly& p, Var v);
UPoly u_mul(const UPoly& a, const UPoly& b);
UPoly u_sub(const UPoly& a, const UPoly& b);
// Division with remainder; quotient in *quot if non-null.
UPoly u_mod(const UPoly& a, const UPoly& b, UPoly* quot = nullptr);
UPoly u_derivative(const UPoly& p);
// Monic gcd via the Euclidean algorithm.
UPoly u_gcd(UPoly a, UPoly b);
UPoly u_monic(UPoly p);
CycElem u_eval(const UPoly& p, const CycElem& x);

// Determinant of a square matrix of polynomials (Bareiss, exact divisions).
MPoly poly_determinant(std::vector<std::vector<MPoly>> m);

// Resultant of f and g with respect to variable v (Sylvester determinant).
// The other variables of f, g ride along inside the coefficients.
MPoly resultant(const MPoly& f, const MPoly& g, Var v);

} // namespace dwork
