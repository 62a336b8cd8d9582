// plueckerdiv.hpp
// Pluecker coordinates of the parametrized line family: the formal-radical
// minors, the fifth-power polynomials p_ij of bidegree (6,6), their
// factorizations into the named curves m_ij, l_1, l_2, k_12, k_14, k_24, and
// the intersection divisors of those curves with the pencil.
#pragma once

#include "dwork/polyops.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dwork::pluecker {

struct CollapseFailed : std::runtime_error {
    explicit CollapseFailed(const std::string& what) : std::runtime_error(what) {}
};
struct DivisorMismatch : std::runtime_error {
    explicit DivisorMismatch(const std::string& what) : std::runtime_error(what) {}
};
struct FactorizationFailed : std::runtime_error {
    explicit FactorizationFailed(const std::string& what) : std::runtime_error(what) {}
};
struct DecompositionFailed : std::runtime_error {
    explicit DecompositionFailed(const std::string& what) : std::runtime_error(what) {}
};

// Index pairs 12, 13, 14, 15, 23, 24, 25, 34, 35, 45 in this fixed order.
const std::array<std::pair<int, int>, 10>& index_pairs();

// 2x2 minors of the family matrix in the formal-radical symbols; each is a
// single radical monomial times a polynomial in sigma, tau (asserted).
std::array<MPoly, 10> pluecker_minors();

// p_ij = pi_ij^5 / p_c, radical-reduced, divided exactly and homogenized to
// bidegree (6,6) in sigma1, sigma2, tau1, tau2.
std::array<MPoly, 10> pij_polynomials();

// The named irreducible factors (m13, ..., m45, l1, l2, k12, k14, k24).
const std::map<std::string, MPoly>& named_factors();

// A divisor supported on the twenty special points, as multiplicities of the
// ten point pairs D_ij.
using Divisor = std::map<std::string, int>;
int divisor_degree(const Divisor& d);  // each D_ij consists of two points
std::string divisor_str(const Divisor& d);

// Pulls the pencil back to each component of the named curve, factors the
// resulting binary form exactly over the claimed points and returns the
// intersection divisor; throws DivisorMismatch if a linear factor does not
// divide or a residual of positive degree remains.
Divisor curve_intersection(const std::string& name);

// The leftover constant of each component after dividing out the claimed
// roots: a polynomial in phi of degree at most one, one entry per component.
std::vector<MPoly> component_constants(const std::string& name);

// Verifies every row of the factorization table by exact multiplication (up
// to a constant) and returns the recorded constants.
std::map<std::string, CycElem> table_divpl_check();

// Assembles (p_ij = 0) . C_phi from the two tables and checks the common part
// D_b (degree 38) with residue exactly 5 D_ij, for all ten indices.
void db_decomposition();

} // namespace dwork::pluecker
