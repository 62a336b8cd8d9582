// lines_numeric.hpp
// Numeric construction of lines from curve parameters: the explicit family
// with its 125 phase branches, the degenerate-coordinate lines, and the
// limiting process that connects the two.
#pragma once

#include "dwork/numeric.hpp"

#include <array>
#include <complex>
#include <stdexcept>
#include <utility>

namespace dwork::lines {

struct NotOnCurve : std::runtime_error {
    explicit NotOnCurve(const std::string& what) : std::runtime_error(what) {}
};
struct DegenerateParameters : std::runtime_error {
    explicit DegenerateParameters(const std::string& what) : std::runtime_error(what) {}
};
struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

using Cx = std::complex<double>;

// A line in P^4 spanned by the rows u, v: x_j = u_j * u + v_j * v.
struct LineMat {
    std::array<Cx, 5> u{};
    std::array<Cx, 5> v{};
};

// A phase branch (0, a, b, c, d) with d = -(a+b+c) mod 5, acting on the
// coordinates as multiplication by fifth roots of unity.
struct Branch {
    int a = 0, b = 0, c = 0;
};

// The family line at (sigma, tau) from principal fifth roots, with the given
// phase branch applied.  Throws NotOnCurve if neither factor of F vanishes at
// (sigma, tau, psi) and DegenerateParameters on the loci where the fifth
// powers vanish.
LineMat line_from_params(Cx sigma, Cx tau, Cx psi, Branch branch);

// max |quintic(x(u,v))| over fixed unit-circle samples of (u, v).
double line_residual(const LineMat& line, Cx psi);

// Search all 125 branches; returns the first with residual below tol.
std::pair<LineMat, Branch> line_search(Cx sigma, Cx tau, Cx psi, double tol = 1e-9);

// psi produced by the exact scaling chain at (sigma, tau), principal roots.
Cx chain_psi(Cx sigma, Cx tau);
// The general line (u, v, bu+rv, cu+sv, du+tv) built by the scaling chain;
// exactly on the quintic with parameter chain_psi(sigma, tau).
LineMat chain_line(Cx sigma, Cx tau);

std::array<Cx, 10> pluecker(const LineMat& line);
double max_grassmann_pluecker_residual(const LineMat& line);
// Angle between the projective Pluecker vectors of two lines (0 iff equal).
double pluecker_angle(const LineMat& a, const LineMat& b);

// The degenerate-coordinate line (u, v, bu, cu + w v, -w^2 (cu - v)) for the
// given gamma branch: gamma_sign picks the root of the quadratic in gamma^5,
// gamma_root the fifth root of gamma^5.
LineMat van_geemen_line(Cx psi, int gamma_sign, int gamma_root);

// Sampled verification of the family: for each sample the scaling-chain line
// and some branch of the explicit family satisfy the quintic, and the
// Grassmann-Pluecker relations hold.  Retries at high precision on failure.
void check_family_samples(unsigned samples, unsigned seed);

// Swapping (sigma, tau) produces the same line with coordinates 1<->2, 3<->5.
void check_s5_row1_on_lines();

// The three nonsingular limit rows: family lines converge projectively to the
// listed degenerate-coordinate lines as the intersection point is approached.
void check_van_geemen_limits();

} // namespace dwork::lines
