// fibers.hpp
// The three special members of the pencil.  psi = 0: the Fermat quintic with
// its 375 isolated lines, 50 cones and the degree-5 cover of the degenerate
// parameter curve.  psi^5 = 1: the conifold member, where the parameter curve
// acquires six extra nodes, becomes rational, and carries an exact
// icosahedral (A5) action by Moebius transformations; the fifth powers of the
// Pluecker coordinates split off exact fifth roots.  psi = infinity: the
// union of five hyperplanes, where F+ factors into five bilinear pieces.
#pragma once

#include "dwork/delpezzo.hpp"
#include "dwork/polyops.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dwork::fib {

struct CountMismatch : std::runtime_error {
    explicit CountMismatch(const std::string& what) : std::runtime_error(what) {}
};
struct RestrictionMismatch : std::runtime_error {
    explicit RestrictionMismatch(const std::string& what) : std::runtime_error(what) {}
};
struct NodeFailed : std::runtime_error {
    explicit NodeFailed(const std::string& what) : std::runtime_error(what) {}
};
struct NotAFifthPower : std::runtime_error {
    explicit NotAFifthPower(const std::string& what) : std::runtime_error(what) {}
};
struct ArithmeticMismatch : std::runtime_error {
    explicit ArithmeticMismatch(const std::string& what) : std::runtime_error(what) {}
};
struct FactorizationFailed : std::runtime_error {
    explicit FactorizationFailed(const std::string& what) : std::runtime_error(what) {}
};

// An isolated line on the Fermat quintic: coordinates at positions pair_a are
// (u, -zeta^k u), at positions pair_b are (v, -zeta^l v), and the coordinate
// at zero_pos vanishes identically.  Positions are 1-based.
struct IsolatedLine {
    std::array<int, 2> pair_a;
    int k;
    std::array<int, 2> pair_b;
    int l;
    int zero_pos;
};

// A cone of lines on the Fermat quintic: apex has 1 and -zeta^k at the two
// positions of `pair` and zeroes elsewhere; the lines of the cone join the
// apex to the plane quintic curve a^5 + b^5 + c^5 = 0 in the complementary
// coordinate plane.
struct Cone {
    std::array<int, 2> pair;
    int k;
};

// A projective transformation z -> (m00 z + m01)/(m10 z + m11) with exact
// cyclotomic entries and nonzero determinant.
struct MoebiusMap {
    std::array<std::array<CycElem, 2>, 2> m;

    CycElem det() const;
    RatFunc apply(const RatFunc& z) const;
    // Composition: (this . inner)(z) = this(inner(z)).
    MoebiusMap after(const MoebiusMap& inner) const;
};

// The generators of the icosahedral deck action on the dodecahedral
// coordinate: order 2, 3 and 5.
MoebiusMap moebius_m2();
MoebiusMap moebius_m3();
MoebiusMap moebius_m5();

// All 375 isolated lines (5 choices of the vanishing coordinate, 3 pairings
// of the remaining four positions, 5 x 5 root choices) and all 50 cones.
std::vector<IsolatedLine> isolated_lines();
std::vector<Cone> cones();

// psi = 0: every isolated line lies on the quintic identically in psi, every
// cone apex lies on the Fermat quintic, each cone contains 15 isolated lines
// and meets exactly 15 other cones, any two meeting cones share exactly one
// isolated line, and the Fermat cubic warm-up has 27 lines.
void fermat_combinatorics();

// psi = 0 through the parameter curve: restricts the ten p_ij to sigma = 0,
// pins the vanishing set {15, 23, 24, 34} and the exact nonzero restrictions,
// compares against the displayed values (the corrected slot for p13 and the
// corrected tau factor of p45 = p14), and verifies that the induced 25:1
// cover of the line is a Fermat quintic curve.
void fermat_fiber_cover();

// phi = 5 sqrt(5)/2, the value corresponding to psi = 1.
CycElem conifold_phi();

// The rational parametrization (R1(z), R2(z)) of the conifold parameter
// curve, as exact rational functions of Var::zline.
std::pair<RatFunc, RatFunc> conifold_rational_maps();

// The action of a permutation on (sigma, tau), transported through the
// blow-up model: psi_map, the linear representation, phi_map.  Uses the
// substitution convention x_i -> x_{g(i)} on ambient coordinates.
std::pair<RatFunc, RatFunc> sigma_tau_action(const dp5::Perm& g, const RatFunc& s,
                                             const RatFunc& t);

// The permutations realized by the three Moebius generators under
// sigma_tau_action (and by the same maps on the lines of the quadric).
dp5::Perm conifold_g2();  // (14)(25)
dp5::Perm conifold_g3();  // (253)
dp5::Perm conifold_g5();  // (13542)

// The six extra nodes of the parameter curve at phi = 5 sqrt(5)/2: each
// satisfies F+ = dF/dsigma = dF/dtau = 0 with nondegenerate Hessian, the
// resultant locus admits no unlisted affine singularities, and (2,3) is not
// on the curve.
void conifold_nodes();

// F+(R1, R2) = 0 exactly; the structural relation R2(z) = 1/R1(-w^2 z, -phi);
// equivariance under (m2, m3, m5) and under composed random words; z = 0 and
// z = infinity map to (infinity, 0); the fixed points of m5 map to the node
// (-(1+sqrt5)/2, (3-sqrt5)/2).
void conifold_parametrization(uint64_t seed = 0, int words = 10);

// The quadric surface inside the psi = 1 member: the symmetric-function form
// of the equation, the van Geemen lines l+- with b^2 + 3b + 6 = 0, the exact
// parametrization Upsilon(z, u) with s1 = s2 = 0, the Moebius equivariance of
// the line family on Pluecker vectors, and the dodecahedral degree-18
// polynomial (exact invariances, numeric root permutation under m5).
void quadric_fiber();

// Pulls the ten p_ij back along (R1, R2) to degree-48 binary forms, splits
// off the degree-38 common divisor, and certifies each degree-10 quotient as
// a constant times the fifth power of the Pluecker quadratic of the line
// l_z on the quadric.  Returns the recorded constants (normalized so the
// (4,5) entry is 1).
std::map<std::string, CycElem> conifold_pluecker_split();

// 125 components with 12 marked points each, every marked point on exactly
// two components: 750 nodes, Euler characteristic -625, arithmetic genus 626.
void conifold_genus_arithmetic();

// phi = (omega - omega^2)/2, the root of phi^2 = -3/4 for which F+ factors
// as printed.
CycElem infinity_phi();

// psi = infinity: F+ = (sigma+w^2)(tau+w^2)(sigma tau+w)(sigma tau+w sigma+w^2)
// (sigma tau+w tau+w^2) exactly, F- is the omega <-> omega^2 conjugate, each
// factor divides the corresponding named divisor factor, the p_ij vanishing
// list on sigma = -omega^2 is {13, 23, 34, 35}, and the six nonzero
// restrictions are c_ij n_i n_j times a common monic cubic.  Returns the
// recorded constants c_ij.
std::map<std::string, CycElem> psi_infinity_fiber();

} // namespace dwork::fib
