// delpezzo.hpp
// The quintic del Pezzo surface obtained by blowing up P^1 x P^1 in the three
// points (1,1), (0,inf), (inf,0): the blow-up map Psi and its inverse Phi,
// the five defining quadrics in P^5, the linear S5 representation on C^6 with
// its character, the symmetric/antisymmetric Wiman quadrics G_z/H_z, the ten
// exceptional curves with their Petersen incidence pattern, and the
// birational dictionary with the plane model given by the Wiman sextic.
#pragma once

#include "dwork/linalg.hpp"
#include "dwork/polyops.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dwork::dp5 {

struct OutsideChart : std::runtime_error {
    explicit OutsideChart(const std::string& what) : std::runtime_error(what) {}
};
struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};
struct RelationFailed : std::runtime_error {
    explicit RelationFailed(const std::string& what) : std::runtime_error(what) {}
};
struct CharacterMismatch : std::runtime_error {
    explicit CharacterMismatch(const std::string& what) : std::runtime_error(what) {}
};
struct CurveFailed : std::runtime_error {
    explicit CurveFailed(const std::string& what) : std::runtime_error(what) {}
};

// A permutation of {1..5}; img[i] is the (0-based) image of label i+1.
struct Perm {
    std::array<int, 5> img{0, 1, 2, 3, 4};

    static Perm from_cycles(std::initializer_list<std::initializer_list<int>> cycles);
    // (a * b)(x) = a(b(x))
    Perm operator*(const Perm& o) const;
    Perm inverse() const;
    int parity() const;  // +1 or -1
    int apply(int label) const { return img[static_cast<size_t>(label - 1)] + 1; }  // 1-based
    std::string str() const;
    auto operator<=>(const Perm&) const = default;
};

// A linear map on C^6 acting on points as z -> M z.
using Mat6 = std::array<std::array<Rat, 6>, 6>;

Rat trace(const Mat6& m);

// The six bidegree-(2,2) blow-up coordinates as polynomials in sigma, tau.
std::array<MPoly, 6> psi_polys();
std::array<RatFunc, 6> psi_map(const RatFunc& s, const RatFunc& t);

// A point of P^1 as an exact homogeneous pair (a : b).
struct P1 {
    CycElem a, b;
};

// The open-chart inverse ((z3-z5 : z4), (z3-z4 : z5)); throws OutsideChart
// when either pair vanishes identically.
std::pair<P1, P1> phi_map(const std::array<CycElem, 6>& z);

// The five quadrics cutting out the surface in P^5, derived as the kernel of
// the pullback map on the 21 quadratic monomials.  Throws DimensionMismatch
// if the kernel dimension is not exactly 5 or q0 is not in the span.
const std::vector<MPoly>& quadrics();

// The full linear representation, built from the four printed generator
// matrices by closure; throws RelationFailed if the closure is inconsistent
// or does not have order 120.
const std::map<Perm, Mat6>& s5_group();
Mat6 s5_rep(const Perm& g);

// q(M z): substitution action on polynomials in z0..z5.
MPoly act(const Mat6& m, const MPoly& q);

// Traces on the seven conjugacy classes match (6,0,-2,0,0,1,0) and the
// character is irreducible.
void character_check();

// (G_z, H_z): invariant and sign-invariant quadrics, built by symmetrization
// and pinned to the printed coefficients; verifies the generator action and
// the pullbacks Psi*G_z = G, Psi*H_z = H.
std::pair<MPoly, MPoly> wiman_quadrics();

// Everything the exceptional-curve table claims: the parametrizations lie on
// the quadrics, their images in P^1 x P^1 are as listed, the special points
// lie on every curve of the pencil, the S5 orbit closes with E_ij -> E_gi gj,
// and the incidence pattern is the Petersen graph.
void exceptional_curves_check();

// The plane dictionary: sigma = y/x, tau = x(y-z)/(y(x-z)) inverts
// x = sigma tau - 1, y = sigma(sigma tau - 1), z = sigma(tau - 1); the pencil
// pulls back to the sextics f_e - phi f_o with four ordinary double points.
void p2_dictionary_check();

// The ten parametrizations in textual polynomial form (golden-file content).
std::string exceptional_curves_text();

} // namespace dwork::dp5
