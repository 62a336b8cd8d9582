// picard.hpp
// The Picard lattice of the quintic del Pezzo surface: intersection form,
// canonical class, the degree-zero root basis with its A4 Cartan matrix, and
// the restriction map onto (Z/5Z)^3 obtained by replaying the divisor-class
// linear-equivalence chains.
#pragma once

#include "dwork/delpezzo.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace dwork::pic {

struct ClassMismatch : std::runtime_error {
    explicit ClassMismatch(const std::string& what) : std::runtime_error(what) {}
};
struct GramMismatch : std::runtime_error {
    explicit GramMismatch(const std::string& what) : std::runtime_error(what) {}
};
struct ChainFailed : std::runtime_error {
    explicit ChainFailed(const std::string& what) : std::runtime_error(what) {}
};
struct RankMismatch : std::runtime_error {
    explicit RankMismatch(const std::string& what) : std::runtime_error(what) {}
};

// A divisor class in the basis l, E15, E25, E35, E45.
struct PicClass {
    std::array<long, 5> c{};

    friend PicClass operator+(PicClass a, const PicClass& b) {
        for (int i = 0; i < 5; ++i) a.c[i] += b.c[i];
        return a;
    }
    friend PicClass operator-(PicClass a, const PicClass& b) {
        for (int i = 0; i < 5; ++i) a.c[i] -= b.c[i];
        return a;
    }
    friend PicClass operator*(long n, PicClass a) {
        for (int i = 0; i < 5; ++i) a.c[i] *= n;
        return a;
    }
    friend bool operator==(const PicClass&, const PicClass&) = default;
};

PicClass l_class();
PicClass e(int i, int j);    // E_ij; for j < 5 this is l - E_k5 - E_l5
PicClass canonical_class();  // K = -(3l - E15 - E25 - E35 - E45)

// The intersection form: l^2 = 1, E_i5^2 = -1, l.E_i5 = 0.
long intersect(const PicClass& a, const PicClass& b);

// The pairing rules of the ten exceptional curves: each is a (-1)-curve,
// classes sharing an index are disjoint, classes with disjoint labels meet
// once (the Petersen graph).
void intersection_table_check();

// Class arithmetic: C_phi = -2K, the sum of the exceptional curves, the
// basepoint count, the pullbacks of the two rulings, the bidegree formula,
// and the action of the Cremona generator on the lattice.
void class_checks();

// alpha_1..alpha_4 span the orthogonal complement of K and their Gram matrix
// is minus the A4 Cartan matrix.
std::array<PicClass, 4> root_basis();
void root_basis_check();

using F5Vec = std::array<int, 3>;  // coordinates in the basis e15, e25, e35

// The image of e_ij = D_ij - D_45 in (Z/5Z)^3.
F5Vec istar(int i, int j);

// Replays the linear-equivalence chains (expansion of E_ij, substitution of
// l, the five-torsion identifications), re-derives e34 = e15 + e25 + 2 e35
// and the full table, checks K_C = 5 D_15, the rank of the image, the
// equivariance and injectivity of the induced A5 action, and the index-125
// lattice quotient via Smith normal form.
void istar_map();

} // namespace dwork::pic
