// Tests for the Picard lattice of the del Pezzo surface and the restriction
// map to the pencil curve.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dwork/picard.hpp"

using namespace dwork;
using namespace dwork::pic;

TEST_CASE("intersection form on the standard basis") {
    CHECK(intersect(l_class(), l_class()) == 1);
    CHECK(intersect(e(1, 5), e(1, 5)) == -1);
    CHECK(intersect(l_class(), e(2, 5)) == 0);
    CHECK(intersect(e(1, 5), e(2, 5)) == 0);

    // Derived classes: expansion and the Petersen pairing rules.
    CHECK(e(1, 2) == l_class() - e(3, 5) - e(4, 5));
    CHECK(intersect(e(1, 2), e(3, 4)) == 1);
    CHECK(intersect(e(1, 2), e(1, 3)) == 0);
    CHECK(intersect(e(1, 2), e(1, 2)) == -1);

    PicClass mK = (-1L) * canonical_class();
    CHECK(intersect(mK, mK) == 5);

    CHECK_NOTHROW(intersection_table_check());
}

TEST_CASE("class arithmetic of the pencil in the lattice") {
    CHECK_NOTHROW(class_checks());
}

TEST_CASE("root basis spans K-perp with the A4 Cartan matrix") {
    auto alpha = root_basis();
    CHECK(intersect(alpha[0], alpha[0]) == -2);
    CHECK(intersect(alpha[0], alpha[1]) == 1);
    CHECK(intersect(alpha[0], alpha[2]) == 0);
    CHECK(intersect(alpha[0], alpha[3]) == 0);
    CHECK(intersect(alpha[2], alpha[3]) == 1);
    CHECK_NOTHROW(root_basis_check());
}

TEST_CASE("restriction map images") {
    CHECK(istar(1, 5) == F5Vec{1, 0, 0});
    CHECK(istar(4, 5) == F5Vec{0, 0, 0});
    CHECK(istar(1, 2) == F5Vec{2, 2, 1});
    CHECK(istar(3, 4) == F5Vec{1, 1, 2});
}

TEST_CASE("chain replay, equivariance, faithfulness and lattice index") {
    CHECK_NOTHROW(istar_map());
}
