// Tests for the symbolic line-family verifications.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dwork/lines.hpp"
#include "dwork/lines_numeric.hpp"

using namespace dwork;

TEST_CASE("membership conditions re-derive from the quintic") {
    CHECK_NOTHROW(lines::check_membership_rows());
}

TEST_CASE("F factorizes as -P F+ F-") {
    CHECK_NOTHROW(lines::check_factorization());
}

TEST_CASE("G and H are cyclically symmetric in (sigma, tau, rho)") {
    CHECK_NOTHROW(lines::check_rho_symmetry());
}

TEST_CASE("scaling chain reduces the six conditions to F = 0") {
    CHECK_NOTHROW(lines::check_scaling_chain());
}

TEST_CASE("lines with a degenerate coordinate") {
    CHECK_NOTHROW(lines::check_van_geemen());
}

TEST_CASE("parameter transformations realize the coordinate permutations") {
    CHECK_NOTHROW(lines::check_s5_table());
    CHECK(lines::s5_group_order() == 120);
}

TEST_CASE("common points of the two curves") {
    CHECK_NOTHROW(lines::check_intersection_points());
}

TEST_CASE("node at (1,1) is an ordinary double point") {
    CHECK_NOTHROW(lines::check_node_local_form());
}

TEST_CASE("no singular points away from the three nodes") {
    CHECK_NOTHROW(lines::check_no_extra_singularities());
}

TEST_CASE("scaling-chain line satisfies the quintic numerically") {
    lines::Cx sigma(1.5), tau(2.5);
    lines::Cx psi = lines::chain_psi(sigma, tau);
    lines::LineMat line = lines::chain_line(sigma, tau);
    CHECK(lines::line_residual(line, psi) < 1e-12);
    CHECK(lines::max_grassmann_pluecker_residual(line) < 1e-12);
}

TEST_CASE("family branch search reproduces sampled lines") {
    CHECK_NOTHROW(lines::check_family_samples(25, 0));
}

TEST_CASE("off-curve parameters are rejected") {
    // psi chosen so that neither factor vanishes at (2, 3)
    CHECK_THROWS_AS(lines::line_from_params({2.0, 0.0}, {3.0, 0.0}, {1.3, 0.0}, {}),
                    lines::NotOnCurve);
    CHECK_THROWS_AS(lines::line_search({2.0, 0.0}, {1.0, 0.0}, {1.3, 0.0}),
                    lines::DegenerateParameters);
}

TEST_CASE("parameter swap acts as the coordinate permutation") {
    CHECK_NOTHROW(lines::check_s5_row1_on_lines());
}

TEST_CASE("family lines converge to the degenerate-coordinate lines") {
    CHECK_NOTHROW(lines::check_van_geemen_limits());
}
