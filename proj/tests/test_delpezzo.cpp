// Tests for the del Pezzo surface: blow-up maps, quadrics, the linear S5
// representation, the Wiman quadrics, exceptional curves and the plane model.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dwork/delpezzo.hpp"
#include "dwork/lines.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

using namespace dwork;
using dp5::Perm;

TEST_CASE("blow-up map evaluates as expected") {
    auto z = dp5::psi_map(RatFunc(2), RatFunc(3));
    std::array<long, 6> expected = {35, 17, 11, 5, 2, 1};
    for (size_t i = 0; i < 6; ++i) CHECK(z[i] == RatFunc(expected[i]));

    auto at_node = dp5::psi_map(RatFunc(1), RatFunc(1));
    for (size_t i = 0; i < 6; ++i) CHECK(at_node[i].is_zero());

    // q0 vanishes identically on the image.
    MPoly q0 = (var(Var::z1) - var(Var::z3)) * var(Var::z5) -
               (var(Var::z2) - var(Var::z3)) * var(Var::z4);
    std::map<Var, MPoly> bind;
    auto polys = dp5::psi_polys();
    std::array<Var, 6> zv = {Var::z0, Var::z1, Var::z2, Var::z3, Var::z4, Var::z5};
    for (size_t i = 0; i < 6; ++i) bind[zv[i]] = polys[i];
    CHECK(substitute_poly(q0, bind).is_zero());
}

TEST_CASE("chart inverse recovers the parameters") {
    auto [sig, tau] = dp5::phi_map({CycElem(35), CycElem(17), CycElem(11), CycElem(5),
                                    CycElem(2), CycElem(1)});
    CHECK(sig.a / sig.b == CycElem(2));
    CHECK(tau.a / tau.b == CycElem(3));

    // A point of the exceptional curve over (0, inf).
    auto [s0, tinf] = dp5::phi_map({CycElem(0), CycElem(3), CycElem(0), CycElem(0),
                                    CycElem(7), CycElem(0)});
    CHECK(s0.a.is_zero());
    CHECK_FALSE(s0.b.is_zero());
    CHECK(tinf.b.is_zero());
    CHECK_FALSE(tinf.a.is_zero());

    // Phi composed with Psi is the identity as a rational map.
    RatFunc s = RatFunc::variable(Var::sigma), t = RatFunc::variable(Var::tau);
    auto z = dp5::psi_map(s, t);
    CHECK((z[3] - z[5]) / z[4] == s);
    CHECK((z[3] - z[4]) / z[5] == t);

    // The chart formula fails where both entries of a pair vanish.
    CHECK_THROWS_AS(dp5::phi_map({CycElem(1), CycElem(2), CycElem(0), CycElem(0),
                                  CycElem(0), CycElem(0)}),
                    dp5::OutsideChart);
}

TEST_CASE("five quadrics cut out the surface") {
    CHECK(dp5::quadrics().size() == 5);  // q0 membership asserted on construction
    for (const MPoly& q : dp5::quadrics()) CHECK(q.total_degree() == 2);
}

TEST_CASE("the linear representation of the permutation group") {
    CHECK(dp5::s5_group().size() == 120);
    CHECK(dp5::trace(dp5::s5_rep(Perm{})) == Rat(6));
    CHECK(dp5::trace(dp5::s5_rep(Perm::from_cycles({{1, 2}, {3, 5}}))) == Rat(-2));
    CHECK(dp5::trace(dp5::s5_rep(Perm::from_cycles({{1, 2}}))) == Rat(0));

    // Homomorphism property on random pairs.
    std::mt19937 rng(42);
    auto random_perm = [&] {
        Perm p;
        std::shuffle(p.img.begin(), p.img.end(), rng);
        return p;
    };
    auto mat_mul = [](const dp5::Mat6& a, const dp5::Mat6& b) {
        dp5::Mat6 r{};
        for (size_t i = 0; i < 6; ++i)
            for (size_t k = 0; k < 6; ++k)
                for (size_t j = 0; j < 6; ++j) r[i][j] += a[i][k] * b[k][j];
        return r;
    };
    for (int n = 0; n < 50; ++n) {
        Perm a = random_perm(), b = random_perm();
        CHECK(mat_mul(dp5::s5_rep(a), dp5::s5_rep(b)) == dp5::s5_rep(a * b));
    }
}

TEST_CASE("character matches the six-dimensional irreducible row") {
    CHECK_NOTHROW(dp5::character_check());
}

TEST_CASE("invariant quadrics restrict the pencil to the surface") {
    auto [gz, hz] = dp5::wiman_quadrics();  // all identities asserted inside
    // The displayed form of the invariant quadric is 2*G_z; its z3^2
    // coefficient is 6.
    Monomial z3sq;
    z3sq.set(Var::z3, 2);
    CHECK((MPoly(2) * gz).terms().at(z3sq) == CycElem(6));
    CHECK_FALSE(hz.is_zero());
}

TEST_CASE("exceptional curves, their images and the Petersen pattern") {
    CHECK_NOTHROW(dp5::exceptional_curves_check());
}

TEST_CASE("plane model dictionary and the nodal sextics") {
    CHECK_NOTHROW(dp5::p2_dictionary_check());
}

TEST_CASE("exceptional-curve parametrizations match the golden file") {
    std::ifstream in(std::string(DWORK_SOURCE_DIR) + "/golden/dp5_exceptional_curves.txt");
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == dp5::exceptional_curves_text());
}
