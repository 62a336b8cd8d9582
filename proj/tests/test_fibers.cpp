// Tests for the three special members of the pencil: the Fermat fiber with
// its isolated lines and cones, the conifold fiber with its rational
// parameter curve and icosahedral symmetry, and the five-hyperplane fiber at
// infinity.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dwork/fibers.hpp"
#include "dwork/lines.hpp"
#include "dwork/plueckerdiv.hpp"

using namespace dwork;
using namespace dwork::fib;

TEST_CASE("isolated line and cone counts") {
    CHECK(isolated_lines().size() == 375);
    CHECK(cones().size() == 50);
    CHECK_NOTHROW(fermat_combinatorics());
}

TEST_CASE("restrictions of the Pluecker polynomials to sigma = 0") {
    // Spot re-derivation outside the packaged check: p_12 restricted to the
    // component sigma = 0 is (tau - 1)(tau^2 - tau + 1).
    MPoly r12 = pluecker::pij_polynomials()[0]
                    .eval_var(Var::sigma1, CycElem(0))
                    .eval_var(Var::sigma2, CycElem(1))
                    .eval_var(Var::tau2, CycElem(1))
                    .rename_var(Var::tau1, Var::tau);
    MPoly tau = var(Var::tau);
    CHECK(r12 == (tau - MPoly(1)) * (tau * tau - tau + MPoly(1)));

    CHECK_NOTHROW(fermat_fiber_cover());
}

TEST_CASE("conifold value of phi") {
    CycElem phi = conifold_phi();
    CHECK(phi * phi == CycElem(Rat(125, 4)));  // 32/P - 3/4 at P = psi^5 = 1
}

TEST_CASE("the six extra nodes of the conifold parameter curve") {
    CHECK_NOTHROW(conifold_nodes());
}

TEST_CASE("rational parametrization and icosahedral equivariance") {
    CHECK_NOTHROW(conifold_parametrization(0, 10));

    // The three generators land in the alternating group.
    CHECK(conifold_g2().parity() == 1);
    CHECK(conifold_g3().parity() == 1);
    CHECK(conifold_g5().parity() == 1);
    CHECK(conifold_g5() == dp5::Perm::from_cycles({{1, 3, 5, 4, 2}}));

    // Negative control: the label (15432) does not realize m5.  The correct
    // label is its non-power (13542).
    auto [R1, R2] = conifold_rational_maps();
    RatFunc mz = moebius_m5().apply(RatFunc::variable(Var::zline));
    auto pull = [&](const RatFunc& f) {
        return substitute(f.num(), {{Var::zline, mz}}) /
               substitute(f.den(), {{Var::zline, mz}});
    };
    auto [ws, wt] = sigma_tau_action(dp5::Perm::from_cycles({{5, 4, 3, 2, 1}}), R1, R2);
    CHECK_FALSE((pull(R1) == ws && pull(R2) == wt));
    auto [gs, gt] = sigma_tau_action(conifold_g5(), R1, R2);
    CHECK(pull(R1) == gs);
    CHECK(pull(R2) == gt);
}

TEST_CASE("Moebius generator orders") {
    auto scalar = [](const MoebiusMap& m) {
        return m.m[0][1].is_zero() && m.m[1][0].is_zero() && m.m[0][0] == m.m[1][1];
    };
    MoebiusMap m2 = moebius_m2(), m3 = moebius_m3(), m5 = moebius_m5();
    CHECK_FALSE(m2.det().is_zero());
    CHECK_FALSE(m3.det().is_zero());
    CHECK_FALSE(m5.det().is_zero());
    CHECK(scalar(m2.after(m2)));
    CHECK_FALSE(scalar(m3));
    CHECK(scalar(m3.after(m3).after(m3)));
    MoebiusMap p = m5;
    for (int i = 0; i < 4; ++i) {
        CHECK_FALSE(scalar(p));
        p = p.after(m5);
    }
    CHECK(scalar(p));
}

TEST_CASE("the quadric surface in the psi = 1 member") {
    // b_+- = (-3 +- sqrt(-15))/2 solve b^2 + 3b + 6 = 0.
    CycElem bp = (CycElem(-3) + CycElem::sqrt_minus15()) * CycElem(Rat(1, 2));
    CHECK((bp * bp + CycElem(3) * bp + CycElem(6)).is_zero());

    CHECK_NOTHROW(quadric_fiber());
}

TEST_CASE("fifth-power splitting of the pulled-back Pluecker forms") {
    auto consts = conifold_pluecker_split();
    CHECK(consts.size() == 10);
    // The pullbacks split as (degree 38 common form) * (line quadratic)^5
    // with unit constants throughout.
    for (const auto& [name, c] : consts) {
        CAPTURE(name);
        CHECK(c == CycElem(1));
    }
}

TEST_CASE("graph arithmetic of the conifold line configuration") {
    CHECK_NOTHROW(conifold_genus_arithmetic());
}

TEST_CASE("the fiber at psi = infinity") {
    CycElem phi = infinity_phi();
    CHECK(phi * phi == CycElem(Rat(-3, 4)));

    auto consts = psi_infinity_fiber();
    CHECK(consts.size() == 6);
    CycElem w = CycElem::omega();
    CHECK(consts.at("12") == w - CycElem(1));
    CHECK(consts.at("14") == w + CycElem(2));
    CHECK(consts.at("15") == -CycElem(1) - CycElem(2) * w);
    CHECK(consts.at("24") == CycElem(-1));
    CHECK(consts.at("25") == w);
    CHECK(consts.at("45") == CycElem(1) + w);
}
