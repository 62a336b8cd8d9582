// Unit tests for sparse multivariate polynomials, rational functions,
// substitution, homogenization and formal-radical reduction.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dwork/polyops.hpp"
#include "dwork/univariate.hpp"

#include <random>

using namespace dwork;

namespace {

MPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> expo(0, 3);
    MPoly p;
    for (int t = 0; t < 4; ++t) {
        p += MPoly::term(CycElem(coeff(rng)),
                         {{Var::sigma, static_cast<unsigned>(expo(rng))},
                          {Var::tau, static_cast<unsigned>(expo(rng))}});
    }
    return p;
}

const MPoly S = var(Var::sigma);
const MPoly T = var(Var::tau);

} // namespace

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(42);
    for (int i = 0; i < 15; ++i) {
        MPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("exact division") {
    MPoly cubic = S.pow(3) - MPoly(1);
    MPoly lin = S - MPoly(1);
    CHECK(cubic.exact_div(lin) == S * S + S + MPoly(1));

    // remainder witness: sigma^2 + 1 = (sigma+1)(sigma-1) + 2
    try {
        (S * S + MPoly(1)).exact_div(S + MPoly(1));
        FAIL("expected NotDivisible");
    } catch (const NotDivisible& e) {
        CHECK(e.remainder == "2");
    }
    CHECK_THROWS_AS(S.exact_div(MPoly()), DivisionByZero);

    std::mt19937 rng(11);
    for (int i = 0; i < 15; ++i) {
        MPoly a = random_poly(rng), b = random_poly(rng);
        if (b.is_zero()) continue;
        CHECK((a * b).exact_div(b) == a);
    }
}

TEST_CASE("derivatives and coefficient extraction") {
    MPoly f = S.pow(3) * T + MPoly(2) * S * T.pow(2) - MPoly(7);
    CHECK(f.derivative(Var::sigma) == MPoly(3) * S.pow(2) * T + MPoly(2) * T.pow(2));
    auto cs = f.coefficients_in(Var::sigma);
    REQUIRE(cs.size() == 4);
    CHECK(cs[0] == MPoly(-7));
    CHECK(cs[1] == MPoly(2) * T.pow(2));
    CHECK(cs[3] == T);
    CHECK(f.eval_var(Var::sigma, CycElem(2)).eval({{Var::tau, CycElem(3)}}) ==
          CycElem(8 * 3 + 2 * 2 * 9 - 7));
}

TEST_CASE("substitution composes exactly") {
    // substitute(sigma -> y/x) on sigma is y/x
    RatFunc yx(var(Var::y), var(Var::x));
    RatFunc s_sub = substitute(S, {{Var::sigma, yx}});
    CHECK(s_sub == yx);

    // substituting sigma -> (1-tau)/(1+tau) into sigma^2 + sigma
    MPoly f = S * S + S;
    RatFunc bind{MPoly(1) - T};
    bind = bind / RatFunc(MPoly(1) + T);
    RatFunc got = substitute(f, {{Var::sigma, bind}});
    RatFunc expect = bind * bind + bind;
    CHECK(got == expect);
}

TEST_CASE("homogenize and dehomogenize round-trip") {
    MPoly f = S - MPoly(1);
    MPoly h = homogenize(f, {{Var::sigma, Var::sigma1, Var::sigma2, 1}});
    CHECK(h == var(Var::sigma1) - var(Var::sigma2));

    MPoly g = S.pow(2) * T - MPoly(3) * T + MPoly(1);
    MPoly hg = homogenize(g, {{Var::sigma, Var::sigma1, Var::sigma2, 2},
                              {Var::tau, Var::tau1, Var::tau2, 1}});
    CHECK(hg.degree(Var::sigma1) <= 2);
    // dehomogenize: sigma1 -> sigma, sigma2 -> 1, tau1 -> tau, tau2 -> 1
    MPoly back = substitute_poly(hg, {{Var::sigma1, S},
                                      {Var::sigma2, MPoly(1)},
                                      {Var::tau1, T},
                                      {Var::tau2, MPoly(1)}});
    CHECK(back == g);

    CHECK_THROWS_AS(homogenize(g, {{Var::sigma, Var::sigma1, Var::sigma2, 1}}), DegreeTooSmall);
}

TEST_CASE("radical rewrite rules") {
    MPoly one(1);
    CHECK(radical_reduce(var(Var::Bsig).pow(5)) == (one - S) * (one - S + S * S));
    CHECK(radical_reduce(var(Var::Rtau).pow(10)) == T * T);
    // exponents below five stay formal
    MPoly mixed = var(Var::Rsig).pow(7);
    MPoly red = radical_reduce(mixed);
    CHECK(red == S * var(Var::Rsig).pow(2));
}

TEST_CASE("radical reduction is confluent") {
    // A product touching several rules, reduced directly versus reduced after
    // splitting into factors first.
    MPoly f = var(Var::Asigtau).pow(5) * var(Var::Rtau).pow(12) * var(Var::Bsigtau).pow(10);
    MPoly direct = radical_reduce(f);
    MPoly stepwise = radical_reduce(var(Var::Asigtau).pow(5)) *
                     radical_reduce(var(Var::Rtau).pow(12)) *
                     radical_reduce(var(Var::Bsigtau).pow(10));
    CHECK(direct == radical_reduce(stepwise));
    CHECK(direct == stepwise);  // stepwise result is already radical-free below 5
}

TEST_CASE("rational function arithmetic and equality") {
    RatFunc a(S, T);
    RatFunc b(S * S, S * T);  // same function, unreduced representation
    CHECK(a == b);
    CHECK(a + a == RatFunc(MPoly(2) * S, T));
    CHECK((a / a) == RatFunc(MPoly(1)));
    CHECK_THROWS_AS(a / RatFunc(MPoly()), DivisionByZero);
    CHECK(a.pow(-2) == RatFunc(T * T, S * S));
}

TEST_CASE("reduction modulo the phi relation") {
    // phi^2 -> (128 - 3P) / (4P)
    RatFunc f{var(Var::phi).pow(4)};
    RatFunc red = reduce_phi(f);
    MPoly P = var(Var::P);
    RatFunc expect{(MPoly(128) - MPoly(3) * P) * (MPoly(128) - MPoly(3) * P),
                   MPoly(16) * P * P};
    CHECK(red == expect);
    // odd powers keep a single phi
    RatFunc f3 = reduce_phi(RatFunc{var(Var::phi).pow(3)});
    CHECK(f3.num().degree(Var::phi) == 1);
}

TEST_CASE("univariate helpers") {
    // gcd((x-1)^2 (x+2), (x-1)(x+3)) = x-1
    UPoly xm1 = {CycElem(-1), CycElem(1)};
    UPoly a = u_mul(u_mul(xm1, xm1), UPoly{CycElem(2), CycElem(1)});
    UPoly b = u_mul(xm1, UPoly{CycElem(3), CycElem(1)});
    UPoly g = u_gcd(a, b);
    CHECK(g == u_monic(xm1));
    CHECK(u_eval(a, CycElem(1)).is_zero());

    // resultant of x^2+1 and x+2 (in sigma) is 5
    MPoly f = S * S + MPoly(1);
    MPoly h = S + MPoly(2);
    CHECK(resultant(f, h, Var::sigma) == MPoly(5));
    // resultant vanishes iff common root: (x-3)(x+1) vs (x-3)
    MPoly p = (S - MPoly(3)) * (S + MPoly(1));
    CHECK(resultant(p, S - MPoly(3), Var::sigma).is_zero());
}

TEST_CASE("polynomial determinant (Bareiss)") {
    std::vector<std::vector<MPoly>> m = {
        {S, T, MPoly(1)},
        {MPoly(1), S, T},
        {T, MPoly(1), S},
    };
    MPoly det = poly_determinant(m);
    MPoly expect = S.pow(3) + T.pow(3) + MPoly(1) - MPoly(3) * S * T;
    CHECK(det == expect);
}

TEST_CASE("printing is deterministic and readable") {
    MPoly f = MPoly(2) * S * T - var(Var::phi);
    CHECK(f.str() == "2*sigma*tau + -1*phi");
    CHECK(RatFunc(S, T).str() == "(sigma) / (tau)");
}
