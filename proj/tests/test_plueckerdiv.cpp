// Tests for the Pluecker coordinates of the line family: minor collapse, the
// fifth-power polynomials, the factorization table, intersection divisors and
// the numeric consistency of the radical computation with sampled lines.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dwork/lines_numeric.hpp"
#include "dwork/plueckerdiv.hpp"

#include <cmath>
#include <complex>
#include <random>

using namespace dwork;
using namespace dwork::pluecker;
using lines::Cx;

namespace {

Cx eval_cx(const MPoly& f, const std::map<Var, Cx>& point) {
    Cx sum = 0.0;
    for (const auto& [mono, coeff] : f.terms()) {
        Cx term = embed_double(coeff);
        for (size_t i = 0; i < kVarCount; ++i)
            for (uint8_t k = 0; k < mono.e[i]; ++k)
                term *= point.at(static_cast<Var>(i));
        sum += term;
    }
    return sum;
}

} // namespace

TEST_CASE("each minor is a single radical monomial times a polynomial") {
    auto minors = pluecker_minors();  // collapse asserted on construction
    // pi_12 is the block-diagonal minor alpha(sigma,tau) * alpha(tau,sigma).
    CHECK(minors[0] == var(Var::Asigtau) * var(Var::Atausig));
    // pi_34 = tau^{4/5} beta(sigma) beta(sigma tau) sigma (1 - tau).
    MPoly expected34 = var(Var::Rtau).pow(4) * var(Var::Bsig) * var(Var::Bsigtau) *
                       var(Var::sigma) * (MPoly(1) - var(Var::tau));
    CHECK(minors[7] == expected34);
    // pi_35^5 radical-reduces to sigma^4 tau^4 beta(sigma)^5 beta(tau)^5
    // (sigma tau - 1)^5.
    MPoly sg = var(Var::sigma), tu = var(Var::tau);
    MPoly expected35 = sg.pow(4) * tu.pow(4) *
                       radical_reduce(var(Var::Bsig).pow(5)) *
                       radical_reduce(var(Var::Btau).pow(5)) * (sg * tu - 1).pow(5);
    CHECK(radical_reduce(minors[8].pow(5)) == expected35);
}

TEST_CASE("fifth powers divide the common factor and have bidegree (6,6)") {
    auto pij = pij_polynomials();  // exact divisibility asserted on construction
    for (const MPoly& p : pij) {
        int ds = 0, dt = 0;
        for (const auto& [mono, coeff] : p.terms()) {
            CHECK(mono.exp(Var::sigma1) + mono.exp(Var::sigma2) == 6);
            CHECK(mono.exp(Var::tau1) + mono.exp(Var::tau2) == 6);
            ds = std::max(ds, int(mono.exp(Var::sigma1)));
            dt = std::max(dt, int(mono.exp(Var::tau1)));
        }
        CHECK(ds > 0);
        CHECK(dt > 0);
    }
}

TEST_CASE("factorization table verified with recorded constants") {
    auto constants = table_divpl_check();
    CHECK(constants.size() == 10);
    for (const auto& [name, c] : constants) {
        CAPTURE(name);
        CHECK_FALSE(c.is_zero());
    }
}

TEST_CASE("intersection divisors of the named curves with the pencil") {
    Divisor k14 = curve_intersection("k14");
    CHECK(k14 == Divisor{{"D23", 1}, {"D25", 1}, {"D12", 3}, {"D24", 3}});
    CHECK(divisor_degree(k14) == 16);
    CHECK(divisor_str(k14) == "3*D12 + 1*D23 + 3*D24 + 1*D25");

    Divisor l1 = curve_intersection("l1");
    CHECK(l1 == Divisor{{"D13", 1}, {"D23", 1}, {"D34", 1}, {"D35", 1}});

    for (const char* name : {"m13", "m15", "m23", "m25", "m34", "m35", "m45", "l2",
                             "k12", "k24"})
        CHECK_NOTHROW(curve_intersection(name));

    CHECK_THROWS_AS(curve_intersection("m99"), DivisorMismatch);
}

TEST_CASE("worked pullback of the pencil to the two components of k14") {
    // On each component the pullback of G + phi*H is a constant times
    // s t^3 (s-t)^3 (s + w'^2 t): the displayed form of that constant,
    // 2 phi - 2 w - 1, is -2 times the actual quotient against the monic
    // linear factors (and the two conjugate components are swapped under the
    // other labeling of the primitive cube root).
    auto constants = component_constants("k14");
    REQUIRE(constants.size() == 2);
    MPoly displayed_w = 2 * var(Var::phi) -
                        MPoly(CycElem(2) * CycElem::omega() + CycElem(1));
    MPoly displayed_w2 = 2 * var(Var::phi) -
                         MPoly(CycElem(2) * CycElem::omega_pow(2) + CycElem(1));
    CHECK(MPoly(-2) * constants[0] == displayed_w2);
    CHECK(MPoly(-2) * constants[1] == displayed_w);
}

TEST_CASE("common divisor of degree 38 with residue five times D_ij") {
    CHECK_NOTHROW(db_decomposition());
}

TEST_CASE("numeric consistency on sampled family lines") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    auto pij = pij_polynomials();
    int done = 0;
    for (int attempt = 0; attempt < 200 && done < 8; ++attempt) {
        Cx sigma(1.3 + unif(rng), unif(rng));
        Cx tau(0.7 + unif(rng), unif(rng));
        lines::LineMat line;
        try {
            line = lines::chain_line(sigma, tau);
        } catch (const std::runtime_error&) {
            continue;
        }
        ++done;

        // Grassmann-Pluecker relations.
        CHECK(lines::max_grassmann_pluecker_residual(line) < 1e-9);

        // The fifth powers of the Pluecker coordinates do not depend on the
        // branch choices, so the projective ratios |pi_ij / pi_12|^5 must
        // agree with |p_ij / p_12| evaluated at (sigma, tau).
        auto coords = lines::pluecker(line);
        std::map<Var, Cx> hom = {{Var::sigma1, sigma}, {Var::sigma2, Cx(1.0)},
                                 {Var::tau1, tau},     {Var::tau2, Cx(1.0)}};
        Cx p12_val = eval_cx(pij[0], hom);
        REQUIRE(std::abs(coords[0]) > 1e-12);
        REQUIRE(std::abs(p12_val) > 1e-12);
        for (size_t k = 0; k < 10; ++k) {
            double lhs = std::pow(std::abs(coords[k] / coords[0]), 5);
            double rhs = std::abs(eval_cx(pij[k], hom) / p12_val);
            CAPTURE(k);
            CHECK(std::abs(lhs - rhs) < 1e-6 * (1.0 + rhs));
        }
    }
    CHECK(done == 8);
}

TEST_CASE("exactly one Pluecker coordinate of a van Geemen line vanishes") {
    for (int gamma_sign : {-1, +1}) {
        lines::LineMat line = lines::van_geemen_line(Cx(1.1, 0.3), gamma_sign, 0);
        auto coords = lines::pluecker(line);
        double scale = 0.0;
        for (const Cx& c : coords) scale = std::max(scale, std::abs(c));
        REQUIRE(scale > 0.0);
        int zeros = 0;
        for (const Cx& c : coords)
            if (std::abs(c) < 1e-9 * scale) ++zeros;
        CHECK(zeros == 1);
    }
}
