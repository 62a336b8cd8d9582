// Unit tests for exact rational and cyclotomic arithmetic and the complex
// interval embedding.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dwork/cyclotomic.hpp"
#include "dwork/numeric.hpp"

#include <cmath>
#include <random>

using namespace dwork;

namespace {

CycElem random_elem(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    std::array<Rat, CycElem::kDegree> c;
    for (auto& x : c) x = Rat(num(rng), den(rng));
    return CycElem::from_coeffs(c);
}

} // namespace

TEST_CASE("rational serialization round-trips") {
    CHECK(to_string(rat(-3, 6)) == "-1/2");
    CHECK(to_string(rat(8, 4)) == "2");
    CHECK(rat_from_string("22/7") == rat(22, 7));
    CHECK(rat_from_string("-5") == rat(-5));
    CHECK_THROWS_AS(rat_from_string("1/0"), DivisionByZero);
}

TEST_CASE("minimal polynomial of eta vanishes") {
    CycElem eta = CycElem::eta();
    CycElem phi15 = eta.pow(8) - eta.pow(7) + eta.pow(5) - eta.pow(4) + eta.pow(3) - eta + CycElem(1);
    CHECK(phi15.is_zero());
    CHECK(eta.pow(15) == CycElem(1));
    CHECK(eta.pow(5) != CycElem(1));
    CHECK(eta.pow(3) != CycElem(1));
}

TEST_CASE("roots of unity inside the field") {
    CycElem omega = CycElem::omega();
    CycElem zeta = CycElem::zeta();
    CHECK((omega * omega + omega + CycElem(1)).is_zero());
    CHECK(zeta.pow(5) == CycElem(1));
    CHECK(zeta.pow(4) == zeta.inverse());
    // 1 + zeta + zeta^2 + zeta^3 + zeta^4 = 0
    CycElem s(1);
    for (int k = 1; k < 5; ++k) s += CycElem::zeta_pow(k);
    CHECK(s.is_zero());
}

TEST_CASE("square root of five") {
    CycElem r5 = CycElem::sqrt5();
    CHECK(r5 * r5 == CycElem(5));
    // The element is 1 + 2*zeta + 2*zeta^-1; the variant without the factors
    // of two is the golden ratio, whose square is (3+sqrt5)/2, not 5.
    CycElem golden = CycElem(1) + CycElem::zeta_pow(1) + CycElem::zeta_pow(4);
    CHECK(golden * golden == (CycElem(3) + r5) * CycElem(Rat(1, 2)));
    // sqrt(-15) = sqrt5 * (omega - omega^2)
    CycElem rm15 = CycElem::sqrt_minus15();
    CHECK(rm15 * rm15 == CycElem(-15));
}

TEST_CASE("field axioms and inverses on random elements") {
    std::mt19937 rng(20260823);
    for (int i = 0; i < 20; ++i) {
        CycElem a = random_elem(rng), b = random_elem(rng), c = random_elem(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == CycElem(1));
            CHECK(a.pow(-2) == (a * a).inverse());
        }
    }
    CHECK_THROWS_AS(CycElem(0).inverse(), DivisionByZero);
}

TEST_CASE("complex embedding encloses known values") {
    // omega -> exp(2*pi*i/3)
    ComplexInterval om = embed_complex(CycElem::omega(), 128);
    CHECK(std::abs(om.re_d() + 0.5) < 1e-14);
    CHECK(std::abs(om.im_d() - std::sqrt(3.0) / 2) < 1e-14);
    CHECK(om.rad_d() < 1e-30);

    // sqrt5 -> 2.2360679..., cross-checked against an interval square root
    ComplexInterval r5 = embed_complex(CycElem::sqrt5(), 128);
    CHECK(std::abs(r5.re_d() - std::sqrt(5.0)) < 1e-14);
    CHECK(std::abs(r5.im_d()) < 1e-30);
    ComplexInterval five = embed_complex(CycElem(5), 128);
    ComplexInterval root = ci_sqrt_positive_real(five);
    CHECK(r5.overlaps(root));

    // w_infinity -> (3 + sqrt5 + sqrt(6*(5+sqrt5)))/4 = 2.9562952015...
    double w = (3 + std::sqrt(5.0) + std::sqrt(6 * (5 + std::sqrt(5.0)))) / 4;
    ComplexInterval wi = embed_complex(CycElem::w_infinity(), 128);
    CHECK(std::abs(wi.re_d() - w) < 1e-14);
    CHECK(std::abs(wi.im_d()) < 1e-30);
    CHECK(std::abs(wi.re_d() - 2.9562952015) < 1e-9);
}

TEST_CASE("embedding width shrinks with precision") {
    CycElem a = CycElem::eta() + CycElem::sqrt5();
    double w64 = embed_complex(a, 64).rad_d();
    double w256 = embed_complex(a, 256).rad_d();
    CHECK(w64 > 0.0);
    CHECK(w256 < w64 * 1e-40);
}

TEST_CASE("embedding is multiplicative up to containment") {
    std::mt19937 rng(7);
    for (int i = 0; i < 10; ++i) {
        CycElem a = random_elem(rng), b = random_elem(rng);
        ComplexInterval prod = embed_complex(a * b, 128);
        ComplexInterval split = ci_mul(embed_complex(a, 128), embed_complex(b, 128));
        CHECK(prod.overlaps(split));
        ComplexInterval sum = embed_complex(a + b, 128);
        ComplexInterval split_sum = ci_add(embed_complex(a, 128), embed_complex(b, 128));
        CHECK(sum.overlaps(split_sum));
    }
}

TEST_CASE("serialization of cyclotomic elements") {
    CycElem a = CycElem(Rat(1, 2)) - CycElem(2) * CycElem::eta_pow(3);
    auto arr = a.serialize();
    CHECK(arr[0] == "1/2");
    CHECK(arr[3] == "-2");
    CHECK(a.str() == "1/2 - 2*eta^3");
    CHECK(CycElem(0).str() == "0");
    CHECK_THROWS(a.as_rational());
    CHECK(CycElem(Rat(7, 3)).as_rational() == Rat(7, 3));
}
