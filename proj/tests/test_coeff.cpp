#include "unipotent/coeff.hpp"

#include <doctest.h>

#include <optional>
#include <random>

using namespace unipotent;

TEST_CASE("addition in Z[1/6]") {
    auto r = CoefficientRing::z16();
    CHECK(coeff_add(Coefficient(1, 2), Coefficient(1, 3), r) == Coefficient(5, 6));
    CHECK(coeff_add(Coefficient(0), Coefficient(7, 4), r) == Coefficient(7, 4));
    CHECK(coeff_add(Coefficient(2, 3), Coefficient(-2, 3), r).is_zero());
}

TEST_CASE("division reports the missing prime") {
    auto z = CoefficientRing::integers();
    CHECK(coeff_div(Coefficient(3), 3, z) == Coefficient(1));
    try {
        coeff_div(Coefficient(1), 3, z);
        FAIL("expected InversionRequired");
    } catch (const InversionRequired& e) {
        CHECK(e.prime() == 3);
    }
    CHECK(coeff_div(Coefficient(1), 6, CoefficientRing::z16()) == Coefficient(1, 6));
    try {
        coeff_div(Coefficient(1), 30, CoefficientRing::z16());
        FAIL("expected InversionRequired");
    } catch (const InversionRequired& e) {
        CHECK(e.prime() == 5);
    }
    CHECK(coeff_div(Coefficient(1), 35, CoefficientRing::rationals()) == Coefficient(1, 35));
    CHECK_THROWS_AS(coeff_div(Coefficient(1), 0, z), std::domain_error);
}

TEST_CASE("ring construction") {
    CHECK_THROWS_AS(CoefficientRing::localized({}), std::invalid_argument);
    CHECK_THROWS_AS(CoefficientRing::localized({4}), std::invalid_argument);
    CHECK(CoefficientRing::localized({3, 2, 3}) == CoefficientRing::z16());
    CHECK(CoefficientRing::z16().name() == "Z[1/6]");
    CHECK(CoefficientRing::from_flag("z").name() == "Z");
    CHECK(CoefficientRing::from_flag("q").name() == "Q");
    CHECK_THROWS_AS(CoefficientRing::from_flag("r"), std::invalid_argument);
}

TEST_CASE("text format") {
    CHECK(Coefficient(-5, 6).to_string() == "-5/6");
    CHECK(Coefficient(4, 2).to_string() == "2");
    CHECK(Coefficient::parse("-10/12") == Coefficient(-5, 6));
    CHECK(Coefficient::parse(" 7 ") == Coefficient(7));
    CHECK_THROWS(Coefficient::parse("1/0"));
    CHECK_THROWS(Coefficient::parse("1/-2"));
    CHECK_THROWS(Coefficient::parse("x"));
    CHECK_THROWS(Coefficient::parse(""));
}

TEST_CASE("closure, round trip and division inverse on random values") {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> num(-500, 500);
    std::uniform_int_distribution<int> pow2(0, 5), pow3(0, 4);
    const auto rings = {CoefficientRing::integers(), CoefficientRing::z16(), CoefficientRing::rationals()};
    for (int iter = 0; iter < 2000; ++iter) {
        for (const auto& ring : rings) {
            auto draw = [&]() {
                if (ring.kind() == CoefficientRing::Kind::Integers) return Coefficient(num(rng));
                long den = (1L << pow2(rng));
                for (int k = pow3(rng); k > 0; --k) den *= 3;
                if (ring.kind() == CoefficientRing::Kind::Rationals) den *= 1 + (num(rng) & 7);
                return Coefficient(num(rng), den);
            };
            Coefficient a = draw(), b = draw();
            CHECK(ring.admits(coeff_add(a, b, ring)));
            CHECK(ring.admits(coeff_mul(a, b, ring)));
            CHECK(Coefficient::parse(a.to_string()) == a);
            for (long n : {1L, -2L, 3L, 6L, 5L}) {
                std::optional<Coefficient> q;
                long missing = 0;
                try {
                    q = coeff_div(a, n, ring);
                } catch (const InversionRequired& e) {
                    missing = e.prime();
                }
                if (q)
                    CHECK(*q * Coefficient(n) == a);
                else
                    CHECK(n % missing == 0);
            }
        }
    }
}
